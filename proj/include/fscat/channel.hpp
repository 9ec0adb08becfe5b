#pragma once

#include "fscat/common.hpp"
#include "fscat/model_params.hpp"
#include "fscat/multi_index.hpp"

namespace fscat {

// Which boundary value (or off-axis point) of the resolvent family is meant.
// plus/minus carry a real energy supplied alongside; off_axis carries the
// nonzero imaginary part; negative_real marks points z = -lambda < 0.
struct BoundarySide {
  enum class Kind { plus, minus, off_axis, negative_real };
  Kind kind = Kind::plus;
  double im = 0.0;  // Im z, used only for off_axis

  static BoundarySide Plus() { return {Kind::plus, 0.0}; }
  static BoundarySide Minus() { return {Kind::minus, 0.0}; }
  static BoundarySide OffAxis(double im) {
    if (im == 0.0) throw InvalidArgument("BoundarySide::OffAxis: Im z must be nonzero");
    return {Kind::off_axis, im};
  }
  static BoundarySide NegativeReal() { return {Kind::negative_real, 0.0}; }

  bool is_minus_like() const {
    return kind == Kind::minus || (kind == Kind::off_axis && im < 0.0);
  }
};

// Wavenumber zeta with e^{i zeta r} asymptotics for a channel at energy nu
// (possibly complex). Upper-rim convention: the root with Im >= 0; the minus
// side is its conjugate. Closed channels give zeta = i sqrt(-nu), a Yukawa.
inline cplx channel_root(const BoundarySide& side, double nu) {
  switch (side.kind) {
    case BoundarySide::Kind::negative_real:
      if (nu > 0.0) throw InvalidArgument("channel_root: negative_real requires nu <= 0");
      return iu * std::sqrt(-nu);
    case BoundarySide::Kind::plus:
      return nu >= 0.0 ? cplx(std::sqrt(nu), 0.0) : iu * std::sqrt(-nu);
    case BoundarySide::Kind::minus:
      return nu >= 0.0 ? cplx(-std::sqrt(nu), 0.0) : iu * std::sqrt(-nu);
    case BoundarySide::Kind::off_axis: {
      cplx r = sqrt_upper(cplx(nu, side.im));
      return side.im >= 0.0 ? r : std::conj(r);
    }
  }
  throw InvalidArgument("channel_root: bad side");
}

// Scattering channel: neutron momentum k and oscillator label n.
struct Channel {
  Vec3 k{0, 0, 0};
  MultiIndex n;

  double energy(double omega) const { return dot3(k, k) + omega * n.degree(); }
  bool open_at(double mu, double omega) const { return omega * n.degree() < mu; }
  double momentum_at(double mu, double omega) const {
    return std::sqrt(mu - omega * n.degree());
  }
};

// Low/high split of the mode sum at n0 = floor(mu/omega). Always recomputed
// from (mu, omega); every open channel is in the low set.
struct ChannelSplit {
  double mu = 0.0;
  double omega = 1.0;
  int n0 = -1;  // low set = shells 0..n0 (empty if n0 < 0)

  ChannelSplit() = default;
  ChannelSplit(double mu_, double omega_) : mu(mu_), omega(omega_) {
    if (omega <= 0.0) throw InvalidArgument("ChannelSplit: omega must be > 0");
    n0 = mu > 0.0 ? static_cast<int>(std::floor(mu / omega)) : -1;
  }
  bool low_empty() const { return n0 < 0; }
};

}  // namespace fscat
