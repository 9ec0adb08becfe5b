#pragma once

#include <vector>

#include "fscat/hermite.hpp"
#include "fscat/model_params.hpp"
#include "fscat/multi_index.hpp"

namespace fscat {

// 1D oscillator eigenfunction of -d^2/dy^2 + omega^2 y^2/4 - omega/2,
// eigenvalue omega*m:
//   phi_m(y) = (omega/2pi)^{1/4} psi_m(sqrt(omega/2) y) e^{-omega y^2/4}
inline double phi_axis(int m, double y, double omega) {
  const double xi = std::sqrt(0.5 * omega) * y;
  std::vector<double> psi = normalized_hermite(m, xi);
  return std::pow(omega / two_pi, 0.25) * psi[m] * std::exp(-0.5 * xi * xi);
}

// Values phi_0..phi_mmax at one point, shared recurrence.
inline void phi_axis_all(int mmax, double y, double omega, double* out) {
  const double xi = std::sqrt(0.5 * omega) * y;
  normalized_hermite_all(mmax, xi, out);
  const double g = std::pow(omega / two_pi, 0.25) * std::exp(-0.5 * xi * xi);
  for (int m = 0; m <= mmax; ++m) out[m] *= g;
}

// phi_n(y) = prod_i phi_{n_i}(y_i); eigenfunction of h_omega with
// eigenvalue omega |n|.
inline double eigenfunction_value(const MultiIndex& n, const Vec3& y, const ModelParams& p) {
  p.validate();
  return phi_axis(n.n1, y[0], p.omega) * phi_axis(n.n2, y[1], p.omega) *
         phi_axis(n.n3, y[2], p.omega);
}

// One axis of the closed-form transform int e^{-i q y} phi_a(y) phi_n(y) dy.
// The value is e^{-q^2/(2 omega)} * sum_m c[m] (-i q)^m with real c; only
// powers of the parity of a+n occur. Derived by linearizing H_a H_n and
// applying the Hermite-Gaussian Fourier integral.
struct AxisFormFactor {
  std::vector<double> c;  // c[m] multiplies (-i q)^m
  double omega = 1.0;

  AxisFormFactor() = default;
  AxisFormFactor(int a, int n, double omega_) : omega(omega_) {
    c.assign(a + n + 1, 0.0);
    const std::vector<double> lin = hermite_product_coeffs(a, n);
    const double norm = 1.0 / std::sqrt(std::pow(2.0, a + n) * factorial(a) * factorial(n));
    for (int k = 0; k <= std::min(a, n); ++k) {
      const int m = a + n - 2 * k;
      c[m] += lin[k] * norm * std::pow(2.0 / omega, 0.5 * m);
    }
  }

  cplx eval(double q) const {
    cplx acc = 0.0, pw = 1.0;
    const cplx base(0.0, -q);
    for (size_t m = 0; m < c.size(); ++m) {
      if (c[m] != 0.0) acc += c[m] * pw;
      pw *= base;
    }
    return acc * std::exp(-q * q / (2.0 * omega));
  }
};

// form_factor(n, n', q) = int e^{-i q.x} phi_n(x) phi_n'(x) d^3x, exactly.
inline cplx form_factor(const MultiIndex& n, const MultiIndex& np, const Vec3& q,
                        const ModelParams& p) {
  p.validate();
  cplx v = 1.0;
  for (int i = 0; i < 3; ++i) v *= AxisFormFactor(n[i], np[i], p.omega).eval(q[i]);
  return v;
}

}  // namespace fscat
