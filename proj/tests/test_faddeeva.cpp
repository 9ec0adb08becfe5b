#include <catch2/catch_amalgamated.hpp>

#include "fscat/faddeeva.hpp"
#include "fscat/quadrature.hpp"

using namespace fscat;

namespace {

// Quadrature oracle: w(z) = (i/pi) int e^{-t^2}/(z-t) dt, Im z > 0.
// The pole near the real axis is subtracted analytically so the quadrature
// only sees the smooth difference quotient.
cplx faddeeva_oracle(cplx z) {
  const double T = 9.0;
  std::vector<double> breaks;
  for (double b = -T; b <= T + 1e-12; b += 1.0) breaks.push_back(b);
  Rule1d r = composite_gl(breaks, 40);
  const cplx ez2 = std::exp(-z * z);
  cplx s = 0.0;
  for (int i = 0; i < r.size(); ++i)
    s += r.w[i] * (std::exp(-r.x[i] * r.x[i]) - ez2) / (z - r.x[i]);
  s += ez2 * (std::log(z + T) - std::log(z - T));
  return iu / pi * s;
}

}  // namespace

TEST_CASE("faddeeva against quadrature oracle") {
  for (cplx z : {cplx(0.3, 0.8), cplx(2.0, 0.1), cplx(5.5, 0.4), cplx(0.1, 3.0),
                 cplx(6.9, 0.02), cplx(9.0, 1.0), cplx(1.4, 1e-4), cplx(3.2, 1e-6)}) {
    cplx ref = faddeeva_oracle(z);
    cplx val = faddeeva_w(z);
    // 1e-9: the oracle's own pole-subtraction term limits it when |e^{-z^2}|
    // is large, e.g. at z = 0.1 + 3i
    REQUIRE(std::abs(val - ref) < 1e-9 * std::abs(ref));
  }
}

TEST_CASE("faddeeva on the real axis") {
  // Re w(x) = e^{-x^2}; Im w(x) = 2 D(x)/sqrt(pi) with the Dawson integral
  // from direct quadrature of its definition.
  for (double x : {0.0, 0.4, 1.0, 2.7, 6.0, 8.5}) {
    cplx v = faddeeva_w(cplx(x, 0.0));
    REQUIRE(v.real() == Catch::Approx(std::exp(-x * x)).epsilon(1e-13));
    Rule1d gl = gauss_legendre(200);
    double dint = 0.0;
    for (int i = 0; i < gl.size(); ++i) {
      double t = 0.5 * x * (gl.x[i] + 1.0);
      dint += 0.5 * x * gl.w[i] * std::exp(t * t - x * x);
    }
    REQUIRE(v.imag() == Catch::Approx(2.0 / sqrt_pi * dint).margin(1e-12));
    REQUIRE(dawson(x) == Catch::Approx(dint).margin(1e-12));
  }
}

TEST_CASE("faddeeva limit toward the real axis is continuous") {
  const double x = 1.7;
  cplx lim = faddeeva_w(cplx(x, 0.0));
  for (double eps : {1e-3, 1e-6, 1e-9}) {
    cplx v = faddeeva_w(cplx(x, eps));
    REQUIRE(std::abs(v - lim) < 5.0 * eps + 1e-12);
  }
}
