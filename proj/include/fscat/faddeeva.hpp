#pragma once

#include <vector>

#include "fscat/common.hpp"

namespace fscat {

// Faddeeva function w(z) = e^{-z^2} erfc(-iz) for Im z >= 0.
//
// Mid-range: Weideman's rational expansion (SIAM J. Numer. Anal. 31, 1994),
// whose coefficients are computed once from a discrete Fourier transform.
// Large |z|: asymptotic continued fraction. Real axis handled exactly in the
// real part (e^{-x^2}) with the Dawson series for large |x|.

namespace detail {

struct WeidemanTable {
  static constexpr int N = 42;
  double L = 0.0;
  std::vector<double> a;

  WeidemanTable() {
    const int M = 2 * N, M2 = 2 * M;
    L = std::sqrt(N / std::sqrt(2.0));
    // g = fftshift([0, f(-M+1..M-1)])
    std::vector<double> g(M2, 0.0);
    for (int k = -M + 1; k <= M - 1; ++k) {
      const double theta = k * pi / M;
      const double t = L * std::tan(0.5 * theta);
      const double f = std::exp(-t * t) * (L * L + t * t);
      const int j = (k - (-M + 1)) + 1;  // position in [0, f...]
      g[(j + M) % M2] = f;
    }
    a.resize(N + 1, 0.0);
    for (int n = 1; n <= N; ++n) {
      double s = 0.0;
      for (int j = 0; j < M2; ++j) s += g[j] * std::cos(two_pi * j * n / M2);
      a[n] = s / M2;
    }
  }
};

inline const WeidemanTable& weideman() {
  static const WeidemanTable tab;
  return tab;
}

inline cplx faddeeva_weideman(cplx z) {
  const auto& tab = weideman();
  const cplx d = tab.L - iu * z;
  const cplx Z = (tab.L + iu * z) / d;
  cplx p = 0.0;
  for (int n = WeidemanTable::N; n >= 1; --n) p = p * Z + tab.a[n];
  return 2.0 * p / (d * d) + (1.0 / sqrt_pi) / d;
}

inline cplx faddeeva_continued_fraction(cplx z) {
  // w(z) = (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ...))))
  cplx f = 0.0;
  for (int k = 24; k >= 1; --k) f = (0.5 * k) / (z - f);
  return iu / sqrt_pi / (z - f);
}

inline double dawson_asymptotic(double x) {
  // D(x) ~ 1/(2x) (1 + 1/(2x^2) + 3/(4x^4) + ...), |x| large
  const double ix2 = 1.0 / (2.0 * x * x);
  double term = 1.0, s = 1.0;
  for (int k = 1; k <= 12; ++k) {
    term *= (2 * k - 1) * ix2;
    s += term;
  }
  return s / (2.0 * x);
}

}  // namespace detail

inline cplx faddeeva_w(cplx z) {
  if (z.imag() < 0.0) throw InvalidArgument("faddeeva_w: requires Im z >= 0");
  if (z.imag() == 0.0) {
    const double x = z.real();
    double im;
    if (std::abs(x) <= 6.5)
      im = detail::faddeeva_weideman(cplx(x, 0.0)).imag();
    else
      im = (2.0 / sqrt_pi) * detail::dawson_asymptotic(x);
    return {std::exp(-x * x), im};
  }
  if (std::abs(z) > 7.0) return detail::faddeeva_continued_fraction(z);
  return detail::faddeeva_weideman(z);
}

// Dawson integral D(x) = e^{-x^2} int_0^x e^{t^2} dt.
inline double dawson(double x) {
  if (std::abs(x) > 6.5) return detail::dawson_asymptotic(x);
  return 0.5 * sqrt_pi * detail::faddeeva_weideman(cplx(x, 0.0)).imag();
}

}  // namespace fscat
