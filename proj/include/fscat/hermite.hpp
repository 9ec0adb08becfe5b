#pragma once

#include <vector>

#include "fscat/common.hpp"

namespace fscat {

// Largest degree for which raw H_n values stay comfortably inside double
// range on |x| <= 30.
inline constexpr int hermite_safe_degree = 128;

// Physicists' Hermite polynomial by the three-term recurrence
// H_{n+1} = 2 x H_n - 2 n H_{n-1}.
inline double hermite_poly(int n, double x) {
  if (n < 0) throw InvalidArgument("hermite_poly: negative degree");
  if (n > hermite_safe_degree || std::abs(x) > 30.0)
    throw NumericsError("hermite_poly: degree/argument beyond documented safe range");
  double hm = 1.0;
  if (n == 0) return hm;
  double h = 2.0 * x;
  for (int m = 1; m < n; ++m) {
    double hp = 2.0 * x * h - 2.0 * m * hm;
    hm = h;
    h = hp;
  }
  return h;
}

// Normalized Hermite polynomials psi_m = H_m / sqrt(2^m m!). Bounded by
// e^{x^2/2} up to slow factors, so the recurrence is safe at any degree.
inline void normalized_hermite_all(int nmax, double x, double* out) {
  out[0] = 1.0;
  if (nmax == 0) return;
  out[1] = std::sqrt(2.0) * x;
  for (int m = 1; m < nmax; ++m)
    out[m + 1] = std::sqrt(2.0 / (m + 1)) * x * out[m] - std::sqrt(m / (m + 1.0)) * out[m - 1];
}

inline std::vector<double> normalized_hermite(int nmax, double x) {
  std::vector<double> v(nmax + 1);
  normalized_hermite_all(nmax, x, v.data());
  return v;
}

// H_a H_b = sum_k lin_coeff(a,b,k) H_{a+b-2k}, k = 0..min(a,b),
// with lin_coeff = C(a,k) C(b,k) k! 2^k. Exact integers, computed by an
// integer-valued recurrence in k so the form factors stay analytic.
inline std::vector<double> hermite_product_coeffs(int a, int b) {
  const int kmax = std::min(a, b);
  std::vector<double> c(kmax + 1);
  c[0] = 1.0;
  for (int k = 1; k <= kmax; ++k)
    c[k] = c[k - 1] * 2.0 * (a - k + 1) * (b - k + 1) / k;
  return c;
}

// int e^{ixy} H_n(x) e^{-x^2} dx = sqrt(pi) (i y)^n e^{-y^2/4}
inline cplx hermite_gauss_ft(int n, double y) {
  if (n < 0) throw InvalidArgument("hermite_gauss_ft: negative degree");
  cplx p = std::pow(cplx(0.0, y), n);
  return sqrt_pi * p * std::exp(-0.25 * y * y);
}

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline double double_factorial_odd(int m) {
  // (2m-1)!! with (-1)!! = 1
  double f = 1.0;
  for (int k = 1; k <= m; ++k) f *= (2 * k - 1);
  return f;
}

}  // namespace fscat
