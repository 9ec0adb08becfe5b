#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace fscat {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline constexpr double pi = 3.14159265358979323846264338328;
inline constexpr double sqrt_pi = 1.77245385090551602729816748334;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr cplx iu{0.0, 1.0};

inline constexpr const char* version_string = "0.1.0";

struct InvalidArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double sq(double x) { return x * x; }
inline double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
inline Vec3 sub3(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Principal square root with branch cut on [0,inf): Im(result) >= 0.
// This is the root used on the upper rim of the cut; the lower rim is
// obtained by conjugation.
inline cplx sqrt_upper(cplx z) {
  cplx r = std::sqrt(z);
  if (r.imag() < 0.0) r = -r;
  return r;
}

}  // namespace fscat
