#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fscat/common.hpp"

namespace fscat {

struct Rule1d {
  std::vector<double> x;
  std::vector<double> w;
  int size() const { return static_cast<int>(x.size()); }
};

namespace detail {

// Golub-Welsch: nodes/weights from the symmetric Jacobi matrix of the
// orthogonal-polynomial recurrence.
inline Rule1d golub_welsch(const std::vector<double>& offdiag, double mu0) {
  const int n = static_cast<int>(offdiag.size()) + 1;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    J(i, i + 1) = offdiag[i];
    J(i + 1, i) = offdiag[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule1d r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    r.x[i] = es.eigenvalues()(i);
    r.w[i] = mu0 * sq(es.eigenvectors()(0, i));
  }
  return r;
}

}  // namespace detail

// Gauss-Hermite with weight e^{-x^2}; exact for polynomials of degree <= 2n-1.
inline Rule1d gauss_hermite(int n) {
  if (n < 1) throw InvalidArgument("gauss_hermite: order must be >= 1");
  std::vector<double> b(n - 1);
  for (int k = 1; k < n; ++k) b[k - 1] = std::sqrt(k / 2.0);
  return detail::golub_welsch(b, sqrt_pi);
}

// Gauss-Legendre on [-1,1].
inline Rule1d gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: order must be >= 1");
  std::vector<double> b(n - 1);
  for (int k = 1; k < n; ++k) b[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return detail::golub_welsch(b, 2.0);
}

inline Rule1d map_to_interval(const Rule1d& gl, double a, double b) {
  Rule1d r;
  r.x.resize(gl.size());
  r.w.resize(gl.size());
  const double h = 0.5 * (b - a), m = 0.5 * (a + b);
  for (int i = 0; i < gl.size(); ++i) {
    r.x[i] = m + h * gl.x[i];
    r.w[i] = h * gl.w[i];
  }
  return r;
}

// Composite Gauss-Legendre over given breakpoints.
inline Rule1d composite_gl(const std::vector<double>& breaks, int per_panel) {
  Rule1d gl = gauss_legendre(per_panel), out;
  for (size_t p = 0; p + 1 < breaks.size(); ++p) {
    Rule1d m = map_to_interval(gl, breaks[p], breaks[p + 1]);
    out.x.insert(out.x.end(), m.x.begin(), m.x.end());
    out.w.insert(out.w.end(), m.w.begin(), m.w.end());
  }
  return out;
}

// Fixed-order product grid on S^2: Gauss-Legendre in cos(theta) x uniform
// azimuth. angular_order = number of polar nodes; 2*order azimuthal nodes.
// Weights sum to 4*pi.
struct AngularGrid {
  std::vector<Vec3> dirs;
  std::vector<double> w;
  std::vector<double> theta, phi;

  explicit AngularGrid(int order) {
    if (order < 1) throw InvalidArgument("AngularGrid: order must be >= 1");
    Rule1d gl = gauss_legendre(order);
    const int nphi = 2 * order;
    const double wphi = two_pi / nphi;
    for (int i = 0; i < order; ++i) {
      const double c = gl.x[i], s = std::sqrt(std::max(0.0, 1.0 - c * c));
      for (int j = 0; j < nphi; ++j) {
        const double ph = (j + 0.5) * wphi;
        dirs.push_back({s * std::cos(ph), s * std::sin(ph), c});
        w.push_back(gl.w[i] * wphi);
        theta.push_back(std::acos(c));
        phi.push_back(ph);
      }
    }
  }
  int size() const { return static_cast<int>(dirs.size()); }
};

// 3D tensor Gauss-Hermite grid adapted to the weight e^{-omega |y|^2 / 2}
// (the Gaussian carried by a product of two oscillator eigenfunctions).
// Nodes y = x * sqrt(2/omega); weights absorb the Jacobian but NOT the
// Gaussian: integrals of f(y) e^{-omega|y|^2/2} become sum w_j f(y_j).
struct GaussHermite3d {
  std::vector<Vec3> y;
  std::vector<double> w;

  GaussHermite3d(int order, double omega) {
    Rule1d gh = gauss_hermite(order);
    const double s = std::sqrt(2.0 / omega);
    const int n = gh.size();
    y.reserve(n * n * n);
    w.reserve(n * n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          y.push_back({s * gh.x[i], s * gh.x[j], s * gh.x[k]});
          w.push_back(s * s * s * gh.w[i] * gh.w[j] * gh.w[k]);
        }
  }
  int size() const { return static_cast<int>(y.size()); }
};

}  // namespace fscat
