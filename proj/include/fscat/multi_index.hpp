#pragma once

#include <cstdint>
#include <vector>

#include "fscat/common.hpp"

namespace fscat {

// Oscillator excitation label n in N_0^3.
struct MultiIndex {
  int n1 = 0, n2 = 0, n3 = 0;

  int degree() const { return n1 + n2 + n3; }
  int operator[](int i) const { return i == 0 ? n1 : (i == 1 ? n2 : n3); }
  bool operator==(const MultiIndex&) const = default;
};

inline int shell_size(int N) { return (N + 1) * (N + 2) / 2; }

// All n with |n| = N, lexicographic in (n1, n2, n3).
inline std::vector<MultiIndex> enumerate_shell(int N) {
  if (N < 0) throw InvalidArgument("enumerate_shell: negative degree");
  std::vector<MultiIndex> out;
  out.reserve(shell_size(N));
  for (int a = 0; a <= N; ++a)
    for (int b = 0; b <= N - a; ++b) out.push_back({a, b, N - a - b});
  return out;
}

// Truncated oscillator basis: all |n| <= cutoff, ordered by shell and
// lexicographically within each shell (graded lexicographic). This single
// ordering is used everywhere: matrix rows, charge vectors, cache payloads.
struct HermiteBasis {
  int cutoff = 0;
  int quad_order = 0;  // Gauss-Hermite points per axis for basis-weighted integrals
  std::vector<MultiIndex> indices;

  HermiteBasis() = default;
  HermiteBasis(int cutoff_, int quad_order_ = 0) : cutoff(cutoff_), quad_order(quad_order_) {
    if (cutoff < 0) throw InvalidArgument("HermiteBasis: negative cutoff");
    if (quad_order == 0) quad_order = 2 * cutoff + 2;
    if (quad_order < 2 * cutoff + 2)
      throw InvalidArgument("HermiteBasis: quadrature order must be >= 2*cutoff+2");
    for (int N = 0; N <= cutoff; ++N)
      for (const auto& n : enumerate_shell(N)) indices.push_back(n);
  }

  int dim() const { return static_cast<int>(indices.size()); }

  int find(const MultiIndex& n) const {
    for (int i = 0; i < dim(); ++i)
      if (indices[i] == n) return i;
    return -1;
  }
};

inline int basis_dim(int cutoff) {
  // sum of shell sizes = (cutoff+1)(cutoff+2)(cutoff+3)/6
  return (cutoff + 1) * (cutoff + 2) * (cutoff + 3) / 6;
}

}  // namespace fscat
