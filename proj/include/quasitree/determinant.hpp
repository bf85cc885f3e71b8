#pragma once

#include <vector>

#include <Eigen/Core>

#include "quasitree/knot_diagram.hpp"
#include "quasitree/polynomial.hpp"

namespace quasitree {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Proper two-colouring of the faces of a diagram.
struct Checkerboard {
  std::vector<Face> faces;
  std::vector<bool> shaded;  // indexed by face id
  int unbounded_face = 0;
};

/// The face with the most corners (lowest id on ties) stands in for the
/// unbounded face and is left unshaded; `swap` shades the other class.
Checkerboard checkerboard(const KnotDiagram& diagram, bool swap = false);

struct GoeritzData {
  Checkerboard coloring;
  std::vector<int> shaded_faces;   // row/column order of `matrix`
  IntMatrix matrix;                // unreduced, symmetric, zero row sums
  std::vector<int> crossing_types; // +1 when the shaded corners are the A-corners
};

GoeritzData goeritz(const KnotDiagram& diagram, bool swap = false);

/// Exact determinant by fraction-free (Bareiss) elimination. The empty matrix
/// has determinant 1.
template <typename Derived>
BigInt bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  std::vector<BigInt> a(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i * n + j] = static_cast<long long>(m(i, j));
  auto at = [&](Eigen::Index i, Eigen::Index j) -> BigInt& { return a[i * n + j]; };

  BigInt prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (Eigen::Index j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    }
    prev = at(k, k);
  }
  return n == 0 ? BigInt(1) : sign * at(n - 1, n - 1);
}

/// |det| of the Goeritz matrix with row and column `deleted` removed.
BigInt reduced_determinant(const GoeritzData& data, int deleted);

/// Knot determinant, deleting the shaded face with the largest id.
BigInt knot_determinant(const KnotDiagram& diagram);

}  // namespace quasitree
