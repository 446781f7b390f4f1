#pragma once

#include <cstddef>
#include <vector>

#include "tempered/exact.hpp"

namespace tempered {

/// A linear subspace of coordinate space Q^n, stored by its reduced row
/// echelon basis. Two subspaces are equal iff their stored bases are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);
  /// Span of the given rows (need not be independent).
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);
  static Subspace from_matrix(const Matrix& rows);
  static Subspace whole(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis; requires contains(v).
  Vector coordinates(std::span<const Scalar> v) const;
  /// Standard unit vectors at non-pivot columns; together with basis() they span Q^n.
  std::vector<Vector> complement_basis() const;

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace span_sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// Image of W under the linear map x -> M x.
Subspace image(const Matrix& m, const Subspace& w);

}  // namespace tempered
