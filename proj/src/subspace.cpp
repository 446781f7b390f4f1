#include "tempered/subspace.hpp"

#include "tempered/errors.hpp"

namespace tempered {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : ambient_(ambient_dim) {
  auto e = rref(Matrix::from_rows(spanning, ambient_dim));
  basis_ = std::move(e.reduced);
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::from_matrix(const Matrix& rows) {
  return Subspace(rows.cols(), rows.row_vectors());
}

Subspace Subspace::whole(std::size_t n) { return from_matrix(Matrix::identity(n)); }

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw InputError("vector length does not match subspace ambient dimension");
  Vector rest(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Scalar f = rest[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (sgn(basis_(r, c)) != 0) rest[c] -= f * basis_(r, c);
    }
  }
  return is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw InputError("vector is not in the subspace");
  Vector c(pivots_.size());
  for (std::size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

std::vector<Vector> Subspace::complement_basis() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (!is_pivot[i]) out.push_back(unit_vector(ambient_, i));
  }
  return out;
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  auto rows = a.basis_vectors();
  for (auto& v : b.basis_vectors()) rows.push_back(std::move(v));
  return Subspace(a.ambient_dim(), rows);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  // Solve x A = y B via the kernel of [A^T | -B^T].
  Matrix stacked(n, a.dim() + b.dim());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < a.dim(); ++i) stacked(c, i) = a.basis()(i, c);
    for (std::size_t j = 0; j < b.dim(); ++j) stacked(c, a.dim() + j) = -b.basis()(j, c);
  }
  const Matrix ker = nullspace(stacked);
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vector coeff(ker.row(k).begin(), ker.row(k).begin() + static_cast<std::ptrdiff_t>(a.dim()));
    rows.push_back(a.basis().apply_left(coeff));
  }
  return Subspace(n, rows);
}

Subspace image(const Matrix& m, const Subspace& w) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < w.dim(); ++r) rows.push_back(m.apply(w.basis().row(r)));
  return Subspace(m.rows(), rows);
}

}  // namespace tempered
