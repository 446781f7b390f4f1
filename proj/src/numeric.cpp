#include "tempered/numeric.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "tempered/errors.hpp"

namespace tempered {

namespace {

using Dense = Eigen::MatrixXd;

Dense to_dense(const Matrix& m) {
  Dense d(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).get_d();
  return d;
}

/// Orthonormal basis of the column span of `cols` (full column rank assumed).
Dense orthonormal_columns(const Dense& cols) {
  Eigen::HouseholderQR<Dense> qr(cols);
  return qr.householderQ() * Dense::Identity(cols.rows(), cols.cols());
}

double distance_of_columns(const Dense& a, const Dense& b) {
  if (a.cols() != b.cols()) throw InputError("subspace distance needs equal dimensions");
  if (a.cols() == 0) return 0.0;
  const Dense qa = orthonormal_columns(a);
  const Dense qb = orthonormal_columns(b);
  const Dense residual = qb - qa * (qa.transpose() * qb);
  Eigen::JacobiSVD<Dense> svd(residual);
  return svd.singularValues()(0);
}

}  // namespace

double subspace_distance(const Subspace& a, const Subspace& b) {
  return distance_of_columns(to_dense(a.basis()).transpose(), to_dense(b.basis()).transpose());
}

double flow_distance(const Grading& grading, const Subspace& w, int direction_sign, double t, const Subspace& target) {
  const Matrix basis = grading.eigenbasis();
  const std::vector<Scalar> exact_levels = grading.row_levels();
  Dense c = to_dense(w.basis() * inverse(basis));
  const Eigen::Index n = c.cols();
  std::vector<double> level(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) level[static_cast<std::size_t>(k)] = direction_sign * exact_levels[static_cast<std::size_t>(k)].get_d();

  // Floating-point elimination with partial pivoting, dominant levels first. Any
  // basis spans the same flowed subspace; this one keeps every flowed row
  // dominated by its own pivot, so normalizing rows loses nothing to cancellation.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return level[static_cast<std::size_t>(a)] > level[static_cast<std::size_t>(b)]; });
  constexpr double kRoundoff = 1e-9;
  Eigen::Index lead = 0;
  for (const Eigen::Index col : order) {
    if (lead == c.rows()) break;
    Eigen::Index best = lead;
    for (Eigen::Index r = lead; r < c.rows(); ++r)
      if (std::abs(c(r, col)) > std::abs(c(best, col))) best = r;
    if (std::abs(c(best, col)) < kRoundoff) {
      for (Eigen::Index r = lead; r < c.rows(); ++r) c(r, col) = 0.0;
      continue;
    }
    c.row(lead).swap(c.row(best));
    for (Eigen::Index r = lead + 1; r < c.rows(); ++r) {
      c.row(r) -= (c(r, col) / c(lead, col)) * c.row(lead);
      c(r, col) = 0.0;
    }
    ++lead;
  }
  for (Eigen::Index r = 0; r < c.rows(); ++r) {
    double top = -INFINITY;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (std::abs(c(r, k)) < kRoundoff) c(r, k) = 0.0;
      if (c(r, k) != 0.0) top = std::max(top, t * level[static_cast<std::size_t>(k)]);
    }
    for (Eigen::Index k = 0; k < n; ++k) c(r, k) *= std::exp(t * level[static_cast<std::size_t>(k)] - top);
  }
  const Dense moved = c * to_dense(basis);
  return distance_of_columns(moved.transpose(), to_dense(target.basis()).transpose());
}

}  // namespace tempered
