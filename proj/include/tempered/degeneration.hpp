#pragma once

#include <vector>

#include "tempered/constructors.hpp"
#include "tempered/lie_algebra.hpp"

namespace tempered {

/// Eigenspace decomposition of g under ad X, levels ascending.
struct Grading {
  Element source;
  std::vector<Scalar> levels;
  std::vector<Matrix> spaces;  // spaces[i]: basis rows of the eigenspace for levels[i]

  /// Change of basis: rows are the eigenvectors, grouped by ascending level.
  Matrix eigenbasis() const;
  /// Level of each row of eigenbasis().
  std::vector<Scalar> row_levels() const;
};

/// Throws UnsupportedError when ad X is not diagonalizable over Q, and
/// InternalInconsistency if [g_a, g_b] is not contained in g_{a+b}.
Grading weight_grading(const LieAlgebra& g, const Element& x);

/// Limit of exp(t * sign * ad X) W as t -> +infinity. For sign = -1 the lowest
/// levels dominate: the result is the span of the lowest-level components of
/// an echelon basis of W adapted to the filtration by levels.
Subspace subspace_limit(const Grading& grading, const Subspace& w, int direction_sign);

/// X in the Cartan with alpha(X) = 1 for every simple root.
Element strictly_dominant(const LieAlgebra& g, const RootDatum& rd);

struct LimitWitness {
  Element direction;
  int direction_sign = -1;
  Subspace source;
  Subspace limit;
  bool solvable = false;
  std::vector<std::size_t> derived_dims;  // dimensions along the derived series of the limit
};

/// Contracts h along exp(-tX), X strictly dominant, when h meets the standard
/// maximal unipotent n trivially (a witness h ∩ n⁻ = 0 contracts along +X).
/// Verifies the limit is bracket-closed, solvable and inside the opposite Borel.
LimitWitness contract_to_solvable(const LieAlgebra& g, const RootDatum& rd, const Subspace& h,
                                  const Subspace& n_witness);

}  // namespace tempered
