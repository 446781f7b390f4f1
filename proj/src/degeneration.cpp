#include "tempered/degeneration.hpp"

#include <algorithm>
#include <numeric>

#include "tempered/errors.hpp"
#include "tempered/spectral.hpp"

namespace tempered {

Matrix Grading::eigenbasis() const {
  Matrix m(0, 0);
  for (const auto& s : spaces) {
    if (m.cols() == 0) m = Matrix(0, s.cols());
    for (std::size_t r = 0; r < s.rows(); ++r) m.append_row(s.row(r));
  }
  return m;
}

std::vector<Scalar> Grading::row_levels() const {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < spaces.size(); ++i) out.insert(out.end(), spaces[i].rows(), levels[i]);
  return out;
}

Grading weight_grading(const LieAlgebra& g, const Element& x) {
  const auto eig = rational_diagonalization(g.ad_matrix(x));
  if (!eig) throw UnsupportedError("ad(" + g.format(x) + ") is not diagonalizable over Q");
  Grading grading;
  grading.source = x;
  for (const auto& es : *eig) {
    grading.levels.push_back(es.value);
    grading.spaces.push_back(es.basis);
  }
  for (std::size_t a = 0; a < grading.levels.size(); ++a) {
    for (std::size_t b = a; b < grading.levels.size(); ++b) {
      const Scalar target = grading.levels[a] + grading.levels[b];
      const auto it = std::find(grading.levels.begin(), grading.levels.end(), target);
      const Subspace space = it == grading.levels.end()
                                 ? Subspace(g.dim())
                                 : Subspace::from_matrix(grading.spaces[static_cast<std::size_t>(it - grading.levels.begin())]);
      for (std::size_t i = 0; i < grading.spaces[a].rows(); ++i) {
        for (std::size_t j = 0; j < grading.spaces[b].rows(); ++j) {
          if (!space.contains(g.bracket(grading.spaces[a].row_vector(i), grading.spaces[b].row_vector(j)))) {
            throw InternalInconsistency("grading is not compatible with the bracket");
          }
        }
      }
    }
  }
  return grading;
}

Subspace subspace_limit(const Grading& grading, const Subspace& w, int direction_sign) {
  if (direction_sign != 1 && direction_sign != -1) throw InputError("direction sign must be +1 or -1");
  const std::size_t n = w.ambient_dim();
  if (w.dim() == 0) return w;
  const Matrix basis = grading.eigenbasis();
  const std::vector<Scalar> lv = grading.row_levels();
  // Graded coordinates c with v = c * basis.
  const Matrix coords = Matrix::from_rows(w.basis_vectors(), n) * inverse(basis);
  // Dominant levels first: ascending for contraction by exp(-tX).
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return direction_sign < 0 ? lv[a] < lv[b] : lv[a] > lv[b];
  });
  const auto ech = rref(coords, order);
  std::vector<Vector> leading;
  for (std::size_t r = 0; r < ech.reduced.rows(); ++r) {
    const Scalar& level = lv[ech.pivots[r]];
    Vector c(n, Scalar(0));
    for (std::size_t k = 0; k < n; ++k) {
      if (lv[k] == level) c[k] = ech.reduced(r, k);
    }
    leading.push_back(basis.apply_left(c));
  }
  Subspace limit(n, leading);
  if (limit.dim() != w.dim()) throw InternalInconsistency("limit subspace lost dimension");
  return limit;
}

Element strictly_dominant(const LieAlgebra& g, const RootDatum& rd) {
  Matrix system(0, rd.rank());
  for (auto s : rd.simple) system.append_row(rd.roots[s]);
  const auto coeffs = solve(system, Vector(rd.simple.size(), Scalar(1)));
  if (!coeffs) throw InternalInconsistency("no strictly dominant Cartan element");
  Element x = g.zero();
  for (std::size_t c = 0; c < rd.rank(); ++c) x = add(x, scale((*coeffs)[c], rd.cartan_basis[c]));
  return x;
}

LimitWitness contract_to_solvable(const LieAlgebra& g, const RootDatum& rd, const Subspace& h, const Subspace& n_witness) {
  const Subspace n_plus = maximal_unipotent(g, rd).space();
  const Subspace n_minus = opposite_unipotent(g, rd).space();
  int sign = 0;
  if (n_witness == n_plus) {
    sign = -1;
  } else if (n_witness == n_minus) {
    sign = 1;
  } else {
    throw InputError("maximal unipotent witness must be the standard n or its opposite");
  }
  if (intersection(h, n_witness).dim() != 0) throw InputError("subalgebra meets the maximal unipotent witness nontrivially");

  LimitWitness witness;
  witness.direction = strictly_dominant(g, rd);
  witness.direction_sign = sign;
  witness.source = h;
  const Grading grading = weight_grading(g, witness.direction);
  witness.limit = subspace_limit(grading, h, sign);

  if (!check_subalgebra(g, witness.limit)) throw InternalInconsistency("degeneration limit is not a subalgebra");
  const Subalgebra limit = Subalgebra::certify(g, witness.limit);
  for (const auto& s : derived_series(g, limit)) witness.derived_dims.push_back(s.dim());
  witness.solvable = witness.derived_dims.back() == 0;
  const Subspace target = sign < 0 ? opposite_borel(g, rd).space() : borel(g, rd).space();
  if (!target.contains(witness.limit)) throw InternalInconsistency("degeneration limit is not inside the opposite Borel");
  if (!witness.solvable) throw InternalInconsistency("degeneration limit is not solvable");
  return witness;
}

}  // namespace tempered
