#include "tempered/rho.hpp"

#include <algorithm>

#include "tempered/arrangement.hpp"
#include "tempered/errors.hpp"
#include "tempered/spectral.hpp"

namespace tempered {

namespace {

/// Joint eigenspaces of commuting matrices acting on Q^p (column convention).
WeightSystem joint_weights(const std::vector<Matrix>& actions, std::size_t p, std::string label) {
  struct Piece {
    Subspace space;
    Vector weight;
  };
  std::vector<Piece> pieces{{Subspace::whole(p), {}}};
  if (p == 0) pieces.clear();
  for (const auto& act : actions) {
    std::vector<Piece> next;
    for (const auto& piece : pieces) {
      const std::size_t q = piece.space.dim();
      Matrix restricted(q, q);
      for (std::size_t i = 0; i < q; ++i) {
        const Vector image_vec = act.apply(piece.space.basis().row(i));
        if (!piece.space.contains(image_vec)) throw InputError("toral elements do not commute on the module");
        const Vector c = piece.space.coordinates(image_vec);
        for (std::size_t l = 0; l < q; ++l) restricted(l, i) = c[l];
      }
      const auto eig = rational_diagonalization(restricted);
      if (!eig) throw UnsupportedError("toral element is not diagonalizable with rational eigenvalues on the module");
      for (const auto& es : *eig) {
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < es.basis.rows(); ++r) rows.push_back(piece.space.basis().apply_left(es.basis.row(r)));
        Vector w = piece.weight;
        w.push_back(es.value);
        next.push_back({Subspace(p, rows), std::move(w)});
      }
    }
    pieces = std::move(next);
  }
  if (actions.empty() && p > 0) pieces = {{Subspace::whole(p), {}}};
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.weight < b.weight; });
  WeightSystem ws;
  ws.module_label = std::move(label);
  for (auto& piece : pieces) {
    ws.weights.push_back(piece.weight);
    ws.multiplicities.push_back(piece.space.dim());
  }
  return ws;
}

}  // namespace

std::size_t WeightSystem::module_dim() const {
  std::size_t s = 0;
  for (auto m : multiplicities) s += m;
  return s;
}

ToralSubalgebra find_toral(const LieAlgebra& g, const Subalgebra& h, const std::optional<std::vector<Element>>& hint) {
  if (!hint) {
    if (is_unipotent_subalgebra(g, h)) return {};
    return {{}, true};
  }
  const auto& basis = *hint;
  Matrix rows(0, g.dim());
  for (const auto& t : basis) {
    if (t.size() != g.dim()) throw InputError("toral basis element has wrong length");
    if (!h.space().contains(t)) throw InputError("toral basis element " + g.format(t) + " is not in the subalgebra");
    rows.append_row(t);
  }
  if (rank(rows) != basis.size()) throw InputError("toral basis is linearly dependent");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!is_zero(g.bracket(basis[i], basis[j]))) {
        throw InputError("toral basis elements " + g.format(basis[i]) + " and " + g.format(basis[j]) + " do not commute");
      }
    }
    if (!rational_diagonalization(g.ad_matrix(basis[i]))) {
      throw InputError("toral basis element " + g.format(basis[i]) + " is not diagonalizable over Q");
    }
  }
  return {basis, false};
}

WeightSystem weight_system(const LieAlgebra& g, const Subspace& module, const ToralSubalgebra& a, std::string label) {
  const std::size_t p = module.dim();
  std::vector<Matrix> actions;
  for (const auto& t : a.basis) {
    Matrix act(p, p);
    for (std::size_t j = 0; j < p; ++j) {
      const Vector image_vec = g.bracket(t, module.basis_vector(j));
      if (!module.contains(image_vec)) throw InputError("module is not stable under ad of the toral subalgebra");
      const Vector c = module.coordinates(image_vec);
      for (std::size_t i = 0; i < p; ++i) act(i, j) = c[i];
    }
    actions.push_back(std::move(act));
  }
  return joint_weights(actions, p, std::move(label));
}

WeightSystem quotient_weight_system(const LieAlgebra& g, const Subspace& h, const ToralSubalgebra& a) {
  const std::size_t n = g.dim();
  const std::size_t k = h.dim();
  std::vector<Vector> rows = h.basis_vectors();
  const auto comp = h.complement_basis();
  rows.insert(rows.end(), comp.begin(), comp.end());
  const Matrix full = Matrix::from_rows(rows, n);
  const Matrix full_inv = inverse(full);  // v = c * full  =>  c = v * full_inv
  std::vector<Matrix> actions;
  for (const auto& t : a.basis) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!h.contains(g.bracket(t, h.basis_vector(i)))) throw InputError("subalgebra is not stable under the toral subalgebra");
    }
    Matrix act(n - k, n - k);
    for (std::size_t j = 0; j < comp.size(); ++j) {
      const Vector c = full_inv.apply_left(g.bracket(t, comp[j]));
      for (std::size_t i = 0; i < n - k; ++i) act(i, j) = c[k + i];
    }
    actions.push_back(std::move(act));
  }
  return joint_weights(actions, n - k, "g/h");
}

Scalar rho_value(const WeightSystem& ws, const Vector& y) {
  Scalar s = 0;
  for (std::size_t i = 0; i < ws.weights.size(); ++i) {
    if (ws.weights[i].size() != y.size()) throw InputError("rho evaluation point has wrong dimension");
    s += abs(dot(ws.weights[i], y)) * static_cast<unsigned long>(ws.multiplicities[i]);
  }
  return s / 2;
}

LinearRhoCheck rho_combination_nonnegative(const std::vector<std::pair<Scalar, WeightSystem>>& terms,
                                           std::size_t toral_dim, const RhoOptions& options) {
  LinearRhoCheck out;
  if (toral_dim == 0) {
    out.chamber_count = 1;
    return out;
  }
  // Restrict to the span of all weights: every rho factors through it.
  std::vector<Vector> all;
  for (const auto& [c, ws] : terms) all.insert(all.end(), ws.weights.begin(), ws.weights.end());
  const Matrix span_basis = rref(Matrix::from_rows(all, toral_dim)).reduced;
  const std::size_t d = span_basis.rows();
  Arrangement arr;
  arr.dim = d;
  std::vector<Vector> normals;
  for (const auto& w : all) normals.push_back(span_basis.apply(w));
  arr.normals = distinct_hyperplanes(normals);

  std::vector<Vector> essential_rays;
  if (d == 0) {
    out.chamber_count = 1;
  } else if (d == 1) {
    essential_rays = {Vector{Scalar(1)}, Vector{Scalar(-1)}};
    out.chamber_count = 2;
  } else {
    auto chambers = enumerate_chambers(arr, options.chamber_budget, options.parallelism);
    essential_rays = std::move(chambers.rays);
    out.chamber_count = chambers.chambers.size();
  }
  for (const auto& z : essential_rays) {
    const Vector y = span_basis.transpose().apply(z);
    Scalar f = 0;
    for (const auto& [c, ws] : terms) f += c * rho_value(ws, y);
    out.rays.push_back(y);
    if (sgn(f) < 0 && !out.violation) {
      out.holds = false;
      out.violation = y;
    }
  }
  return out;
}

RhoReport rho_inequality(const LieAlgebra& g, const Subalgebra& h, const ToralSubalgebra& a, const RhoOptions& options) {
  if (a.undetermined) throw UnsupportedError("toral subalgebra undetermined; supply a toral hint");
  RhoReport report;
  report.subalgebra_weights = weight_system(g, h.space(), a, "h");
  report.quotient_weights = quotient_weight_system(g, h.space(), a);
  if (a.dim() == 0) {
    report.vacuous = true;
    report.chamber_count = 1;
    return report;
  }
  const auto check = rho_combination_nonnegative(
      {{Scalar(1), report.quotient_weights}, {Scalar(-1), report.subalgebra_weights}}, a.dim(), options);
  report.verdict = check.holds;
  report.failing_ray = check.violation;
  report.chamber_count = check.chamber_count;
  report.rays_checked = check.rays.size();
  std::vector<Vector> all = report.subalgebra_weights.weights;
  all.insert(all.end(), report.quotient_weights.weights.begin(), report.quotient_weights.weights.end());
  report.hyperplanes = distinct_hyperplanes(all).size();
  for (const auto& y : check.rays) {
    report.ray_values.push_back({y, rho_value(report.subalgebra_weights, y), rho_value(report.quotient_weights, y)});
  }
  return report;
}

}  // namespace tempered
