#include "tempered/constructors.hpp"

#include <algorithm>

#include "tempered/errors.hpp"

namespace tempered {

namespace {

using MatrixBasis = std::vector<Matrix>;

Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

/// Ordered matrix basis: positive root vectors, then Cartan, then negative root vectors.
struct Realization {
  MatrixBasis positive, cartan, negative;
  std::vector<std::string> positive_labels, cartan_labels, negative_labels;
  std::string name;
  std::size_t rank;
};

/// Expresses commutators in the matrix basis and extracts the root datum.
RootedAlgebra realize(const Realization& real) {
  MatrixBasis basis;
  std::vector<std::string> labels;
  for (const auto* part : {&real.positive, &real.cartan, &real.negative}) basis.insert(basis.end(), part->begin(), part->end());
  for (const auto* part : {&real.positive_labels, &real.cartan_labels, &real.negative_labels})
    labels.insert(labels.end(), part->begin(), part->end());
  const std::size_t dim = basis.size();
  const std::size_t n = dim ? basis[0].rows() : 0;

  // Coordinates of a flattened matrix: restrict to pivot entries of the basis and invert.
  Matrix flat(0, n * n);
  for (const auto& b : basis) flat.append_row(flatten(b));
  const auto ech = rref(flat.transpose());
  if (ech.pivots.size() != dim) throw InternalInconsistency("matrix basis of " + real.name + " is dependent");
  std::vector<std::size_t> entries;
  {
    // Pick dim linearly independent matrix entries (rows of flat^T).
    const auto rows_ech = rref(flat);
    entries = rows_ech.pivots;
  }
  Matrix sub(dim, dim);
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t e = 0; e < dim; ++e) sub(e, b) = flat(b, entries[e]);
  const Matrix sub_inv = inverse(sub);
  auto coordinates = [&](const Matrix& m) {
    const Vector f = flatten(m);
    Vector picked(dim);
    for (std::size_t e = 0; e < dim; ++e) picked[e] = f[entries[e]];
    Vector c = sub_inv.apply(picked);
    Vector back(n * n, Scalar(0));
    for (std::size_t b = 0; b < dim; ++b) {
      if (sgn(c[b]) == 0) continue;
      for (std::size_t k = 0; k < n * n; ++k) back[k] += c[b] * flat(b, k);
    }
    if (back != f) throw InternalInconsistency("commutator left the matrix algebra " + real.name);
    return c;
  };

  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
      if (comm.is_zero()) continue;
      const Vector c = coordinates(comm);
      for (std::size_t k = 0; k < dim; ++k) {
        if (sgn(c[k]) == 0) continue;
        constants.push_back({i, j, k, c[k]});
        constants.push_back({j, i, k, -c[k]});
      }
    }
  }

  LieAlgebra::Metadata meta;
  meta.labels = labels;
  meta.rank = real.rank;
  meta.name = real.name;
  const std::size_t np = real.positive.size();
  const std::size_t nc = real.cartan.size();
  for (std::size_t k = 0; k < dim; ++k) {
    if (k < np || k >= np + nc) meta.nilpotent_generators.push_back(unit_vector(dim, k));
  }
  auto g = std::make_shared<const LieAlgebra>(dim, constants, std::move(meta));

  RootDatum rd;
  for (std::size_t c = 0; c < nc; ++c) rd.cartan_basis.push_back(unit_vector(dim, np + c));
  for (std::size_t k = 0; k < dim; ++k) {
    if (k >= np && k < np + nc) continue;
    const Element x = unit_vector(dim, k);
    Vector alpha(nc);
    for (std::size_t c = 0; c < nc; ++c) alpha[c] = g->bracket(rd.cartan_basis[c], x)[k];
    rd.roots.push_back(std::move(alpha));
    rd.root_vectors.push_back(x);
    rd.positive.push_back(k < np);
  }

  // Simple roots: positive roots that are not a sum of two positive roots.
  const auto pos = rd.positive_roots();
  for (std::size_t a : pos) {
    bool decomposable = false;
    for (std::size_t b : pos) {
      for (std::size_t c : pos) {
        if (add(rd.roots[b], rd.roots[c]) == rd.roots[a]) decomposable = true;
      }
    }
    if (!decomposable) rd.simple.push_back(a);
  }
  Matrix simple_rows(0, nc);
  for (std::size_t s : rd.simple) simple_rows.append_row(rd.roots[s]);
  for (const auto& alpha : rd.roots) {
    auto coords = solve(simple_rows.transpose(), alpha);
    if (!coords) throw InternalInconsistency("root outside the span of simple roots in " + real.name);
    rd.simple_coordinates.push_back(*coords);
  }
  verify_root_datum(*g, rd);
  return {g, std::move(rd)};
}

std::string index_label(const char* prefix, std::size_t i, std::size_t j) {
  return std::string(prefix) + std::to_string(i + 1) + std::to_string(j + 1);
}

/// Algebra {X : X^T J + J X = 0} for an antidiagonal-type form J, with the
/// diagonal matrices as split Cartan.
Realization form_realization(const Matrix& form, std::string name, std::size_t rank) {
  const std::size_t n = form.rows();
  const Matrix form_inv = inverse(form);
  auto project = [&](const Matrix& e) { return e - form_inv * e.transpose() * form; };
  Realization real;
  real.name = std::move(name);
  real.rank = rank;
  auto greedy_add = [](MatrixBasis& part, const Matrix& m) {
    if (m.is_zero()) return false;
    Matrix flat(0, m.rows() * m.cols());
    for (const auto& b : part) flat.append_row(flatten(b));
    const std::size_t before = tempered::rank(flat);
    flat.append_row(flatten(m));
    if (tempered::rank(flat) == before) return false;
    part.push_back(m);
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (greedy_add(real.positive, project(matrix_unit(n, i, j)))) {
        real.positive_labels.push_back(index_label("X", i, j));
        real.negative.push_back(project(matrix_unit(n, j, i)));
        real.negative_labels.push_back(index_label("X", j, i));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (greedy_add(real.cartan, project(matrix_unit(n, i, i)))) {
      real.cartan_labels.push_back("H" + std::to_string(real.cartan.size()));
    }
  }
  return real;
}

}  // namespace

std::vector<std::size_t> RootDatum::positive_roots() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < roots.size(); ++r)
    if (positive[r]) out.push_back(r);
  return out;
}

std::vector<std::size_t> RootDatum::negative_roots() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < roots.size(); ++r)
    if (!positive[r]) out.push_back(r);
  return out;
}

void verify_root_datum(const LieAlgebra& g, const RootDatum& rd) {
  if (rd.roots.size() + rd.rank() != g.dim()) throw InternalInconsistency("number of roots is not dim - rank");
  for (std::size_t r = 0; r < rd.roots.size(); ++r) {
    for (std::size_t c = 0; c < rd.rank(); ++c) {
      if (g.bracket(rd.cartan_basis[c], rd.root_vectors[r]) != scale(rd.roots[r][c], rd.root_vectors[r])) {
        throw InternalInconsistency("root vector is not a Cartan eigenvector");
      }
    }
    const Vector neg = scale(Scalar(-1), rd.roots[r]);
    if (std::none_of(rd.roots.begin(), rd.roots.end(), [&](const Vector& a) { return a == neg; })) {
      throw InternalInconsistency("root without its negative");
    }
    const auto& sc = rd.simple_coordinates[r];
    for (const auto& c : sc) {
      if (c.get_den() != 1 || (rd.positive[r] ? sgn(c) < 0 : sgn(c) > 0)) {
        throw InternalInconsistency("root is not an integral combination of simple roots of constant sign");
      }
    }
  }
  Matrix simple_rows(0, rd.rank());
  for (std::size_t s : rd.simple) simple_rows.append_row(rd.roots[s]);
  if (rd.simple.size() != rd.rank() || tempered::rank(simple_rows) != rd.rank()) {
    throw InternalInconsistency("simple roots do not form a basis");
  }
}

RootedAlgebra make_sl(int n) {
  if (n < 2) throw InputError("sl(n) needs n >= 2");
  const auto un = static_cast<std::size_t>(n);
  Realization real;
  real.name = "sl(" + std::to_string(n) + ")";
  real.rank = un - 1;
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = i + 1; j < un; ++j) {
      real.positive.push_back(matrix_unit(un, i, j));
      real.positive_labels.push_back(index_label("E", i, j));
      real.negative.push_back(matrix_unit(un, j, i));
      real.negative_labels.push_back(index_label("E", j, i));
    }
  }
  for (std::size_t i = 0; i + 1 < un; ++i) {
    real.cartan.push_back(matrix_unit(un, i, i) - matrix_unit(un, i + 1, i + 1));
    real.cartan_labels.push_back("H" + std::to_string(i + 1));
  }
  if (n == 2) {
    real.positive_labels = {"e"};
    real.cartan_labels = {"h"};
    real.negative_labels = {"f"};
  }
  return realize(real);
}

RootedAlgebra make_so(int n) {
  if (n < 3) throw InputError("so(n) needs n >= 3");
  const auto un = static_cast<std::size_t>(n);
  Matrix form(un, un);
  for (std::size_t i = 0; i < un; ++i) form(i, un - 1 - i) = 1;
  return realize(form_realization(form, "so(" + std::to_string(n) + ")", un / 2));
}

RootedAlgebra make_sp(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw InputError("sp(2n) needs an even size >= 2");
  const auto un = static_cast<std::size_t>(two_n);
  const std::size_t m = un / 2;
  Matrix form(un, un);
  for (std::size_t i = 0; i < m; ++i) {
    form(i, un - 1 - i) = 1;
    form(un - 1 - i, i) = -1;
  }
  return realize(form_realization(form, "sp(" + std::to_string(two_n) + ")", m));
}

RootedAlgebra make_zero_algebra() {
  LieAlgebra::Metadata meta;
  meta.rank = 0;
  meta.name = "0";
  return {std::make_shared<const LieAlgebra>(0, std::vector<StructureConstant>{}, std::move(meta)), RootDatum{}};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<StructureConstant> constants;
  for (const auto& c : a.constants()) constants.push_back(c);
  for (const auto& c : b.constants()) constants.push_back({c.i + da, c.j + da, c.k + da, c.value});
  LieAlgebra::Metadata meta;
  if (da == 0) return b;
  if (db == 0) return a;
  for (const auto& l : a.labels()) meta.labels.push_back(l + ".1");
  for (const auto& l : b.labels()) meta.labels.push_back(l + ".2");
  if (a.rank_from_metadata() && b.rank_from_metadata()) meta.rank = *a.rank() + *b.rank();
  auto extend = [&](const Element& x, std::size_t offset) {
    Element y(da + db, Scalar(0));
    std::copy(x.begin(), x.end(), y.begin() + static_cast<std::ptrdiff_t>(offset));
    return y;
  };
  for (const auto& n : a.nilpotent_generators()) meta.nilpotent_generators.push_back(extend(n, 0));
  for (const auto& n : b.nilpotent_generators()) meta.nilpotent_generators.push_back(extend(n, da));
  meta.name = a.name() + "+" + b.name();
  return LieAlgebra(da + db, constants, std::move(meta));
}

RootedAlgebra direct_sum(const RootedAlgebra& a, const RootedAlgebra& b) {
  const std::size_t da = a.algebra->dim(), db = b.algebra->dim();
  if (da == 0) return b;
  if (db == 0) return a;
  auto g = std::make_shared<const LieAlgebra>(direct_sum(*a.algebra, *b.algebra));
  const std::size_t ra = a.roots.rank(), rb = b.roots.rank();
  auto extend = [&](const Element& x, std::size_t offset) {
    Element y(da + db, Scalar(0));
    std::copy(x.begin(), x.end(), y.begin() + static_cast<std::ptrdiff_t>(offset));
    return y;
  };
  auto extend_cov = [&](const Vector& alpha, std::size_t offset) {
    Vector y(ra + rb, Scalar(0));
    std::copy(alpha.begin(), alpha.end(), y.begin() + static_cast<std::ptrdiff_t>(offset));
    return y;
  };
  auto extend_simple = [&](const Vector& c, std::size_t offset) {
    Vector y(a.roots.simple.size() + b.roots.simple.size(), Scalar(0));
    std::copy(c.begin(), c.end(), y.begin() + static_cast<std::ptrdiff_t>(offset));
    return y;
  };
  RootDatum rd;
  for (const auto& t : a.roots.cartan_basis) rd.cartan_basis.push_back(extend(t, 0));
  for (const auto& t : b.roots.cartan_basis) rd.cartan_basis.push_back(extend(t, da));
  for (std::size_t r = 0; r < a.roots.roots.size(); ++r) {
    rd.roots.push_back(extend_cov(a.roots.roots[r], 0));
    rd.root_vectors.push_back(extend(a.roots.root_vectors[r], 0));
    rd.positive.push_back(a.roots.positive[r]);
    rd.simple_coordinates.push_back(extend_simple(a.roots.simple_coordinates[r], 0));
  }
  const std::size_t na = a.roots.roots.size();
  for (std::size_t r = 0; r < b.roots.roots.size(); ++r) {
    rd.roots.push_back(extend_cov(b.roots.roots[r], ra));
    rd.root_vectors.push_back(extend(b.roots.root_vectors[r], da));
    rd.positive.push_back(b.roots.positive[r]);
    rd.simple_coordinates.push_back(extend_simple(b.roots.simple_coordinates[r], a.roots.simple.size()));
  }
  for (auto s : a.roots.simple) rd.simple.push_back(s);
  for (auto s : b.roots.simple) rd.simple.push_back(s + na);
  verify_root_datum(*g, rd);
  return {g, std::move(rd)};
}

Subalgebra cartan_subalgebra(const LieAlgebra& g, const RootDatum& rd) { return Subalgebra::certify(g, rd.cartan_basis); }

namespace {

Subalgebra root_span(const LieAlgebra& g, const RootDatum& rd, bool with_cartan, bool positive) {
  std::vector<Element> rows;
  if (with_cartan) rows = rd.cartan_basis;
  for (std::size_t r = 0; r < rd.roots.size(); ++r) {
    if (rd.positive[r] == positive) rows.push_back(rd.root_vectors[r]);
  }
  return Subalgebra::certify(g, rows);
}

}  // namespace

Subalgebra borel(const LieAlgebra& g, const RootDatum& rd) { return root_span(g, rd, true, true); }
Subalgebra opposite_borel(const LieAlgebra& g, const RootDatum& rd) { return root_span(g, rd, true, false); }
Subalgebra maximal_unipotent(const LieAlgebra& g, const RootDatum& rd) { return root_span(g, rd, false, true); }
Subalgebra opposite_unipotent(const LieAlgebra& g, const RootDatum& rd) { return root_span(g, rd, false, false); }

Element regular_nilpotent(const RootDatum& rd) {
  if (rd.simple.empty()) return {};
  Element e = zero_vector(rd.root_vectors[0].size());
  for (auto s : rd.simple) e = add(e, rd.root_vectors[s]);
  return e;
}

Parabolic parabolic(const LieAlgebra& g, const RootDatum& rd, const std::set<int>& simple_subset) {
  for (int s : simple_subset) {
    if (s < 1 || static_cast<std::size_t>(s) > rd.simple.size()) {
      throw InputError("simple root index " + std::to_string(s) + " out of range 1.." + std::to_string(rd.simple.size()));
    }
  }
  std::vector<Element> levi = rd.cartan_basis;
  std::vector<Element> nil;
  for (std::size_t r = 0; r < rd.roots.size(); ++r) {
    bool inside = true;
    for (std::size_t s = 0; s < rd.simple.size(); ++s) {
      if (sgn(rd.simple_coordinates[r][s]) != 0 && !simple_subset.contains(static_cast<int>(s + 1))) inside = false;
    }
    if (inside) {
      levi.push_back(rd.root_vectors[r]);
    } else if (rd.positive[r]) {
      nil.push_back(rd.root_vectors[r]);
    }
  }
  std::vector<Element> q = levi;
  q.insert(q.end(), nil.begin(), nil.end());
  return {Subalgebra::certify(g, q), Subalgebra::certify(g, levi), Subalgebra::certify(g, nil)};
}

Sl2Triple principal_sl2(const LieAlgebra& g, const RootDatum& rd) {
  const Element e = regular_nilpotent(rd);
  // H = sum c_i t_i with alpha_s(H) = 2 for every simple root s.
  Matrix system(0, rd.rank());
  for (auto s : rd.simple) system.append_row(rd.roots[s]);
  const auto coeffs = solve(system, Vector(rd.simple.size(), Scalar(2)));
  if (!coeffs) throw InternalInconsistency("no Cartan element with all simple roots equal to 2");
  Element h = g.zero();
  for (std::size_t c = 0; c < rd.rank(); ++c) h = add(h, scale((*coeffs)[c], rd.cartan_basis[c]));
  // F solves ad(E) F = H and (ad(H) + 2) F = 0.
  const Matrix ad_e = g.ad_matrix(e);
  Matrix ad_h = g.ad_matrix(h);
  for (std::size_t i = 0; i < g.dim(); ++i) ad_h(i, i) += 2;
  Matrix stacked(0, g.dim());
  Vector rhs;
  for (std::size_t r = 0; r < g.dim(); ++r) {
    stacked.append_row(ad_e.row(r));
    rhs.push_back(h[r]);
  }
  for (std::size_t r = 0; r < g.dim(); ++r) {
    stacked.append_row(ad_h.row(r));
    rhs.push_back(0);
  }
  const auto f = solve(stacked, rhs);
  if (!f) throw InternalInconsistency("principal sl(2): no F with [E,F] = H, [H,F] = -2F");
  if (g.bracket(h, e) != scale(Scalar(2), e)) throw InternalInconsistency("principal sl(2): [H,E] != 2E");
  return {e, h, *f, Subalgebra::certify(g, {e, h, *f})};
}

DiagonalPair diagonal_embedding(const RootedAlgebra& g) {
  RootedAlgebra sum = direct_sum(g, g);
  const std::size_t d = g.algebra->dim();
  std::vector<Element> rows;
  for (std::size_t i = 0; i < d; ++i) {
    Element x(2 * d, Scalar(0));
    x[i] = 1;
    x[i + d] = 1;
    rows.push_back(std::move(x));
  }
  Subalgebra diag = Subalgebra::certify(*sum.algebra, rows);
  return {std::move(sum), std::move(diag)};
}

RootedAlgebra build_preset(const AlgebraPreset& preset) {
  if (preset.type == "sl") return make_sl(preset.n);
  if (preset.type == "so") return make_so(preset.n);
  if (preset.type == "sp") return make_sp(preset.n);
  if (preset.type == "sum") {
    if (preset.summands.empty()) throw InputError("sum algebra needs at least one summand");
    RootedAlgebra acc = build_preset(preset.summands[0]);
    for (std::size_t i = 1; i < preset.summands.size(); ++i) acc = direct_sum(acc, build_preset(preset.summands[i]));
    return acc;
  }
  throw InputError("unknown algebra type '" + preset.type + "'");
}

namespace {

bool same_preset(const AlgebraPreset& a, const AlgebraPreset& b) {
  if (a.type != b.type || a.n != b.n || a.summands.size() != b.summands.size()) return false;
  for (std::size_t i = 0; i < a.summands.size(); ++i)
    if (!same_preset(a.summands[i], b.summands[i])) return false;
  return true;
}

Pair resolve_preset_subalgebra(const AlgebraPreset& ap, const SubalgebraPreset& sp) {
  RootedAlgebra ra = build_preset(ap);
  const LieAlgebra& g = *ra.algebra;
  const RootDatum& rd = ra.roots;
  Pair p{"", ra.algebra, rd, Subalgebra::zero(g), std::vector<Element>{}, std::nullopt};
  const std::string& name = sp.preset;
  if (name == "zero") {
  } else if (name == "whole") {
    p.subalgebra = Subalgebra::whole(g);
    p.toral = rd.cartan_basis;
  } else if (name == "borel") {
    p.subalgebra = borel(g, rd);
    p.toral = rd.cartan_basis;
  } else if (name == "opposite_borel") {
    p.subalgebra = opposite_borel(g, rd);
    p.toral = rd.cartan_basis;
  } else if (name == "cartan") {
    p.subalgebra = cartan_subalgebra(g, rd);
    p.toral = rd.cartan_basis;
  } else if (name == "max_unipotent") {
    p.subalgebra = maximal_unipotent(g, rd);
  } else if (name == "opposite_unipotent") {
    p.subalgebra = opposite_unipotent(g, rd);
  } else if (name == "parabolic" || name == "levi" || name == "nilradical") {
    auto par = parabolic(g, rd, sp.simple_roots);
    if (name == "parabolic") {
      p.subalgebra = par.q;
      p.toral = rd.cartan_basis;
    } else if (name == "levi") {
      p.subalgebra = par.levi;
      p.toral = rd.cartan_basis;
    } else {
      p.subalgebra = par.nilradical;
    }
  } else if (name == "principal_sl2") {
    auto tr = principal_sl2(g, rd);
    p.subalgebra = tr.span;
    p.toral = std::vector<Element>{tr.h};
  } else if (name == "regular_nilpotent") {
    p.subalgebra = Subalgebra::certify(g, {regular_nilpotent(rd)});
  } else if (name == "diagonal") {
    if (ap.type != "sum" || ap.summands.size() != 2 || !same_preset(ap.summands[0], ap.summands[1])) {
      throw InputError("preset 'diagonal' needs an algebra of the form sum of two equal summands");
    }
    RootedAlgebra base = build_preset(ap.summands[0]);
    const std::size_t d = base.algebra->dim();
    std::vector<Element> rows, toral;
    for (std::size_t i = 0; i < d; ++i) {
      Element x(2 * d, Scalar(0));
      x[i] = x[i + d] = 1;
      rows.push_back(std::move(x));
    }
    for (const auto& t : base.roots.cartan_basis) {
      Element x(2 * d, Scalar(0));
      std::copy(t.begin(), t.end(), x.begin());
      std::copy(t.begin(), t.end(), x.begin() + static_cast<std::ptrdiff_t>(d));
      toral.push_back(std::move(x));
    }
    p.subalgebra = Subalgebra::certify(g, rows);
    p.toral = toral;
  } else if (name == "factor") {
    if (ap.type != "sum" || sp.index < 1 || static_cast<std::size_t>(sp.index) > ap.summands.size()) {
      throw InputError("preset 'factor' needs a sum algebra and an index in 1..#summands");
    }
    std::size_t offset = 0, size = 0, cartan_offset = 0, cartan_size = 0;
    for (int i = 0; i < sp.index; ++i) {
      RootedAlgebra part = build_preset(ap.summands[static_cast<std::size_t>(i)]);
      if (i + 1 < sp.index) {
        offset += part.algebra->dim();
        cartan_offset += part.roots.rank();
      } else {
        size = part.algebra->dim();
        cartan_size = part.roots.rank();
      }
    }
    std::vector<Element> rows;
    for (std::size_t i = 0; i < size; ++i) rows.push_back(unit_vector(g.dim(), offset + i));
    p.subalgebra = Subalgebra::certify(g, rows);
    p.toral = std::vector<Element>(rd.cartan_basis.begin() + static_cast<std::ptrdiff_t>(cartan_offset),
                                   rd.cartan_basis.begin() + static_cast<std::ptrdiff_t>(cartan_offset + cartan_size));
  } else {
    throw InputError("unknown subalgebra preset '" + name + "'");
  }
  return p;
}

}  // namespace

Pair resolve_pair(const PairSpec& spec) {
  Pair p{spec.label, nullptr, std::nullopt, Subalgebra::zero(*make_zero_algebra().algebra), std::nullopt, spec.expected_verdict};
  if (const auto* preset = std::get_if<AlgebraPreset>(&spec.algebra)) {
    if (const auto* sub = std::get_if<SubalgebraPreset>(&spec.subalgebra)) {
      Pair resolved = resolve_preset_subalgebra(*preset, *sub);
      resolved.label = spec.label;
      resolved.expected_verdict = spec.expected_verdict;
      p = std::move(resolved);
    } else {
      RootedAlgebra ra = build_preset(*preset);
      p.algebra = ra.algebra;
      p.roots = ra.roots;
    }
  } else {
    const auto& ex = std::get<ExplicitAlgebra>(spec.algebra);
    LieAlgebra::Metadata meta;
    meta.labels = ex.labels;
    meta.name = spec.label.empty() ? "explicit" : spec.label;
    p.algebra = std::make_shared<const LieAlgebra>(LieAlgebra::from_dense(ex.constants, std::move(meta)));
    if (std::holds_alternative<SubalgebraPreset>(spec.subalgebra)) {
      const auto& name = std::get<SubalgebraPreset>(spec.subalgebra).preset;
      if (name == "zero") {
        p.subalgebra = Subalgebra::zero(*p.algebra);
        p.toral = std::vector<Element>{};
      } else if (name == "whole") {
        p.subalgebra = Subalgebra::whole(*p.algebra);
      } else {
        throw InputError("preset '" + name + "' needs a catalog algebra with a root datum");
      }
    }
  }
  if (const auto* rows = std::get_if<std::vector<Vector>>(&spec.subalgebra)) {
    for (const auto& r : *rows) {
      if (r.size() != p.algebra->dim()) throw InputError("subalgebra basis row has wrong length");
    }
    p.subalgebra = Subalgebra::certify(*p.algebra, *rows);
    p.toral = std::nullopt;
  }
  if (spec.toral_hint) {
    for (const auto& t : *spec.toral_hint) {
      if (t.size() != p.algebra->dim()) throw InputError("toral hint row has wrong length");
    }
    p.toral = *spec.toral_hint;
  }
  return p;
}

}  // namespace tempered
