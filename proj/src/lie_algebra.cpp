#include "tempered/lie_algebra.hpp"

#include <limits>
#include <sstream>

#include "tempered/errors.hpp"
#include "tempered/random.hpp"

namespace tempered {

namespace {

std::size_t sampled_rank(const LieAlgebra& g, int trials, std::uint64_t seed) {
  std::size_t best = g.dim();
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, 0x52414e4bULL, static_cast<std::uint64_t>(t)));
    best = std::min(best, centralizer(g, rng.vector(g.dim())).dim());
  }
  return best;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<StructureConstant>& constants, Metadata meta)
    : dim_(dim), dense_(dim * dim * dim, Scalar(0)), by_pair_(dim * dim), meta_(std::move(meta)) {
  for (const auto& sc : constants) {
    if (sc.i >= dim || sc.j >= dim || sc.k >= dim) throw InputError("structure constant index out of range");
    dense_[(sc.i * dim + sc.j) * dim + sc.k] += sc.value;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& v = constant(i, j, k);
        if (v != -constant(j, i, k)) {
          std::ostringstream msg;
          msg << "antisymmetry fails: c[" << i << "][" << j << "][" << k << "] != -c[" << j << "][" << i << "][" << k << "]";
          throw InputError(msg.str());
        }
        if (sgn(v) != 0) {
          sparse_.push_back({i, j, k, v});
          by_pair_[i * dim + j].emplace_back(k, v);
        }
      }
    }
  }
  if (meta_.labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) meta_.labels.push_back("e" + std::to_string(i));
  }
  if (meta_.labels.size() != dim) throw InputError("basis label count does not match dimension");

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::size_t k = j + 1; k < dim; ++k) {
        const auto ei = basis_element(i), ej = basis_element(j), ek = basis_element(k);
        Element s = bracket(ei, bracket(ej, ek));
        s = add(s, bracket(ej, bracket(ek, ei)));
        s = add(s, bracket(ek, bracket(ei, ej)));
        if (!is_zero(s)) {
          throw InputError("Jacobi identity fails for basis triple (" + meta_.labels[i] + ", " + meta_.labels[j] +
                           ", " + meta_.labels[k] + ")");
        }
      }
    }
  }

  // K(e_i, e_j) = sum_{k,l} c[i][l][k] c[j][k][l]
  gram_ = Matrix(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      Scalar s = 0;
      for (std::size_t l = 0; l < dim; ++l) {
        for (const auto& [k, v] : by_pair_[i * dim + l]) {
          const Scalar& w = constant(j, k, l);
          if (sgn(w) != 0) s += v * w;
        }
      }
      gram_(i, j) = s;
      gram_(j, i) = s;
    }
  }
  semisimple_ = dim > 0 && tempered::rank(gram_) == dim;
  if (meta_.rank) {
    rank_ = meta_.rank;
  } else if (dim > 0) {
    rank_ = sampled_rank(*this, 8, 0);
  } else {
    rank_ = 0;
  }
}

LieAlgebra LieAlgebra::from_dense(const std::vector<std::vector<std::vector<Scalar>>>& constants, Metadata meta) {
  const std::size_t dim = constants.size();
  std::vector<StructureConstant> sparse;
  for (std::size_t i = 0; i < dim; ++i) {
    if (constants[i].size() != dim) throw InputError("structure constants must be a dim x dim x dim array");
    for (std::size_t j = 0; j < dim; ++j) {
      if (constants[i][j].size() != dim) throw InputError("structure constants must be a dim x dim x dim array");
      for (std::size_t k = 0; k < dim; ++k) {
        if (sgn(constants[i][j][k]) != 0) sparse.push_back({i, j, k, constants[i][j][k]});
      }
    }
  }
  return LieAlgebra(dim, sparse, std::move(meta));
}

void LieAlgebra::check_dim(const Element& x) const {
  if (x.size() != dim_) {
    throw InputError("element has " + std::to_string(x.size()) + " coordinates, algebra has dimension " +
                     std::to_string(dim_));
  }
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  check_dim(x);
  check_dim(y);
  Element out(dim_, Scalar(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& entries = by_pair_[i * dim_ + j];
      if (entries.empty()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& [k, v] : entries) out[k] += xy * v;
    }
  }
  return out;
}

Matrix LieAlgebra::ad_matrix(const Element& x) const {
  check_dim(x);
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [k, v] : by_pair_[i * dim_ + j]) m(k, j) += x[i] * v;
    }
  }
  return m;
}

Scalar LieAlgebra::killing_form(const Element& x, const Element& y) const {
  check_dim(x);
  check_dim(y);
  return dot(x, gram_.apply(y));
}

std::string LieAlgebra::format(const Element& x) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Scalar c = x[i];
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (c != 1) out << c.get_str() << "*";
    out << meta_.labels[i];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Subalgebra Subalgebra::certify(const LieAlgebra& g, const std::vector<Element>& rows) {
  Subspace w(g.dim(), rows);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (!w.contains(g.bracket(rows[a], rows[b]))) {
        throw InputError("subspace is not closed under the bracket: [" + g.format(rows[a]) + ", " +
                         g.format(rows[b]) + "] = " + g.format(g.bracket(rows[a], rows[b])) +
                         " lies outside the span");
      }
    }
  }
  return Subalgebra(std::move(w));
}

Subalgebra Subalgebra::certify(const LieAlgebra& g, const Subspace& w) { return certify(g, w.basis_vectors()); }

AutomorphismMatrix AutomorphismMatrix::then(const AutomorphismMatrix& next) const {
  AutomorphismMatrix out{next.matrix * matrix, provenance};
  out.provenance.insert(out.provenance.end(), next.provenance.begin(), next.provenance.end());
  return out;
}

Subspace centralizer(const LieAlgebra& g, const Element& x) { return Subspace::from_matrix(nullspace(g.ad_matrix(x))); }

Subspace centralizer_in(const LieAlgebra& g, const Subspace& w, const Element& x) {
  return intersection(w, centralizer(g, x));
}

std::size_t rank(const LieAlgebra& g, int trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("rank estimation needs at least one trial");
  const std::size_t estimate = sampled_rank(g, trials, seed);
  if (g.rank_from_metadata() && *g.rank() != estimate) {
    throw InternalInconsistency("rank metadata " + std::to_string(*g.rank()) + " disagrees with sampled rank " +
                                std::to_string(estimate) + " for " + g.name());
  }
  return g.rank_from_metadata() ? *g.rank() : estimate;
}

bool is_regular(const LieAlgebra& g, const Element& x) {
  if (!g.rank()) throw UnsupportedError("rank of the algebra is unknown");
  return centralizer(g, x).dim() == *g.rank();
}

Subspace orthogonal_complement(const LieAlgebra& g, const Subspace& h) {
  if (!g.is_semisimple()) throw UnsupportedError("orthogonal complement needs a nondegenerate Killing form");
  if (h.dim() == 0) return Subspace::whole(g.dim());
  // Rows are K(b_i, .) as linear functionals.
  Matrix functionals = h.basis() * g.killing_gram();
  return Subspace::from_matrix(nullspace(functionals));
}

bool check_subalgebra(const LieAlgebra& g, const Subspace& w) {
  for (std::size_t a = 0; a < w.dim(); ++a) {
    for (std::size_t b = a + 1; b < w.dim(); ++b) {
      if (!w.contains(g.bracket(w.basis_vector(a), w.basis_vector(b)))) return false;
    }
  }
  return true;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < u.dim(); ++a) {
    const auto x = u.basis_vector(a);
    for (std::size_t b = 0; b < v.dim(); ++b) {
      auto z = g.bracket(x, v.basis_vector(b));
      if (!is_zero(z)) rows.push_back(std::move(z));
    }
  }
  return Subspace(g.dim(), rows);
}

std::vector<Subspace> derived_series(const LieAlgebra& g, const Subalgebra& h) {
  std::vector<Subspace> series{h.space()};
  while (true) {
    Subspace next = bracket_span(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

bool is_solvable(const LieAlgebra& g, const Subalgebra& h) { return derived_series(g, h).back().dim() == 0; }

std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subalgebra& h) {
  std::vector<Subspace> series{h.space()};
  while (true) {
    Subspace next = bracket_span(g, h.space(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

bool is_nilpotent_algebra(const LieAlgebra& g, const Subalgebra& h) {
  return lower_central_series(g, h).back().dim() == 0;
}

bool is_abelian(const LieAlgebra& g, const Subspace& w) {
  for (std::size_t a = 0; a < w.dim(); ++a) {
    for (std::size_t b = a + 1; b < w.dim(); ++b) {
      if (!is_zero(g.bracket(w.basis_vector(a), w.basis_vector(b)))) return false;
    }
  }
  return true;
}

bool is_nilpotent_matrix(const Matrix& m) {
  Matrix p = m;
  for (std::size_t k = 1; k < m.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

bool is_unipotent_subalgebra(const LieAlgebra& g, const Subalgebra& h) {
  for (const auto& b : h.basis()) {
    if (!is_nilpotent_matrix(g.ad_matrix(b))) return false;
  }
  return is_nilpotent_algebra(g, h);
}

bool is_reductive_testable(const LieAlgebra& g, const Subspace& w) {
  if (w.dim() == 0) return true;
  const Matrix restricted = w.basis() * g.killing_gram() * w.basis().transpose();
  return tempered::rank(restricted) == w.dim();
}

AutomorphismMatrix identity_automorphism(const LieAlgebra& g) { return {Matrix::identity(g.dim()), {}}; }

AutomorphismMatrix exp_ad(const LieAlgebra& g, const Element& x) {
  const Matrix ad = g.ad_matrix(x);
  Matrix sum = Matrix::identity(g.dim());
  Matrix term = Matrix::identity(g.dim());
  for (std::size_t k = 1; k <= g.dim(); ++k) {
    term = (term * ad).scaled(Scalar(1, static_cast<unsigned long>(k)));
    if (term.is_zero()) return {std::move(sum), {{x, Scalar(1)}}};
    sum = sum + term;
  }
  if (!term.is_zero() || !(term * ad).is_zero()) {
    throw UnsupportedError("exp_ad requires an ad-nilpotent element, got " + g.format(x));
  }
  return {std::move(sum), {{x, Scalar(1)}}};
}

AutomorphismMatrix random_automorphism(const LieAlgebra& g, int word_length, std::uint64_t seed,
                                       int coefficient_bound) {
  if (word_length < 0) throw InputError("word length must be nonnegative");
  AutomorphismMatrix phi = identity_automorphism(g);
  if (word_length == 0) return phi;
  const auto& gens = g.nilpotent_generators();
  if (gens.empty()) throw UnsupportedError("algebra " + g.name() + " has no designated nilpotent generators");
  Rng rng(seed);
  for (int w = 0; w < word_length; ++w) {
    const auto& n = gens[rng.index(gens.size())];
    const Scalar t(static_cast<long>(rng.nonzero(coefficient_bound)));
    AutomorphismMatrix factor = exp_ad(g, scale(t, n));
    factor.provenance = {{n, t}};
    phi = phi.then(factor);
  }
  return phi;
}

bool preserves_bracket(const LieAlgebra& g, const Matrix& phi) {
  std::vector<Element> images;
  for (std::size_t i = 0; i < g.dim(); ++i) images.push_back(phi.col_vector(i));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const auto lhs = phi.apply(g.bracket(g.basis_element(i), g.basis_element(j)));
      if (lhs != g.bracket(images[i], images[j])) return false;
    }
  }
  return true;
}

}  // namespace tempered
