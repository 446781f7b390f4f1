#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tempered/exact.hpp"
#include "tempered/subspace.hpp"

namespace tempered {

/// Coordinates of an element in the basis of its owning algebra.
using Element = Vector;

/// One nonzero structure constant: [e_i, e_j] has coefficient `value` on e_k.
struct StructureConstant {
  std::size_t i, j, k;
  Scalar value;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
///
/// The constructor checks antisymmetry and the Jacobi identity exactly and
/// throws InputError naming the first violation. Everything derived from the
/// constants (adjoint matrices of the basis, Killing Gram matrix, semisimplicity,
/// rank) is computed once at construction, so instances are immutable and safe
/// to share across threads.
class LieAlgebra {
 public:
  struct Metadata {
    std::vector<std::string> labels;  // defaults to e0, e1, ...
    std::optional<std::size_t> rank;  // stamped by catalog constructors
    std::vector<Element> nilpotent_generators;  // root vectors, for random automorphisms
    std::string name;
  };

  LieAlgebra(std::size_t dim, const std::vector<StructureConstant>& constants, Metadata meta = {});
  /// Dense form: constants[i][j][k].
  static LieAlgebra from_dense(const std::vector<std::vector<std::vector<Scalar>>>& constants, Metadata meta = {});

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return meta_.name; }
  const std::vector<std::string>& labels() const { return meta_.labels; }
  const std::vector<Element>& nilpotent_generators() const { return meta_.nilpotent_generators; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return dense_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<StructureConstant>& constants() const { return sparse_; }

  Element bracket(const Element& x, const Element& y) const;
  Matrix ad_matrix(const Element& x) const;
  Scalar killing_form(const Element& x, const Element& y) const;
  const Matrix& killing_gram() const { return gram_; }

  /// Cartan's criterion: the Killing Gram matrix is nonsingular.
  bool is_semisimple() const { return semisimple_; }
  /// Rank from constructor metadata, or (when absent) a sampled estimate made at construction.
  std::optional<std::size_t> rank() const { return rank_; }
  bool rank_from_metadata() const { return meta_.rank.has_value(); }

  Element basis_element(std::size_t i) const { return unit_vector(dim_, i); }
  Element zero() const { return zero_vector(dim_); }
  /// Human-readable linear combination of basis labels, e.g. "E12 - 2*H1".
  std::string format(const Element& x) const;

 private:
  void check_dim(const Element& x) const;

  std::size_t dim_;
  std::vector<Scalar> dense_;
  std::vector<StructureConstant> sparse_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_pair_;  // (i*dim+j) -> (k, value)
  Metadata meta_;
  Matrix gram_;
  bool semisimple_ = false;
  std::optional<std::size_t> rank_;
};

/// Subspace certified closed under the bracket of a particular algebra.
class Subalgebra {
 public:
  /// Certifies span(rows); throws InputError naming the first pair of rows whose
  /// bracket leaves the span.
  static Subalgebra certify(const LieAlgebra& g, const std::vector<Element>& rows);
  static Subalgebra certify(const LieAlgebra& g, const Subspace& w);
  static Subalgebra zero(const LieAlgebra& g) { return Subalgebra(Subspace(g.dim())); }
  static Subalgebra whole(const LieAlgebra& g) { return Subalgebra(Subspace::whole(g.dim())); }

  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  std::vector<Element> basis() const { return space_.basis_vectors(); }
  bool operator==(const Subalgebra& other) const { return space_ == other.space_; }

 private:
  explicit Subalgebra(Subspace w) : space_(std::move(w)) {}
  Subspace space_;
};

/// Linear map on coordinates that preserves the bracket, built from exponentials
/// of ad-nilpotent elements.
struct AutomorphismMatrix {
  Matrix matrix;
  std::vector<std::pair<Element, Scalar>> provenance;  // factors exp(t * ad n), applied right to left

  Element apply(const Element& x) const { return matrix.apply(x); }
  Subspace apply(const Subspace& w) const { return image(matrix, w); }
  AutomorphismMatrix then(const AutomorphismMatrix& next) const;  // next ∘ this
};

// Free-function forms of the algebra operations.
inline Element bracket(const LieAlgebra& g, const Element& x, const Element& y) { return g.bracket(x, y); }
inline Matrix ad_matrix(const LieAlgebra& g, const Element& x) { return g.ad_matrix(x); }
inline Scalar killing_form(const LieAlgebra& g, const Element& x, const Element& y) { return g.killing_form(x, y); }
inline bool is_semisimple_algebra(const LieAlgebra& g) { return g.is_semisimple(); }

Subspace centralizer(const LieAlgebra& g, const Element& x);
/// Centralizer of x inside the subspace w: w ∩ z_g(x).
Subspace centralizer_in(const LieAlgebra& g, const Subspace& w, const Element& x);
/// Minimum centralizer dimension over `trials` seeded random elements. Throws
/// InternalInconsistency when it disagrees with constructor metadata.
std::size_t rank(const LieAlgebra& g, int trials = 8, std::uint64_t seed = 0);
/// Requires a known rank; throws UnsupportedError otherwise.
bool is_regular(const LieAlgebra& g, const Element& x);
/// Killing-orthogonal complement; requires g semisimple.
Subspace orthogonal_complement(const LieAlgebra& g, const Subspace& h);
bool check_subalgebra(const LieAlgebra& g, const Subspace& w);
/// Span of all brackets [a, b] with a in u, b in v.
Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v);
/// h, [h,h], ... up to and including the stable term.
std::vector<Subspace> derived_series(const LieAlgebra& g, const Subalgebra& h);
bool is_solvable(const LieAlgebra& g, const Subalgebra& h);
std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subalgebra& h);
bool is_nilpotent_algebra(const LieAlgebra& g, const Subalgebra& h);
bool is_abelian(const LieAlgebra& g, const Subspace& w);
bool is_nilpotent_matrix(const Matrix& m);
bool is_unipotent_subalgebra(const LieAlgebra& g, const Subalgebra& h);
/// Killing form of g restricted to w is nondegenerate.
bool is_reductive_testable(const LieAlgebra& g, const Subspace& w);

/// exp(ad x) as a finite sum; throws UnsupportedError unless ad x is nilpotent.
AutomorphismMatrix exp_ad(const LieAlgebra& g, const Element& x);
/// Product of word_length factors exp(t * ad n) with random nonzero t in
/// [-coefficient_bound, coefficient_bound] and n drawn from g's nilpotent generators.
AutomorphismMatrix random_automorphism(const LieAlgebra& g, int word_length, std::uint64_t seed,
                                       int coefficient_bound = 3);
AutomorphismMatrix identity_automorphism(const LieAlgebra& g);
/// Exact check of phi[x, y] = [phi x, phi y] on all basis pairs.
bool preserves_bracket(const LieAlgebra& g, const Matrix& phi);

}  // namespace tempered
