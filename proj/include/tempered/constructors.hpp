#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tempered/lie_algebra.hpp"

namespace tempered {

/// Split Cartan subalgebra with its roots. Roots are covectors on cartan_basis:
/// roots[r][i] = alpha_r(cartan_basis[i]).
struct RootDatum {
  std::vector<Element> cartan_basis;
  std::vector<Vector> roots;
  std::vector<Element> root_vectors;
  std::vector<bool> positive;
  std::vector<std::size_t> simple;           // indices into roots, in Dynkin order
  std::vector<Vector> simple_coordinates;    // each root in the simple-root basis
  std::size_t rank() const { return cartan_basis.size(); }

  std::vector<std::size_t> positive_roots() const;
  std::vector<std::size_t> negative_roots() const;
};

struct RootedAlgebra {
  std::shared_ptr<const LieAlgebra> algebra;
  RootDatum roots;
};

RootedAlgebra make_sl(int n);
RootedAlgebra make_so(int n);
RootedAlgebra make_sp(int two_n);
RootedAlgebra direct_sum(const RootedAlgebra& a, const RootedAlgebra& b);
/// The zero-dimensional algebra, the unit of direct_sum.
RootedAlgebra make_zero_algebra();
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Throws InternalInconsistency if [t, x_alpha] = alpha(t) x_alpha fails, roots are
/// not paired, or simple-root coordinates are not integral of constant sign.
void verify_root_datum(const LieAlgebra& g, const RootDatum& rd);

Subalgebra cartan_subalgebra(const LieAlgebra& g, const RootDatum& rd);
Subalgebra borel(const LieAlgebra& g, const RootDatum& rd);
Subalgebra opposite_borel(const LieAlgebra& g, const RootDatum& rd);
Subalgebra maximal_unipotent(const LieAlgebra& g, const RootDatum& rd);
Subalgebra opposite_unipotent(const LieAlgebra& g, const RootDatum& rd);
/// Sum of the simple root vectors; regular in g.
Element regular_nilpotent(const RootDatum& rd);

struct Parabolic {
  Subalgebra q;
  Subalgebra levi;
  Subalgebra nilradical;
};
/// Standard parabolic for a set of simple roots, numbered from 1.
Parabolic parabolic(const LieAlgebra& g, const RootDatum& rd, const std::set<int>& simple_subset);

struct Sl2Triple {
  Element e, h, f;
  Subalgebra span;
};
/// Principal sl(2): E = sum of simple root vectors, H in the Cartan with
/// alpha_i(H) = 2 for all simple roots, F solved exactly.
Sl2Triple principal_sl2(const LieAlgebra& g, const RootDatum& rd);

/// {(x, x)} inside g ⊕ g.
struct DiagonalPair {
  RootedAlgebra sum;
  Subalgebra diagonal;
};
DiagonalPair diagonal_embedding(const RootedAlgebra& g);

/// Subalgebra together with the data needed by the criteria.
struct Pair {
  std::string label;
  std::shared_ptr<const LieAlgebra> algebra;
  std::optional<RootDatum> roots;
  Subalgebra subalgebra;
  /// Basis of a maximal split toral subalgebra of h: an empty vector means h has
  /// zero toral part; nullopt means unknown.
  std::optional<std::vector<Element>> toral;
  std::optional<bool> expected_verdict;
};

// PairSpec: declarative description of a pair, resolved by resolve_pair.
struct AlgebraPreset {
  std::string type;                     // "sl", "so", "sp", "sum"
  int n = 0;
  std::vector<AlgebraPreset> summands;  // for "sum"
};
struct ExplicitAlgebra {
  std::vector<std::vector<std::vector<Scalar>>> constants;
  std::vector<std::string> labels;
};
struct SubalgebraPreset {
  std::string preset;  // zero, whole, borel, opposite_borel, cartan, max_unipotent, opposite_unipotent,
                       // parabolic, levi, nilradical, principal_sl2, regular_nilpotent, diagonal, factor
  std::set<int> simple_roots;
  int index = 0;
};
struct PairSpec {
  std::variant<AlgebraPreset, ExplicitAlgebra> algebra;
  std::variant<SubalgebraPreset, std::vector<Vector>> subalgebra;
  std::optional<std::vector<Vector>> toral_hint;
  std::optional<bool> expected_verdict;
  std::string label;
};

RootedAlgebra build_preset(const AlgebraPreset& preset);
/// Constructs and certifies the pair; InputError names the offending bracket pair.
Pair resolve_pair(const PairSpec& spec);

}  // namespace tempered
