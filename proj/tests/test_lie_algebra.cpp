#include <doctest.h>

#include <string>

#include "tempered/constructors.hpp"
#include "tempered/errors.hpp"
#include "tempered/lie_algebra.hpp"
#include "tempered/random.hpp"

using namespace tempered;

namespace {

// sl(2) in the basis (e, h, f), written out by hand rather than via make_sl.
LieAlgebra hand_sl2() {
  LieAlgebra::Metadata meta;
  meta.labels = {"e", "h", "f"};
  meta.name = "hand-sl2";
  meta.nilpotent_generators = {unit_vector(3, 0), unit_vector(3, 2)};
  return LieAlgebra(3,
                    {{1, 0, 0, Scalar(2)}, {0, 1, 0, Scalar(-2)},
                     {1, 2, 2, Scalar(-2)}, {2, 1, 2, Scalar(2)},
                     {0, 2, 1, Scalar(1)}, {2, 0, 1, Scalar(-1)}},
                    meta);
}

// Heisenberg algebra: [x, y] = z; nilpotent, Killing form identically zero.
LieAlgebra heisenberg() {
  LieAlgebra::Metadata meta;
  meta.labels = {"x", "y", "z"};
  return LieAlgebra(3, {{0, 1, 2, Scalar(1)}, {1, 0, 2, Scalar(-1)}}, meta);
}

Element el(const std::vector<long>& xs) {
  Element out;
  for (auto x : xs) out.push_back(Scalar(x));
  return out;
}

}  // namespace

TEST_CASE("sl(2) Killing form: K(e,f) = 4, K(h,h) = 8") {
  const LieAlgebra g = hand_sl2();
  CHECK(g.killing_form(el({1, 0, 0}), el({0, 0, 1})) == 4);
  CHECK(g.killing_form(el({0, 1, 0}), el({0, 1, 0})) == 8);
  CHECK(g.killing_form(el({1, 0, 0}), el({1, 0, 0})) == 0);
  CHECK(g.is_semisimple());
  CHECK(g.rank() == 1u);
}

TEST_CASE("make_sl(2) agrees with the hand-written structure constants") {
  const auto ra = make_sl(2);
  const LieAlgebra hand = hand_sl2();
  CHECK(ra.algebra->labels() == hand.labels());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(ra.algebra->bracket(unit_vector(3, i), unit_vector(3, j)) == hand.bracket(unit_vector(3, i), unit_vector(3, j)));
}

TEST_CASE("ad matrices use the column convention ad(x) e_j = sum_k M(k,j) e_k") {
  const LieAlgebra g = hand_sl2();
  const Matrix ad_h = g.ad_matrix(el({0, 1, 0}));
  CHECK(ad_h(0, 0) == 2);
  CHECK(ad_h(1, 1) == 0);
  CHECK(ad_h(2, 2) == -2);
  const Matrix ad_e = g.ad_matrix(el({1, 0, 0}));
  CHECK(ad_e(1, 2) == 1);   // [e, f] = h
  CHECK(ad_e(0, 1) == -2);  // [e, h] = -2e
}

TEST_CASE("construction rejects broken antisymmetry and Jacobi") {
  CHECK_THROWS_WITH_AS(LieAlgebra(2, {{0, 1, 0, Scalar(1)}, {1, 0, 0, Scalar(1)}}), doctest::Contains("antisymmetry"), InputError);
  // [h, f] = -3f breaks Jacobi on (e, f, h).
  std::vector<std::vector<std::vector<Scalar>>> c(3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3, Scalar(0))));
  c[1][0][0] = 2;
  c[0][1][0] = -2;
  c[1][2][2] = -3;
  c[2][1][2] = 3;
  c[0][2][1] = 1;
  c[2][0][1] = -1;
  CHECK_THROWS_WITH_AS(LieAlgebra::from_dense(c), doctest::Contains("Jacobi"), InputError);
}

TEST_CASE("exp(ad te) f = f + t h - t^2 e") {
  const LieAlgebra g = hand_sl2();
  for (long t : {1L, 2L, -3L}) {
    const auto phi = exp_ad(g, el({t, 0, 0}));
    CHECK(phi.apply(el({0, 0, 1})) == el({-t * t, t, 1}));
    CHECK(preserves_bracket(g, phi.matrix));
  }
  CHECK_THROWS_AS(exp_ad(g, el({0, 1, 0})), UnsupportedError);
}

TEST_CASE("centralizers, regularity and rank in sl(2)") {
  const LieAlgebra g = hand_sl2();
  CHECK(centralizer(g, el({0, 1, 0})) == Subspace(3, {el({0, 1, 0})}));
  CHECK(centralizer(g, el({1, 0, 0})) == Subspace(3, {el({1, 0, 0})}));
  CHECK(centralizer(g, g.zero()).dim() == 3);
  CHECK(is_regular(g, el({1, 0, 0})));
  CHECK(is_regular(g, el({1, 3, -2})));
  CHECK_FALSE(is_regular(g, g.zero()));
  CHECK(rank(g, 8, 1) == 1);
}

TEST_CASE("derived and lower central series of the sl(2) Borel") {
  const LieAlgebra g = hand_sl2();
  const Subalgebra b = Subalgebra::certify(g, {el({1, 0, 0}), el({0, 1, 0})});
  std::vector<std::size_t> dims;
  for (const auto& s : derived_series(g, b)) dims.push_back(s.dim());
  CHECK(dims == std::vector<std::size_t>{2, 1, 0});
  CHECK(is_solvable(g, b));
  CHECK_FALSE(is_nilpotent_algebra(g, b));
  CHECK_FALSE(is_unipotent_subalgebra(g, b));
  CHECK(orthogonal_complement(g, b.space()) == Subspace(3, {el({1, 0, 0})}));
  CHECK_FALSE(is_solvable(g, Subalgebra::whole(g)));
  CHECK(is_unipotent_subalgebra(g, Subalgebra::certify(g, {el({1, 0, 0})})));
}

TEST_CASE("Killing nondegeneracy on subspaces") {
  const LieAlgebra g = hand_sl2();
  CHECK(is_reductive_testable(g, Subspace(3, {el({0, 1, 0})})));
  CHECK_FALSE(is_reductive_testable(g, Subspace(3, {el({1, 0, 0})})));
  CHECK(is_reductive_testable(g, Subspace(3, {el({1, 0, 1})})));
}

TEST_CASE("subalgebra certification names the offending bracket") {
  const LieAlgebra g = hand_sl2();
  CHECK_THROWS_WITH_AS(Subalgebra::certify(g, {el({1, 0, 0}), el({0, 0, 1})}), doctest::Contains("[e, f] = h"), InputError);
  CHECK(check_subalgebra(g, Subspace(3, {el({0, 1, 0}), el({0, 0, 1})})));
  CHECK_FALSE(check_subalgebra(g, Subspace(3, {el({1, 0, 0}), el({0, 0, 1})})));
}

TEST_CASE("non-semisimple algebras: Heisenberg") {
  const LieAlgebra g = heisenberg();
  CHECK_FALSE(g.is_semisimple());
  CHECK(g.killing_gram().is_zero());
  CHECK(is_nilpotent_algebra(g, Subalgebra::whole(g)));
  CHECK(g.rank() == 2u);  // generic centralizer span(X, z)
  CHECK_THROWS_AS(orthogonal_complement(g, Subspace(3)), UnsupportedError);
}

TEST_CASE("formatting lists basis labels with rational coefficients") {
  const LieAlgebra g = hand_sl2();
  CHECK(g.format(el({1, -2, 0})) == "e - 2*h");
  CHECK(g.format(g.zero()) == "0");
  Element x = el({0, 0, 0});
  x[2] = rational(1, 2);
  CHECK(g.format(x) == "1/2*f");
}

TEST_CASE("property: random automorphisms preserve brackets and regularity") {
  const auto ra = make_sl(3);
  const LieAlgebra& g = *ra.algebra;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto phi = random_automorphism(g, 6, s);
    CHECK(preserves_bracket(g, phi.matrix));
    Rng rng(s);
    const Element x = rng.vector(g.dim(), 4), y = rng.vector(g.dim(), 4);
    CHECK(phi.apply(g.bracket(x, y)) == g.bracket(phi.apply(x), phi.apply(y)));
    CHECK(g.killing_form(phi.apply(x), phi.apply(y)) == g.killing_form(x, y));
    CHECK(is_regular(g, x) == is_regular(g, phi.apply(x)));
  }
}

TEST_CASE("property: Killing invariance and centralizer closure on random triples") {
  for (const auto& ra : {make_sl(3), make_so(5), make_sp(4)}) {
    const LieAlgebra& g = *ra.algebra;
    for (std::uint64_t s = 0; s < 5; ++s) {
      Rng rng(100 + s);
      const Element x = rng.vector(g.dim(), 3), y = rng.vector(g.dim(), 3), z = rng.vector(g.dim(), 3);
      CHECK(g.killing_form(g.bracket(x, y), z) + g.killing_form(y, g.bracket(x, z)) == 0);
      CHECK(check_subalgebra(g, centralizer(g, x)));
    }
  }
}
