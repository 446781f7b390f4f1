#include <doctest.h>

#include "tempered/catalog.hpp"
#include "tempered/constructors.hpp"
#include "tempered/errors.hpp"
#include "tempered/rho.hpp"

using namespace tempered;

namespace {

Element el(const std::vector<long>& xs) {
  Element out;
  for (auto x : xs) out.push_back(Scalar(x));
  return out;
}

}  // namespace

TEST_CASE("sl(2) Borel: rho_b = rho_g/b = |alpha|/2 at both rays") {
  const auto ra = make_sl(2);
  const LieAlgebra& g = *ra.algebra;
  const Subalgebra b = borel(g, ra.roots);
  const RhoReport r = rho_inequality(g, b, find_toral(g, b, ra.roots.cartan_basis));
  CHECK(r.verdict);
  CHECK_FALSE(r.vacuous);
  CHECK(r.chamber_count == 2);
  REQUIRE(r.ray_values.size() == 2);
  for (const auto& rv : r.ray_values) {
    CHECK(rv.rho_h == 1);  // alpha(h) = 2, multiplicity 1, halved
    CHECK(rv.rho_quotient == 1);
  }
}

TEST_CASE("sl(3) principal sl(2): rho_h(H) = 2 <= rho_g/h(H) = 6") {
  const auto ra = make_sl(3);
  const LieAlgebra& g = *ra.algebra;
  const Sl2Triple t = principal_sl2(g, ra.roots);
  const RhoReport r = rho_inequality(g, t.span, find_toral(g, t.span, std::vector<Element>{t.h}));
  CHECK(r.verdict);
  REQUIRE(r.ray_values.size() == 2);
  for (const auto& rv : r.ray_values) {
    CHECK(rv.rho_h == 2);
    CHECK(rv.rho_quotient == 6);
  }
  // g/h is the 5-dimensional irreducible module: weights -4, -2, 0, 2, 4.
  CHECK(r.quotient_weights.module_dim() == 5);
  CHECK(r.quotient_weights.weights.size() == 5);
  CHECK(r.subalgebra_weights.weights == std::vector<Vector>{el({-2}), el({0}), el({2})});
}

TEST_CASE("h = g fails with an exact failing ray") {
  const auto ra = make_sl(3);
  const LieAlgebra& g = *ra.algebra;
  const Subalgebra whole = Subalgebra::whole(g);
  const RhoReport r = rho_inequality(g, whole, find_toral(g, whole, ra.roots.cartan_basis));
  CHECK_FALSE(r.verdict);
  REQUIRE(r.failing_ray.has_value());
  CHECK(rho_value(r.subalgebra_weights, *r.failing_ray) > rho_value(r.quotient_weights, *r.failing_ray));
  CHECK(r.quotient_weights.module_dim() == 0);
}

TEST_CASE("nilpotent h without a hint has zero toral part and holds vacuously") {
  const auto ra = make_sl(2);
  const LieAlgebra& g = *ra.algebra;
  const Subalgebra line = Subalgebra::certify(g, {el({1, 0, 0})});
  const ToralSubalgebra a = find_toral(g, line, std::nullopt);
  CHECK_FALSE(a.undetermined);
  CHECK(a.dim() == 0);
  const RhoReport r = rho_inequality(g, line, a);
  CHECK(r.verdict);
  CHECK(r.vacuous);
}

TEST_CASE("split torus span(e+f) of sl(2): rho_h = 0 <= rho_g/h = 2") {
  const auto ra = make_sl(2);
  const LieAlgebra& g = *ra.algebra;
  const Element x = el({1, 0, 1});
  const Subalgebra h = Subalgebra::certify(g, {x});
  const RhoReport r = rho_inequality(g, h, find_toral(g, h, std::vector<Element>{x}));
  CHECK(r.verdict);
  for (const auto& rv : r.ray_values) {
    CHECK(rv.rho_h == 0);
    CHECK(rv.rho_quotient == 2);
  }
}

TEST_CASE("toral hints are validated") {
  const auto ra = make_sl(2);
  const LieAlgebra& g = *ra.algebra;
  const Subalgebra b = borel(g, ra.roots);
  CHECK_THROWS_AS(find_toral(g, b, std::vector<Element>{el({0, 0, 1})}), InputError);  // f is not in b
  CHECK_THROWS_AS(find_toral(g, b, std::vector<Element>{el({1, 0, 0})}), InputError);  // e is not semisimple
  CHECK_THROWS_AS(find_toral(g, b, std::vector<Element>{el({0, 1, 0}), el({0, 2, 0})}), InputError);
  const auto sl3 = make_sl(3);
  const Subalgebra whole = Subalgebra::whole(*sl3.algebra);
  // H1 and E12 + E21 do not commute.
  Element sym = sl3.algebra->zero();
  sym[basis_index(*sl3.algebra, "E12")] = 1;
  sym[basis_index(*sl3.algebra, "E21")] = 1;
  CHECK_THROWS_AS(find_toral(*sl3.algebra, whole, std::vector<Element>{sl3.roots.cartan_basis[0], sym}), InputError);
  // Non-unipotent h without a hint: undetermined, and the inequality refuses to run.
  const ToralSubalgebra a = find_toral(g, b, std::nullopt);
  CHECK(a.undetermined);
  CHECK_THROWS_AS(rho_inequality(g, b, a), UnsupportedError);
}

TEST_CASE("diagonal sl(2) in sl(2)+sl(2): equality at every ray") {
  const DiagonalPair d = diagonal_embedding(make_sl(2));
  const LieAlgebra& g = *d.sum.algebra;
  const Element t = add(d.sum.roots.cartan_basis[0], d.sum.roots.cartan_basis[1]);
  const RhoReport r = rho_inequality(g, d.diagonal, find_toral(g, d.diagonal, std::vector<Element>{t}));
  CHECK(r.verdict);
  REQUIRE_FALSE(r.ray_values.empty());
  for (const auto& rv : r.ray_values) CHECK(rv.rho_h == rv.rho_quotient);
}

TEST_CASE("property: rho is even, homogeneous and additive over g = h + g/h") {
  const auto ra = make_sl(4);
  const LieAlgebra& g = *ra.algebra;
  const Parabolic p = parabolic(g, ra.roots, {2});
  const ToralSubalgebra a{ra.roots.cartan_basis, false};
  const WeightSystem wh = weight_system(g, p.q.space(), a);
  const WeightSystem wq = quotient_weight_system(g, p.q.space(), a);
  const WeightSystem wg = weight_system(g, Subspace::whole(g.dim()), a);
  for (long i = -3; i <= 3; ++i) {
    const Vector y = el({i, 2 - i, i * i - 4});
    CHECK(rho_value(wg, y) == rho_value(wh, y) + rho_value(wq, y));
    CHECK(rho_value(wq, scale(Scalar(-1), y)) == rho_value(wq, y));
    CHECK(rho_value(wh, scale(rational(5, 3), y)) == rational(5, 3) * rho_value(wh, y));
  }
}

TEST_CASE("rho_combination_nonnegative detects a sign change on a ray") {
  // f(y) = rho_A(y) - rho_B(y) with A = {±(1,0)}, B = {±(1,1)}: f(1,-1) = 1 but f(0,1) = -1.
  WeightSystem a{{el({-1, 0}), el({1, 0})}, {1, 1}, "a"};
  WeightSystem b{{el({-1, -1}), el({1, 1})}, {1, 1}, "b"};
  const auto check = rho_combination_nonnegative({{Scalar(1), a}, {Scalar(-1), b}}, 2);
  CHECK_FALSE(check.holds);
  REQUIRE(check.violation.has_value());
  CHECK(rho_value(a, *check.violation) < rho_value(b, *check.violation));
  const auto twice = rho_combination_nonnegative({{Scalar(2), a}, {Scalar(2), b}, {Scalar(-1), b}}, 2);
  CHECK(twice.holds);
}
