#include <doctest.h>

#include <cmath>

#include "tempered/constructors.hpp"
#include "tempered/degeneration.hpp"
#include "tempered/errors.hpp"
#include "tempered/numeric.hpp"

using namespace tempered;

namespace {

Element el(const std::vector<long>& xs) {
  Element out;
  for (auto x : xs) out.push_back(Scalar(x));
  return out;
}

Subspace span(const std::vector<Element>& xs) { return Subspace(xs.front().size(), xs); }

}  // namespace

TEST_CASE("sl(2) grading by X = h/2: e at level 1, h at 0, f at -1") {
  const auto ra = make_sl(2);
  const LieAlgebra& g = *ra.algebra;
  const Element x = strictly_dominant(g, ra.roots);
  CHECK(g.bracket(x, el({1, 0, 0})) == el({1, 0, 0}));
  const Grading gr = weight_grading(g, x);
  CHECK(gr.levels == std::vector<Scalar>{Scalar(-1), Scalar(0), Scalar(1)});
  CHECK(gr.row_levels().size() == 3);
  CHECK_THROWS_AS(weight_grading(g, el({1, 0, 0})), UnsupportedError);
}

TEST_CASE("limits in sl(2): span(e+f) -> span(f), span(e+h) -> span(h) or span(e)") {
  const auto ra = make_sl(2);
  const LieAlgebra& g = *ra.algebra;
  const Grading gr = weight_grading(g, strictly_dominant(g, ra.roots));
  // exp(-t ad X)(e + f) = e^{-t} e + e^{t} f: the f component dominates.
  CHECK(subspace_limit(gr, span({el({1, 0, 1})}), -1) == span({el({0, 0, 1})}));
  CHECK(subspace_limit(gr, span({el({1, 0, 1})}), +1) == span({el({1, 0, 0})}));
  // exp(-t ad X)(e + h) = e^{-t} e + h.
  CHECK(subspace_limit(gr, span({el({1, 1, 0})}), -1) == span({el({0, 1, 0})}));
  CHECK(subspace_limit(gr, span({el({1, 1, 0})}), +1) == span({el({1, 0, 0})}));
  // A 2-dim subspace keeps its dimension: span(e + f, h) -> span(h, f).
  CHECK(subspace_limit(gr, span({el({1, 0, 1}), el({0, 1, 0})}), -1) == span({el({0, 1, 0}), el({0, 0, 1})}));
}

TEST_CASE("property: limits have the same dimension and are idempotent") {
  const auto ra = make_sl(3);
  const LieAlgebra& g = *ra.algebra;
  const Grading gr = weight_grading(g, strictly_dominant(g, ra.roots));
  const std::vector<Subspace> sources = {
      principal_sl2(g, ra.roots).span.space(), borel(g, ra.roots).space(),
      parabolic(g, ra.roots, {1}).levi.space(), Subspace::whole(g.dim())};
  for (const auto& w : sources) {
    for (int sign : {-1, 1}) {
      const Subspace l = subspace_limit(gr, w, sign);
      CHECK(l.dim() == w.dim());
      CHECK(subspace_limit(gr, l, sign) == l);
      if (check_subalgebra(g, w)) CHECK(check_subalgebra(g, l));
    }
  }
}

TEST_CASE("contract_to_solvable: sl(2) split torus lands in the opposite Borel") {
  const auto ra = make_sl(2);
  const LieAlgebra& g = *ra.algebra;
  const Subspace h = span({el({1, 0, 1})});
  const LimitWitness w = contract_to_solvable(g, ra.roots, h, maximal_unipotent(g, ra.roots).space());
  CHECK(w.direction_sign == -1);
  CHECK(w.limit == span({el({0, 0, 1})}));
  CHECK(w.solvable);
  CHECK(w.derived_dims == std::vector<std::size_t>{1, 0});
  CHECK(opposite_borel(g, ra.roots).space().contains(w.limit));
}

TEST_CASE("contract_to_solvable: the diagonal of sl(2)+sl(2) has a 3-dim solvable limit") {
  const DiagonalPair d = diagonal_embedding(make_sl(2));
  const LieAlgebra& g = *d.sum.algebra;
  const RootDatum& rd = d.sum.roots;
  // Swap the positive root of the second factor: phi(diagonal) = {(x, w x w^-1)} meets n trivially.
  const Subspace n = maximal_unipotent(g, rd).space();
  const Subspace twisted(6, {el({1, 0, 0, 0, 0, 1}), el({0, 1, 0, 0, -1, 0}), el({0, 0, 1, 1, 0, 0})});
  REQUIRE(check_subalgebra(g, twisted));
  REQUIRE(intersection(twisted, n).dim() == 0);
  const LimitWitness w = contract_to_solvable(g, rd, twisted, n);
  CHECK(w.limit.dim() == 3);
  CHECK(w.solvable);
  CHECK(check_subalgebra(g, w.limit));
  CHECK(opposite_borel(g, rd).space().contains(w.limit));
  // The diagonal itself meets n in span(e1 + e2), so it is rejected.
  CHECK_THROWS_AS(contract_to_solvable(g, rd, d.diagonal.space(), n), InputError);
}

TEST_CASE("contract_to_solvable validates its witness") {
  const auto ra = make_sl(3);
  const LieAlgebra& g = *ra.algebra;
  const Subspace n = maximal_unipotent(g, ra.roots).space();
  CHECK_THROWS_AS(contract_to_solvable(g, ra.roots, borel(g, ra.roots).space(), n), InputError);
  CHECK_THROWS_AS(contract_to_solvable(g, ra.roots, Subspace(g.dim()), Subspace(g.dim())), InputError);
  const LimitWitness zero = contract_to_solvable(g, ra.roots, Subspace(g.dim()), n);
  CHECK(zero.limit.dim() == 0);
  CHECK(zero.solvable);
}

TEST_CASE("numeric flow converges to the exact limit") {
  const auto ra = make_sl(2);
  const LieAlgebra& g = *ra.algebra;
  const Grading gr = weight_grading(g, strictly_dominant(g, ra.roots));
  const Subspace w = span({el({1, 0, 1})});
  const Subspace target = subspace_limit(gr, w, -1);
  // span(e^{-t} e + e^{t} f): the sine of the angle to span(f) is about e^{-2t}.
  const double d4 = flow_distance(gr, w, -1, 4.0, target);
  CHECK(d4 == doctest::Approx(std::exp(-8.0)).epsilon(1e-3));
  CHECK(flow_distance(gr, w, -1, 16.0, target) < 1e-12);
  CHECK(subspace_distance(span({el({1, 0, 0})}), span({el({0, 0, 1})})) == doctest::Approx(1.0));
  CHECK(subspace_distance(w, w) < 1e-14);

  const auto sl3 = make_sl(3);
  const Grading g3 = weight_grading(*sl3.algebra, strictly_dominant(*sl3.algebra, sl3.roots));
  const Subspace p = principal_sl2(*sl3.algebra, sl3.roots).span.space();
  CHECK(flow_distance(g3, p, -1, 16.0, subspace_limit(g3, p, -1)) < 1e-6);
}
