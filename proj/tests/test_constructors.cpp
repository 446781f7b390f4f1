#include <doctest.h>

#include "tempered/constructors.hpp"
#include "tempered/errors.hpp"

using namespace tempered;

namespace {

struct Shape {
  const char* name;
  RootedAlgebra (*make)(int);
  int arg;
  std::size_t dim, rank, positive_roots;
};

// Dimensions, ranks and |Δ+| from the classification tables.
const Shape kShapes[] = {
    {"sl2", make_sl, 2, 3, 1, 1},  {"sl3", make_sl, 3, 8, 2, 3},  {"sl4", make_sl, 4, 15, 3, 6},
    {"so4", make_so, 4, 6, 2, 2},  {"so5", make_so, 5, 10, 2, 4}, {"so6", make_so, 6, 15, 3, 6},
    {"sp4", make_sp, 4, 10, 2, 4}, {"sp6", make_sp, 6, 21, 3, 9},
};

}  // namespace

TEST_CASE("classical algebras have the tabulated dimension, rank and root count") {
  for (const auto& s : kShapes) {
    CAPTURE(s.name);
    const RootedAlgebra ra = s.make(s.arg);
    const LieAlgebra& g = *ra.algebra;
    CHECK(g.dim() == s.dim);
    CHECK(ra.roots.rank() == s.rank);
    CHECK(g.rank() == s.rank);
    CHECK(ra.roots.positive_roots().size() == s.positive_roots);
    CHECK(ra.roots.negative_roots().size() == s.positive_roots);
    CHECK(ra.roots.simple.size() == s.rank);
    CHECK(g.is_semisimple());
    CHECK_NOTHROW(verify_root_datum(g, ra.roots));
  }
}

TEST_CASE("root vectors are weight vectors: [t, x_alpha] = alpha(t) x_alpha") {
  for (const auto& s : kShapes) {
    CAPTURE(s.name);
    const RootedAlgebra ra = s.make(s.arg);
    const LieAlgebra& g = *ra.algebra;
    const RootDatum& rd = ra.roots;
    for (std::size_t r = 0; r < rd.roots.size(); ++r)
      for (std::size_t c = 0; c < rd.rank(); ++c)
        CHECK(g.bracket(rd.cartan_basis[c], rd.root_vectors[r]) == scale(rd.roots[r][c], rd.root_vectors[r]));
  }
}

TEST_CASE("Killing form on the Cartan equals the sum over roots of alpha(x) alpha(y)") {
  for (const auto& s : kShapes) {
    CAPTURE(s.name);
    const RootedAlgebra ra = s.make(s.arg);
    const RootDatum& rd = ra.roots;
    for (std::size_t a = 0; a < rd.rank(); ++a) {
      for (std::size_t b = 0; b < rd.rank(); ++b) {
        Scalar sum = 0;
        for (const auto& root : rd.roots) sum += root[a] * root[b];
        CHECK(ra.algebra->killing_form(rd.cartan_basis[a], rd.cartan_basis[b]) == sum);
      }
    }
  }
}

TEST_CASE("sl(3) Killing form is 6 tr(xy): K(H1, H1) = 12, K(E12, E21) = 6") {
  const RootedAlgebra ra = make_sl(3);
  const LieAlgebra& g = *ra.algebra;
  auto at = [&](const char* label) {
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (g.labels()[i] == label) return g.basis_element(i);
    FAIL("missing label");
    return g.zero();
  };
  CHECK(g.killing_form(at("H1"), at("H1")) == 12);
  CHECK(g.killing_form(at("H1"), at("H2")) == -6);
  CHECK(g.killing_form(at("E12"), at("E21")) == 6);
  CHECK(g.bracket(at("E12"), at("E23")) == at("E13"));
}

TEST_CASE("Borel, Cartan and maximal unipotent dimensions; b⊥ = n") {
  for (const auto& s : kShapes) {
    CAPTURE(s.name);
    const RootedAlgebra ra = s.make(s.arg);
    const LieAlgebra& g = *ra.algebra;
    const auto b = borel(g, ra.roots);
    const auto n = maximal_unipotent(g, ra.roots);
    CHECK(b.dim() == s.rank + s.positive_roots);
    CHECK(n.dim() == s.positive_roots);
    CHECK(opposite_borel(g, ra.roots).dim() == b.dim());
    CHECK(cartan_subalgebra(g, ra.roots).dim() == s.rank);
    CHECK(orthogonal_complement(g, b.space()) == n.space());
    CHECK(is_solvable(g, b));
    CHECK(is_unipotent_subalgebra(g, n));
    CHECK(intersection(n.space(), opposite_unipotent(g, ra.roots).space()).dim() == 0);
  }
}

TEST_CASE("Dynkin: the sum of simple root vectors is regular") {
  for (const auto& s : kShapes) {
    CAPTURE(s.name);
    const RootedAlgebra ra = s.make(s.arg);
    const Element e = regular_nilpotent(ra.roots);
    CHECK(maximal_unipotent(*ra.algebra, ra.roots).space().contains(e));
    CHECK(centralizer(*ra.algebra, e).dim() == s.rank);
  }
}

TEST_CASE("parabolic dimensions for chosen simple-root subsets") {
  struct Case {
    RootedAlgebra g;
    std::set<int> subset;
    std::size_t q, levi, nil;
  };
  const Case cases[] = {
      {make_sl(3), {1}, 6, 4, 2},    {make_sl(4), {1, 3}, 11, 7, 4}, {make_sl(4), {2}, 10, 5, 5},
      {make_so(5), {1}, 7, 4, 3},    {make_sp(4), {2}, 7, 4, 3},     {make_sl(3), {}, 5, 2, 3},
      {make_sl(3), {1, 2}, 8, 8, 0},
  };
  for (const auto& c : cases) {
    const LieAlgebra& g = *c.g.algebra;
    const Parabolic p = parabolic(g, c.g.roots, c.subset);
    CAPTURE(g.name());
    CHECK(p.q.dim() == c.q);
    CHECK(p.levi.dim() == c.levi);
    CHECK(p.nilradical.dim() == c.nil);
    CHECK(is_reductive_testable(g, p.levi.space()));
    CHECK(is_unipotent_subalgebra(g, p.nilradical));
    CHECK(p.q.space().contains(borel(g, c.g.roots).space()));
  }
  CHECK_THROWS_AS(parabolic(*make_sl(3).algebra, make_sl(3).roots, {3}), InputError);
}

TEST_CASE("principal sl(2) triple satisfies the sl(2) relations") {
  for (const auto& ra : {make_sl(3), make_sl(4), make_so(5), make_sp(4)}) {
    const LieAlgebra& g = *ra.algebra;
    const Sl2Triple t = principal_sl2(g, ra.roots);
    CHECK(g.bracket(t.h, t.e) == scale(Scalar(2), t.e));
    CHECK(g.bracket(t.h, t.f) == scale(Scalar(-2), t.f));
    CHECK(g.bracket(t.e, t.f) == t.h);
    CHECK(t.span.dim() == 3);
  }
}

TEST_CASE("direct sums: ranks add, the diagonal is a closed copy") {
  const RootedAlgebra sum = direct_sum(make_sl(2), make_sl(3));
  CHECK(sum.algebra->dim() == 11);
  CHECK(sum.roots.rank() == 3);
  CHECK(sum.algebra->rank() == 3u);
  CHECK(sum.roots.roots.size() == 8);
  CHECK_NOTHROW(verify_root_datum(*sum.algebra, sum.roots));
  CHECK(sum.algebra->labels().front() == "e.1");

  const DiagonalPair d = diagonal_embedding(make_sl(2));
  CHECK(d.sum.algebra->dim() == 6);
  CHECK(d.diagonal.dim() == 3);
  CHECK(check_subalgebra(*d.sum.algebra, d.diagonal.space()));
  CHECK(is_reductive_testable(*d.sum.algebra, d.diagonal.space()));
}

TEST_CASE("resolve_pair: presets stamp toral data, explicit bases leave it unknown") {
  PairSpec spec;
  spec.algebra = AlgebraPreset{"sl", 3, {}};
  spec.subalgebra = SubalgebraPreset{"borel", {}, 0};
  const Pair b = resolve_pair(spec);
  REQUIRE(b.toral.has_value());
  CHECK(b.toral->size() == 2);

  spec.subalgebra = SubalgebraPreset{"max_unipotent", {}, 0};
  const Pair n = resolve_pair(spec);
  REQUIRE(n.toral.has_value());
  CHECK(n.toral->empty());

  spec.subalgebra = std::vector<Vector>{unit_vector(8, 3)};
  const Pair line = resolve_pair(spec);
  CHECK_FALSE(line.toral.has_value());

  spec.subalgebra = SubalgebraPreset{"diagonal", {}, 0};
  CHECK_THROWS_AS(resolve_pair(spec), InputError);
  spec.algebra = AlgebraPreset{"sl", 1, {}};
  spec.subalgebra = SubalgebraPreset{"zero", {}, 0};
  CHECK_THROWS_AS(resolve_pair(spec), InputError);
  spec.algebra = AlgebraPreset{"ghost", 3, {}};
  CHECK_THROWS_AS(resolve_pair(spec), InputError);
}
