#include <doctest.h>

#include "tempered/arrangement.hpp"
#include "tempered/constructors.hpp"
#include "tempered/errors.hpp"

using namespace tempered;

namespace {

Vector v(const std::vector<long>& xs) {
  Vector out;
  for (auto x : xs) out.push_back(Scalar(x));
  return out;
}

Arrangement root_arrangement(const RootedAlgebra& ra) {
  Arrangement a;
  a.dim = ra.roots.rank();
  a.normals = distinct_hyperplanes(ra.roots.roots);
  return a;
}

}  // namespace

TEST_CASE("Coxeter arrangements have |W| chambers: A2 -> 6, B2 -> 8, A3 -> 24, A1xA1 -> 4") {
  struct Case {
    RootedAlgebra g;
    std::size_t hyperplanes, chambers;
  };
  const Case cases[] = {{make_sl(3), 3, 6}, {make_so(5), 4, 8}, {make_sp(4), 4, 8}, {make_sl(4), 6, 24}, {make_so(4), 2, 4}};
  for (const auto& c : cases) {
    CAPTURE(c.g.algebra->name());
    const Arrangement a = root_arrangement(c.g);
    CHECK(a.normals.size() == c.hyperplanes);
    const auto e = enumerate_chambers(a, 1000);
    CHECK(e.chambers.size() == c.chambers);
    CHECK(enumerate_chambers_reference(a).chambers == e.chambers);
  }
}

TEST_CASE("generic and coordinate arrangements match the region-count formulas") {
  // Four generic central planes in R^3: 2 * (C(3,0) + C(3,1) + C(3,2)) = 14.
  Arrangement generic{3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({1, 1, 1})}};
  CHECK(enumerate_chambers(generic, 1000).chambers.size() == 14);
  CHECK(enumerate_chambers_reference(generic).chambers.size() == 14);
  // Coordinate hyperplanes in R^3: 8 orthants, rays ±e_i.
  Arrangement coords{3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})}};
  const auto e = enumerate_chambers(coords, 1000);
  CHECK(e.chambers.size() == 8);
  CHECK(e.rays.size() == 6);
}

TEST_CASE("distinct_hyperplanes drops zeros and parallel normals") {
  const auto d = distinct_hyperplanes({v({0, 0}), v({1, -1}), v({-2, 2}), v({3, 0}), v({1, 0})});
  CHECK(d.size() == 2);
}

TEST_CASE("candidate rays are primitive and lie on d-1 hyperplanes") {
  const Arrangement a = root_arrangement(make_sl(3));
  const auto rays = candidate_rays(a);
  CHECK(rays.size() == 6);
  for (const auto& r : rays) {
    CHECK((primitive_direction(r) == r || primitive_direction(r) == scale(Scalar(-1), r)));
    int zeros = 0;
    for (const auto& n : a.normals) zeros += dot(n, r) == 0 ? 1 : 0;
    CHECK(zeros >= 1);
  }
}

TEST_CASE("chamber budget is enforced") {
  const Arrangement a = root_arrangement(make_sl(4));
  CHECK_THROWS_AS(enumerate_chambers(a, 10), ResourceError);
}

TEST_CASE("parallel enumeration equals the serial one") {
  const Arrangement a = root_arrangement(direct_sum(make_sl(3), make_so(5)));
  const auto serial = enumerate_chambers(a, 100000, Parallelism{1});
  const auto parallel = enumerate_chambers(a, 100000, Parallelism{4});
  CHECK(serial.chambers.size() == 48);  // |W(A2)| * |W(B2)|
  CHECK(serial.chambers == parallel.chambers);
  CHECK(serial.rays == parallel.rays);
}
