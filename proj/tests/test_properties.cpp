#include <doctest.h>

#include "tempered/selftest.hpp"

using namespace tempered;

// Every invariant suite, with a different seed than the CLI default.
TEST_CASE("invariant suites hold on fresh samples") {
  for (const auto& suite : selftest_suites()) {
    SelftestOptions options;
    options.seed = 20261014;
    options.samples = 8;
    options.suite = suite;
    for (const auto& r : run_selftest(options)) {
      CAPTURE(suite);
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.ok());
      CHECK(r.samples > 0);
    }
  }
}

TEST_CASE("unknown suites are rejected") {
  SelftestOptions options;
  options.suite = "astrology";
  CHECK_THROWS(run_selftest(options));
}
