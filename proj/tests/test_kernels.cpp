#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "tempered/kernels.hpp"

using namespace tempered;

TEST_CASE("first_success returns the lowest succeeding index for any thread count") {
  for (int jobs : {1, 2, 3, 4, 8}) {
    CAPTURE(jobs);
    const auto hit = first_success(100, Parallelism{jobs}, [](std::size_t i) { return i >= 37 && i % 5 == 2; });
    REQUIRE(hit.has_value());
    CHECK(*hit == 37);
    CHECK_FALSE(first_success(50, Parallelism{jobs}, [](std::size_t) { return false; }).has_value());
    CHECK_FALSE(first_success(0, Parallelism{jobs}, [](std::size_t) { return true; }).has_value());
  }
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<int> seen(1000, 0);
  parallel_for(seen.size(), Parallelism{4}, [&](std::size_t i) { seen[i] += 1; });
  for (int s : seen) CHECK(s == 1);
}

TEST_CASE("parallel_for rethrows the exception of the lowest failing index") {
  for (int jobs : {1, 4}) {
    std::atomic<int> ran{0};
    auto body = [&](std::size_t i) {
      ++ran;
      if (i == 13 || i == 71) throw std::runtime_error("index " + std::to_string(i));
    };
    CHECK_THROWS_WITH(parallel_for(100, Parallelism{jobs}, body), "index 13");
  }
}

TEST_CASE("nested regions fall back to serial execution") {
  std::vector<int> inner(16, 0);
  parallel_for(4, Parallelism{4}, [&](std::size_t i) {
    parallel_for(4, Parallelism{4}, [&](std::size_t j) { inner[4 * i + j] = static_cast<int>(4 * i + j); });
  });
  for (std::size_t k = 0; k < inner.size(); ++k) CHECK(inner[k] == static_cast<int>(k));
}
