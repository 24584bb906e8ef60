#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tvprod/reduce.hpp"

using namespace tvprod;

TEST_CASE("scheffe_reduce examples") {
  const FiniteProductPair one({FiniteDist({1.0 / 3, 1.0 / 3, 1.0 / 3})}, {FiniteDist({0.5, 0.25, 0.25})});
  const ScheffeReduction r = scheffe_reduce(one);
  CHECK(r.witness_sets == std::vector<std::vector<std::size_t>>{{1, 2}});
  CHECK(r.p[0] == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(r.q[0] == doctest::Approx(0.5).epsilon(1e-15));

  const FiniteProductPair same({FiniteDist({0.2, 0.8}), FiniteDist({0.1, 0.2, 0.7})},
                               {FiniteDist({0.2, 0.8}), FiniteDist({0.1, 0.2, 0.7})});
  const ScheffeReduction s = scheffe_reduce(same);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(s.witness_sets[i].empty());
    CHECK(s.p[i] == 0.0);
    CHECK(s.q[i] == 0.0);
  }

  const auto bern = FiniteProductPair::from_bernoulli(ProbVector({0.7, 0.9}), ProbVector({0.2, 0.4}));
  const ScheffeReduction b = scheffe_reduce(bern);
  CHECK(b.p[0] == 0.7);
  CHECK(b.q[0] == 0.2);
  CHECK(b.p[1] == 0.9);
  CHECK(b.q[1] == 0.4);
  CHECK(b.witness_sets[0] == std::vector<std::size_t>{1});
}

TEST_CASE("ties are excluded from the witness set") {
  const FiniteProductPair pair({FiniteDist({0.25, 0.5, 0.25})}, {FiniteDist({0.25, 0.25, 0.5})});
  const ScheffeReduction r = scheffe_reduce(pair);
  CHECK(r.witness_sets[0] == std::vector<std::size_t>{1});
  CHECK(r.p[0] == 0.5);
  CHECK(r.q[0] == 0.25);
}

TEST_CASE("property: marginal TV preserved and data processing") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 1500; ++t) {
    const auto pair = oracle::draw_general_pair(rng, 6, 5, 1 << 12);
    const ScheffeReduction r = scheffe_reduce(pair);
    const MarginalTV delta = marginal_tv(pair);
    for (std::size_t i = 0; i < pair.size(); ++i) {
      REQUIRE(r.p[i] >= r.q[i]);
      REQUIRE(std::abs((r.p[i] - r.q[i]) - delta[i]) <= 1e-12);
    }
    const double full = exact_tv_general(pair);
    const double reduced = exact_tv_bernoulli(r.p, r.q);
    REQUIRE(full >= reduced - 1e-12);
    REQUIRE(std::abs(reduced - oracle::brute_tv_bernoulli({r.p.begin(), r.p.end()}, {r.q.begin(), r.q.end()})) <=
            1e-12);
  }
}

TEST_CASE("property: reduction is idempotent up to relabeling") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 500; ++t) {
    const auto pair = oracle::draw_general_pair(rng, 5, 4, 1 << 10);
    const ScheffeReduction once = scheffe_reduce(pair);
    const ScheffeReduction twice = scheffe_reduce(FiniteProductPair::from_bernoulli(once.p, once.q));
    for (std::size_t i = 0; i < pair.size(); ++i) {
      if (once.p[i] == once.q[i]) {
        CHECK(twice.p[i] == 0.0);
        CHECK(twice.q[i] == 0.0);
      } else {
        CHECK(twice.p[i] == once.p[i]);
        CHECK(twice.q[i] == once.q[i]);
      }
    }
  }
}
