#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tvprod/core.hpp"
#include "tvprod/error.hpp"

using namespace tvprod;

namespace {

ProbVector pv(std::vector<double> v) { return ProbVector(std::move(v)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected tvprod::Error");
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST_CASE("ProbVector and FiniteDist validation") {
  CHECK_THROWS_AS(pv({}), Error);
  CHECK_THROWS_AS(pv({0.5, 1.5}), Error);
  CHECK_THROWS_AS(pv({-0.0001}), Error);
  CHECK_THROWS_AS(pv({std::nan("")}), Error);
  CHECK_NOTHROW(pv({0.0, 1.0, 0.5}));

  CHECK_THROWS_AS(FiniteDist(std::vector<double>{}), Error);
  CHECK_THROWS_AS(FiniteDist({0.5, 0.6}), Error);
  CHECK_THROWS_AS(FiniteDist({1.2, -0.2}), Error);
  // Within tolerance: accepted and renormalized.
  const FiniteDist d({0.5 + 4e-10, 0.5});
  CHECK(d[0] + d[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d[0] > d[1]);

  CHECK(kind_of([] { FiniteProductPair({FiniteDist({1.0})}, {}); }) == ErrorKind::dimension_mismatch);
  CHECK(kind_of([] { FiniteProductPair({FiniteDist({1.0})}, {FiniteDist({0.5, 0.5})}); }) ==
        ErrorKind::dimension_mismatch);
}

TEST_CASE("exact_tv_bernoulli examples") {
  CHECK(exact_tv_bernoulli(pv({1.0}), pv({0.0})) == 1.0);
  CHECK(exact_tv_bernoulli(pv({0.5, 0.5}), pv({0.5, 0.5})) == 0.0);
  CHECK(exact_tv_bernoulli(pv({0.5, 0.5}), pv({0.0, 0.0})) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(exact_tv_bernoulli(pv({0.5, 0.5}), pv({1.0, 1.0})) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("exact_tv_bernoulli errors") {
  CHECK(kind_of([] { exact_tv_bernoulli(pv({0.5}), pv({0.5, 0.5})); }) == ErrorKind::dimension_mismatch);
  CHECK(kind_of([] { exact_tv_bernoulli(ProbVector::constant(27, 0.5), ProbVector::constant(27, 0.4)); }) ==
        ErrorKind::budget_exceeded);
  EnumerationOptions small{4, 1};
  CHECK(kind_of([&] { exact_tv_bernoulli(ProbVector::constant(5, 0.5), ProbVector::constant(5, 0.4), small); }) ==
        ErrorKind::budget_exceeded);
  CHECK_NOTHROW(exact_tv_bernoulli(ProbVector::constant(4, 0.5), ProbVector::constant(4, 0.4), small));
}

TEST_CASE("exact_tv_general examples") {
  const FiniteProductPair one({FiniteDist({1.0 / 3, 1.0 / 3, 1.0 / 3})}, {FiniteDist({0.5, 0.25, 0.25})});
  CHECK(exact_tv_general(one) == doctest::Approx(1.0 / 6).epsilon(1e-14));

  const FiniteProductPair same({FiniteDist({0.2, 0.8}), FiniteDist({0.1, 0.3, 0.6})},
                               {FiniteDist({0.2, 0.8}), FiniteDist({0.1, 0.3, 0.6})});
  CHECK(exact_tv_general(same) == 0.0);

  const FiniteProductPair disjoint({FiniteDist({1.0, 0.0}), FiniteDist({1.0, 0.0})},
                                   {FiniteDist({0.0, 1.0}), FiniteDist({0.0, 1.0})});
  CHECK(exact_tv_general(disjoint) == 1.0);

  EnumerationOptions small{3, 1};
  const FiniteProductPair big({FiniteDist({0.5, 0.5}), FiniteDist({0.2, 0.3, 0.5}), FiniteDist({0.5, 0.5})},
                              {FiniteDist({0.4, 0.6}), FiniteDist({0.2, 0.3, 0.5}), FiniteDist({0.5, 0.5})});
  CHECK(kind_of([&] { exact_tv_general(big, small); }) == ErrorKind::budget_exceeded);
  CHECK(kind_of([&] { exact_tv_general(big, EnumerationOptions{-1, 1}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("exact_tv_equal_marginals examples") {
  CHECK(exact_tv_equal_marginals(2, 0.5, 0.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(exact_tv_equal_marginals(10, 0.3, 0.3) == 0.0);
  const double brute = oracle::brute_tv_bernoulli({0.5, 0.5, 0.5}, {0.25, 0.25, 0.25});
  CHECK(std::abs(exact_tv_equal_marginals(3, 0.5, 0.25) - brute) < 1e-12);
  CHECK(std::abs(exact_tv_equal_marginals(3, 0.5, 0.25) -
                 exact_tv_bernoulli(ProbVector::constant(3, 0.5), ProbVector::constant(3, 0.25))) < 1e-12);
  CHECK_THROWS_AS(exact_tv_equal_marginals(0, 0.5, 0.5), Error);
  CHECK_THROWS_AS(exact_tv_equal_marginals(3, 1.5, 0.5), Error);
  // Degenerate endpoints.
  CHECK(exact_tv_equal_marginals(5, 1.0, 0.0) == 1.0);
  CHECK(std::abs(exact_tv_equal_marginals(7, 0.0, 0.2) - (1.0 - std::pow(0.8, 7))) < 1e-14);
  // Large n stays finite and in range.
  const double big = exact_tv_equal_marginals(100000, 0.5 + 1e-5, 0.5 - 1e-5);
  CHECK(big > 0.0);
  CHECK(big < 1.0);
}

TEST_CASE("marginal_tv examples and norms") {
  const auto pair = FiniteProductPair::from_bernoulli(pv({0.9, 0.5}), pv({0.1, 0.5}));
  const MarginalTV d = marginal_tv(pair);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(d[1] == 0.0);

  const FiniteProductPair one({FiniteDist({1.0 / 3, 1.0 / 3, 1.0 / 3})}, {FiniteDist({0.5, 0.25, 0.25})});
  CHECK(marginal_tv(one)[0] == doctest::Approx(1.0 / 6).epsilon(1e-14));

  const auto same = FiniteProductPair::from_bernoulli(pv({0.3, 0.7, 0.0}), pv({0.3, 0.7, 0.0}));
  const MarginalTV zeros = marginal_tv(same);
  for (double v : zeros.values()) CHECK(v == 0.0);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const auto v = oracle::draw_vector(rng, 1 + t % 15);
    const MarginalTV m(v);
    CHECK(m.linf() <= m.l2() + 1e-15);
    CHECK(m.l2() <= m.l1() + 1e-15);
    CHECK(m.l1() <= static_cast<double>(m.size()) * m.linf() + 1e-15);
  }
}

TEST_CASE("property: enumeration agrees with brute force and the general path") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1500; ++t) {
    const std::size_t n = 1 + t % 12;
    const auto [p, q] = oracle::draw_bernoulli_pair(rng, n);
    const double bern = exact_tv_bernoulli(pv(p), pv(q));
    const double gen = exact_tv_general(FiniteProductPair::from_bernoulli(pv(p), pv(q)));
    const double brute = oracle::brute_tv_bernoulli(p, q);
    REQUIRE(std::abs(bern - gen) <= 1e-12);
    REQUIRE(std::abs(bern - brute) <= 1e-12);
    REQUIRE(bern >= 0.0);
    REQUIRE(bern <= 1.0);
  }
  for (int t = 0; t < 500; ++t) {
    const auto pair = oracle::draw_general_pair(rng, 6, 5, 1 << 12);
    REQUIRE(std::abs(exact_tv_general(pair) - oracle::brute_tv(pair)) <= 1e-12);
  }
}

TEST_CASE("property: equal-marginal fast path agrees with enumeration") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 600; ++t) {
    const unsigned n = 1 + t % 20;
    const double p = oracle::draw_probability(rng);
    const double q = oracle::draw_probability(rng);
    const double fast = exact_tv_equal_marginals(n, p, q);
    const double enumerated = exact_tv_bernoulli(ProbVector::constant(n, p), ProbVector::constant(n, q));
    REQUIRE(std::abs(fast - enumerated) <= 1e-10);
    REQUIRE(std::abs(fast - oracle::binomial_tv(n, p, q)) <= 1e-12);
  }
}

TEST_CASE("property: symmetries and zero iff identical") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 800; ++t) {
    const std::size_t n = 1 + t % 10;
    auto [p, q] = oracle::draw_bernoulli_pair(rng, n);
    const double tv = exact_tv_bernoulli(pv(p), pv(q));
    CHECK(std::abs(exact_tv_bernoulli(pv(q), pv(p)) - tv) <= 1e-12);

    std::vector<double> fp(p), fq(q);
    for (std::size_t i = 0; i < n; i += 2) {
      fp[i] = 1.0 - p[i];
      fq[i] = 1.0 - q[i];
    }
    CHECK(std::abs(exact_tv_bernoulli(pv(fp), pv(fq)) - tv) <= 1e-12);

    bool identical = true;
    for (std::size_t i = 0; i < n; ++i) identical = identical && std::abs(p[i] - q[i]) <= 1e-12;
    if (identical) {
      CHECK(tv <= 1e-12);
    } else {
      CHECK(tv > 0.0);
    }
    CHECK(exact_tv_bernoulli(pv(p), pv(p)) == 0.0);
  }
}

TEST_CASE("determinism across workers") {
  std::mt19937_64 rng(19);
  const auto [p, q] = oracle::draw_bernoulli_pair(rng, 20);
  const double one = exact_tv_bernoulli(pv(p), pv(q), {kDefaultLog2Budget, 1});
  for (unsigned w : {2u, 3u, 4u, 8u}) {
    CHECK(exact_tv_bernoulli(pv(p), pv(q), {kDefaultLog2Budget, w}) == one);
  }
  CHECK(exact_tv_bernoulli(pv(p), pv(q), {kDefaultLog2Budget, 1}) == one);

  const auto pair = oracle::draw_general_pair(rng, 9, 5, 1 << 18);
  const double g1 = exact_tv_general(pair, {kDefaultLog2Budget, 1});
  CHECK(exact_tv_general(pair, {kDefaultLog2Budget, 4}) == g1);
  CHECK(exact_tv_general(pair, {kDefaultLog2Budget, 8}) == g1);
}

TEST_CASE("mc_tv_estimate") {
  const double hw = std::sqrt(std::log(2.0 / 0.05) / (2.0 * 1000));
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    const auto same = mc_tv_estimate(pv({0.3, 0.0, 1.0}), pv({0.3, 0.0, 1.0}), 1000, 0.95, seed);
    CHECK(same.value == 0.0);
    CHECK(same.half_width == doctest::Approx(hw).epsilon(1e-14));
    CHECK(same.samples == 1000);
    CHECK(mc_tv_estimate(pv({1.0}), pv({0.0}), 1000, 0.95, seed).value == 1.0);
  }

  const auto a = mc_tv_estimate(pv({0.5, 0.5}), pv({0.0, 0.0}), 100000, 0.95, 5, 1);
  const auto b = mc_tv_estimate(pv({0.5, 0.5}), pv({0.0, 0.0}), 100000, 0.95, 5, 4);
  CHECK(a.value == b.value);
  CHECK(std::abs(a.value - 0.75) <= a.half_width);
  CHECK(a.lower() >= 0.0);
  CHECK(a.upper() <= 1.0);

  CHECK_THROWS_AS(mc_tv_estimate(pv({0.5}), pv({0.5, 0.5}), 10, 0.95, 0), Error);
  CHECK_THROWS_AS(mc_tv_estimate(pv({0.5}), pv({0.5}), 10, 1.0, 0), Error);
  CHECK_THROWS_AS(mc_tv_estimate(pv({0.5}), pv({0.5}), 10, 0.0, 0), Error);
  CHECK_THROWS_AS(mc_tv_estimate(pv({0.5}), pv({0.5}), 0, 0.5, 0), Error);
}

TEST_CASE("mc_tv_estimate coverage over seeds") {
  // Binomial test: coverage count must not fall more than 3 sigma below the
  // nominal 95% of 200 seeds.
  const ProbVector p = pv({0.3, 0.6, 0.1, 0.9});
  const ProbVector q = pv({0.5, 0.5, 0.0, 0.7});
  const double truth = oracle::brute_tv_bernoulli({0.3, 0.6, 0.1, 0.9}, {0.5, 0.5, 0.0, 0.7});
  int covered = 0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    const auto est = mc_tv_estimate(p, q, 2000, 0.95, static_cast<std::uint64_t>(s));
    if (std::abs(est.value - truth) <= est.half_width) ++covered;
  }
  const double floor = seeds * 0.95 - 3.0 * std::sqrt(seeds * 0.95 * 0.05);
  CHECK(covered >= floor);
}
