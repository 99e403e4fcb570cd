#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bernbound/bounds.hpp"
#include "bernbound/grids.hpp"

using namespace bernbound;

TEST_CASE("family names round-trip through the parser") {
  for (const BoundFamily family :
       {BoundFamily::classical_bernoulli, BoundFamily::uspensky,
        BoundFamily::hoeffding, BoundFamily::bernoulli_sharp,
        BoundFamily::general_discrete, BoundFamily::continuous_corrected,
        BoundFamily::one_sided_half, BoundFamily::normalized_asymptotic}) {
    CHECK(parse_family(family_name(family)) == family);
  }
  CHECK_THROWS_AS(parse_family("chernoff"), std::invalid_argument);
}

TEST_CASE("classical bound on the smallest symmetric grid") {
  const auto [params, value] = classical_bernoulli_bound(1, 2, 2);
  CHECK(params.xi1 == Rational(1));
  CHECK(params.xi2 == Rational(1));
  CHECK(params.C == doctest::Approx(1.5));
  CHECK(value.value == doctest::Approx(0.4));
  CHECK(value.family == BoundFamily::classical_bernoulli);
}

TEST_CASE("exponential families at the printed grid point") {
  const double eps = 2.0 / 33.0;
  CHECK(general_discrete_bound(33, eps).value == doctest::Approx(0.785420).epsilon(1e-5));
  CHECK(hoeffding_bound(33, eps).value == doctest::Approx(1.569446).epsilon(1e-5));
  CHECK(bernoulli_sharp_bound(33, eps).value ==
        doctest::Approx(1.569446 / 2).epsilon(1e-5));
  CHECK(uspensky_bound(33, eps).value ==
        doctest::Approx(2.0 * std::exp(-0.5 * eps * eps * 33)));
}

TEST_CASE("sharp bound never exceeds the general discrete bound") {
  for (const unsigned long n : {5UL, 33UL, 200UL})
    for (int i = 1; i < 20; ++i) {
      const double eps = i / 20.0;
      CHECK(bernoulli_sharp_bound(n, eps).value <=
            general_discrete_bound(n, eps).value);
    }
}

TEST_CASE("hoeffding is twice the sharp bound") {
  for (int i = 1; i < 10; ++i) {
    const double eps = i / 10.0;
    CHECK(hoeffding_bound(50, eps).value ==
          doctest::Approx(2.0 * bernoulli_sharp_bound(50, eps).value));
  }
}

TEST_CASE("correction factor matches the printed grid") {
  CHECK(std::exp(0.1 * phi_correction(100, 0.1)) ==
        doctest::Approx(1.1436).epsilon(5e-5));
  CHECK(std::exp(0.35 * phi_correction(100000, 0.35)) ==
        doctest::Approx(2.0348).epsilon(5e-5));
  CHECK(std::exp(0.02 * phi_correction(1000, 0.02)) ==
        doctest::Approx(1.0221).epsilon(5e-5));
}

TEST_CASE("continuous bound value and regime errors") {
  // Correction factor times the general discrete value at the induced
  // partition; spot value frozen from an independent evaluation.
  const BoundValue value = continuous_bound(100, 0.5, 0.1);
  CHECK(value.value > 0.0);
  CHECK(value.value < 1.0);
  CHECK(value.certified);
  CHECK_THROWS_AS(continuous_bound(100, 0.5, 0.005), RegimeError);
  CHECK_THROWS_AS(continuous_bound(100, 0.5, 0.7), RegimeError);
}

TEST_CASE("one-sided bound closed form") {
  const BoundValue value = one_sided_bound(10, 0.6, 0.2);
  CHECK(value.value ==
        doctest::Approx(0.5 * std::exp(-10 * 0.04 / (2 * 0.6 * 0.4))));
  CHECK_THROWS_AS(one_sided_bound(10, 0.6, 0.0), std::domain_error);
  CHECK_THROWS_AS(one_sided_bound(10, 0.0, 0.1), std::domain_error);
}

TEST_CASE("normalized bound closed form") {
  CHECK(normalized_sum_bound(1.0, 0.5) == doctest::Approx(std::exp(-0.5)));
  CHECK(normalized_sum_bound(2.0, 0.25) ==
        doctest::Approx(std::exp(-2.0 * 4.0 * 0.25 * 0.75)));
}

TEST_CASE("crossover deviation separates the two families") {
  for (const unsigned long n : {10UL, 20UL, 33UL, 100UL, 1000UL}) {
    const CrossoverResult cross = crossover_epsilon(n);
    const double below = cross.mu * (1 - 1e-3);
    const double above = cross.mu * (1 + 1e-3);
    CHECK(general_discrete_bound(n, below).value <
          hoeffding_bound(n, below).value);
    CHECK(general_discrete_bound(n, above).value >
          hoeffding_bound(n, above).value);
  }
}

TEST_CASE("crossover frozen values") {
  CHECK(crossover_epsilon(33).mu == doctest::Approx(0.3284295).epsilon(1e-6));
  const CrossoverResult big = crossover_epsilon(100000000);
  CHECK(std::pow(1e8, 0.25) * big.mu ==
        doctest::Approx(0.7672824).epsilon(1e-5));
}

TEST_CASE("scaled crossover approaches its limiting constant from above") {
  double previous = std::pow(10.0, 0.25) * crossover_epsilon(10).mu;
  const double limit = std::pow(std::log(2.0) / 2.0, 0.25);
  for (const unsigned long n : {100UL, 10000UL, 1000000UL, 100000000UL}) {
    const double scaled =
        std::pow(static_cast<double>(n), 0.25) * crossover_epsilon(n).mu;
    CHECK(scaled < previous);
    CHECK(scaled > limit);
    previous = scaled;
  }
  CHECK(previous == doctest::Approx(limit).epsilon(1e-4));
}

TEST_CASE("log lower bound dominates its rational surrogate") {
  for (int i = 0; i <= 50; ++i) {
    const double delta = i / 5.0;
    CHECK(std::log1p(delta) >= log1p_lower(delta));
  }
  CHECK(log1p_lower(0.0) == 0.0);
}
