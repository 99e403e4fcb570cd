#include <doctest.h>

#include <stdexcept>

#include "bernbound/grids.hpp"

using namespace bernbound;

TEST_CASE("lattice grid derived quantities") {
  const BernoulliGrid grid(2, 3, 2);
  CHECK(grid.n() == 10);
  CHECK(grid.m() == 6);
  CHECK(grid.p() == Rational(3, 5));
  CHECK(grid.eps() == Rational(1, 5));
}

TEST_CASE("grid constructors validate their parameters") {
  CHECK_THROWS_AS(BernoulliGrid(0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(BernoulliGrid(1, 0, 1), std::domain_error);
  CHECK_THROWS_AS(DiscreteGrid(5, 5, 1), std::domain_error);
  CHECK_THROWS_AS(DiscreteGrid(5, 2, 0), std::domain_error);
}

TEST_CASE("unit lattice decomposition splits mass into quarters") {
  const GroupDecomposition dec = group_decomposition(BernoulliGrid(1, 1, 1));
  CHECK(dec.p0 == RationalProb(Rational(1, 2)));
  REQUIRE(dec.left.size() == 1);
  REQUIRE(dec.right.size() == 1);
  CHECK(dec.left[0] == RationalProb(Rational(1, 4)));
  CHECK(dec.right[0] == RationalProb(Rational(1, 4)));
  CHECK(!dec.left_terminal);
  CHECK(!dec.right_terminal);
  CHECK(dec.total() == RationalProb(Rational(1)));
}

TEST_CASE("decomposition groups are sized by the grid geometry") {
  const DiscreteGrid grid(33, 18, 4);
  const GroupDecomposition dec = group_decomposition(grid);
  // 18 left indices -> 4 full groups plus a 2-wide terminal;
  // 15 right indices -> 3 full groups plus a 3-wide terminal.
  CHECK(dec.group_width == 4);
  CHECK(dec.left.size() == 4);
  CHECK(dec.right.size() == 3);
  CHECK(dec.left_terminal.has_value());
  CHECK(dec.right_terminal.has_value());
  CHECK(dec.total() == RationalProb(Rational(1)));
}

TEST_CASE("decomposition total is conserved across grids") {
  for (unsigned long k = 1; k <= 3; ++k)
    for (unsigned long r = 1; r <= 4; ++r)
      for (unsigned long s = 1; s <= 4; ++s)
        CHECK(group_decomposition(BernoulliGrid(k, r, s)).total() ==
              RationalProb(Rational(1)));
}

TEST_CASE("decomposition agrees with direct tail sums") {
  const BernoulliGrid grid(2, 3, 2);
  const GroupDecomposition dec = group_decomposition(grid);
  const WeightTable table(grid.n(), grid.p());
  // Right groups cover indices m+1 .. n in k-wide blocks.
  RationalProb right_total = dec.right[0];
  for (std::size_t j = 1; j < dec.right.size(); ++j)
    right_total = right_total + dec.right[j];
  if (dec.right_terminal) right_total = right_total + *dec.right_terminal;
  CHECK(right_total == table.range_mass(static_cast<long>(grid.m()) + 1,
                                        static_cast<long>(grid.n())));
}

TEST_CASE("neighbor coefficient ratios increase strictly") {
  const BernoulliGrid grid(2, 4, 3);
  Rational previous(0);
  for (unsigned long j = 1; j <= grid.k * (grid.r - 1); ++j) {
    const Rational current = coefficient_A(grid, j);
    CHECK(current > previous);
    previous = current;
  }
  previous = 0;
  for (unsigned long j = 1; j <= grid.k * (grid.s - 1); ++j) {
    const Rational current = coefficient_B(grid, j);
    CHECK(current > previous);
    previous = current;
  }
}

TEST_CASE("continuous partition fields on a worked point") {
  const ContinuousPartition part = continuous_partition(100, 0.47, 0.06);
  CHECK(part.m == 47);           // smallest integer >= 47
  CHECK(part.h == 6);            // integers in [41, 47)
  CHECK(part.g == 7);            // integers in [47, 53]
  CHECK(part.p_tilde == doctest::Approx(0.47));
  CHECK(part.eps1_tilde == doctest::Approx(0.06));
  CHECK(part.eps2_tilde == doctest::Approx(0.07));
  CHECK(part.theta == doctest::Approx(1.0));
}

TEST_CASE("continuous partition names the violated regime condition") {
  CHECK_THROWS_AS(continuous_partition(100, 0.5, 0.005), RegimeError);
  CHECK_THROWS_AS(continuous_partition(100, 0.5, 0.7), RegimeError);
  CHECK_THROWS_AS(continuous_partition(100, 0.0, 0.1), RegimeError);
  CHECK_THROWS_WITH_AS(continuous_partition(50, 0.5, 0.02),
                       doctest::Contains("1/n"), RegimeError);
}
