#pragma once

#include <cstdint>
#include <vector>

#include "bernbound/rational.hpp"

namespace bernbound {

// Natural-log representation of a probability for the large-n path.
struct LogProb {
  double log_value;  // -inf allowed
};

enum class Side { two, upper, lower };
enum class Boundary { strict, weak };

// Number of successes above which CLI-level callers switch from the exact
// rational backend to the log-domain backend. Certification never uses the
// log path.
inline constexpr unsigned long kDefaultExactBackendThreshold = 500;

// Integer-weight view of Binomial(n, p) with p = a/b in lowest terms:
// mass(j) = weight(j) / b^n with weight(j) = C(n,j) a^j (b-a)^(n-j).
// All group masses used by the certification sweeps are contiguous sums of
// these integer weights, so ratio checks cancel the common denominator.
class WeightTable {
 public:
  WeightTable(unsigned long n, const Rational& p);

  unsigned long n() const { return n_; }
  const Rational& p() const { return p_; }
  const mpz_class& weight(unsigned long j) const;
  // Sum of weights over [lo, hi]; empty when lo > hi.
  mpz_class range_weight(long lo, long hi) const;
  const mpz_class& total() const { return total_; }  // b^n

  RationalProb mass(unsigned long j) const;
  RationalProb range_mass(long lo, long hi) const;

 private:
  unsigned long n_;
  Rational p_;
  std::vector<mpz_class> weights_;
  std::vector<mpz_class> prefix_;  // prefix_[j] = sum of weights_[0..j]
  mpz_class total_;
};

// Treats values within one part in 1e9 of an integer as that integer;
// absorbs the binary rounding of decimal inputs before floor/ceil.
double snap_to_integer(double x);

// C(n,j) p^j (1-p)^(n-j), exact. Accepts the degenerate p in {0, 1}.
RationalProb binomial_pmf(unsigned long n, unsigned long j,
                          const RationalProb& p);

// log C(n,j) + j log p + (n-j) log(1-p) via log-gamma; requires p in (0,1).
// Evaluated in extended precision so that exp() of the result agrees with
// the exact path to 1e-12 relative error for n <= 200.
LogProb log_binomial_pmf(unsigned long n, unsigned long j, double p);

// Exact deviation mass: sum of binomial point masses j with
// |j/n - p| > eps (strict) or >= eps (weak), restricted per side.
// Requires 0 < p < 1 and eps > 0.
RationalProb tail_probability(unsigned long n, const RationalProb& p,
                              const Rational& eps, Side side,
                              Boundary boundary);

// As tail_probability but over a prebuilt table and with eps >= 0 allowed;
// shared by the certification harness.
RationalProb tail_probability(const WeightTable& table, const Rational& eps,
                              Side side, Boundary boundary);

// Log-domain tail for n beyond the exact backend threshold. Point masses
// are accumulated in ascending magnitude with compensated summation.
double tail_probability_log(unsigned long n, double p, double eps, Side side,
                            Boundary boundary);

}  // namespace bernbound
