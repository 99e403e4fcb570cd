// Acceptance gate: one line per criterion, exit code = number of failures.
// Tolerances are pinned here; a failing criterion stays red rather than
// being loosened.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bernbound/binomial.hpp"
#include "bernbound/bounds.hpp"
#include "bernbound/grids.hpp"
#include "bernbound/rational.hpp"
#include "bernbound/samplesize.hpp"
#include "bernbound/verify.hpp"

using namespace bernbound;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const char* what, bool ok, double elapsed) {
  std::printf("criterion %2d: %s  %s (%.2f s)\n", index, ok ? "PASS" : "FAIL",
              what, elapsed);
  std::fflush(stdout);
  if (!ok) {
    ++failures;
  }
}

// Absolute tolerance implied by a printed decimal cell: one unit in its
// last printed digit. A bare "0" is held to the column's six-decimal
// convention.
double printed_tolerance(const std::string& cell) {
  const auto dot = cell.find('.');
  if (dot == std::string::npos) {
    return 1e-6;
  }
  const int decimals = static_cast<int>(cell.size() - dot - 1);
  return std::pow(10.0, -decimals) + 1e-12;
}

bool matches_printed(double computed, const std::string& cell) {
  return std::fabs(computed - std::atof(cell.c_str())) <=
         printed_tolerance(cell);
}

// Printed deviation table for 33 trials at p = 15/33: weak two-sided
// probability, general-discrete bound, Hoeffding bound, for eps = k/33.
struct PrintedRow {
  unsigned long k;
  const char* probability;
  const char* general_discrete;
  const char* hoeffding;
};

const PrintedRow kPrintedTable[] = {
    {2, "0.600713", "0.78542", "1.569446"},
    {3, "0.382439", "0.582175", "1.159157"},
    {4, "0.220522", "0.38456", "0.758396"},
    {5, "0.114271", "0.227376", "0.43955"},
    {6, "0.052796", "0.120996", "0.225672"},
    {7, "0.021571", "0.058319", "0.102638"},
    {8, "0.007724", "0.025643", "0.041352"},
    {9, "0.0024", "0.010366", "0.014758"},
    {10, "0.00064", "0.003884", "0.004666"},
    {11, "0.000145", "0.00136", "0.001307"},
    {12, "0.000027", "0.000449", "0.000324"},
    {13, "0.000004", "0.000141", "0.000071"},
    {14, "0.000001", "0.000042", "0.000014"},
    {15, "0", "0.000012", "0.000002"},
};

// Printed correction-factor grid: exp(eps * phi(n, eps)).
const double kCorrectionEps[] = {0.02, 0.05, 0.1, 0.2, 0.3, 0.35};
const unsigned long kCorrectionN[] = {100, 1000, 100000};
const char* kPrintedCorrection[3][6] = {
    {"1.0412", "1.0697", "1.1436", "1.3737", "1.7612", "2.0357"},
    {"1.0221", "1.0582", "1.1336", "1.3652", "1.7566", "2.0349"},
    {"1.0211", "1.0572", "1.1326", "1.3643", "1.7561", "2.0348"},
};

bool sweep_clean(const SweepSummary& sum, bool gate_inconclusive) {
  const bool no_fail = sum.ratio_fail == 0 && sum.terminal_fail == 0 &&
                       sum.consequence_fail == 0 && sum.tail_fail == 0;
  if (!gate_inconclusive) {
    return no_fail;
  }
  return no_fail && sum.ratio_inconclusive == 0 &&
         sum.terminal_inconclusive == 0 && sum.consequence_inconclusive == 0 &&
         sum.tail_inconclusive == 0;
}

void criterion_1_printed_table() {
  const auto start = Clock::now();
  bool ok = true;
  const WeightTable table(33, Rational(15, 33));
  for (const PrintedRow& row : kPrintedTable) {
    const Rational eps(static_cast<long>(row.k), 33);
    const double eps_d = eps.get_d();
    const double prob =
        tail_probability(table, eps, Side::two, Boundary::weak).to_double();
    ok = ok && matches_printed(prob, row.probability);
    ok = ok && matches_printed(general_discrete_bound(33, eps_d).value,
                               row.general_discrete);
    ok = ok && matches_printed(hoeffding_bound(33, eps_d).value, row.hoeffding);
  }
  const double elapsed = seconds_since(start);
  report(1, "printed deviation table reproduced (14 rows x 3 values)",
         ok && elapsed < 1.0, elapsed);
}

void criterion_2_correction_grid() {
  const auto start = Clock::now();
  bool ok = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) {
      const double value = std::exp(
          kCorrectionEps[j] * phi_correction(kCorrectionN[i], kCorrectionEps[j]));
      ok = ok && matches_printed(value, kPrintedCorrection[i][j]);
    }
  const double elapsed = seconds_since(start);
  report(2, "printed correction grid reproduced (18 cells)",
         ok && elapsed < 1.0, elapsed);
}

void criterion_3_lattice_decay() {
  const auto start = Clock::now();
  const SweepSummary sum = sweep_bernoulli_decay(6, 12);
  const double elapsed = seconds_since(start);
  report(3, "lattice decay sweep certified (k <= 6, r,s <= 12)",
         sweep_clean(sum, true) && elapsed < 300.0, elapsed);
}

void criterion_4_discrete_decay() {
  const auto start = Clock::now();
  const SweepSummary sum = sweep_discrete_decay(200);
  const double elapsed = seconds_since(start);
  const bool ok = sum.ratio_fail == 0 && sum.consequence_fail == 0;
  report(4, "direct decay sweep has no full-group failures (n <= 200)",
         ok && elapsed < 900.0, elapsed);
}

void criterion_5_tail_bounds() {
  const auto start = Clock::now();
  bool ok = sweep_clean(sweep_bernoulli_tail_bounds(6, 12), true);
  ok = ok && sweep_clean(sweep_discrete_tail_bounds(200), true);
  for (unsigned long k = 2; k <= 15; ++k) {
    // Printed rows have p < 1/2; the mirrored grid carries the same
    // two-sided tail.
    const VerificationReport rep = check_tail_bound(DiscreteGrid(33, 18, k));
    ok = ok && rep.fail_count == 0 && rep.inconclusive_count == 0;
  }
  report(5, "strict tails sit below the certified exponential bound",
         ok, seconds_since(start));
}

void criterion_6_crossover() {
  const auto start = Clock::now();
  bool ok = true;
  for (const unsigned long n : {10UL, 20UL, 33UL, 100UL, 1000UL}) {
    const double mu = crossover_epsilon(n).mu;
    const double below = mu * (1.0 - 1e-6);
    const double above = mu * (1.0 + 1e-6);
    ok = ok && general_discrete_bound(n, below).value <
                   hoeffding_bound(n, below).value;
    ok = ok && general_discrete_bound(n, above).value >
                   hoeffding_bound(n, above).value;
  }
  const double scaled =
      std::pow(1e8, 0.25) * crossover_epsilon(100000000).mu;
  ok = ok && std::fabs(scaled - 0.767273) <= 1e-4;
  report(6, "family crossover flips sign at mu(n); scaled limit reached",
         ok, seconds_since(start));
}

void criterion_7_exponent_collapse() {
  const auto start = Clock::now();
  const std::vector<CollapseRow> rows = check_exponent_collapse(
      {10, 50, 100, 500, 1000, 5000, 10000}, Rational(1, 2));
  bool ok = !rows.empty();
  bool above_09 = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].deviation.value() > Rational(9, 10)) {
      above_09 = true;
    }
    if (i > 0) {
      ok = ok && rows[i].deviation.value() >= rows[i - 1].deviation.value();
      ok = ok && rows[i].eps_sq_n < rows[i - 1].eps_sq_n;
    }
  }
  report(7, "deviation at eps = 1/(2n) grows above 0.9 while eps^2 n vanishes",
         ok && above_09, seconds_since(start));
}

void criterion_8_one_sided_and_median() {
  const auto start = Clock::now();
  const bool ok = sweep_clean(sweep_one_sided(5, 10), true) &&
                  sweep_clean(sweep_median(5, 10), true);
  report(8, "one-sided and median sweeps certified (k <= 5, r,s <= 10)",
         ok, seconds_since(start));
}

void criterion_9_probe_catalog() {
  const auto start = Clock::now();
  bool ok = true;
  for (unsigned long n = 1; n <= 1000; ++n) {
    ok = ok && check_curvature_probe(CurvatureKind::convex,
                                     CurvatureProbe::reciprocal,
                                     n) == Verdict::pass;
    ok = ok && check_curvature_probe(CurvatureKind::convex,
                                     CurvatureProbe::neg_log,
                                     n) == Verdict::pass;
    ok = ok && check_curvature_probe(CurvatureKind::concave,
                                     CurvatureProbe::log, n) == Verdict::pass;
    ok = ok && check_curvature_probe(CurvatureKind::concave,
                                     CurvatureProbe::sqrt, n) == Verdict::pass;
  }
  const VerificationReport log_lower = check_log_lower_bound();
  ok = ok && log_lower.pass_count == 1001 && log_lower.fail_count == 0 &&
       log_lower.inconclusive_count == 0;
  report(9, "curvature probes (n <= 1000) and log lower bound grid certified",
         ok, seconds_since(start));
}

void criterion_10_normalized_limit() {
  const auto start = Clock::now();
  const std::vector<NormalizedLimitRow> rows =
      check_normalized_limit(0.5, 1.0, {1000000});
  bool ok = rows.size() == 1;
  if (ok) {
    const NormalizedLimitRow& row = rows[0];
    const double limit = std::exp(-0.5);
    ok = std::fabs(row.sharp - limit) <= 1e-3 &&
         std::fabs(row.general_discrete - limit) <= 1e-3 &&
         row.continuous.has_value() &&
         std::fabs(*row.continuous - limit) <= 1e-3 &&
         std::fabs(row.hoeffding - 2.0 * limit) <= 1e-3;
  }
  report(10, "normalized bounds reach exp(-1/2) at n = 10^6",
         ok, seconds_since(start));
}

double family_value(BoundFamily family, unsigned long n, double eps,
                    std::optional<double> p) {
  switch (family) {
    case BoundFamily::uspensky:
      return uspensky_bound(n, eps).value;
    case BoundFamily::hoeffding:
      return hoeffding_bound(n, eps).value;
    case BoundFamily::bernoulli_sharp:
      return bernoulli_sharp_bound(n, eps).value;
    case BoundFamily::general_discrete:
      return general_discrete_bound(n, eps).value;
    case BoundFamily::continuous_corrected:
      return continuous_bound(n, *p, eps).value;
    case BoundFamily::one_sided_half:
      return one_sided_bound(n, *p, eps).value;
    default:
      std::abort();
  }
}

void criterion_11_randomized_minimality() {
  const auto start = Clock::now();
  bool ok = true;
  const BoundFamily families[] = {
      BoundFamily::uspensky,        BoundFamily::hoeffding,
      BoundFamily::bernoulli_sharp, BoundFamily::general_discrete,
      BoundFamily::continuous_corrected, BoundFamily::one_sided_half};
  std::mt19937 rng(424242u);
  std::uniform_real_distribution<double> eps_draw(0.02, 0.28);
  std::uniform_real_distribution<double> p_draw(0.3, 0.7);
  std::uniform_real_distribution<double> log_target_draw(-8.0, -0.05);
  for (const BoundFamily family : families) {
    const bool needs_p = family == BoundFamily::continuous_corrected ||
                         family == BoundFamily::one_sided_half;
    for (int i = 0; i < 100 && ok; ++i) {
      const double eps = eps_draw(rng);
      const double target = std::pow(10.0, log_target_draw(rng));
      const std::optional<double> p =
          needs_p ? std::optional<double>(p_draw(rng)) : std::nullopt;
      const PlanResult result = min_n(eps, target, family, p);
      if (!result.n_min) {
        ok = false;
        break;
      }
      const unsigned long n = *result.n_min;
      if (family_value(family, n, eps, p) > target) {
        ok = false;
        break;
      }
      if (n > 1) {
        try {
          if (family_value(family, n - 1, eps, p) <= target) {
            ok = false;
          }
        } catch (const RegimeError&) {
          // n - 1 below the admissible floor: minimality holds trivially.
        }
      }
    }
  }
  report(11, "randomized inversion queries satisfy minimality (100 per family)",
         ok, seconds_since(start));
}

}  // namespace

int main() {
  criterion_1_printed_table();
  criterion_2_correction_grid();
  criterion_3_lattice_decay();
  criterion_4_discrete_decay();
  criterion_5_tail_bounds();
  criterion_6_crossover();
  criterion_7_exponent_collapse();
  criterion_8_one_sided_and_median();
  criterion_9_probe_catalog();
  criterion_10_normalized_limit();
  criterion_11_randomized_minimality();

  if (failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  }
  return failures;
}
