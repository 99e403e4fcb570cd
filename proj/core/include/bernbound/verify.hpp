#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

#include "bernbound/binomial.hpp"
#include "bernbound/enclosure.hpp"
#include "bernbound/grids.hpp"
#include "bernbound/rational.hpp"

namespace bernbound {

// Precision and fan-out knobs shared by all certification runs. Identical
// settings and inputs produce identical reports, whatever the job count.
struct VerifySettings {
  mpfr_prec_t precision_bits = 128;
  unsigned jobs = 1;
};

// One certified inequality between an exact rational and an enclosed
// transcendental quantity. `margin` is an approximate relative slack,
// positive when the inequality holds with room; verdicts never depend
// on it. `terminal` marks checks that involve a short terminal group,
// which the certified decay statements do not cover; they are tallied
// separately.
struct RatioCheck {
  unsigned long j = 0;
  std::string label;
  Rational lhs;
  double required = 0.0;  // enclosure midpoint of the transcendental side
  Verdict verdict = Verdict::inconclusive;
  double margin = 0.0;
  bool terminal = false;
};

// An exact tail mass certified against an enclosed bound value.
struct TailVsBound {
  std::string label;
  RationalProb tail;
  double bound = 0.0;  // enclosure midpoint
  Verdict verdict = Verdict::inconclusive;
  double margin = 0.0;
};

struct VerificationReport {
  std::string config;
  std::vector<RatioCheck> checks;
  std::vector<TailVsBound> tail_checks;
  unsigned long pass_count = 0;
  unsigned long fail_count = 0;
  unsigned long inconclusive_count = 0;
  bool vacuous = false;  // nothing beyond the first group; nothing to check
  std::string note;
};

// Group-decay certification. Right checks certify factor * Z_{j+1} <= Z_j
// and the consequence (factor - 1) * P2+ <= P1+; left checks mirror them
// on the S groups. The factor is exp(2 eps^2 n) on the lattice grids and
// for the right groups of discrete grids; left discrete checks use
// exp(2 eps^2 n / (1 + eps^2)) for k >= 2 and the stronger lattice factor
// for k = 1. Discrete overloads require 2m >= n; map p < 1/2 through the
// X -> 1-X symmetry first.
VerificationReport check_right_decay(const BernoulliGrid& grid,
                                     const VerifySettings& settings = {});
VerificationReport check_right_decay(const DiscreteGrid& grid,
                                     const VerifySettings& settings = {});
VerificationReport check_left_decay(const BernoulliGrid& grid,
                                    const VerifySettings& settings = {});
VerificationReport check_left_decay(const DiscreteGrid& grid,
                                    const VerifySettings& settings = {});

// Strict two-sided tail against the closed-form bound: exp(-2 eps^2 n) on
// lattice grids (arbitrary k, r, s), exp(-2 eps^2 n / (1 + eps^2)) on
// discrete grids with 2 <= k < n and n <= 2m < 2n (RegimeError otherwise).
VerificationReport check_tail_bound(const BernoulliGrid& grid,
                                    const VerifySettings& settings = {});
VerificationReport check_tail_bound(const DiscreteGrid& grid,
                                    const VerifySettings& settings = {});

// One row of the vanishing-exponent demonstration at eps = 1/(2n): the
// deviation probability climbs toward 1 while n eps^2 = 1/(4n) vanishes.
// center_mass_bound evaluates (p^p (1+p)^(1-p))^n; whether it dominates
// the center mass is recorded, not asserted.
struct CollapseRow {
  unsigned long n = 0;
  Rational eps;
  RationalProb deviation;     // P(|mean - p| > eps), exact
  double eps_sq_n = 0.0;      // 1/(4n)
  RationalProb center_mass;   // exact mass within eps of p
  double center_mass_bound = 0.0;
  bool center_bound_holds = false;
  bool lattice_clear = false;  // exactly one lattice point within eps
};

std::vector<CollapseRow> check_exponent_collapse(
    const std::vector<unsigned long>& n_list, const Rational& p);

// One-sided deviation delta = nu * eps on a lattice grid: certifies
// P(mean - p > delta) <= 0.5 exp(-n delta^2 / (2 p (1-p))) when r >= s and
// the mirrored lower form when r <= s (both when r = s).
VerificationReport check_one_sided(const BernoulliGrid& grid,
                                   unsigned long nu,
                                   const VerifySettings& settings = {});

// Median dominance for p >= 1/2: certifies the strict form
// P(mean > p) < 1/2 by exact rational comparison; the weak form
// P(mean >= p) <= 1/2 fails on some grids (p = 1/2 among them) and is
// recorded in the note instead of being asserted.
VerificationReport check_median(const BernoulliGrid& grid,
                                const VerifySettings& settings = {});
VerificationReport check_median(const DiscreteGrid& grid,
                                const VerifySettings& settings = {});

enum class CurvatureKind { convex, concave };
enum class CurvatureProbe { reciprocal, neg_log, log, sqrt };

// Midpoint/endpoint sum comparison for a catalog of curved probes:
// convex phi: sum_{j=1..n} phi(j) >= n phi((n+1)/2);
// concave phi: sum_{j=1..n} phi(j) >= n (phi(1) + phi(n)) / 2.
// reciprocal and neg_log are convex, log and sqrt concave; a mismatched
// kind is an invalid_argument. All probes except sqrt reduce to exact
// integer or rational comparisons; sqrt uses directed rounding.
Verdict check_curvature_probe(CurvatureKind kind, CurvatureProbe probe,
                              unsigned long n,
                              const VerifySettings& settings = {});

// Certifies log(1 + delta) >= 2 delta / (2 + delta) on the grid
// delta = i/10, i = 0..1000.
VerificationReport check_log_lower_bound(const VerifySettings& settings = {});

// Bound values at eps = t sqrt(p(1-p)/n) for growing n, against the limit
// exp(-2 t^2 p (1-p)). The continuous bound is skipped while n eps <= 1.
struct NormalizedLimitRow {
  unsigned long n = 0;
  double eps = 0.0;
  double sharp = 0.0;
  double general_discrete = 0.0;
  std::optional<double> continuous;
  double hoeffding = 0.0;
  double limit = 0.0;
};

std::vector<NormalizedLimitRow> check_normalized_limit(
    double p, double t, const std::vector<unsigned long>& n_list);

// Aggregated sweep outcome. Ratio/consequence tallies cover full-size
// groups only; checks touching a short terminal group land in the
// terminal bucket. Reports with any non-pass verdict are retained in
// `offenders` (sorted by config, capped).
struct SweepSummary {
  unsigned long configs = 0;
  unsigned long vacuous = 0;
  unsigned long ratio_pass = 0;
  unsigned long ratio_fail = 0;
  unsigned long ratio_inconclusive = 0;
  unsigned long terminal_pass = 0;
  unsigned long terminal_fail = 0;
  unsigned long terminal_inconclusive = 0;
  unsigned long consequence_pass = 0;
  unsigned long consequence_fail = 0;
  unsigned long consequence_inconclusive = 0;
  unsigned long tail_pass = 0;
  unsigned long tail_fail = 0;
  unsigned long tail_inconclusive = 0;
  std::vector<VerificationReport> offenders;
  bool offenders_truncated = false;
};

// Decay certification over every lattice grid with k <= kmax and
// r, s <= rsmax, both sides.
SweepSummary sweep_bernoulli_decay(unsigned long kmax, unsigned long rsmax,
                                   const VerifySettings& settings = {});

// Decay certification over every discrete grid with n <= nmax, 2m >= n,
// all k < n, both sides.
SweepSummary sweep_discrete_decay(unsigned long nmax,
                                  const VerifySettings& settings = {});

// Strict tail vs bound over the same grid families, restricted to each
// bound's certified regime.
SweepSummary sweep_bernoulli_tail_bounds(unsigned long kmax,
                                         unsigned long rsmax,
                                         const VerifySettings& settings = {});
SweepSummary sweep_discrete_tail_bounds(unsigned long nmax,
                                        const VerifySettings& settings = {});

// One-sided checks over k <= kmax, r >= s, r, s <= rsmax, nu <= s.
SweepSummary sweep_one_sided(unsigned long kmax, unsigned long rsmax,
                             const VerifySettings& settings = {});

// Median checks over k <= kmax, r >= s, r, s <= rsmax.
SweepSummary sweep_median(unsigned long kmax, unsigned long rsmax,
                          const VerifySettings& settings = {});

}  // namespace bernbound
