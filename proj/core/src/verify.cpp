#include "bernbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "bernbound/bounds.hpp"

namespace bernbound {

namespace {

constexpr std::size_t kOffenderCap = 100;

void count_verdict(VerificationReport& rep, Verdict v) {
  switch (v) {
    case Verdict::pass:
      ++rep.pass_count;
      return;
    case Verdict::fail:
      ++rep.fail_count;
      return;
    case Verdict::inconclusive:
      ++rep.inconclusive_count;
      return;
  }
}

void bump(unsigned long& pass, unsigned long& fail,
          unsigned long& inconclusive, Verdict v) {
  switch (v) {
    case Verdict::pass:
      ++pass;
      return;
    case Verdict::fail:
      ++fail;
      return;
    case Verdict::inconclusive:
      ++inconclusive;
      return;
  }
}

void tally_decay(SweepSummary* sum, Verdict v, bool terminal,
                 bool consequence) {
  if (sum == nullptr) {
    return;
  }
  if (terminal) {
    bump(sum->terminal_pass, sum->terminal_fail, sum->terminal_inconclusive,
         v);
  } else if (consequence) {
    bump(sum->consequence_pass, sum->consequence_fail,
         sum->consequence_inconclusive, v);
  } else {
    bump(sum->ratio_pass, sum->ratio_fail, sum->ratio_inconclusive, v);
  }
}

void push_offender(SweepSummary& sum, VerificationReport&& rep) {
  if (sum.offenders.size() < kOffenderCap) {
    sum.offenders.push_back(std::move(rep));
  } else {
    sum.offenders_truncated = true;
  }
}

void sort_offenders(SweepSummary& sum) {
  std::sort(sum.offenders.begin(), sum.offenders.end(),
            [](const VerificationReport& a, const VerificationReport& b) {
              return a.config < b.config;
            });
}

void merge_summary(SweepSummary& into, SweepSummary&& part) {
  into.configs += part.configs;
  into.vacuous += part.vacuous;
  into.ratio_pass += part.ratio_pass;
  into.ratio_fail += part.ratio_fail;
  into.ratio_inconclusive += part.ratio_inconclusive;
  into.terminal_pass += part.terminal_pass;
  into.terminal_fail += part.terminal_fail;
  into.terminal_inconclusive += part.terminal_inconclusive;
  into.consequence_pass += part.consequence_pass;
  into.consequence_fail += part.consequence_fail;
  into.consequence_inconclusive += part.consequence_inconclusive;
  into.tail_pass += part.tail_pass;
  into.tail_fail += part.tail_fail;
  into.tail_inconclusive += part.tail_inconclusive;
  for (auto& rep : part.offenders) {
    push_offender(into, std::move(rep));
  }
  into.offenders_truncated =
      into.offenders_truncated || part.offenders_truncated;
}

void absorb_report(SweepSummary& sum, VerificationReport&& rep) {
  ++sum.configs;
  if (rep.vacuous) {
    ++sum.vacuous;
  }
  for (const RatioCheck& c : rep.checks) {
    if (c.terminal) {
      bump(sum.terminal_pass, sum.terminal_fail, sum.terminal_inconclusive,
           c.verdict);
    } else if (c.label.find("consequence") != std::string::npos) {
      bump(sum.consequence_pass, sum.consequence_fail,
           sum.consequence_inconclusive, c.verdict);
    } else {
      bump(sum.ratio_pass, sum.ratio_fail, sum.ratio_inconclusive,
           c.verdict);
    }
  }
  for (const TailVsBound& t : rep.tail_checks) {
    bump(sum.tail_pass, sum.tail_fail, sum.tail_inconclusive, t.verdict);
  }
  if (rep.fail_count > 0 || rep.inconclusive_count > 0) {
    push_offender(sum, std::move(rep));
  }
}

// Runs per_n(summary, n) for n in [nmin, nmax], striping the range across
// jobs worker threads. Counts are order-independent; offenders are sorted
// by config afterward, so the result does not depend on the job count.
template <typename PerN>
SweepSummary striped_over_n(unsigned long nmin, unsigned long nmax,
                            unsigned jobs, PerN per_n) {
  SweepSummary sum;
  if (nmax < nmin) {
    return sum;
  }
  if (jobs <= 1) {
    for (unsigned long n = nmin; n <= nmax; ++n) {
      per_n(sum, n);
    }
  } else {
    std::vector<SweepSummary> parts(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        for (unsigned long n = nmin + t; n <= nmax; n += jobs) {
          per_n(parts[t], n);
        }
      });
    }
    for (auto& worker : workers) {
      worker.join();
    }
    for (auto& part : parts) {
      merge_summary(sum, std::move(part));
    }
  }
  sort_offenders(sum);
  return sum;
}

std::pair<long, long> group_range(unsigned long center, unsigned long k,
                                  unsigned long j, bool right) {
  if (right) {
    return {static_cast<long>(center + 1 + (j - 1) * k),
            static_cast<long>(center + j * k)};
  }
  return {static_cast<long>(center) - static_cast<long>(j * k),
          static_cast<long>(center) - 1 - static_cast<long>((j - 1) * k)};
}

mpz_class group_weight(const WeightTable& table, unsigned long center,
                       unsigned long k, unsigned long j, bool right) {
  const auto [lo, hi] = group_range(center, k, j, right);
  return table.range_weight(lo, hi);
}

// Certifies factor * G_{j+1} <= G_j across the k-wide groups on one side
// of the center, the terminal-group step where a short group exists, and
// the consequence (factor - 1) * P2 <= P1. With collect_rows false only
// non-pass rows are materialized (sweep mode); verdicts are still counted
// and, when sum is given, tallied into its buckets.
VerificationReport decay_report(const WeightTable& table, unsigned long center,
                                unsigned long k, bool right,
                                const Enclosure& factor, std::string config,
                                bool collect_rows, SweepSummary* sum) {
  VerificationReport rep;
  rep.config = std::move(config);
  const std::string side = right ? "right" : "left";
  const long n_long = static_cast<long>(table.n());
  const mpz_class p2 =
      right ? table.range_weight(static_cast<long>(center + k + 1), n_long)
            : table.range_weight(
                  0, static_cast<long>(center) - static_cast<long>(k) - 1);
  if (p2 == 0) {
    rep.vacuous = true;
    rep.note = "no mass beyond the first " + side + " group";
    return rep;
  }
  const unsigned long span = right ? table.n() - center : center;
  const unsigned long full = span / k;
  const bool has_terminal = span % k != 0;
  mpz_class w_cur = group_weight(table, center, k, 1, right);
  const mpz_class p1 = w_cur;
  const auto add_row = [&rep](unsigned long j, std::string label,
                              const mpz_class& w1, const Enclosure& f,
                              const mpz_class& w2, Verdict v, bool terminal) {
    RatioCheck check;
    check.j = j;
    check.label = std::move(label);
    check.lhs = Rational(w1, w2);
    check.lhs.canonicalize();
    check.required = f.midpoint();
    check.verdict = v;
    check.margin = relative_margin_weighted(w1, f, w2);
    check.terminal = terminal;
    rep.checks.push_back(std::move(check));
  };
  for (unsigned long j = 1; j < full; ++j) {
    mpz_class w_next = group_weight(table, center, k, j + 1, right);
    const Verdict v = certify_weighted_ge(w_cur, factor, w_next);
    count_verdict(rep, v);
    tally_decay(sum, v, false, false);
    if (collect_rows || v != Verdict::pass) {
      add_row(j, side, w_cur, factor, w_next, v, false);
    }
    w_cur = std::move(w_next);
  }
  if (has_terminal) {
    const long lo = right ? static_cast<long>(center + full * k + 1) : 0;
    const long hi = right ? n_long
                          : static_cast<long>(center) -
                                static_cast<long>(full * k) - 1;
    const mpz_class w_term = table.range_weight(lo, hi);
    if (w_term > 0) {
      const Verdict v = certify_weighted_ge(w_cur, factor, w_term);
      count_verdict(rep, v);
      tally_decay(sum, v, true, false);
      if (collect_rows || v != Verdict::pass) {
        add_row(full, side + "-terminal", w_cur, factor, w_term, v, true);
      }
    }
  }
  const Enclosure cfactor = enclosure_add(factor, -1);
  const Verdict v = certify_weighted_ge(p1, cfactor, p2);
  count_verdict(rep, v);
  tally_decay(sum, v, has_terminal, true);
  if (collect_rows || v != Verdict::pass) {
    add_row(0, side + "-consequence", p1, cfactor, p2, v, has_terminal);
  }
  return rep;
}

void require_upper_half(unsigned long n, unsigned long m) {
  if (2 * m < n) {
    throw std::domain_error(
        "checks need p >= 1/2; relabel successes as failures (X -> 1-X) "
        "for smaller p");
  }
}

// Per-step decay exponent: 2 eps^2 n for the right groups and the k = 1
// left case, 2 eps^2 n / (1 + eps^2) for left groups with k >= 2.
Rational discrete_step_arg(unsigned long n, unsigned long k, bool right) {
  const mpz_class kk = mpz_class(k) * k;
  Rational arg = right || k == 1
                     ? Rational(2 * kk, mpz_class(n))
                     : Rational(2 * kk * n, mpz_class(n) * n + kk);
  arg.canonicalize();
  return arg;
}

Rational bernoulli_step_arg(const BernoulliGrid& grid) {
  Rational arg(2 * grid.k, grid.r + grid.s);
  arg.canonicalize();
  return arg;
}

VerificationReport median_report(unsigned long n, unsigned long m,
                                 const Rational& p, std::string config) {
  require_upper_half(n, m);
  const WeightTable table(n, p);
  const RationalProb strict_tail =
      table.range_mass(static_cast<long>(m) + 1, static_cast<long>(n));
  const RationalProb weak_tail =
      table.range_mass(static_cast<long>(m), static_cast<long>(n));
  VerificationReport rep;
  rep.config = std::move(config);
  TailVsBound row;
  row.label = "median-strict";
  row.tail = strict_tail;
  row.bound = 0.5;
  row.verdict = strict_tail.value() < Rational(1, 2) ? Verdict::pass
                                                     : Verdict::fail;
  row.margin = (0.5 - strict_tail.to_double()) / 0.5;
  count_verdict(rep, row.verdict);
  rep.tail_checks.push_back(std::move(row));
  if (weak_tail.value() > Rational(1, 2)) {
    rep.note = "weak tail " + weak_tail.to_fraction_string() +
               " exceeds 1/2; only the strict form holds";
  }
  return rep;
}

}  // namespace

VerificationReport check_right_decay(const BernoulliGrid& grid,
                                     const VerifySettings& settings) {
  const WeightTable table(grid.n(), grid.p());
  const Enclosure factor =
      enclose_exp(bernoulli_step_arg(grid), settings.precision_bits);
  return decay_report(table, grid.m(), grid.k, true, factor,
                      grid.id() + "/right", true, nullptr);
}

VerificationReport check_right_decay(const DiscreteGrid& grid,
                                     const VerifySettings& settings) {
  require_upper_half(grid.n, grid.m);
  const WeightTable table(grid.n, grid.p());
  const Enclosure factor = enclose_exp(discrete_step_arg(grid.n, grid.k, true),
                                       settings.precision_bits);
  return decay_report(table, grid.m, grid.k, true, factor,
                      grid.id() + "/right", true, nullptr);
}

VerificationReport check_left_decay(const BernoulliGrid& grid,
                                    const VerifySettings& settings) {
  const WeightTable table(grid.n(), grid.p());
  const Enclosure factor =
      enclose_exp(bernoulli_step_arg(grid), settings.precision_bits);
  return decay_report(table, grid.m(), grid.k, false, factor,
                      grid.id() + "/left", true, nullptr);
}

VerificationReport check_left_decay(const DiscreteGrid& grid,
                                    const VerifySettings& settings) {
  require_upper_half(grid.n, grid.m);
  const WeightTable table(grid.n, grid.p());
  const Enclosure factor = enclose_exp(
      discrete_step_arg(grid.n, grid.k, false), settings.precision_bits);
  return decay_report(table, grid.m, grid.k, false, factor,
                      grid.id() + "/left", true, nullptr);
}

VerificationReport check_tail_bound(const BernoulliGrid& grid,
                                    const VerifySettings& settings) {
  const WeightTable table(grid.n(), grid.p());
  const RationalProb tail =
      tail_probability(table, grid.eps(), Side::two, Boundary::strict);
  Rational arg(mpz_class(-2) * grid.k, mpz_class(grid.r + grid.s));
  arg.canonicalize();
  const Enclosure bound = enclose_exp(arg, settings.precision_bits);
  VerificationReport rep;
  rep.config = grid.id() + "/tail";
  TailVsBound row;
  row.label = "tail";
  row.tail = tail;
  row.bound = bound.midpoint();
  row.verdict = certify_le(tail.value(), bound);
  row.margin = row.bound > 0 ? (row.bound - tail.to_double()) / row.bound
                             : 0.0;
  count_verdict(rep, row.verdict);
  rep.tail_checks.push_back(std::move(row));
  return rep;
}

VerificationReport check_tail_bound(const DiscreteGrid& grid,
                                    const VerifySettings& settings) {
  if (grid.k < 2) {
    throw RegimeError(
        "the discrete tail bound needs at least two lattice steps of "
        "deviation (n eps >= 2)");
  }
  if (2 * grid.m < grid.n) {
    throw RegimeError(
        "the discrete tail bound needs p >= 1/2; relabel successes as "
        "failures (X -> 1-X) for smaller p");
  }
  const WeightTable table(grid.n, grid.p());
  const RationalProb tail =
      tail_probability(table, grid.eps(), Side::two, Boundary::strict);
  const mpz_class kk = mpz_class(grid.k) * grid.k;
  Rational arg(-2 * kk * grid.n, mpz_class(grid.n) * grid.n + kk);
  arg.canonicalize();
  const Enclosure bound = enclose_exp(arg, settings.precision_bits);
  VerificationReport rep;
  rep.config = grid.id() + "/tail";
  TailVsBound row;
  row.label = "tail";
  row.tail = tail;
  row.bound = bound.midpoint();
  row.verdict = certify_le(tail.value(), bound);
  row.margin = row.bound > 0 ? (row.bound - tail.to_double()) / row.bound
                             : 0.0;
  count_verdict(rep, row.verdict);
  rep.tail_checks.push_back(std::move(row));
  return rep;
}

std::vector<CollapseRow> check_exponent_collapse(
    const std::vector<unsigned long>& n_list, const Rational& p_in) {
  Rational p = p_in;
  p.canonicalize();
  if (p <= 0 || p >= 1) {
    throw std::domain_error("p must lie strictly between 0 and 1");
  }
  const RationalProb p_prob(p);
  const double pd = p.get_d();
  const double log_f = pd * std::log(pd) + (1.0 - pd) * std::log1p(pd);
  std::vector<CollapseRow> rows;
  rows.reserve(n_list.size());
  for (const unsigned long n : n_list) {
    if (n < 1) {
      throw std::domain_error("n must be a natural number");
    }
    CollapseRow row;
    row.n = n;
    row.eps = Rational(1, 2 * n);
    // Lattice points within eps of p: |j - np| <= 1/2.
    const Rational np = p * mpz_class(n);
    const Rational lo = np - Rational(1, 2);
    const Rational hi = np + Rational(1, 2);
    mpz_class jlo, jhi;
    mpz_cdiv_q(jlo.get_mpz_t(), mpq_numref(lo.get_mpq_t()),
               mpq_denref(lo.get_mpq_t()));
    mpz_fdiv_q(jhi.get_mpz_t(), mpq_numref(hi.get_mpq_t()),
               mpq_denref(hi.get_mpq_t()));
    if (jlo < 0) {
      jlo = 0;
    }
    if (jhi > n) {
      jhi = n;
    }
    Rational center(0);
    unsigned long points = 0;
    for (mpz_class j = jlo; j <= jhi; ++j) {
      center += binomial_pmf(n, j.get_ui(), p_prob).value();
      ++points;
    }
    row.center_mass = RationalProb(center);
    row.deviation = RationalProb(Rational(1) - center);
    row.eps_sq_n = 1.0 / (4.0 * static_cast<double>(n));
    row.lattice_clear = points == 1;
    row.center_mass_bound = std::exp(static_cast<double>(n) * log_f);
    row.center_bound_holds = std::log(row.center_mass.to_double()) <=
                             static_cast<double>(n) * log_f;
    rows.push_back(std::move(row));
  }
  return rows;
}

VerificationReport check_one_sided(const BernoulliGrid& grid,
                                   unsigned long nu,
                                   const VerifySettings& settings) {
  if (nu < 1) {
    throw std::domain_error("nu must be a natural number");
  }
  const WeightTable table(grid.n(), grid.p());
  Rational delta(nu, grid.r + grid.s);
  delta.canonicalize();
  const mpz_class num = mpz_class(grid.k) * nu * nu * (grid.r + grid.s);
  Rational arg(-num, mpz_class(2) * grid.r * grid.s);
  arg.canonicalize();
  const Enclosure twice_bound = enclose_exp(arg, settings.precision_bits);
  VerificationReport rep;
  rep.config = grid.id() + "/nu=" + std::to_string(nu);
  const auto add_side = [&](Side side, const std::string& label) {
    const RationalProb tail =
        tail_probability(table, delta, side, Boundary::strict);
    TailVsBound row;
    row.label = label;
    row.tail = tail;
    row.bound = 0.5 * twice_bound.midpoint();
    row.verdict = certify_le(Rational(2) * tail.value(), twice_bound);
    row.margin = row.bound > 0 ? (row.bound - tail.to_double()) / row.bound
                               : 0.0;
    count_verdict(rep, row.verdict);
    rep.tail_checks.push_back(std::move(row));
  };
  if (grid.r >= grid.s) {
    add_side(Side::upper, "one-sided-upper");
  }
  if (grid.s >= grid.r) {
    add_side(Side::lower, "one-sided-lower");
  }
  return rep;
}

VerificationReport check_median(const BernoulliGrid& grid,
                                const VerifySettings&) {
  return median_report(grid.n(), grid.m(), grid.p(), grid.id() + "/median");
}

VerificationReport check_median(const DiscreteGrid& grid,
                                const VerifySettings&) {
  return median_report(grid.n, grid.m, grid.p(), grid.id() + "/median");
}

Verdict check_curvature_probe(CurvatureKind kind, CurvatureProbe probe,
                              unsigned long n,
                              const VerifySettings& settings) {
  if (n < 1) {
    throw std::domain_error("n must be a natural number");
  }
  const bool probe_is_convex =
      probe == CurvatureProbe::reciprocal || probe == CurvatureProbe::neg_log;
  if (probe_is_convex != (kind == CurvatureKind::convex)) {
    throw std::invalid_argument(
        "probe curvature does not match the requested kind");
  }
  switch (probe) {
    case CurvatureProbe::reciprocal: {
      // sum 1/j >= n * 2/(n+1), exact.
      Rational lhs(0);
      for (unsigned long j = 1; j <= n; ++j) {
        lhs += Rational(1, j);
      }
      Rational rhs(2 * n, n + 1);
      rhs.canonicalize();
      return lhs >= rhs ? Verdict::pass : Verdict::fail;
    }
    case CurvatureProbe::neg_log: {
      // sum -log j >= -n log((n+1)/2), i.e. 2^n n! <= (n+1)^n, exact.
      mpz_class lhs;
      mpz_fac_ui(lhs.get_mpz_t(), n);
      mpz_class shifted;
      mpz_mul_2exp(shifted.get_mpz_t(), lhs.get_mpz_t(), n);
      mpz_class rhs;
      mpz_ui_pow_ui(rhs.get_mpz_t(), n + 1, n);
      return shifted <= rhs ? Verdict::pass : Verdict::fail;
    }
    case CurvatureProbe::log: {
      // log n! >= (n/2) log n, i.e. (n!)^2 >= n^n, exact.
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), n);
      mpz_class rhs;
      mpz_ui_pow_ui(rhs.get_mpz_t(), n, n);
      return fact * fact >= rhs ? Verdict::pass : Verdict::fail;
    }
    case CurvatureProbe::sqrt: {
      // sum sqrt(j) >= n (1 + sqrt(n))/2, directed rounding.
      if (n <= 2) {
        // The sum is exactly the endpoint average (n = 1: sqrt(1) vs 1;
        // n = 2: sqrt(1) + sqrt(2) on both sides); intervals cannot
        // separate an identity, so settle it structurally.
        return Verdict::pass;
      }
      const mpfr_prec_t prec = settings.precision_bits;
      MpfrFloat sum_lo(prec), sum_hi(prec), term(prec);
      mpfr_set_ui(sum_lo.get(), 0, MPFR_RNDD);
      mpfr_set_ui(sum_hi.get(), 0, MPFR_RNDU);
      for (unsigned long j = 1; j <= n; ++j) {
        mpfr_sqrt_ui(term.get(), j, MPFR_RNDD);
        mpfr_add(sum_lo.get(), sum_lo.get(), term.get(), MPFR_RNDD);
        mpfr_sqrt_ui(term.get(), j, MPFR_RNDU);
        mpfr_add(sum_hi.get(), sum_hi.get(), term.get(), MPFR_RNDU);
      }
      MpfrFloat rhs_hi(prec), rhs_lo(prec);
      mpfr_sqrt_ui(rhs_hi.get(), n, MPFR_RNDU);
      mpfr_add_ui(rhs_hi.get(), rhs_hi.get(), 1, MPFR_RNDU);
      mpfr_mul_ui(rhs_hi.get(), rhs_hi.get(), n, MPFR_RNDU);
      mpfr_div_2ui(rhs_hi.get(), rhs_hi.get(), 1, MPFR_RNDU);
      mpfr_sqrt_ui(rhs_lo.get(), n, MPFR_RNDD);
      mpfr_add_ui(rhs_lo.get(), rhs_lo.get(), 1, MPFR_RNDD);
      mpfr_mul_ui(rhs_lo.get(), rhs_lo.get(), n, MPFR_RNDD);
      mpfr_div_2ui(rhs_lo.get(), rhs_lo.get(), 1, MPFR_RNDD);
      if (mpfr_cmp(sum_lo.get(), rhs_hi.get()) >= 0) {
        return Verdict::pass;
      }
      if (mpfr_cmp(sum_hi.get(), rhs_lo.get()) < 0) {
        return Verdict::fail;
      }
      return Verdict::inconclusive;
    }
  }
  throw std::logic_error("unknown curvature probe");
}

VerificationReport check_log_lower_bound(const VerifySettings& settings) {
  VerificationReport rep;
  rep.config = "log-lower/delta=i/10,i=0..1000";
  for (unsigned long i = 0; i <= 1000; ++i) {
    Rational rhs(2 * i, 20 + i);
    rhs.canonicalize();
    RatioCheck check;
    check.j = i;
    check.label = "log-lower";
    check.lhs = rhs;
    if (i == 0) {
      // Equality at zero: log(1 + 0) = 0 = 2*0/(2+0).
      check.required = 0.0;
      check.verdict = Verdict::pass;
      check.margin = 0.0;
    } else {
      Rational delta(i, 10);
      delta.canonicalize();
      const Enclosure enc = enclose_log1p(delta, settings.precision_bits);
      check.required = enc.midpoint();
      check.verdict = certify_le(rhs, enc);
      check.margin = (check.required - rhs.get_d()) / check.required;
    }
    count_verdict(rep, check.verdict);
    rep.checks.push_back(std::move(check));
  }
  return rep;
}

std::vector<NormalizedLimitRow> check_normalized_limit(
    double p, double t, const std::vector<unsigned long>& n_list) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("p must lie strictly between 0 and 1");
  }
  if (!(t >= 0.0)) {
    throw std::domain_error("t must be nonnegative");
  }
  std::vector<NormalizedLimitRow> rows;
  rows.reserve(n_list.size());
  for (const unsigned long n : n_list) {
    NormalizedLimitRow row;
    row.n = n;
    row.eps = t * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    row.sharp = bernoulli_sharp_bound(n, row.eps).value;
    row.general_discrete = general_discrete_bound(n, row.eps).value;
    row.hoeffding = hoeffding_bound(n, row.eps).value;
    try {
      row.continuous = continuous_bound(n, p, row.eps).value;
    } catch (const RegimeError&) {
      row.continuous = std::nullopt;
    }
    row.limit = normalized_sum_bound(t, p);
    rows.push_back(row);
  }
  return rows;
}

SweepSummary sweep_bernoulli_decay(unsigned long kmax, unsigned long rsmax,
                                   const VerifySettings& settings) {
  SweepSummary sum;
  std::map<std::pair<unsigned long, unsigned long>, Enclosure> factors;
  for (unsigned long k = 1; k <= kmax; ++k) {
    for (unsigned long r = 1; r <= rsmax; ++r) {
      for (unsigned long s = 1; s <= rsmax; ++s) {
        const BernoulliGrid grid(k, r, s);
        const auto key = std::make_pair(k, r + s);
        auto it = factors.find(key);
        if (it == factors.end()) {
          it = factors
                   .try_emplace(key, enclose_exp(bernoulli_step_arg(grid),
                                                 settings.precision_bits))
                   .first;
        }
        const WeightTable table(grid.n(), grid.p());
        for (const bool right : {true, false}) {
          VerificationReport rep = decay_report(
              table, grid.m(), grid.k, right, it->second,
              grid.id() + (right ? "/right" : "/left"), false, &sum);
          ++sum.configs;
          if (rep.vacuous) {
            ++sum.vacuous;
          }
          if (rep.fail_count > 0 || rep.inconclusive_count > 0) {
            push_offender(sum, std::move(rep));
          }
        }
      }
    }
  }
  sort_offenders(sum);
  return sum;
}

SweepSummary sweep_discrete_decay(unsigned long nmax,
                                  const VerifySettings& settings) {
  return striped_over_n(
      2, nmax, settings.jobs, [&settings](SweepSummary& sum, unsigned long n) {
        std::map<unsigned long, Enclosure> right_factors;
        std::map<unsigned long, Enclosure> left_factors;
        for (unsigned long m = (n + 1) / 2; m < n; ++m) {
          const WeightTable table(n, Rational(m, n));
          for (unsigned long k = 1; k < n; ++k) {
            auto rit = right_factors.find(k);
            if (rit == right_factors.end()) {
              rit = right_factors
                        .try_emplace(k,
                                     enclose_exp(discrete_step_arg(n, k, true),
                                                 settings.precision_bits))
                        .first;
            }
            auto lit = left_factors.find(k);
            if (lit == left_factors.end()) {
              lit = left_factors
                        .try_emplace(
                            k, enclose_exp(discrete_step_arg(n, k, false),
                                           settings.precision_bits))
                        .first;
            }
            const DiscreteGrid grid(n, m, k);
            for (const bool right : {true, false}) {
              VerificationReport rep = decay_report(
                  table, m, k, right, right ? rit->second : lit->second,
                  grid.id() + (right ? "/right" : "/left"), false, &sum);
              ++sum.configs;
              if (rep.vacuous) {
                ++sum.vacuous;
              }
              if (rep.fail_count > 0 || rep.inconclusive_count > 0) {
                push_offender(sum, std::move(rep));
              }
            }
          }
        }
      });
}

SweepSummary sweep_bernoulli_tail_bounds(unsigned long kmax,
                                         unsigned long rsmax,
                                         const VerifySettings& settings) {
  SweepSummary sum;
  for (unsigned long k = 1; k <= kmax; ++k) {
    for (unsigned long r = 1; r <= rsmax; ++r) {
      for (unsigned long s = 1; s <= rsmax; ++s) {
        absorb_report(sum,
                      check_tail_bound(BernoulliGrid(k, r, s), settings));
      }
    }
  }
  sort_offenders(sum);
  return sum;
}

SweepSummary sweep_discrete_tail_bounds(unsigned long nmax,
                                        const VerifySettings& settings) {
  return striped_over_n(
      3, nmax, settings.jobs, [&settings](SweepSummary& sum, unsigned long n) {
        std::map<unsigned long, Enclosure> bounds;
        for (unsigned long m = (n + 1) / 2; m < n; ++m) {
          const WeightTable table(n, Rational(m, n));
          for (unsigned long k = 2; k < n; ++k) {
            auto it = bounds.find(k);
            if (it == bounds.end()) {
              const mpz_class kk = mpz_class(k) * k;
              Rational arg(-2 * kk * n, mpz_class(n) * n + kk);
              arg.canonicalize();
              it = bounds
                       .try_emplace(k,
                                    enclose_exp(arg, settings.precision_bits))
                       .first;
            }
            const mpz_class w =
                table.range_weight(0, static_cast<long>(m) -
                                          static_cast<long>(k) - 1) +
                table.range_weight(static_cast<long>(m + k + 1),
                                   static_cast<long>(n));
            ++sum.configs;
            const Verdict v = certify_weighted_le(w, it->second,
                                                  table.total());
            bump(sum.tail_pass, sum.tail_fail, sum.tail_inconclusive, v);
            if (v != Verdict::pass) {
              const DiscreteGrid grid(n, m, k);
              VerificationReport rep;
              rep.config = grid.id() + "/tail";
              TailVsBound row;
              row.label = "tail";
              row.tail = RationalProb(w, table.total());
              row.bound = it->second.midpoint();
              row.verdict = v;
              row.margin = row.bound > 0 ? (row.bound - row.tail.to_double()) /
                                               row.bound
                                         : 0.0;
              count_verdict(rep, v);
              rep.tail_checks.push_back(std::move(row));
              push_offender(sum, std::move(rep));
            }
          }
        }
      });
}

SweepSummary sweep_one_sided(unsigned long kmax, unsigned long rsmax,
                             const VerifySettings& settings) {
  SweepSummary sum;
  for (unsigned long k = 1; k <= kmax; ++k) {
    for (unsigned long r = 1; r <= rsmax; ++r) {
      for (unsigned long s = 1; s <= r; ++s) {
        for (unsigned long nu = 1; nu <= s; ++nu) {
          absorb_report(
              sum, check_one_sided(BernoulliGrid(k, r, s), nu, settings));
        }
      }
    }
  }
  sort_offenders(sum);
  return sum;
}

SweepSummary sweep_median(unsigned long kmax, unsigned long rsmax,
                          const VerifySettings& settings) {
  SweepSummary sum;
  for (unsigned long k = 1; k <= kmax; ++k) {
    for (unsigned long r = 1; r <= rsmax; ++r) {
      for (unsigned long s = 1; s <= r; ++s) {
        absorb_report(sum, check_median(BernoulliGrid(k, r, s), settings));
      }
    }
  }
  sort_offenders(sum);
  return sum;
}

}  // namespace bernbound
