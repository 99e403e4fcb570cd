#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bernbound/binomial.hpp"
#include "bernbound/bounds.hpp"
#include "bernbound/enclosure.hpp"
#include "bernbound/grids.hpp"
#include "bernbound/rational.hpp"
#include "bernbound/report.hpp"
#include "bernbound/samplesize.hpp"
#include "bernbound/verify.hpp"

namespace bernbound::cli {

namespace {

struct CommonFlags {
  std::string format;
  std::string out;
  long precision_bits = 128;
  int digits = 6;
};

void add_common_flags(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--format", flags.format, "output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", flags.out, "write the output to this file instead of stdout");
  sub->add_option("--precision-bits", flags.precision_bits,
                  "working precision for certified enclosures, in bits")
      ->check(CLI::PositiveNumber);
  sub->add_option("--digits", flags.digits, "decimal digits for printed probabilities")
      ->check(CLI::Range(1, 50));
}

std::string fixed(double v, int digits) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string general(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string flag_text(bool b) { return b ? "true" : "false"; }

void stamp_defaults(OutputRecord& rec, const CommonFlags& flags) {
  rec.metadata["precision_bits"] = std::to_string(flags.precision_bits);
  rec.metadata["boundary_default"] = "strict";
  rec.metadata["exact_backend_threshold"] = std::to_string(kDefaultExactBackendThreshold);
  rec.metadata["digits"] = std::to_string(flags.digits);
}

void emit(OutputRecord& rec, const CommonFlags& flags, OutputFormat fallback) {
  stamp_defaults(rec, flags);
  const OutputFormat fmt = flags.format.empty() ? fallback : parse_format(flags.format);
  write_output(rec, fmt, flags.out);
}

Side parse_side(const std::string& token) {
  if (token == "two") return Side::two;
  if (token == "upper") return Side::upper;
  if (token == "lower") return Side::lower;
  throw std::invalid_argument("side must be one of: two, upper, lower");
}

Boundary parse_boundary(const std::string& token) {
  if (token == "strict") return Boundary::strict;
  if (token == "weak") return Boundary::weak;
  throw std::invalid_argument("boundary must be one of: strict, weak");
}

// ---------------------------------------------------------------------------
// bound: evaluate one bound family at a point
// ---------------------------------------------------------------------------

struct BoundArgs {
  std::string family;
  std::optional<unsigned long> n;
  std::string eps;
  std::optional<double> p;
  std::optional<double> t;
  std::optional<unsigned long> k;
  std::optional<unsigned long> r;
  std::optional<unsigned long> s;
};

int cmd_bound(const BoundArgs& args, const CommonFlags& flags) {
  const BoundFamily family = parse_family(args.family);
  OutputRecord rec;
  rec.command = "bound";
  std::map<std::string, std::string> row;
  row["family"] = family_name(family);

  double eps = 0.0;
  if (!args.eps.empty()) {
    eps = parse_rational(args.eps).get_d();
    rec.metadata["eps_input"] = args.eps;
  }

  if (family == BoundFamily::classical_bernoulli) {
    if (!args.k || !args.r || !args.s)
      throw std::invalid_argument("the classical family takes lattice parameters --k, --r and --s");
    const auto [params, value] = classical_bernoulli_bound(*args.k, *args.r, *args.s);
    const BernoulliGrid grid(*args.k, *args.r, *args.s);
    rec.columns = {"family",       "k",           "r",
                   "s",            "n",           "eps",
                   "xi1",          "xi2",         "branch_left",
                   "branch_right", "C",           "value",
                   "C_simplified", "value_simplified", "certified"};
    row["k"] = std::to_string(*args.k);
    row["r"] = std::to_string(*args.r);
    row["s"] = std::to_string(*args.s);
    row["n"] = std::to_string(grid.n());
    row["eps"] = general(grid.eps().get_d());
    row["xi1"] = params.xi1.get_str();
    row["xi2"] = params.xi2.get_str();
    row["branch_left"] = general(params.branch_left);
    row["branch_right"] = general(params.branch_right);
    row["C"] = general(params.C);
    row["value"] = fixed(value.value, flags.digits);
    row["C_simplified"] = general(params.C_simplified);
    row["value_simplified"] = fixed(params.value_simplified, flags.digits);
    row["certified"] = flag_text(value.certified);
    rec.rows.push_back(std::move(row));
    emit(rec, flags, OutputFormat::csv);
    return 0;
  }

  if (family == BoundFamily::normalized_asymptotic) {
    if (!args.t || !args.p)
      throw std::invalid_argument("the normalized family takes --t and --p");
    const double value = normalized_sum_bound(*args.t, *args.p);
    rec.columns = {"family", "t", "p", "value", "certified"};
    row["t"] = general(*args.t);
    row["p"] = general(*args.p);
    row["value"] = fixed(value, flags.digits);
    row["certified"] = flag_text(false);
    rec.rows.push_back(std::move(row));
    emit(rec, flags, OutputFormat::csv);
    return 0;
  }

  if (!args.n || args.eps.empty())
    throw std::invalid_argument("this family takes --n and --eps");

  BoundValue value;
  switch (family) {
    case BoundFamily::uspensky:
      value = uspensky_bound(*args.n, eps);
      break;
    case BoundFamily::hoeffding:
      value = hoeffding_bound(*args.n, eps);
      break;
    case BoundFamily::bernoulli_sharp:
      value = bernoulli_sharp_bound(*args.n, eps);
      break;
    case BoundFamily::general_discrete:
      value = general_discrete_bound(*args.n, eps);
      break;
    case BoundFamily::continuous_corrected:
      if (!args.p) throw std::invalid_argument("the continuous family takes --p");
      value = continuous_bound(*args.n, *args.p, eps);
      break;
    case BoundFamily::one_sided_half:
      if (!args.p) throw std::invalid_argument("the one-sided family takes --p");
      value = one_sided_bound(*args.n, *args.p, eps);
      break;
    default:
      throw std::invalid_argument("unhandled family");
  }

  rec.columns = {"family", "n", "eps", "p", "alpha", "beta", "value", "certified"};
  row["n"] = std::to_string(*args.n);
  row["eps"] = general(eps);
  row["p"] = args.p ? general(*args.p) : "";
  row["alpha"] = value.alpha ? general(*value.alpha) : "";
  row["beta"] = value.beta ? general(*value.beta) : "";
  row["value"] = fixed(value.value, flags.digits);
  row["certified"] = flag_text(value.certified);
  rec.rows.push_back(std::move(row));
  emit(rec, flags, OutputFormat::csv);
  return 0;
}

// ---------------------------------------------------------------------------
// table1: printed-probability table for n = 33, m = 15
// ---------------------------------------------------------------------------

int cmd_table1(const CommonFlags& flags) {
  OutputRecord rec;
  rec.command = "table1";
  rec.columns = {"eps", "probability", "general_discrete_bound", "hoeffding_bound"};
  rec.metadata["n"] = "33";
  rec.metadata["m"] = "15";
  rec.metadata["boundary"] = "weak";
  rec.metadata["note"] = "probability of a deviation of at least eps from 15/33";

  const WeightTable table(33, Rational(15, 33));
  for (unsigned long k = 2; k <= 15; ++k) {
    const Rational eps(static_cast<long>(k), 33);
    const RationalProb prob = tail_probability(table, eps, Side::two, Boundary::weak);
    const double eps_d = eps.get_d();
    std::map<std::string, std::string> row;
    row["eps"] = rational_to_decimal(eps, 4);
    row["probability"] = fixed(prob.to_double(), flags.digits);
    row["general_discrete_bound"] = fixed(general_discrete_bound(33, eps_d).value, flags.digits);
    row["hoeffding_bound"] = fixed(hoeffding_bound(33, eps_d).value, flags.digits);
    rec.rows.push_back(std::move(row));
  }
  emit(rec, flags, OutputFormat::csv);
  return 0;
}

// ---------------------------------------------------------------------------
// table2: the correction factor exp(eps * phi(n, eps)) on a small grid
// ---------------------------------------------------------------------------

int cmd_table2(const CommonFlags& flags) {
  OutputRecord rec;
  rec.command = "table2";
  const std::vector<double> eps_values = {0.02, 0.05, 0.1, 0.2, 0.3, 0.35};
  const std::vector<unsigned long> n_values = {100, 1000, 100000};
  rec.columns = {"n"};
  for (const double e : eps_values) rec.columns.push_back(general(e));
  rec.metadata["cell"] = "exp(eps * phi(n, eps))";

  for (const unsigned long n : n_values) {
    std::map<std::string, std::string> row;
    row["n"] = std::to_string(n);
    for (const double e : eps_values)
      row[general(e)] = fixed(std::exp(e * phi_correction(n, e)), 4);
    rec.rows.push_back(std::move(row));
  }
  emit(rec, flags, OutputFormat::csv);
  return 0;
}

// ---------------------------------------------------------------------------
// figure-data: plot-ready series
// ---------------------------------------------------------------------------

struct FigureArgs {
  std::string panel;
};

int cmd_figure_data(const FigureArgs& args, const CommonFlags& flags) {
  OutputRecord rec;
  rec.command = "figure-data";
  rec.metadata["panel"] = args.panel;

  if (args.panel == "a") {
    // f(p) = p^p (1+p)^(1-p), continuously extended to f(0) = 1.
    rec.columns = {"p", "f"};
    for (int i = 0; i <= 100; ++i) {
      const double p = i / 100.0;
      const double f =
          (i == 0) ? 1.0 : std::exp(p * std::log(p) + (1.0 - p) * std::log1p(p));
      std::map<std::string, std::string> row;
      row["p"] = fixed(p, 2);
      row["f"] = fixed(f, flags.digits);
      rec.rows.push_back(std::move(row));
    }
  } else if (args.panel == "b" || args.panel == "d") {
    const unsigned long n = (args.panel == "b") ? 20 : 100;
    rec.metadata["n"] = std::to_string(n);
    rec.columns = {"eps", "general_discrete", "hoeffding"};
    for (int i = 1; i <= 50; ++i) {
      const double eps = i / 100.0;
      std::map<std::string, std::string> row;
      row["eps"] = fixed(eps, 2);
      row["general_discrete"] = fixed(general_discrete_bound(n, eps).value, flags.digits);
      row["hoeffding"] = fixed(hoeffding_bound(n, eps).value, flags.digits);
      rec.rows.push_back(std::move(row));
    }
  } else if (args.panel == "c") {
    rec.columns = {"n", "mu", "scaled_mu"};
    rec.metadata["scaled_mu"] = "n^(1/4) * mu(n)";
    const std::vector<unsigned long> n_values = {2,    3,     5,      10,      20,       33,
                                                 50,   100,   200,    500,     1000,     10000,
                                                 100000, 1000000, 10000000, 100000000};
    for (const unsigned long n : n_values) {
      const CrossoverResult cross = crossover_epsilon(n);
      std::map<std::string, std::string> row;
      row["n"] = std::to_string(n);
      row["mu"] = general(cross.mu);
      row["scaled_mu"] = general(std::pow(static_cast<double>(n), 0.25) * cross.mu);
      rec.rows.push_back(std::move(row));
    }
  } else {
    throw std::invalid_argument("panel must be one of: a, b, c, d");
  }
  emit(rec, flags, OutputFormat::csv);
  return 0;
}

// ---------------------------------------------------------------------------
// tail: exact or log-domain deviation probability
// ---------------------------------------------------------------------------

struct TailArgs {
  unsigned long n = 0;
  std::string p;
  std::string eps;
  std::string side = "two";
  std::string boundary = "strict";
  unsigned long threshold = kDefaultExactBackendThreshold;
};

int cmd_tail(const TailArgs& args, const CommonFlags& flags) {
  const Rational p = parse_rational(args.p);
  const Rational eps = parse_rational(args.eps);
  const Side side = parse_side(args.side);
  const Boundary boundary = parse_boundary(args.boundary);

  OutputRecord rec;
  rec.command = "tail";
  rec.columns = {"n",           "p",        "eps",
                 "side",        "boundary", "probability",
                 "probability_rational", "log_probability", "backend"};
  rec.metadata["exact_backend_threshold"] = std::to_string(args.threshold);

  std::map<std::string, std::string> row;
  row["n"] = std::to_string(args.n);
  row["p"] = p.get_str();
  row["eps"] = eps.get_str();
  row["side"] = args.side;
  row["boundary"] = args.boundary;

  if (args.n <= args.threshold) {
    const WeightTable table(args.n, p);
    const RationalProb prob = tail_probability(table, eps, side, boundary);
    row["probability"] = prob.to_decimal(flags.digits);
    row["probability_rational"] = prob.to_fraction_string();
    row["log_probability"] = "";
    row["backend"] = "exact";
  } else {
    const double log_tail =
        tail_probability_log(args.n, p.get_d(), eps.get_d(), side, boundary);
    row["probability"] = general(std::exp(log_tail));
    row["probability_rational"] = "";
    row["log_probability"] = general(log_tail);
    row["backend"] = "log";
  }
  rec.rows.push_back(std::move(row));
  emit(rec, flags, OutputFormat::csv);
  return 0;
}

// ---------------------------------------------------------------------------
// decompose: group decomposition of the deviation tail
// ---------------------------------------------------------------------------

struct DecomposeArgs {
  std::optional<unsigned long> k;
  std::optional<unsigned long> r;
  std::optional<unsigned long> s;
  std::optional<unsigned long> n;
  std::optional<unsigned long> m;
};

int cmd_decompose(const DecomposeArgs& args, const CommonFlags& flags) {
  OutputRecord rec;
  rec.command = "decompose";
  rec.columns = {"group", "mass", "mass_rational"};

  GroupDecomposition dec = [&] {
    if (args.r && args.s) {
      if (!args.k)
        throw std::invalid_argument("the lattice form takes --k together with --r and --s");
      const BernoulliGrid grid(*args.k, *args.r, *args.s);
      rec.metadata["config"] = grid.id();
      return group_decomposition(grid);
    }
    if (args.n && args.m) {
      if (!args.k)
        throw std::invalid_argument("the direct form takes --k together with --n and --m");
      const DiscreteGrid grid(*args.n, *args.m, *args.k);
      rec.metadata["config"] = grid.id();
      return group_decomposition(grid);
    }
    throw std::invalid_argument(
        "decompose takes either --k --r --s (lattice form) or --n --m --k (direct form)");
  }();

  auto push = [&](const std::string& name, const RationalProb& mass) {
    std::map<std::string, std::string> row;
    row["group"] = name;
    row["mass"] = mass.to_decimal(flags.digits);
    row["mass_rational"] = mass.to_fraction_string();
    rec.rows.push_back(std::move(row));
  };

  push("p0", dec.p0);
  for (std::size_t j = 0; j < dec.left.size(); ++j)
    push("S" + std::to_string(j + 1), dec.left[j]);
  if (dec.left_terminal) push("S-terminal", *dec.left_terminal);
  for (std::size_t j = 0; j < dec.right.size(); ++j)
    push("Z" + std::to_string(j + 1), dec.right[j]);
  if (dec.right_terminal) push("Z-terminal", *dec.right_terminal);

  rec.metadata["total"] = dec.total().to_fraction_string();
  emit(rec, flags, OutputFormat::csv);
  return 0;
}

// ---------------------------------------------------------------------------
// samplesize: invert a bound for planning
// ---------------------------------------------------------------------------

struct SampleSizeArgs {
  std::string family;
  std::string eps;
  std::optional<unsigned long> n;
  std::optional<double> target;
  std::optional<double> p;
  bool rank = false;
  bool force_bisection = false;
};

void push_plan_row(OutputRecord& rec, const PlanResult& result, int digits,
                   std::optional<std::size_t> rank) {
  std::map<std::string, std::string> row;
  if (rank) row["rank"] = std::to_string(*rank);
  row["family"] = family_name(result.family);
  row["n_min"] = result.n_min ? std::to_string(*result.n_min) : "";
  row["eps_min"] = result.eps_min ? general(*result.eps_min) : "";
  row["achieved_bound"] = general(result.achieved_bound);
  row["certified"] = flag_text(result.certified);
  row["note"] = result.note;
  rec.rows.push_back(std::move(row));
  (void)digits;
}

int cmd_samplesize(const SampleSizeArgs& args, const CommonFlags& flags) {
  OutputRecord rec;
  rec.command = "samplesize";

  if (args.rank) {
    std::vector<PlanResult> ranked;
    if (args.n && !args.eps.empty()) {
      ranked = best_family_by_value(*args.n, parse_rational(args.eps).get_d(), args.p);
      rec.metadata["rank_mode"] = "by-value";
    } else if (!args.eps.empty() && args.target) {
      ranked = best_family_by_min_n(parse_rational(args.eps).get_d(), *args.target, args.p);
      rec.metadata["rank_mode"] = "by-min-n";
    } else {
      throw std::invalid_argument(
          "ranking takes either --n with --eps (rank by value) or --eps with --target "
          "(rank by minimal n)");
    }
    rec.columns = {"rank", "family", "n_min", "eps_min", "achieved_bound", "certified", "note"};
    for (std::size_t i = 0; i < ranked.size(); ++i)
      push_plan_row(rec, ranked[i], flags.digits, i + 1);
    emit(rec, flags, OutputFormat::csv);
    return 0;
  }

  if (args.family.empty())
    throw std::invalid_argument("--family is required unless --rank is given");
  if (!args.target) throw std::invalid_argument("--target is required");

  PlanQuery query;
  query.family = parse_family(args.family);
  query.target = *args.target;
  if (!args.eps.empty()) query.eps = parse_rational(args.eps).get_d();
  if (args.n) query.n = *args.n;
  query.p = args.p;

  PlanResult result =
      (query.eps && args.force_bisection)
          ? min_n(*query.eps, query.target, query.family, query.p, true)
          : plan(query);
  rec.columns = {"family", "n_min", "eps_min", "achieved_bound", "certified", "note"};
  push_plan_row(rec, result, flags.digits, std::nullopt);
  rec.metadata["target"] = general(*args.target);
  emit(rec, flags, OutputFormat::csv);
  return 0;
}

// ---------------------------------------------------------------------------
// verify: certified check suites
// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  unsigned long kmax = 3;
  unsigned long rsmax = 8;
  unsigned long nmax = 40;
  unsigned jobs = 1;
  bool strict = false;
  bool table1 = false;
};

const std::vector<std::string>& verify_columns() {
  static const std::vector<std::string> columns = {
      "row_type",        "suite",
      "configs",         "vacuous",
      "ratio_pass",      "ratio_fail",
      "ratio_inconclusive", "terminal_pass",
      "terminal_fail",   "terminal_inconclusive",
      "consequence_pass", "consequence_fail",
      "consequence_inconclusive", "tail_pass",
      "tail_fail",       "tail_inconclusive",
      "config",          "label",
      "j",               "lhs",
      "required",        "verdict",
      "margin",          "note"};
  return columns;
}

struct VerifyTally {
  unsigned long fails = 0;
  unsigned long inconclusive = 0;
};

void push_summary_row(OutputRecord& rec, const std::string& suite, const SweepSummary& sum) {
  std::map<std::string, std::string> row;
  row["row_type"] = "summary";
  row["suite"] = suite;
  row["configs"] = std::to_string(sum.configs);
  row["vacuous"] = std::to_string(sum.vacuous);
  row["ratio_pass"] = std::to_string(sum.ratio_pass);
  row["ratio_fail"] = std::to_string(sum.ratio_fail);
  row["ratio_inconclusive"] = std::to_string(sum.ratio_inconclusive);
  row["terminal_pass"] = std::to_string(sum.terminal_pass);
  row["terminal_fail"] = std::to_string(sum.terminal_fail);
  row["terminal_inconclusive"] = std::to_string(sum.terminal_inconclusive);
  row["consequence_pass"] = std::to_string(sum.consequence_pass);
  row["consequence_fail"] = std::to_string(sum.consequence_fail);
  row["consequence_inconclusive"] = std::to_string(sum.consequence_inconclusive);
  row["tail_pass"] = std::to_string(sum.tail_pass);
  row["tail_fail"] = std::to_string(sum.tail_fail);
  row["tail_inconclusive"] = std::to_string(sum.tail_inconclusive);
  rec.rows.push_back(std::move(row));
}

void push_check_row(OutputRecord& rec, const std::string& config, const RatioCheck& check) {
  std::map<std::string, std::string> row;
  row["row_type"] = "offender";
  row["config"] = config;
  row["label"] = check.label;
  row["j"] = std::to_string(check.j);
  row["lhs"] = general(check.lhs.get_d());
  row["required"] = general(check.required);
  row["verdict"] = verdict_name(check.verdict);
  row["margin"] = general(check.margin);
  rec.rows.push_back(std::move(row));
}

void push_tail_row(OutputRecord& rec, const std::string& config, const std::string& label,
                   double tail, double bound, Verdict verdict, double margin,
                   const char* row_type) {
  std::map<std::string, std::string> row;
  row["row_type"] = row_type;
  row["config"] = config;
  row["label"] = label;
  row["lhs"] = general(tail);
  row["required"] = general(bound);
  row["verdict"] = verdict_name(verdict);
  row["margin"] = general(margin);
  rec.rows.push_back(std::move(row));
}

void absorb_summary(VerifyTally& tally, OutputRecord& rec, const std::string& suite,
                    const SweepSummary& sum) {
  push_summary_row(rec, suite, sum);
  tally.fails += sum.ratio_fail + sum.terminal_fail + sum.consequence_fail + sum.tail_fail;
  tally.inconclusive += sum.ratio_inconclusive + sum.terminal_inconclusive +
                        sum.consequence_inconclusive + sum.tail_inconclusive;
  for (const VerificationReport& rep : sum.offenders) {
    for (const RatioCheck& check : rep.checks)
      if (check.verdict != Verdict::pass) push_check_row(rec, rep.config, check);
    for (const TailVsBound& check : rep.tail_checks)
      if (check.verdict != Verdict::pass)
        push_tail_row(rec, rep.config, check.label, check.tail.to_double(), check.bound,
                      check.verdict, check.margin, "offender");
  }
  if (sum.offenders_truncated) rec.metadata["offenders_truncated"] = "true";
}

void absorb_report(VerifyTally& tally, OutputRecord& rec, const VerificationReport& rep,
                   const std::string& suite) {
  SweepSummary sum;
  sum.configs = 1;
  sum.ratio_pass = rep.pass_count;
  sum.ratio_fail = rep.fail_count;
  sum.ratio_inconclusive = rep.inconclusive_count;
  push_summary_row(rec, suite, sum);
  tally.fails += rep.fail_count;
  tally.inconclusive += rep.inconclusive_count;
  for (const RatioCheck& check : rep.checks)
    if (check.verdict != Verdict::pass) push_check_row(rec, rep.config, check);
  if (!rep.note.empty()) rec.metadata["note"] = rep.note;
}

void run_table1_tail_checks(VerifyTally& tally, OutputRecord& rec,
                            const VerifySettings& settings, int /*digits*/) {
  // The printed n = 33, m = 15 grid has p < 1/2; two-sided tails are invariant
  // under relabeling successes as failures, so the checks run on the mirrored
  // m = 18 grid.
  rec.metadata["note"] =
      "rows use the m = 18 mirror of the m = 15 table; two-sided tails agree under X -> 1 - X";
  const WeightTable printed(33, Rational(15, 33));
  SweepSummary sum;
  for (unsigned long k = 2; k <= 15; ++k) {
    const DiscreteGrid mirrored(33, 18, k);
    const VerificationReport rep = check_tail_bound(mirrored, settings);
    sum.configs += 1;
    for (const TailVsBound& check : rep.tail_checks) {
      if (check.verdict == Verdict::pass)
        sum.tail_pass += 1;
      else if (check.verdict == Verdict::fail)
        sum.tail_fail += 1;
      else
        sum.tail_inconclusive += 1;
      push_tail_row(rec, rep.config, "tail-strict", check.tail.to_double(), check.bound,
                    check.verdict, check.margin, "detail");
    }
    // The printed probabilities are weak tails; they must also sit below the
    // same exponential value.
    const Rational eps(static_cast<long>(k), 33);
    Rational arg(-2 * static_cast<long>(k * k) * 33, 33 * 33 + static_cast<long>(k * k));
    arg.canonicalize();
    const Enclosure bound = enclose_exp(arg, settings.precision_bits);
    const RationalProb weak = tail_probability(printed, eps, Side::two, Boundary::weak);
    const Verdict verdict = certify_le(weak.value(), bound);
    if (verdict == Verdict::pass)
      sum.tail_pass += 1;
    else if (verdict == Verdict::fail)
      sum.tail_fail += 1;
    else
      sum.tail_inconclusive += 1;
    const double bound_mid = bound.midpoint();
    const double weak_margin =
        bound_mid > 0 ? (bound_mid - weak.to_double()) / bound_mid : 0.0;
    push_tail_row(rec, "discrete(n=33,m=15,k=" + std::to_string(k) + ")", "tail-weak",
                  weak.to_double(), bound_mid, verdict, weak_margin, "detail");
  }
  push_summary_row(rec, "tail-bounds", sum);
  tally.fails += sum.tail_fail;
  tally.inconclusive += sum.tail_inconclusive;
}

int cmd_verify(const VerifyArgs& args, const CommonFlags& flags) {
  VerifySettings settings;
  settings.precision_bits = static_cast<mpfr_prec_t>(flags.precision_bits);
  settings.jobs = args.jobs;

  OutputRecord rec;
  rec.command = "verify";
  rec.columns = verify_columns();
  rec.metadata["suite"] = args.suite;
  rec.metadata["kmax"] = std::to_string(args.kmax);
  rec.metadata["rsmax"] = std::to_string(args.rsmax);
  rec.metadata["nmax"] = std::to_string(args.nmax);
  rec.metadata["jobs"] = std::to_string(args.jobs);

  VerifyTally tally;

  if (args.suite == "bernoulli-decay") {
    absorb_summary(tally, rec, args.suite,
                   sweep_bernoulli_decay(args.kmax, args.rsmax, settings));
  } else if (args.suite == "discrete-decay") {
    absorb_summary(tally, rec, args.suite, sweep_discrete_decay(args.nmax, settings));
  } else if (args.suite == "tail-bounds") {
    if (args.table1) {
      run_table1_tail_checks(tally, rec, settings, flags.digits);
    } else {
      absorb_summary(tally, rec, "tail-bounds/bernoulli",
                     sweep_bernoulli_tail_bounds(args.kmax, args.rsmax, settings));
      absorb_summary(tally, rec, "tail-bounds/discrete",
                     sweep_discrete_tail_bounds(args.nmax, settings));
    }
  } else if (args.suite == "one-sided") {
    absorb_summary(tally, rec, args.suite, sweep_one_sided(args.kmax, args.rsmax, settings));
  } else if (args.suite == "median") {
    absorb_summary(tally, rec, args.suite, sweep_median(args.kmax, args.rsmax, settings));
  } else if (args.suite == "curvature") {
    struct ProbeEntry {
      CurvatureKind kind;
      CurvatureProbe probe;
      const char* name;
    };
    const ProbeEntry probes[] = {
        {CurvatureKind::convex, CurvatureProbe::reciprocal, "reciprocal"},
        {CurvatureKind::convex, CurvatureProbe::neg_log, "neg_log"},
        {CurvatureKind::concave, CurvatureProbe::log, "log"},
        {CurvatureKind::concave, CurvatureProbe::sqrt, "sqrt"},
    };
    for (const ProbeEntry& entry : probes) {
      SweepSummary sum;
      for (unsigned long n = 1; n <= args.nmax; ++n) {
        const Verdict verdict = check_curvature_probe(entry.kind, entry.probe, n, settings);
        sum.configs += 1;
        if (verdict == Verdict::pass)
          sum.ratio_pass += 1;
        else if (verdict == Verdict::fail)
          sum.ratio_fail += 1;
        else
          sum.ratio_inconclusive += 1;
      }
      push_summary_row(rec, std::string("curvature/") + entry.name, sum);
      tally.fails += sum.ratio_fail;
      tally.inconclusive += sum.ratio_inconclusive;
    }
  } else if (args.suite == "log-lower") {
    absorb_report(tally, rec, check_log_lower_bound(settings), args.suite);
  } else if (args.suite == "collapse") {
    const std::vector<unsigned long> n_values = {10, 100, 1000, 10000};
    const std::vector<CollapseRow> points =
        check_exponent_collapse(n_values, Rational(1, 2));
    std::optional<Rational> previous;
    SweepSummary sum;
    for (const CollapseRow& point : points) {
      sum.configs += 1;
      std::map<std::string, std::string> row;
      row["row_type"] = "detail";
      row["suite"] = args.suite;
      row["config"] = "collapse(n=" + std::to_string(point.n) + ",p=1/2)";
      row["label"] = "deviation";
      row["lhs"] = point.deviation.to_decimal(flags.digits);
      row["required"] = previous ? rational_to_decimal(*previous, flags.digits) : "";
      row["note"] = std::string("eps_sq_n=") + general(point.eps_sq_n) +
                    ", lattice_clear=" + (point.lattice_clear ? "true" : "false") +
                    ", center_bound_holds=" + (point.center_bound_holds ? "true" : "false");
      const bool monotone = !previous || point.deviation.value() >= *previous;
      row["verdict"] = monotone ? "pass" : "fail";
      if (monotone)
        sum.ratio_pass += 1;
      else
        sum.ratio_fail += 1;
      previous = point.deviation.value();
      rec.rows.push_back(std::move(row));
    }
    push_summary_row(rec, args.suite, sum);
    tally.fails += sum.ratio_fail;
    rec.metadata["note"] =
        "deviation at eps = 1/(2n) must be non-decreasing in n even though eps^2 n vanishes";
  } else if (args.suite == "limit") {
    const std::vector<unsigned long> n_values = {100, 1000, 10000, 100000, 1000000};
    for (const NormalizedLimitRow& point : check_normalized_limit(0.5, 1.0, n_values)) {
      std::map<std::string, std::string> row;
      row["row_type"] = "detail";
      row["suite"] = args.suite;
      row["config"] = "limit(n=" + std::to_string(point.n) + ",p=0.5,t=1)";
      row["lhs"] = general(point.sharp);
      row["required"] = general(point.limit);
      row["note"] = "general_discrete=" + general(point.general_discrete) +
                    (point.continuous ? ", continuous=" + general(*point.continuous) : "") +
                    ", hoeffding=" + general(point.hoeffding);
      rec.rows.push_back(std::move(row));
    }
    rec.metadata["note"] = "informational: normalized bounds approaching exp(-t^2/2)";
  } else {
    throw std::invalid_argument(
        "suite must be one of: bernoulli-decay, discrete-decay, tail-bounds, one-sided, "
        "median, curvature, log-lower, collapse, limit");
  }

  rec.metadata["fail_total"] = std::to_string(tally.fails);
  rec.metadata["inconclusive_total"] = std::to_string(tally.inconclusive);
  rec.metadata["result"] =
      tally.fails > 0 ? "fail" : (tally.inconclusive > 0 ? "inconclusive" : "pass");
  emit(rec, flags, OutputFormat::json);
  if (tally.fails > 0) return 1;
  if (tally.inconclusive > 0 && args.strict) return 3;
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"exact binomial deviation probabilities, exponential tail bounds, "
               "certified checks and sample-size planning"};
  app.require_subcommand(1);

  CommonFlags common;
  if (const char* env = std::getenv("BERNBOUND_PRECISION_BITS")) {
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || bits <= 0) {
      std::cerr << "error: BERNBOUND_PRECISION_BITS must be a positive integer\n";
      return 2;
    }
    common.precision_bits = bits;
  }

  int exit_code = 0;

  const std::vector<std::string> family_tokens = {
      "classical-bernoulli", "uspensky",   "hoeffding", "sharp",
      "general-discrete",    "continuous", "one-sided", "normalized"};

  BoundArgs bound_args;
  CLI::App* bound = app.add_subcommand("bound", "evaluate one bound family at a point");
  add_common_flags(bound, common);
  bound->add_option("--family", bound_args.family, "bound family")
      ->required()
      ->check(CLI::IsMember(family_tokens));
  bound->add_option("--n", bound_args.n, "number of trials");
  bound->add_option("--eps", bound_args.eps, "deviation from the mean (decimal or a/b)");
  bound->add_option("--p", bound_args.p, "success probability");
  bound->add_option("--t", bound_args.t, "normalized deviation");
  bound->add_option("--k", bound_args.k, "deviation step count");
  bound->add_option("--r", bound_args.r, "success weight");
  bound->add_option("--s", bound_args.s, "failure weight");
  bound->callback([&] { exit_code = cmd_bound(bound_args, common); });

  CLI::App* table1 = app.add_subcommand(
      "table1", "deviation probabilities and bounds for 33 trials at p = 15/33");
  add_common_flags(table1, common);
  table1->callback([&] { exit_code = cmd_table1(common); });

  CLI::App* table2 =
      app.add_subcommand("table2", "correction factor exp(eps * phi(n, eps)) on a grid");
  add_common_flags(table2, common);
  table2->callback([&] { exit_code = cmd_table2(common); });

  FigureArgs figure_args;
  CLI::App* figure = app.add_subcommand("figure-data", "plot-ready data series");
  add_common_flags(figure, common);
  figure->add_option("--panel", figure_args.panel, "series to emit (a, b, c or d)")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c", "d"}));
  figure->callback([&] { exit_code = cmd_figure_data(figure_args, common); });

  TailArgs tail_args;
  CLI::App* tail = app.add_subcommand("tail", "deviation probability for a binomial mean");
  add_common_flags(tail, common);
  tail->add_option("--n", tail_args.n, "number of trials")->required();
  tail->add_option("--p", tail_args.p, "success probability (decimal or a/b)")->required();
  tail->add_option("--eps", tail_args.eps, "deviation from the mean (decimal or a/b)")
      ->required();
  tail->add_option("--side", tail_args.side, "tail side")
      ->check(CLI::IsMember({"two", "upper", "lower"}));
  tail->add_option("--boundary", tail_args.boundary,
                   "strict excludes deviations equal to eps, weak includes them")
      ->check(CLI::IsMember({"strict", "weak"}));
  tail->add_option("--exact-threshold", tail_args.threshold,
                   "largest n computed with exact rational arithmetic");
  tail->callback([&] { exit_code = cmd_tail(tail_args, common); });

  DecomposeArgs decompose_args;
  CLI::App* decompose =
      app.add_subcommand("decompose", "group decomposition of the deviation tail");
  add_common_flags(decompose, common);
  decompose->add_option("--k", decompose_args.k, "group width / deviation step count");
  decompose->add_option("--r", decompose_args.r, "success weight (lattice form)");
  decompose->add_option("--s", decompose_args.s, "failure weight (lattice form)");
  decompose->add_option("--n", decompose_args.n, "number of trials (direct form)");
  decompose->add_option("--m", decompose_args.m, "success count at the center (direct form)");
  decompose->callback([&] { exit_code = cmd_decompose(decompose_args, common); });

  SampleSizeArgs samplesize_args;
  CLI::App* samplesize =
      app.add_subcommand("samplesize", "invert a bound for sample-size planning");
  add_common_flags(samplesize, common);
  samplesize->add_option("--family", samplesize_args.family, "bound family to invert")
      ->check(CLI::IsMember(
          {"uspensky", "hoeffding", "sharp", "general-discrete", "continuous", "one-sided"}));
  samplesize->add_option("--eps", samplesize_args.eps,
                         "deviation from the mean (decimal or a/b)");
  samplesize->add_option("--n", samplesize_args.n, "number of trials");
  samplesize->add_option("--target", samplesize_args.target, "bound value to reach");
  samplesize->add_option("--p", samplesize_args.p, "success probability");
  samplesize->add_flag("--rank", samplesize_args.rank, "rank every invertible family");
  samplesize->add_flag("--force-bisection", samplesize_args.force_bisection,
                       "search for the minimal n instead of using the closed form");
  samplesize->callback([&] { exit_code = cmd_samplesize(samplesize_args, common); });

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run a certified check suite");
  add_common_flags(verify, common);
  verify->add_option("--suite", verify_args.suite, "check suite to run")->required();
  verify->add_option("--kmax", verify_args.kmax, "largest deviation step count");
  verify->add_option("--rsmax", verify_args.rsmax, "largest success/failure weight");
  verify->add_option("--nmax", verify_args.nmax, "largest number of trials");
  verify->add_option("--jobs", verify_args.jobs, "worker threads for sweeps");
  verify->add_flag("--strict", verify_args.strict,
                   "treat inconclusive verdicts as a failure (exit 3)");
  verify->add_flag("--table1", verify_args.table1,
                   "check the printed n = 33 table rows (tail-bounds suite only)");
  verify->callback([&] { exit_code = cmd_verify(verify_args, common); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const RegimeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

}  // namespace bernbound::cli
