#include "bernbound/samplesize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bernbound {

namespace {

constexpr double kEpsRelTol = 1e-12;

void check_target(double target) {
  if (!(target > 0.0 && target < 1.0)) {
    throw std::domain_error("target must lie strictly between 0 and 1");
  }
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("eps must lie strictly between 0 and 1");
  }
}

double require_p(const std::optional<double>& p, BoundFamily family) {
  if (!p.has_value()) {
    throw std::domain_error("the " + family_name(family) + " bound needs p");
  }
  if (!(*p > 0.0 && *p < 1.0)) {
    throw std::domain_error("p must lie strictly between 0 and 1");
  }
  return *p;
}

BoundValue eval_family(BoundFamily family, unsigned long n, double eps,
                       const std::optional<double>& p) {
  switch (family) {
    case BoundFamily::uspensky:
      return uspensky_bound(n, eps);
    case BoundFamily::hoeffding:
      return hoeffding_bound(n, eps);
    case BoundFamily::bernoulli_sharp:
      return bernoulli_sharp_bound(n, eps);
    case BoundFamily::general_discrete:
      return general_discrete_bound(n, eps);
    case BoundFamily::continuous_corrected:
      return continuous_bound(n, require_p(p, family), eps);
    case BoundFamily::one_sided_half:
      return one_sided_bound(n, require_p(p, family), eps);
    default:
      break;
  }
  throw std::domain_error("the " + family_name(family) +
                          " bound has no (n, eps) form to invert");
}

// Smallest n the family admits at this eps; the continuous bound needs
// n * eps > 1.
unsigned long smallest_admissible_n(BoundFamily family, double eps) {
  if (family == BoundFamily::continuous_corrected) {
    return static_cast<unsigned long>(
               std::floor(snap_to_integer(1.0 / eps))) +
           1;
  }
  return 1;
}

unsigned long closed_form_n(BoundFamily family, double eps, double target,
                            const std::optional<double>& p) {
  const double e2 = eps * eps;
  double raw = 0.0;
  switch (family) {
    case BoundFamily::uspensky:
      raw = std::log(2.0 / target) / (0.5 * e2);
      break;
    case BoundFamily::hoeffding:
      raw = std::log(2.0 / target) / (2.0 * e2);
      break;
    case BoundFamily::bernoulli_sharp:
      raw = std::log(1.0 / target) / (2.0 * e2);
      break;
    case BoundFamily::general_discrete:
      raw = std::log(1.0 / target) * (1.0 + e2) / (2.0 * e2);
      break;
    case BoundFamily::one_sided_half: {
      const double pp = require_p(p, family);
      raw = 2.0 * pp * (1.0 - pp) * std::log(0.5 / target) / e2;
      break;
    }
    default:
      throw std::logic_error("no closed form for this family");
  }
  if (!(raw > 1.0)) {
    return 1;
  }
  return static_cast<unsigned long>(std::ceil(snap_to_integer(raw)));
}

// Smallest n with value(n) <= target, given value decreasing in n and
// value(lo) > target.
template <typename ValueFn>
unsigned long bisect_min_n(const ValueFn& value, double target,
                           unsigned long lo) {
  unsigned long bad = lo;
  unsigned long good = 0;
  unsigned long hi = lo;
  for (int step = 0; step < 62 && good == 0; ++step) {
    hi *= 2;
    if (value(hi) <= target) {
      good = hi;
    } else {
      bad = hi;
    }
  }
  if (good == 0) {
    throw RegimeError("no sample size within the search range meets the "
                      "target");
  }
  while (good - bad > 1) {
    const unsigned long mid = bad + (good - bad) / 2;
    if (value(mid) <= target) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

}  // namespace

PlanResult min_n(double eps, double target, BoundFamily family,
                 std::optional<double> p, bool force_bisection) {
  check_eps(eps);
  check_target(target);
  if (family == BoundFamily::classical_bernoulli ||
      family == BoundFamily::normalized_asymptotic) {
    throw std::domain_error("the " + family_name(family) +
                            " bound has no (n, eps) form to invert");
  }
  const auto value = [&](unsigned long n) {
    return eval_family(family, n, eps, p).value;
  };
  const unsigned long lo = smallest_admissible_n(family, eps);
  unsigned long n = 0;
  if (family == BoundFamily::continuous_corrected || force_bisection) {
    if (family == BoundFamily::continuous_corrected) {
      require_p(p, family);
    }
    n = value(lo) <= target ? lo : bisect_min_n(value, target, lo);
  } else {
    n = std::max(closed_form_n(family, eps, target, p), lo);
    while (value(n) > target) {
      ++n;
    }
    while (n > lo && value(n - 1) <= target) {
      --n;
    }
  }
  PlanResult result;
  result.family = family;
  result.n_min = n;
  const BoundValue bv = eval_family(family, n, eps, p);
  result.achieved_bound = bv.value;
  result.certified = bv.certified;
  if (n == lo) {
    result.note = lo > 1
                      ? "smaller sample sizes fall outside the bound's "
                        "regime (n eps <= 1)"
                      : "the bound meets the target at the smallest sample "
                        "size";
  }
  return result;
}

PlanResult min_eps(unsigned long n, double target, BoundFamily family,
                   std::optional<double> p) {
  if (n < 1) {
    throw std::domain_error("n must be a natural number");
  }
  check_target(target);
  PlanResult result;
  result.family = family;
  const double nd = static_cast<double>(n);
  double eps = 0.0;
  switch (family) {
    case BoundFamily::uspensky:
      eps = std::sqrt(2.0 * std::log(2.0 / target) / nd);
      break;
    case BoundFamily::hoeffding:
      eps = std::sqrt(std::log(2.0 / target) / (2.0 * nd));
      break;
    case BoundFamily::bernoulli_sharp:
      eps = std::sqrt(std::log(1.0 / target) / (2.0 * nd));
      break;
    case BoundFamily::general_discrete: {
      const double x = std::log(1.0 / target) / (2.0 * nd);
      if (x >= 1.0) {
        throw RegimeError(
            "the target lies at or below the bound's infimum exp(-2n) at "
            "this sample size; no eps reaches it");
      }
      eps = std::sqrt(x / (1.0 - x));
      break;
    }
    case BoundFamily::one_sided_half: {
      const double pp = require_p(p, family);
      const double level = std::log(0.5 / target);
      if (level <= 0.0) {
        result.eps_min = 0.0;
        result.achieved_bound = 0.5;
        result.certified = false;
        result.note =
            "the bound equals 1/2 at zero deviation; every deviation "
            "level meets the target";
        return result;
      }
      eps = std::sqrt(2.0 * pp * (1.0 - pp) * level / nd);
      break;
    }
    case BoundFamily::continuous_corrected: {
      const double pp = require_p(p, family);
      const double hi = std::min(pp, 1.0 - pp);
      if (!(1.0 / nd < hi)) {
        throw RegimeError(
            "the bound's regime is empty at this sample size "
            "(1/n >= min(p, 1-p))");
      }
      const auto value = [&](double e) {
        return continuous_bound(n, pp, e).value;
      };
      if (value(hi) > target) {
        throw RegimeError(
            "the target cannot be met within the bound's regime "
            "(eps <= min(p, 1-p)) at this sample size");
      }
      double a = 1.0 / nd;  // exclusive: the bound diverges as n eps -> 1
      double b = hi;
      while (b - a > kEpsRelTol * b) {
        const double mid = 0.5 * (a + b);
        if (value(mid) <= target) {
          b = mid;
        } else {
          a = mid;
        }
      }
      eps = b;
      break;
    }
    default:
      throw std::domain_error("the " + family_name(family) +
                              " bound has no (n, eps) form to invert");
  }
  // The closed forms are exact inverses up to float rounding; nudge past
  // a boundary miss of a few ulps so achieved_bound <= target holds.
  for (int i = 0; i < 4 && eval_family(family, n, eps, p).value > target;
       ++i) {
    eps *= 1.0 + 1e-13;
  }
  result.eps_min = eps;
  const BoundValue bv = eval_family(family, n, eps, p);
  result.achieved_bound = bv.value;
  result.certified = bv.certified;
  if (eps >= 1.0) {
    result.note =
        "the formal solution is >= 1, beyond any feasible deviation of a "
        "[0,1]-valued mean";
  }
  return result;
}

PlanResult plan(const PlanQuery& query) {
  if (query.eps.has_value() == query.n.has_value()) {
    throw std::invalid_argument(
        "exactly one of eps and n must be given: eps to solve for n, or n "
        "to solve for eps");
  }
  return query.eps.has_value()
             ? min_n(*query.eps, query.target, query.family, query.p)
             : min_eps(*query.n, query.target, query.family, query.p);
}

namespace {

const BoundFamily kInvertibleFamilies[] = {
    BoundFamily::uspensky,           BoundFamily::hoeffding,
    BoundFamily::bernoulli_sharp,    BoundFamily::general_discrete,
    BoundFamily::continuous_corrected, BoundFamily::one_sided_half,
};

bool family_needs_p(BoundFamily family) {
  return family == BoundFamily::continuous_corrected ||
         family == BoundFamily::one_sided_half;
}

}  // namespace

std::vector<PlanResult> best_family_by_value(unsigned long n, double eps,
                                             std::optional<double> p) {
  std::vector<PlanResult> out;
  for (const BoundFamily family : kInvertibleFamilies) {
    if (family_needs_p(family) && !p.has_value()) {
      continue;
    }
    try {
      const BoundValue bv = eval_family(family, n, eps, p);
      PlanResult result;
      result.family = family;
      result.achieved_bound = bv.value;
      result.certified = bv.certified;
      out.push_back(std::move(result));
    } catch (const RegimeError&) {
      continue;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PlanResult& a, const PlanResult& b) {
                     return a.achieved_bound < b.achieved_bound;
                   });
  return out;
}

std::vector<PlanResult> best_family_by_min_n(double eps, double target,
                                             std::optional<double> p) {
  std::vector<PlanResult> out;
  for (const BoundFamily family : kInvertibleFamilies) {
    if (family_needs_p(family) && !p.has_value()) {
      continue;
    }
    try {
      out.push_back(min_n(eps, target, family, p));
    } catch (const RegimeError&) {
      continue;
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PlanResult& a, const PlanResult& b) {
                     return a.n_min.value_or(0) < b.n_min.value_or(0);
                   });
  return out;
}

}  // namespace bernbound
