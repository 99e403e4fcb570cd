#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bernbound/bounds.hpp"

namespace bernbound {

// A planning question: exactly one of {eps, n} is the unknown. p is
// required by the families whose bound depends on it (continuous,
// one-sided) and ignored elsewhere.
struct PlanQuery {
  std::optional<double> eps;
  std::optional<unsigned long> n;
  double target = 0.0;
  BoundFamily family = BoundFamily::hoeffding;
  std::optional<double> p;
};

struct PlanResult {
  BoundFamily family = BoundFamily::hoeffding;
  std::optional<unsigned long> n_min;
  std::optional<double> eps_min;
  double achieved_bound = 0.0;
  bool certified = false;  // (n, eps) lies in the family's proven regime
  std::string note;
};

// Smallest natural n with bound(n, eps) <= target; a tie at the target
// satisfies it. Closed-form ceiling plus a direct-evaluation fixup for
// Uspensky/Hoeffding/sharp/general-discrete and the one-sided bound;
// integer bisection with a doubling bracket for the continuous bound,
// whose correction factor itself depends on n. force_bisection routes a
// closed-form family through the bisection path instead (the two must
// agree). Requires 0 < eps < 1 and 0 < target < 1.
PlanResult min_n(double eps, double target, BoundFamily family,
                 std::optional<double> p = std::nullopt,
                 bool force_bisection = false);

// Smallest eps with bound(n, eps) <= target, to relative tolerance 1e-12.
// Closed form where the bound is elementary, bisection for the continuous
// bound. Requires n >= 1 and 0 < target < 1.
PlanResult min_eps(unsigned long n, double target, BoundFamily family,
                   std::optional<double> p = std::nullopt);

// Dispatches to min_n or min_eps depending on which field is the unknown.
PlanResult plan(const PlanQuery& query);

// Families evaluated at fixed (n, eps), ranked by bound value, smallest
// first. Value ties keep the declaration order of BoundFamily. Families
// needing p are included only when p is given and the point lies in their
// regime.
std::vector<PlanResult> best_family_by_value(
    unsigned long n, double eps, std::optional<double> p = std::nullopt);

// Families ranked by minimal sample size for the target, smallest first.
std::vector<PlanResult> best_family_by_min_n(
    double eps, double target, std::optional<double> p = std::nullopt);

}  // namespace bernbound
