#pragma once

#include <optional>
#include <string>
#include <utility>

#include "bernbound/grids.hpp"
#include "bernbound/rational.hpp"

namespace bernbound {

enum class BoundFamily {
  classical_bernoulli,
  uspensky,
  hoeffding,
  bernoulli_sharp,
  general_discrete,
  continuous_corrected,
  one_sided_half,
  normalized_asymptotic,
};

// CLI token for a family ("hoeffding", "general-discrete", ...).
std::string family_name(BoundFamily family);
BoundFamily parse_family(const std::string& token);

// Evaluated bound. For the alpha/beta families,
// value = alpha * exp(-beta * eps^2 * n); a vacuous value above 1 is
// representable. `certified` records whether the inputs satisfy the
// family's proven regime; outside it the value is a heuristic extension.
struct BoundValue {
  BoundFamily family = BoundFamily::hoeffding;
  std::optional<double> alpha;
  std::optional<double> beta;
  double value = 0.0;
  bool certified = false;
};

// Both branches of the classical min bound, the exact xi exponents, and
// the simplified variant that replaces each xi with n*eps^2.
struct ClassicalBoundParams {
  Rational xi1;  // (k(r+1)+s)/(r+s+1)
  Rational xi2;  // (k(s+1)+r)/(r+s+1)
  double branch_left = 0.0;   // (1/(s-1)) ((r+1)/r)^xi1
  double branch_right = 0.0;  // (1/(r-1)) ((s+1)/s)^xi2
  double C = 0.0;             // min of the branches
  double C_simplified = 0.0;
  double value_simplified = 0.0;  // 1/(1 + C_simplified)
};

// Deviation level at which the general-discrete bound stops improving on
// Hoeffding's at sample size n.
struct CrossoverResult {
  unsigned long n = 0;
  double phi = 0.0;         // log(2) / (2n)
  double mu = 0.0;          // crossover deviation
  double mu_squared = 0.0;  // phi/2 + sqrt(phi (1 + phi/4))
};

// Classical bound 1/(1+C) on the lattice p = r/(r+s), n = k(r+s),
// eps = 1/(r+s). Needs r >= 2 and s >= 2 so neither branch denominator
// vanishes.
std::pair<ClassicalBoundParams, BoundValue> classical_bernoulli_bound(
    unsigned long k, unsigned long r, unsigned long s);

// 2 exp(-0.5 eps^2 n).
BoundValue uspensky_bound(unsigned long n, double eps);

// 2 exp(-2 eps^2 n).
BoundValue hoeffding_bound(unsigned long n, double eps);

// exp(-2 eps^2 n); certified on lattices n = k(r+s), eps = 1/(r+s).
BoundValue bernoulli_sharp_bound(unsigned long n, double eps);

// exp(-2 eps^2 n / (1+eps^2)); certified when n*eps is an integer k with
// 2 <= k < n (the tail-side condition p >= 1/2 is the caller's concern).
BoundValue general_discrete_bound(unsigned long n, double eps);

// Lattice-rounding correction factor phi(n, eps); the continuous-case
// bound multiplies by exp(eps * phi). Requires n*eps > 1.
double phi_correction(unsigned long n, double eps);

// exp(eps * phi(n, eps) - 2 eps^2 n / (1+eps^2)) for arbitrary real p and
// eps with 0 < p < 1 and 1/n < eps <= min(p, 1-p); violations raise
// RegimeError.
BoundValue continuous_bound(unsigned long n, double p, double eps);

// 0.5 exp(-n delta^2 / (2 p (1-p))); applies to the upper deviation when
// p >= 1/2 and to the lower when p <= 1/2. Certified when (n, p, delta)
// fit a lattice p = r/(r+s), n = k(r+s), delta = nu/(r+s), natural nu.
BoundValue one_sided_bound(unsigned long n, double p, double delta);

// Limit bound exp(-2 t^2 p (1-p)) for the normalized deviation
// t = eps sqrt(n / (p(1-p))); stated for 0 <= t <= 1.
double normalized_sum_bound(double t, double p);

CrossoverResult crossover_epsilon(unsigned long n);

// 2 delta / (2 + delta), a lower bound of log(1 + delta) for delta >= 0.
double log1p_lower(double delta);

}  // namespace bernbound
