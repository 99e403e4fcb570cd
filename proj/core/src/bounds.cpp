#include "bernbound/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "bernbound/binomial.hpp"

namespace bernbound {

namespace {

void require_positive_n(unsigned long n) {
  if (n < 1) {
    throw std::domain_error("n must be a natural number");
  }
}

void require_nonnegative_eps(double eps) {
  if (!(eps >= 0.0)) {
    throw std::domain_error("eps must be nonnegative");
  }
}

// True when eps is (up to snapping) 1/(r+s) for a natural r+s >= 2 that
// divides n, so the sharp lattice structure exists.
bool sharp_lattice_fits(unsigned long n, double eps) {
  if (!(eps > 0.0)) {
    return false;
  }
  const double d = snap_to_integer(1.0 / eps);
  if (d != std::floor(d) || d < 2.0 || d > static_cast<double>(n)) {
    return false;
  }
  return n % static_cast<unsigned long>(d) == 0;
}

// True when n*eps is (up to snapping) an integer k with 2 <= k < n.
bool discrete_lattice_fits(unsigned long n, double eps) {
  const double k = snap_to_integer(static_cast<double>(n) * eps);
  return k == std::floor(k) && k >= 2.0 && k < static_cast<double>(n);
}

// True when some divisor d of n gives natural r = p*d, s = d - r and
// nu = delta*d with r, s, nu >= 1.
bool one_sided_lattice_fits(unsigned long n, double p, double delta) {
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) {
      continue;
    }
    for (unsigned long div : {d, n / d}) {
      const double r = snap_to_integer(p * static_cast<double>(div));
      const double nu = snap_to_integer(delta * static_cast<double>(div));
      if (r == std::floor(r) && nu == std::floor(nu) && r >= 1.0 &&
          nu >= 1.0 && r <= static_cast<double>(div) - 1.0) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string family_name(BoundFamily family) {
  switch (family) {
    case BoundFamily::classical_bernoulli:
      return "classical-bernoulli";
    case BoundFamily::uspensky:
      return "uspensky";
    case BoundFamily::hoeffding:
      return "hoeffding";
    case BoundFamily::bernoulli_sharp:
      return "sharp";
    case BoundFamily::general_discrete:
      return "general-discrete";
    case BoundFamily::continuous_corrected:
      return "continuous";
    case BoundFamily::one_sided_half:
      return "one-sided";
    case BoundFamily::normalized_asymptotic:
      return "normalized";
  }
  throw std::logic_error("unknown bound family");
}

BoundFamily parse_family(const std::string& token) {
  for (BoundFamily family :
       {BoundFamily::classical_bernoulli, BoundFamily::uspensky,
        BoundFamily::hoeffding, BoundFamily::bernoulli_sharp,
        BoundFamily::general_discrete, BoundFamily::continuous_corrected,
        BoundFamily::one_sided_half, BoundFamily::normalized_asymptotic}) {
    if (family_name(family) == token) {
      return family;
    }
  }
  throw std::invalid_argument("unknown bound family: " + token);
}

std::pair<ClassicalBoundParams, BoundValue> classical_bernoulli_bound(
    unsigned long k, unsigned long r, unsigned long s) {
  if (k < 1 || r < 1 || s < 1) {
    throw std::domain_error("grid parameters must be natural numbers");
  }
  if (s < 2) {
    throw std::domain_error(
        "classical bound needs s >= 2: the branch denominator s-1 vanishes");
  }
  if (r < 2) {
    throw std::domain_error(
        "classical bound needs r >= 2: the branch denominator r-1 vanishes");
  }
  ClassicalBoundParams params;
  params.xi1 = Rational(k * (r + 1) + s, r + s + 1);
  params.xi2 = Rational(k * (s + 1) + r, r + s + 1);
  params.xi1.canonicalize();
  params.xi2.canonicalize();
  const double rd = static_cast<double>(r);
  const double sd = static_cast<double>(s);
  params.branch_left =
      1.0 / (sd - 1.0) * std::pow((rd + 1.0) / rd, params.xi1.get_d());
  params.branch_right =
      1.0 / (rd - 1.0) * std::pow((sd + 1.0) / sd, params.xi2.get_d());
  params.C = std::min(params.branch_left, params.branch_right);
  // Simplified variant: both exponents floored to n*eps^2 = k/(r+s).
  const double ne2 = static_cast<double>(k) / static_cast<double>(r + s);
  params.C_simplified =
      std::min(1.0 / (sd - 1.0) * std::pow((rd + 1.0) / rd, ne2),
               1.0 / (rd - 1.0) * std::pow((sd + 1.0) / sd, ne2));
  params.value_simplified = 1.0 / (1.0 + params.C_simplified);
  BoundValue bound;
  bound.family = BoundFamily::classical_bernoulli;
  bound.value = 1.0 / (1.0 + params.C);
  bound.certified = true;
  return {params, bound};
}

BoundValue uspensky_bound(unsigned long n, double eps) {
  require_positive_n(n);
  require_nonnegative_eps(eps);
  BoundValue out;
  out.family = BoundFamily::uspensky;
  out.alpha = 2.0;
  out.beta = 0.5;
  out.value = 2.0 * std::exp(-0.5 * eps * eps * static_cast<double>(n));
  out.certified = true;
  return out;
}

BoundValue hoeffding_bound(unsigned long n, double eps) {
  require_positive_n(n);
  require_nonnegative_eps(eps);
  BoundValue out;
  out.family = BoundFamily::hoeffding;
  out.alpha = 2.0;
  out.beta = 2.0;
  out.value = 2.0 * std::exp(-2.0 * eps * eps * static_cast<double>(n));
  out.certified = true;
  return out;
}

BoundValue bernoulli_sharp_bound(unsigned long n, double eps) {
  require_positive_n(n);
  require_nonnegative_eps(eps);
  BoundValue out;
  out.family = BoundFamily::bernoulli_sharp;
  out.alpha = 1.0;
  out.beta = 2.0;
  out.value = std::exp(-2.0 * eps * eps * static_cast<double>(n));
  out.certified = sharp_lattice_fits(n, eps);
  return out;
}

BoundValue general_discrete_bound(unsigned long n, double eps) {
  require_positive_n(n);
  require_nonnegative_eps(eps);
  BoundValue out;
  out.family = BoundFamily::general_discrete;
  out.alpha = 1.0;
  out.beta = 2.0 / (1.0 + eps * eps);
  out.value =
      std::exp(-2.0 * eps * eps * static_cast<double>(n) / (1.0 + eps * eps));
  out.certified = discrete_lattice_fits(n, eps);
  return out;
}

double phi_correction(unsigned long n, double eps) {
  require_positive_n(n);
  const double nd = static_cast<double>(n);
  const double ne = nd * eps;
  if (!(ne > 1.0)) {
    throw RegimeError(
        "correction factor needs deviation above 1/n so the lattice "
        "partition is nonempty");
  }
  const double e2 = eps * eps;
  const double numerator =
      ne * (1.0 + e2) / (ne - 1.0) + eps * (2.0 + 6.0 * eps + 4.5 / nd);
  const double denominator =
      (1.0 + e2) *
      (1.0 + e2 + (1.0 / nd) * (1.0 + 3.0 * eps + 2.25 / nd));
  return numerator / denominator;
}

BoundValue continuous_bound(unsigned long n, double p, double eps) {
  require_positive_n(n);
  if (!(p > 0.0 && p < 1.0)) {
    throw RegimeError("p must lie strictly between 0 and 1");
  }
  if (!(eps > 1.0 / static_cast<double>(n))) {
    throw RegimeError(
        "deviation must exceed 1/n for the lattice partition to be "
        "nonempty");
  }
  if (eps > std::min(p, 1.0 - p)) {
    throw RegimeError(
        "deviation exceeds min(p, 1-p); only a one-sided tail remains");
  }
  const double phi = phi_correction(n, eps);
  const double e2 = eps * eps;
  BoundValue out;
  out.family = BoundFamily::continuous_corrected;
  out.alpha = std::exp(eps * phi);
  out.beta = 2.0 / (1.0 + e2);
  out.value =
      std::exp(eps * phi - 2.0 * e2 * static_cast<double>(n) / (1.0 + e2));
  out.certified = true;
  return out;
}

BoundValue one_sided_bound(unsigned long n, double p, double delta) {
  require_positive_n(n);
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("p must lie strictly between 0 and 1");
  }
  if (!(delta > 0.0)) {
    throw std::domain_error("delta must be positive");
  }
  BoundValue out;
  out.family = BoundFamily::one_sided_half;
  out.alpha = 0.5;
  out.beta = 1.0 / (2.0 * p * (1.0 - p));
  out.value = 0.5 * std::exp(-static_cast<double>(n) * delta * delta /
                             (2.0 * p * (1.0 - p)));
  out.certified = one_sided_lattice_fits(n, p, delta);
  return out;
}

double normalized_sum_bound(double t, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("p must lie strictly between 0 and 1");
  }
  if (!(t >= 0.0)) {
    throw std::domain_error("t must be nonnegative");
  }
  return std::exp(-2.0 * t * t * p * (1.0 - p));
}

CrossoverResult crossover_epsilon(unsigned long n) {
  require_positive_n(n);
  CrossoverResult out;
  out.n = n;
  out.phi = std::log(2.0) / (2.0 * static_cast<double>(n));
  out.mu_squared =
      out.phi / 2.0 + std::sqrt(out.phi * (1.0 + out.phi / 4.0));
  out.mu = std::sqrt(out.mu_squared);
  return out;
}

double log1p_lower(double delta) {
  if (!(delta >= 0.0)) {
    throw std::domain_error("delta must be nonnegative");
  }
  return 2.0 * delta / (2.0 + delta);
}

}  // namespace bernbound
