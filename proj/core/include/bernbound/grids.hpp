#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bernbound/binomial.hpp"
#include "bernbound/rational.hpp"

namespace bernbound {

// Lattice family p = r/(r+s), n = k(r+s), eps = 1/(r+s): the setting in
// which the center np and the group boundaries are all integers.
struct BernoulliGrid {
  unsigned long k = 1;
  unsigned long r = 1;
  unsigned long s = 1;

  BernoulliGrid(unsigned long k_, unsigned long r_, unsigned long s_);

  unsigned long n() const { return k * (r + s); }
  unsigned long m() const { return k * r; }
  Rational p() const { return Rational(r, r + s); }
  Rational eps() const { return Rational(1, r + s); }
  std::string id() const;
};

// General lattice family p = m/n, eps = k/n with m, k < n.
struct DiscreteGrid {
  unsigned long n = 2;
  unsigned long m = 1;
  unsigned long k = 1;

  DiscreteGrid(unsigned long n_, unsigned long m_, unsigned long k_);

  Rational p() const { return Rational(m, n); }
  Rational eps() const { return Rational(k, n); }
  std::string id() const;
};

// Center mass plus contiguous k-wide groups of binomial mass fanning out
// from the center. Full-size groups come first; when k does not divide the
// index span, the leftover indices form one short terminal group per side.
struct GroupDecomposition {
  RationalProb p0;
  std::vector<RationalProb> left;   // S_1 .. S_r, center outward
  std::vector<RationalProb> right;  // Z_1 .. Z_s, center outward
  std::optional<RationalProb> left_terminal;
  std::optional<RationalProb> right_terminal;
  unsigned long group_width = 1;  // k
  // Number of full-size groups per side, mirroring left/right list sizes.
  unsigned long group_size_left = 0;
  unsigned long group_size_right = 0;

  RationalProb total() const;
};

GroupDecomposition group_decomposition(const BernoulliGrid& grid);
GroupDecomposition group_decomposition(const DiscreteGrid& grid);

// Ratios of binomial coefficients between neighbor groups:
//   A(j) = C(n, m-j) / C(n, m-k-j), 1 <= j <= k(r-1), requires r >= 2;
//   B(j) = C(n, m+j) / C(n, m+k+j), 1 <= j <= k(s-1), requires s >= 2.
// Both strictly increase in j.
Rational coefficient_A(const BernoulliGrid& grid, unsigned long j);
Rational coefficient_B(const BernoulliGrid& grid, unsigned long j);
Rational coefficient_A(const DiscreteGrid& grid, unsigned long j);
Rational coefficient_B(const DiscreteGrid& grid, unsigned long j);

// Raised when parameters fall outside a bound's admissible regime (as
// opposed to being malformed).
class RegimeError : public std::runtime_error {
 public:
  explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

// Lattice quantities for arbitrary real p and eps: the center index m, the
// integer counts h and g of the first groups either side of np, and the
// induced lattice parameters.
struct ContinuousPartition {
  unsigned long n = 0;
  double p = 0;
  double eps = 0;
  unsigned long m = 0;  // smallest integer >= np
  unsigned long h = 0;  // integers in [np - n*eps, np)
  unsigned long g = 0;  // integers in [np, np + n*eps]
  double p_tilde = 0;     // m/n
  double eps1_tilde = 0;  // h/n
  double eps2_tilde = 0;  // g/n
  double theta = 0;       // max(eps/eps1_tilde, eps/eps2_tilde)
};

// Requires 0 < p < 1 and 1/n < eps <= min(p, 1-p). Violations raise
// RegimeError naming the failed condition.
ContinuousPartition continuous_partition(unsigned long n, double p,
                                         double eps);

}  // namespace bernbound
