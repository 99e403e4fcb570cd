#include "bernbound/grids.hpp"

#include <cmath>
#include <stdexcept>

namespace bernbound {

namespace {

// Shared by both grid kinds: groups anchored at center m with width k.
GroupDecomposition decompose(unsigned long n, unsigned long m,
                             unsigned long k, const Rational& p) {
  WeightTable table(n, p);
  GroupDecomposition out;
  out.group_width = k;
  out.p0 = table.mass(m);
  const unsigned long full_left = m / k;
  const unsigned long full_right = (n - m) / k;
  for (unsigned long j = 1; j <= full_left; ++j) {
    const long lo = static_cast<long>(m) - static_cast<long>(k * j);
    const long hi = static_cast<long>(m) - 1 - static_cast<long>(k * (j - 1));
    out.left.push_back(table.range_mass(lo, hi));
  }
  for (unsigned long j = 1; j <= full_right; ++j) {
    const long lo = static_cast<long>(m) + 1 + static_cast<long>(k * (j - 1));
    const long hi = static_cast<long>(m) + static_cast<long>(k * j);
    out.right.push_back(table.range_mass(lo, hi));
  }
  if (m % k != 0) {
    out.left_terminal =
        table.range_mass(0, static_cast<long>(m - k * full_left) - 1);
  }
  if ((n - m) % k != 0) {
    out.right_terminal = table.range_mass(
        static_cast<long>(m + k * full_right) + 1, static_cast<long>(n));
  }
  out.group_size_left = out.left.size();
  out.group_size_right = out.right.size();
  Rational sum = out.p0.value();
  for (const auto& g : out.left) sum += g.value();
  for (const auto& g : out.right) sum += g.value();
  if (out.left_terminal) sum += out.left_terminal->value();
  if (out.right_terminal) sum += out.right_terminal->value();
  if (sum != 1) {
    throw std::logic_error("group decomposition does not conserve mass");
  }
  return out;
}

Rational coefficient_ratio(unsigned long n, unsigned long near,
                           unsigned long far) {
  mpz_class num, den;
  mpz_bin_uiui(num.get_mpz_t(), n, near);
  mpz_bin_uiui(den.get_mpz_t(), n, far);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational coefficient_A_impl(unsigned long n, unsigned long m, unsigned long k,
                            unsigned long full_left, unsigned long j) {
  if (full_left < 2) {
    throw std::domain_error("coefficient A needs at least two left groups");
  }
  if (j < 1 || j > k * (full_left - 1)) {
    throw std::domain_error("coefficient A index out of range");
  }
  return coefficient_ratio(n, m - j, m - k - j);
}

Rational coefficient_B_impl(unsigned long n, unsigned long m, unsigned long k,
                            unsigned long full_right, unsigned long j) {
  if (full_right < 2) {
    throw std::domain_error("coefficient B needs at least two right groups");
  }
  if (j < 1 || j > k * (full_right - 1)) {
    throw std::domain_error("coefficient B index out of range");
  }
  return coefficient_ratio(n, m + j, m + k + j);
}

}  // namespace

BernoulliGrid::BernoulliGrid(unsigned long k_, unsigned long r_,
                             unsigned long s_)
    : k(k_), r(r_), s(s_) {
  if (k < 1 || r < 1 || s < 1) {
    throw std::domain_error("grid parameters must be natural numbers");
  }
}

std::string BernoulliGrid::id() const {
  return "bernoulli(k=" + std::to_string(k) + ",r=" + std::to_string(r) +
         ",s=" + std::to_string(s) + ")";
}

DiscreteGrid::DiscreteGrid(unsigned long n_, unsigned long m_,
                           unsigned long k_)
    : n(n_), m(m_), k(k_) {
  if (m < 1 || k < 1) {
    throw std::domain_error("grid parameters must be natural numbers");
  }
  if (m >= n || k >= n) {
    throw std::domain_error("grid requires m < n and k < n");
  }
}

std::string DiscreteGrid::id() const {
  return "discrete(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
         ",k=" + std::to_string(k) + ")";
}

RationalProb GroupDecomposition::total() const {
  Rational sum = p0.value();
  for (const auto& g : left) sum += g.value();
  for (const auto& g : right) sum += g.value();
  if (left_terminal) sum += left_terminal->value();
  if (right_terminal) sum += right_terminal->value();
  return RationalProb(sum);
}

GroupDecomposition group_decomposition(const BernoulliGrid& grid) {
  return decompose(grid.n(), grid.m(), grid.k, grid.p());
}

GroupDecomposition group_decomposition(const DiscreteGrid& grid) {
  return decompose(grid.n, grid.m, grid.k, grid.p());
}

Rational coefficient_A(const BernoulliGrid& grid, unsigned long j) {
  return coefficient_A_impl(grid.n(), grid.m(), grid.k, grid.r, j);
}

Rational coefficient_B(const BernoulliGrid& grid, unsigned long j) {
  return coefficient_B_impl(grid.n(), grid.m(), grid.k, grid.s, j);
}

Rational coefficient_A(const DiscreteGrid& grid, unsigned long j) {
  return coefficient_A_impl(grid.n, grid.m, grid.k, grid.m / grid.k, j);
}

Rational coefficient_B(const DiscreteGrid& grid, unsigned long j) {
  return coefficient_B_impl(grid.n, grid.m, grid.k, (grid.n - grid.m) / grid.k,
                            j);
}

ContinuousPartition continuous_partition(unsigned long n, double p,
                                         double eps) {
  if (n < 1) {
    throw std::domain_error("n must be a natural number");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw RegimeError("p must lie strictly between 0 and 1");
  }
  const double nd = static_cast<double>(n);
  if (!(eps > 1.0 / nd)) {
    throw RegimeError(
        "deviation must exceed 1/n for the lattice partition to be "
        "nonempty");
  }
  if (eps > std::min(p, 1.0 - p)) {
    throw RegimeError(
        "deviation exceeds min(p, 1-p); only a one-sided tail remains");
  }
  const double np = snap_to_integer(nd * p);
  const double ne = snap_to_integer(nd * eps);
  const double left_edge = snap_to_integer(np - ne);
  const double right_edge = snap_to_integer(np + ne);
  ContinuousPartition out;
  out.n = n;
  out.p = p;
  out.eps = eps;
  out.m = static_cast<unsigned long>(std::ceil(np));
  out.h = static_cast<unsigned long>(std::ceil(np) - std::ceil(left_edge));
  out.g = static_cast<unsigned long>(std::floor(right_edge) - std::ceil(np)) +
          1;
  out.p_tilde = static_cast<double>(out.m) / nd;
  out.eps1_tilde = static_cast<double>(out.h) / nd;
  out.eps2_tilde = static_cast<double>(out.g) / nd;
  out.theta = std::max(eps / out.eps1_tilde, eps / out.eps2_tilde);
  return out;
}

}  // namespace bernbound
