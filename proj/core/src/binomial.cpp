#include "bernbound/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bernbound {

namespace {

void require_open_unit(const Rational& p) {
  if (p <= 0 || p >= 1) {
    throw std::domain_error("p must lie strictly between 0 and 1, got " +
                            p.get_str());
  }
}

mpz_class floor_div(const mpz_class& num, const mpz_class& den) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

mpz_class ceil_div(const mpz_class& num, const mpz_class& den) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

long to_long_clamped(const mpz_class& value, long lo, long hi) {
  if (value < lo) return lo;
  if (value > hi) return hi;
  return static_cast<long>(value.get_si());
}

}  // namespace

double snap_to_integer(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) {
    return r;
  }
  return x;
}

WeightTable::WeightTable(unsigned long n, const Rational& p) : n_(n), p_(p) {
  p_.canonicalize();
  require_open_unit(p_);
  const mpz_class a = p_.get_num();
  const mpz_class b = p_.get_den();
  const mpz_class c = b - a;
  weights_.resize(n + 1);
  prefix_.resize(n + 1);
  mpz_class w;
  mpz_pow_ui(w.get_mpz_t(), c.get_mpz_t(), n);
  weights_[0] = w;
  prefix_[0] = w;
  for (unsigned long j = 0; j < n; ++j) {
    // weight(j+1) = weight(j) * (n-j) * a / ((j+1) * c); divisions exact.
    w *= n - j;
    w *= a;
    mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), j + 1);
    mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), c.get_mpz_t());
    weights_[j + 1] = w;
    prefix_[j + 1] = prefix_[j] + w;
  }
  mpz_pow_ui(total_.get_mpz_t(), b.get_mpz_t(), n);
  if (prefix_[n] != total_) {
    throw std::logic_error("weight table does not sum to b^n");
  }
}

const mpz_class& WeightTable::weight(unsigned long j) const {
  if (j > n_) {
    throw std::domain_error("index exceeds n");
  }
  return weights_[j];
}

mpz_class WeightTable::range_weight(long lo, long hi) const {
  lo = std::max(lo, 0L);
  hi = std::min(hi, static_cast<long>(n_));
  if (lo > hi) {
    return mpz_class(0);
  }
  if (lo == 0) {
    return prefix_[hi];
  }
  return prefix_[hi] - prefix_[lo - 1];
}

RationalProb WeightTable::mass(unsigned long j) const {
  return RationalProb(weight(j), total_);
}

RationalProb WeightTable::range_mass(long lo, long hi) const {
  return RationalProb(range_weight(lo, hi), total_);
}

RationalProb binomial_pmf(unsigned long n, unsigned long j,
                          const RationalProb& p) {
  if (j > n) {
    throw std::domain_error("j exceeds n");
  }
  const Rational& pv = p.value();
  if (pv == 0) {
    return RationalProb(Rational(j == 0 ? 1 : 0));
  }
  if (pv == 1) {
    return RationalProb(Rational(j == n ? 1 : 0));
  }
  const mpz_class a = pv.get_num();
  const mpz_class b = pv.get_den();
  mpz_class coeff;
  mpz_bin_uiui(coeff.get_mpz_t(), n, j);
  mpz_class an, cn, bn;
  mpz_pow_ui(an.get_mpz_t(), a.get_mpz_t(), j);
  mpz_pow_ui(cn.get_mpz_t(), mpz_class(b - a).get_mpz_t(), n - j);
  mpz_pow_ui(bn.get_mpz_t(), b.get_mpz_t(), n);
  return RationalProb(coeff * an * cn, bn);
}

LogProb log_binomial_pmf(unsigned long n, unsigned long j, double p) {
  if (j > n) {
    throw std::domain_error("j exceeds n");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("p must lie strictly between 0 and 1");
  }
  // Extended precision keeps the log-gamma cancellation error small enough
  // for 1e-12 relative agreement with the exact path after exponentiation.
  const long double np = static_cast<long double>(n);
  const long double jp = static_cast<long double>(j);
  const long double lp = std::log(static_cast<long double>(p));
  const long double lq = std::log1p(static_cast<long double>(-p));
  const long double value = std::lgamma(np + 1.0L) - std::lgamma(jp + 1.0L) -
                            std::lgamma(np - jp + 1.0L) + jp * lp +
                            (np - jp) * lq;
  return LogProb{static_cast<double>(value)};
}

RationalProb tail_probability(unsigned long n, const RationalProb& p,
                              const Rational& eps, Side side,
                              Boundary boundary) {
  require_open_unit(p.value());
  if (eps <= 0) {
    throw std::domain_error("eps must be positive");
  }
  WeightTable table(n, p.value());
  return tail_probability(table, eps, side, boundary);
}

RationalProb tail_probability(const WeightTable& table, const Rational& eps,
                              Side side, Boundary boundary) {
  const long n = static_cast<long>(table.n());
  Rational upper_cut = (table.p() + eps) * n;
  Rational lower_cut = (table.p() - eps) * n;
  upper_cut.canonicalize();
  lower_cut.canonicalize();
  // Strict keeps j with j > n(p+eps); weak keeps j >= n(p+eps). Mirrored
  // on the lower side.
  mpz_class first_upper =
      boundary == Boundary::strict
          ? mpz_class(floor_div(upper_cut.get_num(), upper_cut.get_den()) + 1)
          : ceil_div(upper_cut.get_num(), upper_cut.get_den());
  mpz_class last_lower =
      boundary == Boundary::strict
          ? mpz_class(ceil_div(lower_cut.get_num(), lower_cut.get_den()) - 1)
          : floor_div(lower_cut.get_num(), lower_cut.get_den());
  mpz_class sum = 0;
  if (side != Side::lower) {
    sum += table.range_weight(to_long_clamped(first_upper, 0, n + 1), n);
  }
  if (side != Side::upper) {
    sum += table.range_weight(0, to_long_clamped(last_lower, -1, n));
  }
  return RationalProb(sum, table.total());
}

double tail_probability_log(unsigned long n, double p, double eps, Side side,
                            Boundary boundary) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("p must lie strictly between 0 and 1");
  }
  if (!(eps > 0.0)) {
    throw std::domain_error("eps must be positive");
  }
  const double nd = static_cast<double>(n);
  const double upper_cut = snap_to_integer(nd * (p + eps));
  const double lower_cut = snap_to_integer(nd * (p - eps));
  long first_upper = boundary == Boundary::strict
                         ? static_cast<long>(std::floor(upper_cut)) + 1
                         : static_cast<long>(std::ceil(upper_cut));
  long last_lower = boundary == Boundary::strict
                        ? static_cast<long>(std::ceil(lower_cut)) - 1
                        : static_cast<long>(std::floor(lower_cut));
  std::vector<double> logs;
  if (side != Side::lower) {
    for (long j = std::max(first_upper, 0L); j <= static_cast<long>(n); ++j) {
      logs.push_back(log_binomial_pmf(n, j, p).log_value);
    }
  }
  if (side != Side::upper) {
    for (long j = 0; j <= std::min(last_lower, static_cast<long>(n)); ++j) {
      logs.push_back(log_binomial_pmf(n, j, p).log_value);
    }
  }
  if (logs.empty()) {
    // Empty tail: probability 0, log -inf.
    return -std::numeric_limits<double>::infinity();
  }
  const double peak = *std::max_element(logs.begin(), logs.end());
  // Ascending magnitude with compensated summation bounds the relative
  // error of the float path.
  std::sort(logs.begin(), logs.end());
  double sum = 0.0, carry = 0.0;
  for (double l : logs) {
    const double term = std::exp(l - peak);
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return peak + std::log(sum);
}

}  // namespace bernbound
