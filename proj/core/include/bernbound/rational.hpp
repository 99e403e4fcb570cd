#pragma once

#include <gmpxx.h>

#include <string>

namespace bernbound {

// Exact rational with no range restriction. Ratios of group masses and
// binomial coefficients exceed 1, so they live here rather than in
// RationalProb.
using Rational = mpq_class;

// Exact probability: a rational constrained to [0, 1], stored in lowest
// terms. All arithmetic on the underlying value is exact.
class RationalProb {
 public:
  RationalProb();
  explicit RationalProb(const Rational& value);
  RationalProb(const mpz_class& numerator, const mpz_class& denominator);

  const Rational& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  RationalProb operator+(const RationalProb& other) const;
  RationalProb operator*(const RationalProb& other) const;
  bool operator==(const RationalProb& other) const = default;

  double to_double() const;
  // Fixed-point decimal with the requested digit count, rounding halves
  // away from zero. Exact: no float intermediary.
  std::string to_decimal(int digits) const;
  // "num/den" in lowest terms.
  std::string to_fraction_string() const;

 private:
  Rational value_;
};

// Parses "a/b", a bare integer, or a decimal string ("0.125") into an
// exact rational. Decimal digits map to an exact power-of-ten denominator.
Rational parse_rational(const std::string& text);

// Decimal rendering for any nonnegative rational, rounding halves away
// from zero.
std::string rational_to_decimal(const Rational& value, int digits);

}  // namespace bernbound
