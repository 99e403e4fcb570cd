#include "bernbound/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bernbound {

namespace {

void require_probability(const Rational& value) {
  if (value < 0 || value > 1) {
    throw std::domain_error("probability outside [0, 1]: " +
                            value.get_str());
  }
}

}  // namespace

RationalProb::RationalProb() : value_(0) {}

RationalProb::RationalProb(const Rational& value) : value_(value) {
  value_.canonicalize();
  require_probability(value_);
}

RationalProb::RationalProb(const mpz_class& numerator,
                           const mpz_class& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) {
    throw std::domain_error("zero denominator");
  }
  value_.canonicalize();
  require_probability(value_);
}

RationalProb RationalProb::operator+(const RationalProb& other) const {
  return RationalProb(Rational(value_ + other.value_));
}

RationalProb RationalProb::operator*(const RationalProb& other) const {
  return RationalProb(Rational(value_ * other.value_));
}

double RationalProb::to_double() const { return value_.get_d(); }

std::string RationalProb::to_decimal(int digits) const {
  return rational_to_decimal(value_, digits);
}

std::string RationalProb::to_fraction_string() const {
  return value_.get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) {
      throw std::invalid_argument("malformed rational: " + text);
    }
    Rational value;
    if (value.set_str(num + "/" + den, 10) != 0) {
      throw std::invalid_argument("malformed rational: " + text);
    }
    if (value.get_den() == 0) {
      throw std::invalid_argument("zero denominator: " + text);
    }
    value.canonicalize();
    return value;
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational value;
    if (value.set_str(text, 10) != 0) {
      throw std::invalid_argument("malformed integer: " + text);
    }
    return value;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || frac_len == 0) {
    throw std::invalid_argument("malformed decimal: " + text);
  }
  bool negative = false;
  std::string body = digits;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed decimal: " + text);
    }
  }
  // Explicit base 10: the gmpxx string constructor defaults to base 0,
  // which reads a leading zero ("0125") as octal.
  mpz_class numerator;
  if (numerator.set_str(body.empty() ? "0" : body, 10) != 0) {
    throw std::invalid_argument("malformed decimal: " + text);
  }
  if (negative) {
    numerator = -numerator;
  }
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac_len);
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string rational_to_decimal(const Rational& value, int digits) {
  if (digits < 0) {
    throw std::invalid_argument("negative digit count");
  }
  const bool negative = value < 0;
  Rational magnitude = negative ? Rational(-value) : value;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // floor((2 * num * scale + den) / (2 * den)) rounds halves away from
  // zero for nonnegative input.
  mpz_class num = magnitude.get_num() * scale * 2 + magnitude.get_den();
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(),
             mpz_class(magnitude.get_den() * 2).get_mpz_t());
  mpz_class whole, frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), rounded.get_mpz_t(),
              scale.get_mpz_t());
  std::string out = negative && rounded != 0 ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string frac_str = frac.get_str();
    out += "." + std::string(digits - frac_str.size(), '0') + frac_str;
  }
  return out;
}

}  // namespace bernbound
