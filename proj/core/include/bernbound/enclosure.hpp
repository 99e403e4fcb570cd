#pragma once

#include <mpfr.h>

#include <string>

#include "bernbound/rational.hpp"

namespace bernbound {

// Outcome of a rigorous comparison.  `inconclusive` means the enclosure was
// too wide to decide; re-running at higher precision can resolve it.
enum class Verdict { pass, fail, inconclusive };

std::string verdict_name(Verdict v);

// Move-only RAII wrapper around mpfr_t.
class MpfrFloat {
 public:
  explicit MpfrFloat(mpfr_prec_t precision_bits);
  MpfrFloat(const MpfrFloat&) = delete;
  MpfrFloat& operator=(const MpfrFloat&) = delete;
  MpfrFloat(MpfrFloat&& other) noexcept;
  MpfrFloat& operator=(MpfrFloat&& other) noexcept;
  ~MpfrFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  double to_double() const;

 private:
  mpfr_t value_;
};

// Interval [lo, hi] guaranteed to contain the exact real value.  For the
// transcendental constructors below the relative width is at most a few
// units in the last place of the requested precision, and a finer enclosure
// of the same value nests strictly inside a coarser one (the enclosed values
// are irrational, so neither endpoint can ever equal the value).
struct Enclosure {
  MpfrFloat lo;
  MpfrFloat hi;

  double width() const;
  double midpoint() const;
};

// Enclosure of exp(x) at the requested precision.  Internally computed with
// enough extra bits to absorb the argument's magnitude.
Enclosure enclose_exp(const Rational& x, mpfr_prec_t precision_bits);

// Enclosure of log(1 + x) for rational x > -1.
Enclosure enclose_log1p(const Rational& x, mpfr_prec_t precision_bits);

// Enclosure of sqrt(x) for rational x >= 0.
Enclosure enclose_sqrt(const Rational& x, mpfr_prec_t precision_bits);

// Enclosure of (enclosed value) + delta, with directed rounding.
Enclosure enclosure_add(const Enclosure& e, long delta);

// Is lhs >= the enclosed value?  pass when lhs >= hi, fail when lhs < lo.
Verdict certify_ge(const Rational& lhs, const Enclosure& rhs);

// Is lhs <= the enclosed value?  pass when lhs <= lo, fail when lhs > hi.
Verdict certify_le(const Rational& lhs, const Enclosure& rhs);

// Is w1 >= b * w2 for the real b inside `factor`?  Works directly on
// nonnegative integer weights so a shared denominator cancels.
Verdict certify_weighted_ge(const mpz_class& w1, const Enclosure& factor,
                            const mpz_class& w2);

// Is w <= b * scale for the real b inside `factor`?
Verdict certify_weighted_le(const mpz_class& w, const Enclosure& factor,
                            const mpz_class& scale);

// Approximate signed slack (lhs - required) / required in double precision.
// Reporting only; verdicts never depend on these.
double relative_margin(const Rational& lhs, const Enclosure& required);
double relative_margin_weighted(const mpz_class& w1, const Enclosure& factor,
                                const mpz_class& w2);

}  // namespace bernbound
