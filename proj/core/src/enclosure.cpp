#include "bernbound/enclosure.hpp"

#include <cmath>
#include <stdexcept>

namespace bernbound {

namespace {

// Extra working bits: enough to cover the argument's integer part plus a
// fixed pad, so the final rounding to the requested precision dominates the
// enclosure width.
mpfr_prec_t working_precision(const Rational& x, mpfr_prec_t precision_bits) {
  mpz_class whole;
  mpz_tdiv_q(whole.get_mpz_t(), x.get_num().get_mpz_t(),
             x.get_den().get_mpz_t());
  whole = abs(whole);
  const auto extra =
      static_cast<mpfr_prec_t>(mpz_sizeinbase(whole.get_mpz_t(), 2));
  return precision_bits + extra + 8;
}

using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// exp, log1p and sqrt are increasing, so rounding the argument and the
// function value in the same direction yields a valid bound.
Enclosure enclose_increasing(UnaryOp op, const Rational& x,
                             mpfr_prec_t precision_bits) {
  const mpfr_prec_t work = working_precision(x, precision_bits);
  MpfrFloat arg_lo(work);
  MpfrFloat arg_hi(work);
  mpfr_set_q(arg_lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(arg_hi.get(), x.get_mpq_t(), MPFR_RNDU);
  MpfrFloat val_lo(work);
  MpfrFloat val_hi(work);
  op(val_lo.get(), arg_lo.get(), MPFR_RNDD);
  op(val_hi.get(), arg_hi.get(), MPFR_RNDU);
  Enclosure out{MpfrFloat(precision_bits), MpfrFloat(precision_bits)};
  mpfr_set(out.lo.get(), val_lo.get(), MPFR_RNDD);
  mpfr_set(out.hi.get(), val_hi.get(), MPFR_RNDU);
  return out;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

MpfrFloat::MpfrFloat(mpfr_prec_t precision_bits) {
  if (precision_bits < MPFR_PREC_MIN) {
    throw std::domain_error("precision must be at least MPFR_PREC_MIN bits");
  }
  mpfr_init2(value_, precision_bits);
}

MpfrFloat::MpfrFloat(MpfrFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

MpfrFloat& MpfrFloat::operator=(MpfrFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

MpfrFloat::~MpfrFloat() { mpfr_clear(value_); }

double MpfrFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

double Enclosure::width() const {
  MpfrFloat diff(mpfr_get_prec(hi.get()));
  mpfr_sub(diff.get(), hi.get(), lo.get(), MPFR_RNDU);
  return mpfr_get_d(diff.get(), MPFR_RNDU);
}

double Enclosure::midpoint() const {
  return 0.5 * (lo.to_double() + hi.to_double());
}

Enclosure enclose_exp(const Rational& x, mpfr_prec_t precision_bits) {
  return enclose_increasing(mpfr_exp, x, precision_bits);
}

Enclosure enclose_log1p(const Rational& x, mpfr_prec_t precision_bits) {
  if (x <= -1) {
    throw std::domain_error("log1p requires an argument above -1");
  }
  return enclose_increasing(mpfr_log1p, x, precision_bits);
}

Enclosure enclose_sqrt(const Rational& x, mpfr_prec_t precision_bits) {
  if (x < 0) {
    throw std::domain_error("sqrt requires a nonnegative argument");
  }
  return enclose_increasing(mpfr_sqrt, x, precision_bits);
}

Enclosure enclosure_add(const Enclosure& e, long delta) {
  Enclosure out{MpfrFloat(mpfr_get_prec(e.lo.get())),
                MpfrFloat(mpfr_get_prec(e.hi.get()))};
  mpfr_add_si(out.lo.get(), e.lo.get(), delta, MPFR_RNDD);
  mpfr_add_si(out.hi.get(), e.hi.get(), delta, MPFR_RNDU);
  return out;
}

Verdict certify_ge(const Rational& lhs, const Enclosure& rhs) {
  if (mpfr_cmp_q(rhs.hi.get(), lhs.get_mpq_t()) <= 0) {
    return Verdict::pass;
  }
  if (mpfr_cmp_q(rhs.lo.get(), lhs.get_mpq_t()) > 0) {
    return Verdict::fail;
  }
  return Verdict::inconclusive;
}

Verdict certify_le(const Rational& lhs, const Enclosure& rhs) {
  if (mpfr_cmp_q(rhs.lo.get(), lhs.get_mpq_t()) >= 0) {
    return Verdict::pass;
  }
  if (mpfr_cmp_q(rhs.hi.get(), lhs.get_mpq_t()) < 0) {
    return Verdict::fail;
  }
  return Verdict::inconclusive;
}

Verdict certify_weighted_ge(const mpz_class& w1, const Enclosure& factor,
                            const mpz_class& w2) {
  MpfrFloat scaled(mpfr_get_prec(factor.hi.get()));
  mpfr_mul_z(scaled.get(), factor.hi.get(), w2.get_mpz_t(), MPFR_RNDU);
  if (mpfr_cmp_z(scaled.get(), w1.get_mpz_t()) <= 0) {
    return Verdict::pass;
  }
  mpfr_mul_z(scaled.get(), factor.lo.get(), w2.get_mpz_t(), MPFR_RNDD);
  if (mpfr_cmp_z(scaled.get(), w1.get_mpz_t()) > 0) {
    return Verdict::fail;
  }
  return Verdict::inconclusive;
}

Verdict certify_weighted_le(const mpz_class& w, const Enclosure& factor,
                            const mpz_class& scale) {
  MpfrFloat scaled(mpfr_get_prec(factor.lo.get()));
  mpfr_mul_z(scaled.get(), factor.lo.get(), scale.get_mpz_t(), MPFR_RNDD);
  if (mpfr_cmp_z(scaled.get(), w.get_mpz_t()) >= 0) {
    return Verdict::pass;
  }
  mpfr_mul_z(scaled.get(), factor.hi.get(), scale.get_mpz_t(), MPFR_RNDU);
  if (mpfr_cmp_z(scaled.get(), w.get_mpz_t()) < 0) {
    return Verdict::fail;
  }
  return Verdict::inconclusive;
}

double relative_margin(const Rational& lhs, const Enclosure& required) {
  const double req = required.midpoint();
  if (req == 0.0) {
    return 0.0;
  }
  return lhs.get_d() / req - 1.0;
}

double relative_margin_weighted(const mpz_class& w1, const Enclosure& factor,
                                const mpz_class& w2) {
  if (w2 == 0) {
    return 0.0;
  }
  const double req = factor.midpoint();
  if (req == 0.0) {
    return 0.0;
  }
  Rational ratio(w1, w2);
  ratio.canonicalize();
  return ratio.get_d() / req - 1.0;
}

}  // namespace bernbound
