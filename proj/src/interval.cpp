#include "subshift/interval.hpp"

#include <algorithm>
#include <cstdio>

namespace subshift {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_ui(lo_, 0, MPFR_RNDD);
  mpfr_set_ui(hi_, 0, MPFR_RNDU);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  if (prec_ != o.prec_) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
  }
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::of_long(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::of_rational(const Rational& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.backend().data(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.backend().data(), MPFR_RNDU);
  return r;
}

Interval Interval::of_bigint(const BigInt& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, v.backend().data(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.backend().data(), MPFR_RNDU);
  return r;
}

Interval Interval::of_endpoints_d(double lo, double hi, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // lo: min of the four products rounded down.
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // hi: max of the four products rounded up.
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
    throw SubshiftError("interval division by an interval containing zero");
  Interval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval Interval::exp() const {
  Interval r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw SubshiftError("interval log of a nonpositive interval");
  Interval r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::neg() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::pow_ui(unsigned long n) const {
  if (mpfr_sgn(lo_) < 0) throw SubshiftError("interval pow requires a nonnegative interval");
  Interval r(prec_);
  mpfr_pow_ui(r.lo_, lo_, n, MPFR_RNDD);
  mpfr_pow_ui(r.hi_, hi_, n, MPFR_RNDU);
  return r;
}

Interval Interval::root_ui(unsigned long d) const {
  if (mpfr_sgn(lo_) < 0) throw SubshiftError("interval root requires a nonnegative interval");
  Interval r(prec_);
  mpfr_rootn_ui(r.lo_, lo_, d, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, hi_, d, MPFR_RNDU);
  return r;
}

Interval Interval::max_with_zero() const {
  Interval r(*this);
  if (mpfr_sgn(r.lo_) < 0) mpfr_set_ui(r.lo_, 0, MPFR_RNDD);
  if (mpfr_sgn(r.hi_) < 0) mpfr_set_ui(r.hi_, 0, MPFR_RNDU);
  return r;
}

bool Interval::strictly_below(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool Interval::strictly_above(const Interval& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.backend().data()) <= 0 && mpfr_cmp_q(hi_, q.backend().data()) >= 0;
}

bool Interval::lo_at_least(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.backend().data()) >= 0;
}

bool Interval::is_nonnegative() const { return mpfr_sgn(lo_) >= 0; }

double Interval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::width_d() const {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  double w = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return w;
}

namespace {

std::string mpfr_decimal(const mpfr_t x, int digits, mpfr_rnd_t rnd) {
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dR*e", digits);
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, fmt, rnd, x);
  return buf;
}

}  // namespace

std::string Interval::lo_str(int digits) const { return mpfr_decimal(lo_, digits, MPFR_RNDD); }
std::string Interval::hi_str(int digits) const { return mpfr_decimal(hi_, digits, MPFR_RNDU); }

std::string Interval::str(int digits) const {
  return "[" + lo_str(digits) + ", " + hi_str(digits) + "]";
}

}  // namespace subshift
