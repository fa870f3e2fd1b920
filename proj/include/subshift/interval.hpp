#ifndef SUBSHIFT_INTERVAL_HPP_
#define SUBSHIFT_INTERVAL_HPP_

#include <mpfr.h>

#include <string>

#include "subshift/types.hpp"

namespace subshift {

// Closed interval [lo, hi] with outward directed rounding on every operation.
// Default working precision is 128 bits; certificate-grade evaluation keeps
// the precision with each value so reports can state it.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 128;

  explicit Interval(mpfr_prec_t prec = kDefaultPrec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval of_long(long v, mpfr_prec_t prec = kDefaultPrec);
  static Interval of_rational(const Rational& q, mpfr_prec_t prec = kDefaultPrec);
  static Interval of_bigint(const BigInt& v, mpfr_prec_t prec = kDefaultPrec);
  static Interval of_endpoints_d(double lo, double hi, mpfr_prec_t prec = kDefaultPrec);

  mpfr_prec_t precision() const { return prec_; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // o must not contain 0
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  Interval exp() const;
  Interval log() const;          // requires lo > 0
  Interval neg() const;
  Interval pow_ui(unsigned long n) const;  // requires lo >= 0
  Interval root_ui(unsigned long d) const; // requires lo >= 0
  // Clamp the lower endpoint up to at least zero (for quantities known >= 0).
  Interval max_with_zero() const;

  bool strictly_below(const Interval& o) const;  // hi < o.lo
  bool strictly_above(const Interval& o) const;  // lo > o.hi
  bool contains(const Rational& q) const;
  bool lo_at_least(const Rational& q) const;  // lo >= q
  bool is_nonnegative() const;

  double lo_d() const;
  double hi_d() const;
  double width_d() const;
  std::string lo_str(int digits = 30) const;
  std::string hi_str(int digits = 30) const;
  std::string str(int digits = 20) const;  // "[lo, hi]"

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
  friend Interval interval_from_parts(mpfr_prec_t);
};

}  // namespace subshift

#endif  // SUBSHIFT_INTERVAL_HPP_
