#ifndef SUBSHIFT_SERIES_HPP_
#define SUBSHIFT_SERIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "subshift/forbidden.hpp"
#include "subshift/interval.hpp"
#include "subshift/types.hpp"

namespace subshift {

// One series of the form  sum_{n>=1} n^p * |F_n| * base^{n/d},
// with |F_n| taken from a materialized profile up to m and, beyond m, bounded
// by the geometric tail model when one is present.
struct SeriesSpec {
  std::vector<BigInt> profile;      // profile[n] for n = 1..m; profile[0] ignored
  int p = 0;                        // weight exponent, n^p
  std::optional<Rational> base;     // exact rational base, or
  std::optional<Rational> exp_neg;  // base = e^{-beta} with beta rational (natural log)
  int d = 1;                        // length divisor: exponent n/d
  bool profile_complete = false;    // |F_n| = 0 for every n beyond the profile
  std::optional<TailModel> tail;
  mpfr_prec_t prec = Interval::kDefaultPrec;

  int m() const { return static_cast<int>(profile.size()) - 1; }

  static SeriesSpec from_forbidden(const ForbiddenList& f, int p, Rational base, int d,
                                   mpfr_prec_t prec = Interval::kDefaultPrec);
  static SeriesSpec from_forbidden_exp(const ForbiddenList& f, int p, Rational beta, int d,
                                       mpfr_prec_t prec = Interval::kDefaultPrec);
};

struct SeriesValue {
  Interval box;
  std::optional<Rational> exact;  // set when finite, d == 1 and the base is rational
  bool tail_used = false;

  bool strictly_less(const Rational& bound) const;
  bool strictly_greater_eq(const Rational& bound) const;  // definite failure of "< bound"
  std::string str() const;
};

// Rigorous enclosure of the series value. Throws
// "series unbounded above, cannot certify" when the profile is incomplete and
// no usable tail model is present, or when the tail ratio is >= 1.
SeriesValue eval_series(const SeriesSpec& spec);

// Closed forms sum_{n>=1} n^p x^n (p in {0,1,2}) and finite partial sums, in
// interval arithmetic; x must satisfy x.hi < 1 for the full sum.
Interval power_series_full(const Interval& x, int p);
Interval power_series_partial(const Interval& x, int p, int m);

// f_C(alpha) = e^{-alpha} + sum_n |H_n| e^{-n alpha} for the code set
// {*} union H. Exactly one of alpha / base_rational must be given
// (base_rational stands for e^{-alpha} when that value is rational).
SeriesValue coded_generating_function(const std::vector<BigInt>& code_profile,
                                      std::optional<Rational> alpha,
                                      std::optional<Rational> base_rational = std::nullopt,
                                      mpfr_prec_t prec = Interval::kDefaultPrec);

}  // namespace subshift

#endif  // SUBSHIFT_SERIES_HPP_
