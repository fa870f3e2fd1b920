#include "subshift/series.hpp"

#include <algorithm>

namespace subshift {

SeriesSpec SeriesSpec::from_forbidden(const ForbiddenList& f, int p, Rational base, int d,
                                      mpfr_prec_t prec) {
  SeriesSpec s;
  s.profile.assign(f.horizon() + 1, BigInt(0));
  for (int n = 1; n <= f.horizon(); ++n) s.profile[n] = f.count(n);
  s.p = p;
  s.base = std::move(base);
  s.d = d;
  s.profile_complete = f.finite();
  s.tail = f.tail_model();
  s.prec = prec;
  return s;
}

SeriesSpec SeriesSpec::from_forbidden_exp(const ForbiddenList& f, int p, Rational beta, int d,
                                          mpfr_prec_t prec) {
  SeriesSpec s = from_forbidden(f, p, Rational(0), d, prec);
  s.base = std::nullopt;
  s.exp_neg = std::move(beta);
  return s;
}

bool SeriesValue::strictly_less(const Rational& bound) const {
  if (exact) return *exact < bound;
  return box.strictly_below(Interval::of_rational(bound, box.precision()));
}

bool SeriesValue::strictly_greater_eq(const Rational& bound) const {
  if (exact) return *exact >= bound;
  return box.lo_at_least(bound);  // the whole enclosure sits at or above the bound
}

std::string SeriesValue::str() const {
  if (exact) return exact->str() + " (exact)";
  return box.str();
}

Interval power_series_full(const Interval& x, int p) {
  Interval one = Interval::of_long(1, x.precision());
  Interval om = one - x;
  switch (p) {
    case 0:
      return x / om;
    case 1:
      return x / om.pow_ui(2);
    case 2:
      return x * (one + x) / om.pow_ui(3);
    default:
      throw SubshiftError("power series closed form only for p in {0,1,2}");
  }
}

Interval power_series_partial(const Interval& x, int p, int m) {
  Interval sum(x.precision());
  Interval xn = Interval::of_long(1, x.precision());
  for (int n = 1; n <= m; ++n) {
    xn = xn * x;
    unsigned long w = 1;
    for (int i = 0; i < p; ++i) w *= static_cast<unsigned long>(n);
    sum = sum + Interval::of_long(static_cast<long>(w), x.precision()) * xn;
  }
  return sum;
}

namespace {

Interval base_interval(const SeriesSpec& spec) {
  if (spec.base && spec.exp_neg)
    throw SubshiftError("series base must be rational or exp(-beta), not both");
  if (spec.base) {
    if (*spec.base < 0) throw SubshiftError("series base must be nonnegative");
    return Interval::of_rational(*spec.base, spec.prec);
  }
  if (spec.exp_neg)
    return Interval::of_rational(*spec.exp_neg, spec.prec).neg().exp();
  throw SubshiftError("series base missing");
}

}  // namespace

SeriesValue eval_series(const SeriesSpec& spec) {
  // The theorem hypotheses use d in {1, 3, 4}; composite divisors appear when
  // exponential parameters like (1/6) ln(ell+1) are folded into rational bases.
  if (spec.d < 1) throw SubshiftError("series length divisor must be positive");
  SeriesValue out;

  const int m = spec.m();
  const bool tail_needed = !spec.profile_complete;
  const bool have_tail = spec.tail && spec.tail->C > 0;
  if (tail_needed && !spec.tail)
    throw SubshiftError("series unbounded above, cannot certify: no tail model");

  // Exact path: finite profile, integral exponent, rational base.
  if (!tail_needed && spec.d == 1 && spec.base) {
    Rational sum = 0;
    Rational qn = 1;
    for (int n = 1; n <= m; ++n) {
      qn *= *spec.base;
      if (spec.profile[n] == 0) continue;
      BigInt w = 1;
      for (int i = 0; i < spec.p; ++i) w *= n;
      sum += Rational(w * spec.profile[n]) * qn;
    }
    out.exact = sum;
    out.box = Interval::of_rational(sum, spec.prec);
    return out;
  }

  Interval b = base_interval(spec);
  Interval u = spec.d == 1 ? b : b.root_ui(spec.d);

  Interval sum(spec.prec);
  Interval un = Interval::of_long(1, spec.prec);
  for (int n = 1; n <= m; ++n) {
    un = un * u;
    if (spec.profile[n] == 0) continue;
    BigInt w = 1;
    for (int i = 0; i < spec.p; ++i) w *= n;
    sum = sum + Interval::of_bigint(w * spec.profile[n], spec.prec) * un;
  }

  if (tail_needed && have_tail) {
    Interval x = Interval::of_rational(spec.tail->r, spec.prec) * u;
    if (!x.strictly_below(Interval::of_long(1, spec.prec)))
      throw SubshiftError("series unbounded above, cannot certify: tail ratio not below 1");
    int n0 = std::max(m + 1, spec.tail->start);
    Interval tail_mass =
        (power_series_full(x, spec.p) - power_series_partial(x, spec.p, n0 - 1)).max_with_zero();
    Interval tail_hi = Interval::of_rational(spec.tail->C, spec.prec) * tail_mass;
    // The tail model is an upper bound only, so the tail contributes [0, hi].
    sum = sum + tail_hi * Interval::of_endpoints_d(0.0, 1.0, spec.prec);
    out.tail_used = true;
  }
  out.box = sum;
  return out;
}

SeriesValue coded_generating_function(const std::vector<BigInt>& code_profile,
                                      std::optional<Rational> alpha,
                                      std::optional<Rational> base_rational, mpfr_prec_t prec) {
  if (alpha.has_value() == base_rational.has_value())
    throw SubshiftError("give exactly one of alpha / base for the generating function");
  SeriesSpec s;
  s.profile = code_profile;
  if (s.profile.empty()) s.profile.assign(1, BigInt(0));
  s.p = 0;
  s.d = 1;
  s.profile_complete = true;
  s.prec = prec;
  if (base_rational)
    s.base = *base_rational;
  else
    s.exp_neg = *alpha;
  SeriesValue v = eval_series(s);
  if (base_rational) {
    *v.exact += *base_rational;  // the {*} code word of length 1
    v.box = Interval::of_rational(*v.exact, prec);
  } else {
    v.exact.reset();
    v.box = v.box + Interval::of_rational(*alpha, prec).neg().exp();
  }
  return v;
}

}  // namespace subshift
