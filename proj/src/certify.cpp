#include "subshift/certify.hpp"

#include <algorithm>
#include <cmath>

namespace subshift {

namespace {

Rational default_c(const ForbiddenList& f) { return Rational(3, f.alphabet().size()); }

SeriesValue eval_f_series(const ForbiddenList& f, int p, const Rational& base, int d,
                          mpfr_prec_t prec) {
  return eval_series(SeriesSpec::from_forbidden(f, p, base, d, prec));
}

// Resolves a certified entropy lower bound as e^{h}: either user-supplied or
// derived from the entropy-floor certificate when it passes.
struct HLower {
  Rational exp_h;  // e^{h_lower}
  bool strict;     // h(X) > ln(exp_h) rather than >=
  std::string provenance;
};

Certificate certify_entbound(const ForbiddenList& f, const CertifyParams& params);

// Only a passing entropy-floor certificate is attached; a failing derivation
// leaves the side condition unverifiable (inconclusive), not refuted.
std::optional<HLower> resolve_h_lower(const ForbiddenList& f, const CertifyParams& params,
                                      Certificate* cert) {
  if (params.exp_h_lower)
    return HLower{*params.exp_h_lower, params.exp_h_lower_strict,
                  params.h_lower_provenance.empty() ? "user" : params.h_lower_provenance};
  Certificate ent = certify_entbound(f, params);
  if (!ent.passed()) return std::nullopt;
  if (cert) cert->subcertificates.push_back(std::move(ent));
  // The entropy floor is strict: h(X) > ln(3|A|/5).
  return HLower{Rational(3 * f.alphabet().size(), 5), true, "entbound"};
}

Certificate certify_entbound(const ForbiddenList& f, const CertifyParams& params) {
  Certificate cert;
  cert.theorem = "entbound";
  cert.inputs = f.describe();
  cert.precision_bits = static_cast<int>(params.prec);
  const int q = f.alphabet().size();
  Rational c = params.c.value_or(default_c(f));
  cert.params["c"] = c.str();
  SeriesValue s = eval_f_series(f, 0, c, 1, params.prec);
  cert.checks.push_back(check_less("sum |F_n| (3/|A|)^n < 1/5", s, Rational(1, 5)));
  if (cert.passed()) {
    cert.conclusions.push_back("h(X) > ln(3|A|/5) = ln(" + Rational(3 * q, 5).str() + ")");
    cert.conclusions.push_back("exp(h_lower) = " + Rational(3 * q, 5).str());
  }
  return cert;
}

Certificate certify_lcombbd(const ForbiddenList& f, const CertifyParams& params) {
  Certificate cert;
  cert.theorem = "lcombbd";
  cert.inputs = f.describe();
  cert.precision_bits = static_cast<int>(params.prec);
  const int q = f.alphabet().size();
  Rational eb = params.exp_neg_beta.value_or(Rational(3, q));  // e^{-beta}, beta = ln(|A|/3)
  cert.params["exp(-beta)"] = eb.str();

  SeriesValue s = eval_f_series(f, 1, eb, 1, params.prec);
  cert.checks.push_back(check_less("sum n |F_n| e^{-n beta} < 1/36", s, Rational(1, 36)));
  auto h = resolve_h_lower(f, params, &cert);
  if (!h) {
    cert.missing = "certified entropy lower bound (needed for beta < 2h - ln|A|)";
    return cert;
  }
  cert.params["h_lower"] = "ln(" + h->exp_h.str() + ") via " + h->provenance;
  // beta < 2h - ln|A|  <=>  e^{beta} |A| < e^{2h}; with a strict floor
  // h > ln(exp_h), equality at the floor is still admissible.
  SeriesValue lhs_side = series_value_of(Rational(q) / eb, params.prec);
  SeriesValue rhs_side = series_value_of(h->exp_h * h->exp_h, params.prec);
  cert.checks.push_back(h->strict
                            ? check_leq("side: beta <= 2 h_floor - ln|A| (floor strict)",
                                        lhs_side, rhs_side)
                            : check_less("side: beta < 2 h_lower - ln|A|", lhs_side, rhs_side));
  if (cert.passed())
    cert.conclusions.push_back("|L_n(X)| < 4 e^{n h(X)} for all sufficiently large n");
  return cert;
}

Certificate certify_concat(const ForbiddenList& f, const CertifyParams& params, int frac_den) {
  Certificate cert;
  cert.theorem = frac_den == 3 ? "concat" : "concat_prime";
  cert.inputs = f.describe();
  cert.precision_bits = static_cast<int>(params.prec);
  const int q = f.alphabet().size();

  auto run_for = [&](const Rational& c) {
    std::vector<CheckRecord> checks;
    checks.push_back(check_less("side: c > 1/|A|", Rational(1, q), series_value_of(c, params.prec)));
    SeriesValue s1 = eval_f_series(f, 0, c, 1, params.prec);
    Rational rhs1 = (Rational(q) * c - 1) / 2;
    checks.push_back(check_less("sum |F_n| c^n < (|A|c-1)/2", s1, rhs1));
    SeriesValue s2 = eval_f_series(f, 1, c, frac_den, params.prec);
    checks.push_back(check_less(
        "sum n |F_n| c^{n/" + std::to_string(frac_den) + "} < 1/4", s2, Rational(1, 4)));
    return checks;
  };

  Rational c = params.c.value_or(default_c(f));
  std::vector<Rational> grid = params.grid;
  if (grid.empty()) grid.push_back(c);
  Rational best_c = grid.front();
  std::vector<CheckRecord> best;
  double best_margin = -1e300;
  for (const Rational& cand : grid) {
    auto checks = run_for(cand);
    double margin = 1e300;
    bool pass = true;
    for (const auto& ck : checks) {
      margin = std::min(margin, ck.margin);
      pass = pass && ck.verdict == Verdict::kPass;
    }
    double score = pass ? 1e6 + margin : margin;
    if (best.empty() || score > best_margin) {
      best_margin = score;
      best = std::move(checks);
      best_c = cand;
    }
  }
  cert.params["c"] = best_c.str();
  cert.checks = std::move(best);
  if (cert.passed())
    cert.conclusions.push_back(frac_den == 3 ? "v,w in G => vw in L(X)"
                                             : "u,v,w in G' => uvw in L(X)");
  return cert;
}

Certificate certify_gmeascor(const ForbiddenList& f, const CertifyParams& params, int frac_den) {
  Certificate cert;
  cert.theorem = frac_den == 3 ? "gmeascor" : "gprime_meascor";
  cert.inputs = f.describe();
  cert.precision_bits = static_cast<int>(params.prec);
  const int q = f.alphabet().size();
  Rational ea = params.exp_neg_alpha.value_or(Rational(5, 3 * q));  // e^{-alpha}, alpha = ln(3|A|/5)
  cert.params["exp(-alpha)"] = ea.str();

  SeriesValue s = eval_f_series(f, 2, ea, frac_den, params.prec);
  cert.checks.push_back(check_less(
      "sum n^2 |F_n| e^{-(n/" + std::to_string(frac_den) + ") alpha} < 1 - e^{-alpha}", s,
      Rational(1) - ea));
  auto h = resolve_h_lower(f, params, &cert);
  if (!h) {
    cert.missing = "certified entropy lower bound (needed for alpha < h)";
    return cert;
  }
  cert.params["h_lower"] = "ln(" + h->exp_h.str() + ") via " + h->provenance;
  // alpha < h  <=>  1/e^{h} < e^{-alpha}; equality allowed at a strict floor.
  SeriesValue lhs_side = series_value_of(Rational(1) / h->exp_h, params.prec);
  SeriesValue rhs_side = series_value_of(ea, params.prec);
  cert.checks.push_back(h->strict
                            ? check_leq("side: alpha <= h_floor (floor strict)", lhs_side,
                                        rhs_side)
                            : check_less("side: alpha < h_lower", lhs_side, rhs_side));
  if (cert.passed())
    cert.conclusions.push_back(std::string("mu(") + (frac_den == 3 ? "G_n" : "G'_n") +
                               ") > eps on a syndetic set, for every ergodic MME");
  return cert;
}

// Product-system measure bound used for the K-property: the heavy words of
// F^(2) satisfy |H^(2)_i| <= 2 |H_i| |A|^i, and with alpha' = ln(|A|^2/3) the
// Gmeasbd series becomes 2 sum_i Hb_i (3/|A|)^i < 1 - 3/|A|^2.
Certificate certify_product_system(const ForbiddenList& f, const CertifyParams& params) {
  Certificate cert;
  cert.theorem = "mainthm2.product_system";
  cert.inputs = f.describe();
  cert.precision_bits = static_cast<int>(params.prec);
  const int q = f.alphabet().size();
  Rational rhs = Rational(1) - Rational(3, static_cast<long>(q) * q);
  cert.params["exp(-alpha')"] = Rational(3, static_cast<long>(q) * q).str();

  if (f.finite()) {
    std::vector<BigInt> profile(f.horizon() + 1, BigInt(0));
    for (int n = 1; n <= f.horizon(); ++n) profile[n] = f.count(n);
    std::vector<BigInt> hb = heavy_bound_profile(profile, 3);
    SeriesSpec spec;
    spec.profile = hb;
    spec.p = 0;
    spec.base = Rational(3, q);
    spec.d = 1;
    spec.profile_complete = true;
    spec.prec = params.prec;
    SeriesValue s = eval_series(spec);
    SeriesValue doubled;
    doubled.exact = *s.exact * 2;
    doubled.box = Interval::of_rational(*doubled.exact, params.prec);
    cert.checks.push_back(
        check_less("2 sum_i Hb_i (3/|A|)^i < 1 - 3/|A|^2", doubled, rhs));
  } else {
    // Chain bound through the F-profile: 2 sum n^2 |F_n| (3/|A|)^{n/3}.
    SeriesValue s = eval_f_series(f, 2, Rational(3, q), 3, params.prec);
    SeriesValue doubled;
    doubled.box = s.box * Interval::of_long(2, params.prec);
    cert.checks.push_back(
        check_less("2 sum n^2 |F_n| (3/|A|)^{n/3} < 1 - 3/|A|^2", doubled, rhs));
  }
  if (cert.passed())
    cert.conclusions.push_back("nu(G_n x G_n) > eps syndetically for every ergodic MME on XxX");
  return cert;
}

Certificate certify_mainthm2(const ForbiddenList& f, const CertifyParams& params) {
  Certificate cert;
  cert.theorem = "mainthm2";
  cert.inputs = f.describe();
  cert.precision_bits = static_cast<int>(params.prec);
  const int q = f.alphabet().size();
  SeriesValue s = eval_f_series(f, 2, Rational(3, q), 3, params.prec);
  cert.checks.push_back(check_less("sum n^2 |F_n| (3/|A|)^{n/3} < 1/36", s, Rational(1, 36)));

  CertifyParams sub = params;
  cert.subcertificates.push_back(certify_entbound(f, sub));
  if (cert.subcertificates.back().passed() && !sub.exp_h_lower) {
    sub.exp_h_lower = Rational(3 * q, 5);
    sub.exp_h_lower_strict = true;
    sub.h_lower_provenance = "entbound";
  }
  cert.subcertificates.push_back(certify_lcombbd(f, sub));
  cert.subcertificates.push_back(certify_concat(f, sub, 3));
  cert.subcertificates.push_back(certify_gmeascor(f, sub, 3));
  cert.subcertificates.push_back(certify_product_system(f, sub));

  if (cert.passed()) {
    cert.conclusions.push_back("X has a unique measure of maximal entropy");
    cert.conclusions.push_back("the unique MME has the K-property");
  }
  return cert;
}

Certificate certify_gibbsthm(const ForbiddenList& f, const CertifyParams& params) {
  Certificate cert;
  cert.theorem = "gibbsthm";
  cert.inputs = f.describe();
  cert.precision_bits = static_cast<int>(params.prec);
  const int q = f.alphabet().size();
  SeriesValue s = eval_f_series(f, 2, Rational(3, q), 4, params.prec);
  cert.checks.push_back(check_less("sum n^2 |F_n| (3/|A|)^{n/4} < 1/36", s, Rational(1, 36)));
  cert.subcertificates.push_back(certify_mainthm2(f, params));
  CertifyParams sub = params;
  if (!sub.exp_h_lower) {
    sub.exp_h_lower = Rational(3 * q, 5);
    sub.exp_h_lower_strict = true;
    sub.h_lower_provenance = "entbound";
  }
  cert.subcertificates.push_back(certify_concat(f, sub, 4));
  cert.subcertificates.push_back(certify_gmeascor(f, sub, 4));
  if (cert.passed()) {
    cert.conclusions.push_back("mu(G'_n) > eps on a syndetic set");
    cert.conclusions.push_back("D e^{-|w| h} <= mu([w]) <= D' e^{-|w| h} for all w in G'");
  }
  return cert;
}

}  // namespace

std::vector<BigInt> heavy_bound_profile(const std::vector<BigInt>& f_profile, int frac_den) {
  const int m = static_cast<int>(f_profile.size()) - 1;
  std::vector<BigInt> hb(m + 1, BigInt(0));
  for (int i = 1; i <= m; ++i) {
    BigInt total = 0;
    for (int n = i; n <= std::min(frac_den * i, m); ++n)
      total += BigInt(n - i + 1) * f_profile[n];
    hb[i] = total;
  }
  return hb;
}

const std::vector<std::string>& known_theorems() {
  static const std::vector<std::string> ids = {"entbound", "lcombbd",        "concat",
                                               "concat_prime", "gmeascor",   "gprime_meascor",
                                               "mainthm2",     "gibbsthm"};
  return ids;
}

Certificate certify_theorem(const std::string& theorem_id, const ForbiddenList& forbidden,
                            const CertifyParams& params) {
  try {
    if (theorem_id == "entbound") return certify_entbound(forbidden, params);
    if (theorem_id == "lcombbd") return certify_lcombbd(forbidden, params);
    if (theorem_id == "concat") return certify_concat(forbidden, params, 3);
    if (theorem_id == "concat_prime") return certify_concat(forbidden, params, 4);
    if (theorem_id == "gmeascor") return certify_gmeascor(forbidden, params, 3);
    if (theorem_id == "gprime_meascor") return certify_gmeascor(forbidden, params, 4);
    if (theorem_id == "mainthm2") return certify_mainthm2(forbidden, params);
    if (theorem_id == "gibbsthm") return certify_gibbsthm(forbidden, params);
  } catch (const SubshiftError& e) {
    Certificate cert;
    cert.theorem = theorem_id;
    cert.inputs = forbidden.describe();
    cert.precision_bits = static_cast<int>(params.prec);
    cert.missing = e.what();
    return cert;
  }
  throw SubshiftError("unknown theorem id: " + theorem_id);
}

}  // namespace subshift
