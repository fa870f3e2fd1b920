#ifndef SUBSHIFT_CERTIFY_HPP_
#define SUBSHIFT_CERTIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "subshift/certificate.hpp"
#include "subshift/forbidden.hpp"
#include "subshift/series.hpp"

namespace subshift {

// Free parameters for the theorem hypotheses. Exponential parameters are
// carried through their exponentials (exp_neg_beta = e^{-beta}), which keeps
// the default choices beta = ln(|A|/3), alpha = ln(3|A|/5) exactly rational.
struct CertifyParams {
  std::optional<Rational> c;             // concat / 2miller weight parameter
  std::optional<Rational> exp_neg_beta;  // e^{-beta} for the L-combination bound
  std::optional<Rational> exp_neg_alpha; // e^{-alpha} for the measure bounds
  // Certified entropy lower bound as e^{h_lower} (exact when it comes from the
  // entropy-floor certificate, where e^{h} > 3|A|/5). strict means h is known
  // to exceed the bound, so side conditions may sit exactly at it.
  std::optional<Rational> exp_h_lower;
  bool exp_h_lower_strict = false;
  std::string h_lower_provenance;
  std::vector<Rational> grid;  // optional grid search for the free parameter
  mpfr_prec_t prec = Interval::kDefaultPrec;
};

// Theorem ids: "entbound", "lcombbd", "concat", "concat_prime", "gmeascor",
// "gprime_meascor", "mainthm2", "gibbsthm".
Certificate certify_theorem(const std::string& theorem_id, const ForbiddenList& forbidden,
                            const CertifyParams& params = {});

const std::vector<std::string>& known_theorems();

// Counting bound |H_i| <= sum_{n=i}^{frac_den*i} (n-i+1) |F_n| from the
// materialized profile (profile[n] = |F_n|, 1-based).
std::vector<BigInt> heavy_bound_profile(const std::vector<BigInt>& f_profile, int frac_den);

}  // namespace subshift

#endif  // SUBSHIFT_CERTIFY_HPP_
