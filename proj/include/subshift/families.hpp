#ifndef SUBSHIFT_FAMILIES_HPP_
#define SUBSHIFT_FAMILIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "subshift/automaton.hpp"
#include "subshift/certificate.hpp"
#include "subshift/forbidden.hpp"
#include "subshift/goodwords.hpp"
#include "subshift/types.hpp"

namespace subshift {

// ---------------------------------------------------------------------------
// alpha-beta shifts: coding of x -> alpha + beta x (mod 1)

struct AlphaBetaParams {
  Rational alpha;
  Rational beta;
  int depth = 64;  // coding depth N

  int ell() const;  // ceil(alpha + beta) - 1; alphabet is {0..ell}
  void validate() const;
};

struct AlphaBetaCoding {
  Word a_prefix;  // first N symbols of Phi(0)
  Word b_prefix;  // first N symbols of lim_{t->1^-} Phi(t)
  bool a_boundary_hit = false;
  int first_boundary_step = -1;
};

// Exact rational orbit coding; the a-orbit resolves endpoint hits by the
// half-open convention [x, y) and raises the boundary flag, the b-orbit
// tracks the one-sided limit (integer hits resolve to the lower interval).
AlphaBetaCoding alpha_beta_coding(const AlphaBetaParams& params);

// Coding for parameters given as interval enclosures (irrational alpha, beta).
// Every coding symbol must be determined by the orbit enclosure lying strictly
// inside one coding interval; an ambiguous step aborts with
// "precision insufficient at step t".
AlphaBetaCoding alpha_beta_coding_approx(const Interval& alpha, const Interval& beta, int ell,
                                         int depth);

// F_alpha = {p a : p prefix of the a-coding immediately followed by a letter
// greater than a}, F_beta symmetric; graded to max_len. |F_n| <= 2 ell.
ForbiddenList alpha_beta_forbidden(const Word& a_prefix, const Word& b_prefix, int ell,
                                   int max_len);

struct BetaentReport {
  int N = 0;           // leading 0s of a and leading ell's of b (the smaller count)
  double bound = 0.0;  // ((N-2)/N) ln(ell+1)
  bool vacuous = false;
  bool consistent = false;  // bound <= h_upper(n) for every materialized n
  std::vector<double> h_upper;
};

BetaentReport betaent_check(const Word& a_prefix, const Word& b_prefix, int ell,
                            const AvoidanceAutomaton& automaton, int n_max);

// Least N (>= 5) such that, with the worst-case profile |F_n| = 2 ell for
// n > N, every series hypothesis needed for the unique-MME and Gibbs
// conclusions passes with beta_0 = (1/6) ln(ell+1) and c = 2/3.
Certificate hardbeta_search(int ell, mpfr_prec_t prec = Interval::kDefaultPrec);
bool hardbeta_all_pass(int ell, int N, mpfr_prec_t prec = Interval::kDefaultPrec);

// ---------------------------------------------------------------------------
// bounded density shifts

// Increasing subadditive h given as an explicit table, extended beyond the
// table by h(n) = table(back) + ceil(gradient (n - len)).
class HFunction {
 public:
  HFunction(std::vector<long long> table, std::optional<Rational> gradient = std::nullopt);

  long long operator()(int n) const;
  int table_size() const { return static_cast<int>(table_.size()); }
  // Throws "invalid h" if not increasing or not subadditive on [1, range].
  void validate(int range) const;

 private:
  std::vector<long long> table_;  // table_[i] = h(i+1)
  Rational gradient_;
};

struct BoundedDensityParams {
  int k = 0;
  HFunction h;
  bool is_signed = false;

  int alphabet_size() const { return is_signed ? 2 * k + 1 : k + 1; }
  Alphabet alphabet() const;  // signed alphabets carry -k..k labels
  void validate() const;
};

// h(n) = nk for n < 11, floor(nk(1-B)) + 1 for n >= 11, B = 1/(9e);
// the smallest integer-valued choice satisfying the theorem's hypotheses.
HFunction bounded_density_h_near_threshold(int k, int table_len);

// Exact DP counts. |F_n| = #{w : sum w > h(n)} (signed: |sum| > h(n)).
BigInt bounded_density_forbidden_count(const BoundedDensityParams& params, int n);
// #{w in {0..k}^n : sum > bound}; bound may be negative.
BigInt count_letter_sum_above(int k, int n, long long bound);

// Largest sum a length-i subword of some forbidden word of length in
// [i, frac_den*i] (capped at parent_cap) can be forced to exceed; the heavy
// membership threshold. Returns i*k (no constraint) when no parent exists.
long long bounded_density_heavy_threshold(const BoundedDensityParams& params, int i, int frac_den,
                                          int parent_cap);
// |H_i| via the same DP; exact for these families since padding with maximal
// letters realizes every admissible parent.
BigInt bounded_density_heavy_count(const BoundedDensityParams& params, int i, int frac_den,
                                   int parent_cap);

// Is w (letters 0..k, or codes 0..2k for signed) admissible: every window sum
// within the h-bounds.
bool bounded_density_admissible(const BoundedDensityParams& params, const Word& w);

// Rule-backed forbidden list view (exact counter + membership + enumerator
// guarded by a count limit).
ForbiddenList bounded_density_forbidden(const BoundedDensityParams& params, int horizon,
                                        const BigInt& enumerate_limit = BigInt(2000000));

// Hypothesis certificate: the threshold inequality, the binomial-style count
// bounds, the three series routes, and the zero-padding concatenability of G.
Certificate bddthm_certify(const BoundedDensityParams& params, int horizon_m,
                           mpfr_prec_t prec = Interval::kDefaultPrec);

// Extremal sums over good words (no heavy prefix/suffix against the list
// truncated at horizon_m): the largest achievable suffix sum per suffix
// length, and the largest total sum per exact word length. Entries are -1
// where no good word exists. Valid when F is empty below max_len, so that
// goodness constrains only end-window sums.
struct GoodExtremes {
  std::vector<long long> threshold;    // T(i), indexed 1..max_len
  std::vector<long long> best_suffix;  // by suffix length (= best prefix, by symmetry)
  std::vector<long long> best_total;   // by exact word length
};
GoodExtremes bounded_density_good_extremes(const BoundedDensityParams& params, int horizon_m,
                                           int max_len, int frac_den = 3);

// Exhaustive-equivalent concatenation verification over all tuples of good
// words of length <= max_len, done by exact DP over extremal prefix/suffix
// sums. Requires F_j empty for j <= max_len (true whenever h(j) >= jk there).
ConcatReport bounded_density_verify_concat(const BoundedDensityParams& params, int horizon_m,
                                           int max_len, int arity, int frac_den = 3,
                                           int extend_horizon = 8);

// ---------------------------------------------------------------------------
// the non-fully-supported example

// F = {a^N b : b != a} union {b a^N : b != a} over an alphabet of the given
// size, a = 0; exactly 2(|A|-1) words, all of length N+1.
ForbiddenList nonsupport_forbidden(int alphabet_size, int N);

}  // namespace subshift

#endif  // SUBSHIFT_FAMILIES_HPP_
