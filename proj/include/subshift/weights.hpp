#ifndef SUBSHIFT_WEIGHTS_HPP_
#define SUBSHIFT_WEIGHTS_HPP_

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "subshift/automaton.hpp"
#include "subshift/certificate.hpp"
#include "subshift/forbidden.hpp"
#include "subshift/types.hpp"

namespace subshift {

// The printed definition of the two-sided weight's second summand reads
// "w r begins with v"; the proof uses it as a right-boundary overlap
// ("a w b r ends with v"). Both readings are available; the right-overlap
// reading is the default and is what every report records.
enum class GRightTerm { kEndsWithOverlap, kLiteralBeginsWith };

struct WeightParams {
  Rational c;  // in (0, 1]
  GRightTerm right_term = GRightTerm::kEndsWithOverlap;

  void validate() const {
    if (c <= 0 || c > 1) throw SubshiftError("weight parameter c must be in (0, 1]");
  }
};

// f_c(w) = sum_{v in F} sum_{r : |r| < |v|, wr ends with v} c^{|r|}.
Rational f_weight(const Word& w, const ForbiddenList& forbidden, const WeightParams& params);

// Both sides of sum_a f_c(wa) = (1/c) (sum_v c^{|v|} + f_c(w)), evaluated
// independently; equal as exact rationals for finite truncations.
std::pair<Rational, Rational> f_recursion_check(const Word& w, const ForbiddenList& forbidden,
                                                const WeightParams& params);

// Two-sided weight g_c(w): left overlaps + right overlaps + interior
// containments (the last with coefficient 2).
Rational g_weight(const Word& w, const ForbiddenList& forbidden, const WeightParams& params);

struct TraceStep {
  std::vector<Letter> letters;  // one letter (right extension) or a pair (a, b)
  Rational weight;
};

struct ExtensionTrace {
  Word start;
  std::string direction;  // "right" or "two-sided"
  bool hypothesis_ok = false;
  std::string hypothesis;  // the series comparison that was checked
  std::vector<TraceStep> steps;

  Word final_word() const;
  nlohmann::json to_json(const Alphabet* alphabet = nullptr) const;
};

// Greedy right extension keeping f_c < 1; the least admissible letter is
// always chosen. Unless attempt_anyway is set, requires the series hypothesis
// sum_v c^{|v|} <= |A| c - 1.
ExtensionTrace extend_right_greedy(const Word& w, const ForbiddenList& forbidden,
                                   const WeightParams& params, int steps,
                                   bool attempt_anyway = false);

// Greedy two-sided extension keeping g_c < 1, least pair (a, b) first.
// Hypothesis: sum_n |F_n| c^n < (|A| c - 1) / 2.
ExtensionTrace extend_two_sided(const Word& w, const ForbiddenList& forbidden,
                                const WeightParams& params, int steps,
                                bool attempt_anyway = false);

// Entropy floor h(X) >= ln k from sum_v c^{|v|} < c(|A| - k + 1) - 1, with an
// empirical cross-check that >= k letters stay below weight 1 along a greedy
// run of 20 steps.
Certificate millerent_bound(const ForbiddenList& forbidden, const Rational& c, int k,
                            mpfr_prec_t prec = Interval::kDefaultPrec);

}  // namespace subshift

#endif  // SUBSHIFT_WEIGHTS_HPP_
