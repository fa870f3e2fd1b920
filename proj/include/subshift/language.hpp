#ifndef SUBSHIFT_LANGUAGE_HPP_
#define SUBSHIFT_LANGUAGE_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "subshift/automaton.hpp"
#include "subshift/types.hpp"

namespace subshift {

// |{w in A^n : w avoids F_{<=m}}| by DP over automaton states.
BigInt count_language(const AvoidanceAutomaton& automaton, int n);
// Counts for n = 0..n_max in one sweep.
std::vector<BigInt> count_language_table(const AvoidanceAutomaton& automaton, int n_max);

// The exact set counted by count_language, in lexicographic order.
// Throws EnumerationTooLarge (carrying the count) when it exceeds limit.
std::vector<Word> enumerate_language(const AvoidanceAutomaton& automaton, int n,
                                     const BigInt& limit);

// Keeps w iff there exist u, v of length t with u.w.v locally admissible.
std::vector<Word> extendability_filter(const std::vector<Word>& words,
                                       const AvoidanceAutomaton& automaton, int t);

// Reusable state machinery for extendability checks against one automaton.
class ExtendabilityOracle {
 public:
  ExtendabilityOracle(const AvoidanceAutomaton& automaton, int t);
  bool extendable(const Word& w) const;
  // True when some admissible u of length t leads into s and some admissible
  // continuation of length t leaves the state reached from s.
  bool extendable_from_state_set(const Word& w) const { return extendable(w); }
  const std::vector<AvoidanceAutomaton::State>& start_states() const { return starts_; }
  bool can_continue(AvoidanceAutomaton::State s) const { return can_ext_[s]; }

 private:
  const AvoidanceAutomaton& automaton_;
  int t_;
  std::vector<AvoidanceAutomaton::State> starts_;  // states reachable in exactly t live steps
  std::vector<char> can_ext_;                      // live path of length t exists from state
};

// Per-length counts of the locally admissible language, with entropy estimates.
struct LanguageRow {
  int n;
  BigInt count;
  double h_n;          // (1/n) ln count, NaN when count == 0 or n == 0
  bool exact_for_L;    // count equals |L_n(X)| (family-guaranteed), not just |L~_n|
};

class LanguageTable {
 public:
  static LanguageTable build(const AvoidanceAutomaton& automaton, int n_max,
                             bool exact_for_L = false);
  static LanguageTable from_counts(std::vector<BigInt> counts_from_zero, bool exact_for_L,
                                   int alphabet_size, int horizon);

  int n_max() const { return static_cast<int>(counts_.size()) - 1; }
  const BigInt& count(int n) const { return counts_[n]; }
  double h_upper(int n) const;
  bool exact_for_L() const { return exact_for_L_; }
  int alphabet_size() const { return alphabet_size_; }
  int horizon() const { return horizon_; }
  bool empty_subshift() const;  // some |L~_n| = 0
  int empty_from() const;       // least such n, -1 if none
  std::vector<LanguageRow> rows() const;

  void write_csv(std::ostream& out) const;
  static LanguageTable read_csv(std::istream& in, int alphabet_size, int horizon);

 private:
  std::vector<BigInt> counts_;  // counts_[n], n = 0..n_max
  bool exact_for_L_ = false;
  int alphabet_size_ = 0;
  int horizon_ = 0;
};

struct EntropyLowerBound {
  double value;
  std::string provenance;
};

struct EntropyEstimates {
  std::vector<double> h_upper;  // h_upper[n] for n = 1..; index 0 unused (NaN)
  std::optional<EntropyLowerBound> lower;
  bool empty_subshift = false;
  int empty_from = -1;

  const EntropyLowerBound& require_lower() const {
    if (!lower) throw SubshiftError("no lower bound available");
    return *lower;
  }
};

// h_upper_seq(n) = (1/n) ln |L~_n|; the lower bound is the best of the supplied
// certified candidates, with provenance kept.
EntropyEstimates entropy_estimates(const LanguageTable& table,
                                   std::vector<EntropyLowerBound> candidates = {});

// ln of a positive big integer.
double ln_big(const BigInt& v);

}  // namespace subshift

#endif  // SUBSHIFT_LANGUAGE_HPP_
