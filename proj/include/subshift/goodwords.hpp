#ifndef SUBSHIFT_GOODWORDS_HPP_
#define SUBSHIFT_GOODWORDS_HPP_

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "subshift/automaton.hpp"
#include "subshift/forbidden.hpp"
#include "subshift/interval.hpp"
#include "subshift/language.hpp"
#include "subshift/types.hpp"

namespace subshift {

// Subwords of forbidden words whose length is at least |w|/frac_den
// (frac_den = 3 for heavy, 4 for heavy'). Integer threshold ceil(|w|/frac_den).
class HeavySet {
 public:
  HeavySet(int frac_den, int horizon) : frac_den_(frac_den), horizon_(horizon) {}

  int frac_den() const { return frac_den_; }
  int horizon() const { return horizon_; }
  int max_length() const;
  bool contains(const Word& w) const;
  BigInt count(int n) const;
  const std::set<Word>& of_length(int n) const;
  std::vector<BigInt> profile() const;  // counts for n = 1..max_length

  void insert(Word w);

 private:
  int frac_den_;
  int horizon_;
  std::map<int, std::set<Word>> by_length_;
};

HeavySet heavy_subwords(const ForbiddenList& forbidden, int frac_den);

// G_n (or G'_n): members of L~_n with no heavy prefix and no heavy suffix.
struct GoodWordSet {
  int frac_den = 3;
  std::string admissibility;  // which language notion produced the candidates
  std::map<int, std::vector<Word>> by_length;

  const std::vector<Word>& of_length(int n) const {
    static const std::vector<Word> kEmpty;
    auto it = by_length.find(n);
    return it == by_length.end() ? kEmpty : it->second;
  }
  std::vector<Word> all() const;
};

GoodWordSet good_words(int n, const ForbiddenList& forbidden, int frac_den,
                       const AvoidanceAutomaton& automaton,
                       const BigInt& limit = BigInt(2000000));
GoodWordSet good_words_range(int n_lo, int n_hi, const ForbiddenList& forbidden, int frac_den,
                             const AvoidanceAutomaton& automaton,
                             const BigInt& limit = BigInt(2000000));

struct ConcatFailure {
  std::vector<Word> parts;
  Word concatenation;
  std::string reason;  // "contains forbidden" or "not extendable"
};

struct ConcatReport {
  int arity = 2;
  int max_len = 0;
  int extend_horizon = 0;
  int gap = 0;  // R; fixed at 0, reserved in the schema
  long long checked = 0;
  std::vector<ConcatFailure> failures;  // capped
  long long failure_count = 0;
  std::string mode;  // "exhaustive" or "sum-dp"

  bool clean() const { return failure_count == 0; }
  nlohmann::json to_json(const Alphabet* alphabet = nullptr) const;
};

// Exhaustively checks all tuples of good words with lengths <= max_len: the
// concatenation must avoid F_{<=m} and survive the extendability filter at
// horizon t. Failures are reported, not thrown.
ConcatReport verify_concat(const GoodWordSet& goodset, int arity, int max_len,
                           const AvoidanceAutomaton& automaton, int t);

struct WeightbdResult {
  Rational g_value;
  Interval bound;  // 4 sum n |F_n| c^{n/3}
  bool holds;
};

// g_c(vw) against the two-sided weight bound from the pair-concatenation
// argument; v and w must be good words for fraction 1/3.
WeightbdResult weightbd_crosscheck(const Word& v, const Word& w, const Rational& c,
                                   const ForbiddenList& forbidden,
                                   mpfr_prec_t prec = Interval::kDefaultPrec);

using CylinderEvaluator = std::function<double(const Word&)>;

struct GoodMeasureRow {
  int n;
  double mu;  // mu(G_n) = sum_{w in G_n} mu([w])
};

struct GoodMeasureReport {
  std::vector<GoodMeasureRow> rows;
  int window = 4;
  // Largest eps such that every window of `window` consecutive n contains
  // some n with mu(G_n) > eps.
  double epsilon = 0.0;
  double min_over_windows = 0.0;
};

GoodMeasureReport measure_of_goodset(const CylinderEvaluator& measure, const GoodWordSet& goodset,
                                     int n_lo, int n_hi, int window = 4);

}  // namespace subshift

#endif  // SUBSHIFT_GOODWORDS_HPP_
