#ifndef SUBSHIFT_FORBIDDEN_HPP_
#define SUBSHIFT_FORBIDDEN_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subshift/types.hpp"

namespace subshift {

// Geometric bound |F_n| <= C * r^n asserted for every n >= start.
// Lengths in [start, horizon] are validated against the materialized profile.
struct TailModel {
  Rational C;
  Rational r;
  int start = 0;
};

// Graded forbidden list F = union F_n, either an explicit finite word set or a
// rule (exact per-length counter, optional enumerator/membership predicate)
// materialized up to a horizon. The list is kept exactly as presented: no
// reduction to minimal words unless normalized() is explicitly requested.
class ForbiddenList {
 public:
  using Counter = std::function<BigInt(int)>;
  using Materializer = std::function<std::vector<Word>(int)>;
  using Member = std::function<bool(const Word&)>;

  // complete = true means the given words are all of F; with complete = false
  // they are the materialization of F_{<=horizon} of a larger list.
  static ForbiddenList from_words(Alphabet alphabet, std::vector<Word> words,
                                  std::optional<TailModel> tail = std::nullopt,
                                  bool complete = true, int horizon = -1);
  static ForbiddenList empty_list(Alphabet alphabet) {
    return from_words(std::move(alphabet), {});
  }
  static ForbiddenList rule(Alphabet alphabet, int horizon, Counter counter,
                            Materializer materializer = nullptr, Member member = nullptr,
                            std::optional<TailModel> tail = std::nullopt,
                            int enumerable_to = -1);

  const Alphabet& alphabet() const { return *alphabet_; }
  int horizon() const { return horizon_; }
  // True when the list is complete: F_n = empty for every n > horizon.
  bool finite() const { return finite_; }
  bool normalized_view() const { return normalized_; }

  BigInt count(int n) const;
  std::vector<BigInt> profile() const;  // counts for n = 1..horizon
  bool enumerable(int n) const;
  const std::vector<Word>& words_of_length(int n) const;
  BigInt total_count() const;
  int max_present_length() const;  // largest n <= horizon with F_n nonempty, 0 if none

  bool member(const Word& w) const;
  // Whether w contains some element of F_{<=horizon} as a subword (naive scan;
  // the avoidance automaton is the fast path).
  bool occurs_in(const Word& w) const;

  const std::optional<TailModel>& tail_model() const { return tail_; }

  // Explicit view of F_{<=m}, i.e. the finite list inducing the SFT truncation.
  ForbiddenList truncated(int m) const;
  // Drops words that contain a shorter forbidden word; result is flagged.
  ForbiddenList normalized() const;

  std::string describe() const;

 private:
  ForbiddenList() : alphabet_(std::nullopt) {}
  void validate_tail() const;

  std::optional<Alphabet> alphabet_;
  int horizon_ = 0;
  bool finite_ = false;
  bool normalized_ = false;
  int enumerable_to_ = 0;
  Counter counter_;
  Materializer materializer_;
  Member member_;
  std::optional<TailModel> tail_;
  // Materialized words per length (shared so copies stay cheap).
  std::shared_ptr<std::map<int, std::vector<Word>>> words_;
  std::shared_ptr<std::map<int, BigInt>> counts_cache_;
};

}  // namespace subshift

#endif  // SUBSHIFT_FORBIDDEN_HPP_
