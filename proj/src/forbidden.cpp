#include "subshift/forbidden.hpp"

#include <algorithm>

namespace subshift {

ForbiddenList ForbiddenList::from_words(Alphabet alphabet, std::vector<Word> words,
                                        std::optional<TailModel> tail, bool complete,
                                        int horizon) {
  ForbiddenList f;
  f.alphabet_ = std::move(alphabet);
  f.finite_ = complete;
  f.words_ = std::make_shared<std::map<int, std::vector<Word>>>();
  f.counts_cache_ = std::make_shared<std::map<int, BigInt>>();
  int max_len = 0;
  for (const Word& w : words) {
    if (w.empty()) throw SubshiftError("forbidden words must be nonempty");
    for (Letter a : w)
      if (a >= f.alphabet_->size()) throw SubshiftError("forbidden word letter out of alphabet");
    max_len = std::max(max_len, w.size());
    (*f.words_)[w.size()].push_back(w);
  }
  for (auto& [n, ws] : *f.words_) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  }
  f.horizon_ = horizon < 0 ? max_len : horizon;
  if (f.horizon_ < max_len) throw SubshiftError("horizon below the longest given word");
  f.enumerable_to_ = std::max(f.horizon_, 1 << 20);
  f.tail_ = std::move(tail);
  f.validate_tail();
  return f;
}

ForbiddenList ForbiddenList::rule(Alphabet alphabet, int horizon, Counter counter,
                                  Materializer materializer, Member member,
                                  std::optional<TailModel> tail, int enumerable_to) {
  if (!counter) throw SubshiftError("rule-defined list needs an exact counter");
  ForbiddenList f;
  f.alphabet_ = std::move(alphabet);
  f.horizon_ = horizon;
  f.finite_ = false;
  f.counter_ = std::move(counter);
  f.materializer_ = std::move(materializer);
  f.member_ = std::move(member);
  f.tail_ = std::move(tail);
  f.enumerable_to_ = f.materializer_ ? (enumerable_to < 0 ? horizon : enumerable_to) : 0;
  f.words_ = std::make_shared<std::map<int, std::vector<Word>>>();
  f.counts_cache_ = std::make_shared<std::map<int, BigInt>>();
  f.validate_tail();
  return f;
}

void ForbiddenList::validate_tail() const {
  if (!tail_) return;
  if (tail_->C < 0 || tail_->r < 0) throw SubshiftError("tail model constants must be nonnegative");
  for (int n = std::max(1, tail_->start); n <= horizon_; ++n) {
    Rational bound = tail_->C;
    for (int i = 0; i < n; ++i) bound *= tail_->r;
    if (Rational(count(n)) > bound)
      throw SubshiftError("tail model violated at materialized length " + std::to_string(n));
  }
}

BigInt ForbiddenList::count(int n) const {
  if (n <= 0) return 0;
  if (n > horizon_) {
    if (finite_) return 0;
    throw SubshiftError("horizon unsupported: count requested beyond materialized range");
  }
  if (finite_ || !counter_) {
    auto it = words_->find(n);
    return it == words_->end() ? BigInt(0) : BigInt(it->second.size());
  }
  auto it = counts_cache_->find(n);
  if (it != counts_cache_->end()) return it->second;
  BigInt c = counter_(n);
  (*counts_cache_)[n] = c;
  return c;
}

std::vector<BigInt> ForbiddenList::profile() const {
  std::vector<BigInt> out;
  out.reserve(horizon_);
  for (int n = 1; n <= horizon_; ++n) out.push_back(count(n));
  return out;
}

bool ForbiddenList::enumerable(int n) const {
  if (n > horizon_ && !finite_) return false;
  return finite_ || n <= enumerable_to_;
}

const std::vector<Word>& ForbiddenList::words_of_length(int n) const {
  static const std::vector<Word> kEmpty;
  if (n <= 0) return kEmpty;
  if (n > horizon_) {
    if (finite_) return kEmpty;
    throw SubshiftError("horizon unsupported: words requested beyond materialized range");
  }
  auto it = words_->find(n);
  if (it != words_->end()) return it->second;
  if (!materializer_) {
    // Word-backed lists are fully materialized up to the horizon; absent
    // lengths are genuinely empty. Only rule lists need a materializer.
    if (finite_ || !counter_) return kEmpty;
    throw SubshiftError("horizon unsupported: list is not enumerable");
  }
  std::vector<Word> ws = materializer_(n);
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  if (BigInt(ws.size()) != count(n))
    throw SubshiftError("rule materializer disagrees with counter at length " + std::to_string(n));
  return (*words_)[n] = std::move(ws);
}

BigInt ForbiddenList::total_count() const {
  BigInt t = 0;
  for (int n = 1; n <= horizon_; ++n) t += count(n);
  return t;
}

int ForbiddenList::max_present_length() const {
  for (int n = horizon_; n >= 1; --n)
    if (count(n) > 0) return n;
  return 0;
}

bool ForbiddenList::member(const Word& w) const {
  if (w.empty()) return false;
  if (member_) return member_(w);
  if (w.size() > horizon_) {
    if (finite_) return false;
    throw SubshiftError("horizon unsupported: membership beyond materialized range");
  }
  const auto& ws = words_of_length(w.size());
  return std::binary_search(ws.begin(), ws.end(), w);
}

bool ForbiddenList::occurs_in(const Word& w) const {
  for (int n = 1; n <= std::min(horizon_, w.size()); ++n) {
    if (count(n) == 0) continue;
    const auto& ws = words_of_length(n);
    for (const Word& v : ws)
      if (w.contains(v)) return true;
  }
  return false;
}

ForbiddenList ForbiddenList::truncated(int m) const {
  std::vector<Word> ws;
  for (int n = 1; n <= std::min(m, horizon_); ++n) {
    if (!enumerable(n))
      throw SubshiftError("horizon unsupported: cannot materialize truncation");
    const auto& fn = words_of_length(n);
    ws.insert(ws.end(), fn.begin(), fn.end());
  }
  return from_words(*alphabet_, std::move(ws));
}

ForbiddenList ForbiddenList::normalized() const {
  std::vector<Word> kept;
  for (int n = 1; n <= horizon_; ++n) {
    for (const Word& w : words_of_length(n)) {
      bool redundant = false;
      for (int j = 1; j < n && !redundant; ++j) {
        if (count(j) == 0) continue;
        for (const Word& v : words_of_length(j))
          if (w.contains(v)) { redundant = true; break; }
      }
      if (!redundant) kept.push_back(w);
    }
  }
  ForbiddenList f = from_words(*alphabet_, std::move(kept), tail_);
  f.normalized_ = true;
  return f;
}

std::string ForbiddenList::describe() const {
  std::string s = "alphabet=" + std::to_string(alphabet_->size()) +
                  " horizon=" + std::to_string(horizon_) + (finite_ ? " finite" : " truncated");
  if (tail_)
    s += " tail(C=" + tail_->C.str() + ",r=" + tail_->r.str() + ",from=" +
         std::to_string(tail_->start) + ")";
  if (normalized_) s += " normalized";
  return s;
}

}  // namespace subshift
