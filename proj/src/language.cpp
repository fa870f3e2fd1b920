#include "subshift/language.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>

namespace subshift {

double ln_big(const BigInt& v) {
  if (v <= 0) return std::numeric_limits<double>::quiet_NaN();
  mpfr_t x;
  mpfr_init2(x, 64);
  mpfr_set_z(x, v.backend().data(), MPFR_RNDN);
  mpfr_log(x, x, MPFR_RNDN);
  double out = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return out;
}

std::vector<BigInt> count_language_table(const AvoidanceAutomaton& automaton, int n_max) {
  const int q = automaton.alphabet().size();
  std::vector<BigInt> dp(automaton.live_states(), 0), next(automaton.live_states());
  dp[automaton.root()] = 1;
  std::vector<BigInt> counts;
  counts.reserve(n_max + 1);
  counts.push_back(1);  // |L~_0| = 1
  for (int step = 1; step <= n_max; ++step) {
    for (auto& x : next) x = 0;
    for (int s = 0; s < automaton.live_states(); ++s) {
      if (dp[s] == 0) continue;
      for (Letter a = 0; a < q; ++a) {
        auto t = automaton.step(s, a);
        if (t != AvoidanceAutomaton::kDead) next[t] += dp[s];
      }
    }
    dp.swap(next);
    BigInt total = 0;
    for (const auto& x : dp) total += x;
    counts.push_back(std::move(total));
  }
  return counts;
}

BigInt count_language(const AvoidanceAutomaton& automaton, int n) {
  if (n < 0) throw SubshiftError("word length must be nonnegative");
  return count_language_table(automaton, n).back();
}

namespace {

void enumerate_rec(const AvoidanceAutomaton& automaton, AvoidanceAutomaton::State s, int left,
                   Word& scratch, std::vector<Word>& out) {
  if (left == 0) {
    out.push_back(scratch);
    return;
  }
  for (Letter a = 0; a < automaton.alphabet().size(); ++a) {
    auto t = automaton.step(s, a);
    if (t == AvoidanceAutomaton::kDead) continue;
    scratch.push_back(a);
    enumerate_rec(automaton, t, left - 1, scratch, out);
    scratch.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_language(const AvoidanceAutomaton& automaton, int n,
                                     const BigInt& limit) {
  BigInt total = count_language(automaton, n);
  if (total > limit) throw EnumerationTooLarge(total);
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(total));
  Word scratch;
  enumerate_rec(automaton, automaton.root(), n, scratch, out);
  return out;
}

ExtendabilityOracle::ExtendabilityOracle(const AvoidanceAutomaton& automaton, int t)
    : automaton_(automaton), t_(t) {
  if (t < 0) throw SubshiftError("extendability horizon must be nonnegative");
  const int q = automaton.alphabet().size();
  std::vector<char> cur(automaton.live_states(), 0), nxt(automaton.live_states(), 0);
  cur[automaton.root()] = 1;
  for (int i = 0; i < t; ++i) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (int s = 0; s < automaton.live_states(); ++s) {
      if (!cur[s]) continue;
      for (Letter a = 0; a < q; ++a) {
        auto u = automaton.step(s, a);
        if (u != AvoidanceAutomaton::kDead) nxt[u] = 1;
      }
    }
    cur.swap(nxt);
  }
  for (int s = 0; s < automaton.live_states(); ++s)
    if (cur[s]) starts_.push_back(static_cast<AvoidanceAutomaton::State>(s));

  // can_ext_[s]: a live path of length t leaves s.
  std::vector<char> ok(automaton.live_states(), 1), ok_next(automaton.live_states());
  for (int i = 0; i < t; ++i) {
    for (int s = 0; s < automaton.live_states(); ++s) {
      char any = 0;
      for (Letter a = 0; a < q && !any; ++a) {
        auto u = automaton.step(s, a);
        if (u != AvoidanceAutomaton::kDead && ok[u]) any = 1;
      }
      ok_next[s] = any;
    }
    ok.swap(ok_next);
  }
  can_ext_ = std::move(ok);
}

bool ExtendabilityOracle::extendable(const Word& w) const {
  for (auto s : starts_) {
    auto e = automaton_.run(s, w);
    if (e != AvoidanceAutomaton::kDead && can_ext_[e]) return true;
  }
  return false;
}

std::vector<Word> extendability_filter(const std::vector<Word>& words,
                                       const AvoidanceAutomaton& automaton, int t) {
  ExtendabilityOracle oracle(automaton, t);
  std::vector<Word> out;
  for (const Word& w : words)
    if (oracle.extendable(w)) out.push_back(w);
  return out;
}

LanguageTable LanguageTable::build(const AvoidanceAutomaton& automaton, int n_max,
                                   bool exact_for_L) {
  LanguageTable t;
  t.counts_ = count_language_table(automaton, n_max);
  t.exact_for_L_ = exact_for_L;
  t.alphabet_size_ = automaton.alphabet().size();
  t.horizon_ = automaton.horizon();
  return t;
}

LanguageTable LanguageTable::from_counts(std::vector<BigInt> counts_from_zero, bool exact_for_L,
                                         int alphabet_size, int horizon) {
  LanguageTable t;
  t.counts_ = std::move(counts_from_zero);
  t.exact_for_L_ = exact_for_L;
  t.alphabet_size_ = alphabet_size;
  t.horizon_ = horizon;
  return t;
}

double LanguageTable::h_upper(int n) const {
  if (n <= 0 || counts_[n] <= 0) return std::numeric_limits<double>::quiet_NaN();
  return ln_big(counts_[n]) / n;
}

bool LanguageTable::empty_subshift() const { return empty_from() >= 0; }

int LanguageTable::empty_from() const {
  for (int n = 1; n <= n_max(); ++n)
    if (counts_[n] == 0) return n;
  return -1;
}

std::vector<LanguageRow> LanguageTable::rows() const {
  std::vector<LanguageRow> out;
  for (int n = 0; n <= n_max(); ++n)
    out.push_back({n, counts_[n], h_upper(n), exact_for_L_});
  return out;
}

void LanguageTable::write_csv(std::ostream& out) const {
  out << "n,count,h_n,exact\n";
  for (int n = 0; n <= n_max(); ++n) {
    char buf[64];
    double h = h_upper(n);
    if (std::isnan(h))
      std::snprintf(buf, sizeof buf, "nan");
    else
      std::snprintf(buf, sizeof buf, "%.12f", h);
    out << n << ',' << counts_[n].str() << ',' << buf << ',' << (exact_for_L_ ? 1 : 0) << '\n';
  }
}

LanguageTable LanguageTable::read_csv(std::istream& in, int alphabet_size, int horizon) {
  std::string line;
  if (!std::getline(in, line)) throw SubshiftError("empty language table csv");
  std::vector<BigInt> counts;
  bool exact = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string n_s, count_s, h_s, exact_s;
    std::getline(ss, n_s, ',');
    std::getline(ss, count_s, ',');
    std::getline(ss, h_s, ',');
    std::getline(ss, exact_s, ',');
    counts.emplace_back(count_s);
    exact = exact_s == "1";
  }
  return from_counts(std::move(counts), exact, alphabet_size, horizon);
}

EntropyEstimates entropy_estimates(const LanguageTable& table,
                                   std::vector<EntropyLowerBound> candidates) {
  EntropyEstimates est;
  est.h_upper.assign(table.n_max() + 1, std::numeric_limits<double>::quiet_NaN());
  for (int n = 1; n <= table.n_max(); ++n) est.h_upper[n] = table.h_upper(n);
  est.empty_from = table.empty_from();
  est.empty_subshift = est.empty_from >= 0;
  for (const auto& cand : candidates)
    if (!est.lower || cand.value > est.lower->value) est.lower = cand;
  return est;
}

}  // namespace subshift
