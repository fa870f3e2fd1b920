#include "subshift/goodwords.hpp"

#include <algorithm>
#include <cmath>

#include "subshift/series.hpp"
#include "subshift/weights.hpp"

namespace subshift {

int HeavySet::max_length() const {
  return by_length_.empty() ? 0 : by_length_.rbegin()->first;
}

bool HeavySet::contains(const Word& w) const {
  auto it = by_length_.find(w.size());
  return it != by_length_.end() && it->second.count(w) > 0;
}

BigInt HeavySet::count(int n) const {
  auto it = by_length_.find(n);
  return it == by_length_.end() ? BigInt(0) : BigInt(it->second.size());
}

const std::set<Word>& HeavySet::of_length(int n) const {
  static const std::set<Word> kEmpty;
  auto it = by_length_.find(n);
  return it == by_length_.end() ? kEmpty : it->second;
}

std::vector<BigInt> HeavySet::profile() const {
  std::vector<BigInt> p(max_length() + 1, BigInt(0));
  for (const auto& [n, ws] : by_length_) p[n] = BigInt(ws.size());
  return p;
}

void HeavySet::insert(Word w) { by_length_[w.size()].insert(std::move(w)); }

HeavySet heavy_subwords(const ForbiddenList& forbidden, int frac_den) {
  if (frac_den < 1) throw SubshiftError("heavy fraction denominator must be >= 1");
  HeavySet heavy(frac_den, forbidden.horizon());
  for (int n = 1; n <= forbidden.horizon(); ++n) {
    if (forbidden.count(n) == 0) continue;
    int min_len = (n + frac_den - 1) / frac_den;  // ceil(n / frac_den)
    for (const Word& w : forbidden.words_of_length(n))
      for (int len = min_len; len <= n; ++len)
        for (int pos = 0; pos + len <= n; ++pos) heavy.insert(w.subword(pos, len));
  }
  return heavy;
}

namespace {

bool is_good(const Word& w, const HeavySet& heavy) {
  int max_check = std::min(w.size(), heavy.max_length());
  for (int len = 1; len <= max_check; ++len) {
    if (heavy.contains(w.prefix(len))) return false;
    if (heavy.contains(w.suffix(len))) return false;
  }
  return true;
}

}  // namespace

GoodWordSet good_words_range(int n_lo, int n_hi, const ForbiddenList& forbidden, int frac_den,
                             const AvoidanceAutomaton& automaton, const BigInt& limit) {
  HeavySet heavy = heavy_subwords(forbidden, frac_den);
  GoodWordSet out;
  out.frac_den = frac_den;
  out.admissibility = "locally_admissible(m=" + std::to_string(automaton.horizon()) + ")";
  for (int n = n_lo; n <= n_hi; ++n) {
    std::vector<Word> lang = enumerate_language(automaton, n, limit);
    std::vector<Word> good;
    for (Word& w : lang)
      if (is_good(w, heavy)) good.push_back(std::move(w));
    out.by_length[n] = std::move(good);
  }
  return out;
}

GoodWordSet good_words(int n, const ForbiddenList& forbidden, int frac_den,
                       const AvoidanceAutomaton& automaton, const BigInt& limit) {
  return good_words_range(n, n, forbidden, frac_den, automaton, limit);
}

std::vector<Word> GoodWordSet::all() const {
  std::vector<Word> out;
  for (const auto& [n, ws] : by_length) out.insert(out.end(), ws.begin(), ws.end());
  return out;
}

nlohmann::json ConcatReport::to_json(const Alphabet* alphabet) const {
  nlohmann::json j;
  j["arity"] = arity;
  j["max_len"] = max_len;
  j["extend_horizon"] = extend_horizon;
  j["R"] = gap;
  j["checked"] = checked;
  j["failure_count"] = failure_count;
  j["mode"] = mode;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) {
    nlohmann::json e;
    e["parts"] = nlohmann::json::array();
    for (const auto& p : f.parts) e["parts"].push_back(p.letters());
    e["concatenation"] = f.concatenation.str(alphabet);
    e["reason"] = f.reason;
    j["failures"].push_back(e);
  }
  return j;
}

ConcatReport verify_concat(const GoodWordSet& goodset, int arity, int max_len,
                           const AvoidanceAutomaton& automaton, int t) {
  if (arity != 2 && arity != 3) throw SubshiftError("verify_concat handles arity 2 or 3");
  ConcatReport report;
  report.arity = arity;
  report.max_len = max_len;
  report.extend_horizon = t;
  report.mode = "exhaustive";

  std::vector<Word> words;
  for (const auto& [n, ws] : goodset.by_length)
    if (n <= max_len) words.insert(words.end(), ws.begin(), ws.end());

  const int states = automaton.live_states();
  ExtendabilityOracle oracle(automaton, t);

  // Per-word state map: where each live state lands after reading the word.
  const auto kDead = AvoidanceAutomaton::kDead;
  std::vector<std::vector<AvoidanceAutomaton::State>> maps(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    maps[i].resize(states);
    for (int s = 0; s < states; ++s) maps[i][s] = automaton.run(s, words[i]);
  }

  auto record_failure = [&](std::vector<std::size_t> idx, const std::string& reason) {
    ++report.failure_count;
    if (report.failures.size() >= 32) return;
    ConcatFailure f;
    Word cat;
    for (auto i : idx) {
      f.parts.push_back(words[i]);
      cat = cat + words[i];
    }
    f.concatenation = std::move(cat);
    f.reason = reason;
    report.failures.push_back(std::move(f));
  };

  auto check_tuple = [&](const std::vector<std::size_t>& idx) {
    ++report.checked;
    // Admissibility of the concatenation, from the root.
    auto s = automaton.root();
    for (auto i : idx) {
      s = maps[i][s];
      if (s == kDead) {
        record_failure(idx, "contains forbidden");
        return;
      }
    }
    // Extendability: some admissible u of length t leads into a state from
    // which the concatenation runs alive into a t-extendable state.
    bool extendable = false;
    for (auto start : oracle.start_states()) {
      auto e = start;
      bool alive = true;
      for (auto i : idx) {
        e = maps[i][e];
        if (e == kDead) { alive = false; break; }
      }
      if (alive && oracle.can_continue(e)) { extendable = true; break; }
    }
    if (!extendable) record_failure(idx, "not extendable");
  };

  std::vector<std::size_t> idx(arity);
  for (std::size_t i = 0; i < words.size(); ++i) {
    idx[0] = i;
    for (std::size_t j = 0; j < words.size(); ++j) {
      idx[1] = j;
      if (arity == 2) {
        check_tuple(idx);
      } else {
        for (std::size_t k = 0; k < words.size(); ++k) {
          idx[2] = k;
          check_tuple(idx);
        }
      }
    }
  }
  return report;
}

WeightbdResult weightbd_crosscheck(const Word& v, const Word& w, const Rational& c,
                                   const ForbiddenList& forbidden, mpfr_prec_t prec) {
  HeavySet heavy = heavy_subwords(forbidden, 3);
  if (!is_good(v, heavy) || !is_good(w, heavy))
    throw SubshiftError("precondition violated: inputs must be good words (fraction 1/3)");
  WeightParams params{c};
  WeightbdResult r{g_weight(v + w, forbidden, params), Interval(prec), false};
  SeriesValue s = eval_series(SeriesSpec::from_forbidden(forbidden, 1, c, 3, prec));
  r.bound = Interval::of_long(4, prec) * s.box;
  // holds unless the exact value is certainly above the whole bound interval
  r.holds = !Interval::of_rational(r.g_value, prec).strictly_above(r.bound);
  return r;
}

GoodMeasureReport measure_of_goodset(const CylinderEvaluator& measure, const GoodWordSet& goodset,
                                     int n_lo, int n_hi, int window) {
  GoodMeasureReport report;
  report.window = window;
  for (int n = n_lo; n <= n_hi; ++n) {
    double total = 0.0;
    for (const Word& w : goodset.of_length(n)) total += measure(w);
    report.rows.push_back({n, total});
  }
  double eps = 1e300;
  bool any_window = false;
  double min_windows = 1e300;
  for (std::size_t lo = 0; lo + window <= report.rows.size(); ++lo) {
    double best = 0.0, least = 1e300;
    for (int i = 0; i < window; ++i) {
      best = std::max(best, report.rows[lo + i].mu);
      least = std::min(least, report.rows[lo + i].mu);
    }
    eps = std::min(eps, best);
    min_windows = std::min(min_windows, least);
    any_window = true;
  }
  report.epsilon = any_window ? eps : 0.0;
  report.min_over_windows = any_window ? min_windows : 0.0;
  return report;
}

}  // namespace subshift
