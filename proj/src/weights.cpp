#include "subshift/weights.hpp"

#include <algorithm>

namespace subshift {

namespace {

// c^0..c^max as exact rationals.
std::vector<Rational> powers(const Rational& c, int max) {
  std::vector<Rational> p(max + 1);
  p[0] = 1;
  for (int i = 1; i <= max; ++i) p[i] = p[i - 1] * c;
  return p;
}

bool suffix_matches_prefix(const Word& w, const Word& v, int s) {
  // last s letters of w == first s letters of v
  int off = w.size() - s;
  for (int i = 0; i < s; ++i)
    if (w[off + i] != v[i]) return false;
  return true;
}

bool prefix_matches_suffix(const Word& w, const Word& v, int s) {
  // first s letters of w == last s letters of v
  int off = v.size() - s;
  for (int i = 0; i < s; ++i)
    if (w[i] != v[off + i]) return false;
  return true;
}

Rational hypothesis_series(const ForbiddenList& forbidden, const Rational& c) {
  Rational sum = 0;
  auto cp = powers(c, forbidden.horizon());
  for (int n = 1; n <= forbidden.horizon(); ++n)
    sum += Rational(forbidden.count(n)) * cp[n];
  return sum;
}

// Bound on the series mass neglected beyond the horizon, from the tail model.
// Weights themselves are always computed over F_{<=m}; the trace reports this
// bound so a reader can confirm weight + tail < 1.
std::string tail_mass_note(const ForbiddenList& forbidden, const Rational& c) {
  if (forbidden.finite() || !forbidden.tail_model()) return "";
  const TailModel& tail = *forbidden.tail_model();
  Rational rc = tail.r * c;
  if (rc >= 1) return "; tail mass beyond horizon unbounded (r*c >= 1)";
  int n0 = std::max(forbidden.horizon() + 1, tail.start);
  Rational rc_n0 = 1;
  for (int i = 0; i < n0; ++i) rc_n0 *= rc;
  Rational head = tail.C * rc_n0 / (1 - rc);
  return "; neglected tail mass <= " + head.str();
}

}  // namespace

Rational f_weight(const Word& w, const ForbiddenList& forbidden, const WeightParams& params) {
  params.validate();
  Rational total = 0;
  auto cp = powers(params.c, forbidden.horizon());
  for (int n = 1; n <= forbidden.horizon(); ++n) {
    if (forbidden.count(n) == 0) continue;
    for (const Word& v : forbidden.words_of_length(n)) {
      // wr ends with v  <=>  w's suffix of length s equals v's prefix of
      // length s and r supplies v's remaining n - s letters.
      for (int s = 1; s <= std::min(n, w.size()); ++s)
        if (suffix_matches_prefix(w, v, s)) total += cp[n - s];
    }
  }
  return total;
}

std::pair<Rational, Rational> f_recursion_check(const Word& w, const ForbiddenList& forbidden,
                                                const WeightParams& params) {
  params.validate();
  Rational lhs = 0;
  Word wa = w;
  wa.push_back(0);
  for (Letter a = 0; a < forbidden.alphabet().size(); ++a) {
    wa.pop_back();
    wa.push_back(a);
    lhs += f_weight(wa, forbidden, params);
  }
  Rational rhs = (hypothesis_series(forbidden, params.c) + f_weight(w, forbidden, params)) /
                 params.c;
  return {lhs, rhs};
}

Rational g_weight(const Word& w, const ForbiddenList& forbidden, const WeightParams& params) {
  params.validate();
  if (w.empty()) return 0;
  Rational total = 0;
  const Rational qc = Rational(forbidden.alphabet().size()) * params.c;
  auto cp = powers(params.c, forbidden.horizon());
  for (int n = 1; n <= forbidden.horizon(); ++n) {
    if (forbidden.count(n) == 0) continue;
    for (const Word& v : forbidden.words_of_length(n)) {
      // Left overlaps: l w begins with v, so w's prefix of length s equals
      // v's suffix of length s and l supplies the first n - s letters.
      for (int s = 1; s <= std::min(n, w.size()); ++s)
        if (prefix_matches_suffix(w, v, s)) total += cp[n - s];
      if (params.right_term == GRightTerm::kEndsWithOverlap) {
        for (int s = 1; s <= std::min(n, w.size()); ++s)
          if (suffix_matches_prefix(w, v, s)) total += cp[n - s];
      } else {
        // Literal "w r begins with v".
        if (w.size() >= n) {
          if (w.has_prefix(v)) {
            Rational geo = 0, term = 1;
            for (int t = 0; t < n; ++t) { geo += term; term *= qc; }
            total += geo;
          }
        } else if (v.has_prefix(w)) {
          Rational geo = 0, term = cp[n - w.size()];
          for (int j = 0; j < w.size(); ++j) { geo += term; term *= qc; }
          total += geo;
        }
      }
      // Interior containments l w r = v with |l|, |r| > 0, coefficient 2.
      if (n >= w.size() + 2) {
        int occurrences = 0;
        for (int pos = 1; pos + w.size() <= n - 1; ++pos) {
          bool hit = true;
          for (int i = 0; i < w.size() && hit; ++i) hit = v[pos + i] == w[i];
          if (hit) ++occurrences;
        }
        if (occurrences > 0) total += Rational(2 * occurrences) * cp[n - w.size()];
      }
    }
  }
  return total;
}

Word ExtensionTrace::final_word() const {
  if (direction == "right") {
    Word w = start;
    for (const auto& s : steps) w.push_back(s.letters[0]);
    return w;
  }
  Word w = start;
  for (const auto& s : steps) {
    w.push_front(s.letters[0]);
    w.push_back(s.letters[1]);
  }
  return w;
}

nlohmann::json ExtensionTrace::to_json(const Alphabet* alphabet) const {
  nlohmann::json j;
  j["start"] = start.str(alphabet);
  j["direction"] = direction;
  j["hypothesis"] = hypothesis;
  j["hypothesis_ok"] = hypothesis_ok;
  j["steps"] = nlohmann::json::array();
  for (const auto& s : steps) {
    nlohmann::json step;
    step["letters"] = s.letters;
    step["weight_num"] = numerator(s.weight).str();
    step["weight_den"] = denominator(s.weight).str();
    j["steps"].push_back(step);
  }
  j["final"] = final_word().str(alphabet);
  return j;
}

ExtensionTrace extend_right_greedy(const Word& w, const ForbiddenList& forbidden,
                                   const WeightParams& params, int steps, bool attempt_anyway) {
  params.validate();
  const int q = forbidden.alphabet().size();
  ExtensionTrace trace;
  trace.start = w;
  trace.direction = "right";
  Rational series = hypothesis_series(forbidden, params.c);
  Rational rhs = Rational(q) * params.c - 1;
  trace.hypothesis = "sum_v c^{|v|} = " + series.str() + " <= |A|c - 1 = " + rhs.str() +
                     tail_mass_note(forbidden, params.c);
  trace.hypothesis_ok = series <= rhs;
  if (!trace.hypothesis_ok && !attempt_anyway)
    throw SubshiftError("Miller hypothesis not satisfied: " + trace.hypothesis);
  if (f_weight(w, forbidden, params) >= 1)
    throw SubshiftError("start word has weight >= 1");

  Word cur = w;
  for (int i = 0; i < steps; ++i) {
    bool placed = false;
    for (Letter a = 0; a < q && !placed; ++a) {
      cur.push_back(a);
      Rational fw = f_weight(cur, forbidden, params);
      if (fw < 1) {
        trace.steps.push_back({{a}, fw});
        placed = true;
      } else {
        cur.pop_back();
      }
    }
    if (!placed) throw SubshiftError("extension stuck: no letter keeps weight below 1");
  }
  return trace;
}

ExtensionTrace extend_two_sided(const Word& w, const ForbiddenList& forbidden,
                                const WeightParams& params, int steps, bool attempt_anyway) {
  params.validate();
  const int q = forbidden.alphabet().size();
  ExtensionTrace trace;
  trace.start = w;
  trace.direction = "two-sided";
  Rational series = hypothesis_series(forbidden, params.c);
  Rational rhs = (Rational(q) * params.c - 1) / 2;
  trace.hypothesis = "sum_n |F_n| c^n = " + series.str() + " < (|A|c - 1)/2 = " + rhs.str() +
                     tail_mass_note(forbidden, params.c);
  trace.hypothesis_ok = series < rhs;
  if (!trace.hypothesis_ok && !attempt_anyway)
    throw SubshiftError("Miller hypothesis not satisfied: " + trace.hypothesis);
  if (forbidden.occurs_in(w)) throw SubshiftError("start word contains a forbidden word");
  if (g_weight(w, forbidden, params) >= 1)
    throw SubshiftError("start word has weight >= 1");

  Word cur = w;
  for (int i = 0; i < steps; ++i) {
    bool placed = false;
    for (Letter a = 0; a < q && !placed; ++a) {
      for (Letter b = 0; b < q && !placed; ++b) {
        Word cand = cur;
        cand.push_front(a);
        cand.push_back(b);
        Rational gw = g_weight(cand, forbidden, params);
        if (gw < 1) {
          trace.steps.push_back({{a, b}, gw});
          cur = std::move(cand);
          placed = true;
        }
      }
    }
    if (!placed) throw SubshiftError("extension stuck: no pair keeps weight below 1");
  }
  return trace;
}

Certificate millerent_bound(const ForbiddenList& forbidden, const Rational& c, int k,
                            mpfr_prec_t prec) {
  const int q = forbidden.alphabet().size();
  if (!(c > Rational(1, q))) throw SubshiftError("millerent requires c > 1/|A|");
  if (k < 1 || k >= q) throw SubshiftError("millerent requires 1 <= k < |A|");
  Certificate cert;
  cert.theorem = "millerent";
  cert.inputs = forbidden.describe();
  cert.precision_bits = static_cast<int>(prec);
  cert.params["c"] = c.str();
  cert.params["k"] = std::to_string(k);

  if (!forbidden.finite() && !forbidden.tail_model()) {
    cert.missing = "cannot bound series: tail model missing for implicit list";
    return cert;
  }
  SeriesSpec spec = SeriesSpec::from_forbidden(forbidden, 0, c, 1, prec);
  SeriesValue series = eval_series(spec);
  Rational rhs = c * Rational(q - k + 1) - 1;
  cert.checks.push_back(check_less("sum_v c^{|v|} < c(|A| - k + 1) - 1", series, rhs));

  if (cert.passed()) {
    // Empirical cross-check: along 20 greedy steps, >= k letters stay < 1.
    WeightParams params{c};
    Word cur;
    bool ok = true;
    for (int step = 0; step < 20 && ok; ++step) {
      int good_letters = 0;
      Letter pick = 0;
      bool picked = false;
      for (Letter a = 0; a < q; ++a) {
        cur.push_back(a);
        if (f_weight(cur, forbidden, params) < 1) {
          ++good_letters;
          if (!picked) { pick = a; picked = true; }
        }
        cur.pop_back();
      }
      ok = good_letters >= k;
      if (ok) cur.push_back(pick);
    }
    CheckRecord emp;
    emp.name = "empirical: >= k letters of weight < 1 at each of 20 greedy steps";
    emp.lhs = ok ? "observed" : "violated";
    emp.relation = ">=";
    emp.rhs = std::to_string(k);
    emp.verdict = ok ? Verdict::kPass : Verdict::kFail;
    cert.checks.push_back(emp);
    cert.conclusions.push_back("h(X) >= ln(" + std::to_string(k) + ")");
  }
  return cert;
}

}  // namespace subshift
