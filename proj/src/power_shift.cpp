#include "subshift/power_shift.hpp"

#include <algorithm>
#include <functional>

#include "subshift/language.hpp"

namespace subshift {

namespace {

// DFS over tuples (v_1..v_j). The running concatenation must stay alive
// through v_1..v_{j-1}; the full concatenation must die; the suffix
// concatenation v_2..v_j must stay alive.
void tuples_rec(const AvoidanceAutomaton& aut, const std::vector<Word>& letters, int j,
                std::vector<Letter>& tuple, AvoidanceAutomaton::State state,
                std::vector<Word>& out) {
  const int depth = static_cast<int>(tuple.size());
  if (depth == j) return;
  for (Letter p = 0; p < static_cast<Letter>(letters.size()); ++p) {
    auto next = aut.run(state, letters[p]);
    tuple.push_back(p);
    if (depth + 1 == j) {
      if (next == AvoidanceAutomaton::kDead) {
        // Full concatenation contains a forbidden word; check the suffix
        // concatenation v_2..v_j stays clean.
        auto s = aut.root();
        bool suffix_ok = true;
        for (int i = 1; i <= depth && suffix_ok; ++i) {
          s = aut.run(s, letters[tuple[i]]);
          suffix_ok = s != AvoidanceAutomaton::kDead;
        }
        if (suffix_ok) out.emplace_back(tuple);
      }
    } else if (next != AvoidanceAutomaton::kDead) {
      tuples_rec(aut, letters, j, tuple, next, out);
    }
    tuple.pop_back();
  }
}

}  // namespace

PowerShift higher_power_forbidden(const ForbiddenList& forbidden,
                                  const AvoidanceAutomaton& automaton, int n, int j_max,
                                  const BigInt& letter_limit) {
  if (j_max < 2) throw SubshiftError("higher power construction needs j_max >= 2");
  if (!(forbidden.alphabet() == automaton.alphabet()))
    throw SubshiftError("automaton alphabet does not match the forbidden list");
  std::vector<Word> letters;
  try {
    letters = enumerate_language(automaton, n, letter_limit);
  } catch (const EnumerationTooLarge& e) {
    throw SubshiftError("power alphabet too large: |L~_n| = " + e.count().str());
  }
  std::vector<Word> power_words;
  std::vector<Letter> tuple;
  for (int j = 2; j <= j_max; ++j)
    tuples_rec(automaton, letters, j, tuple, automaton.root(), power_words);

  PowerShift out{n, letters,
                 ForbiddenList::from_words(Alphabet(static_cast<int>(letters.size())),
                                           std::move(power_words))};
  return out;
}

ForbiddenList product_forbidden(const ForbiddenList& forbidden, const BigInt& materialize_limit) {
  const int q = forbidden.alphabet().size();
  const int m = forbidden.horizon();
  Alphabet product(q * q);

  auto count = [forbidden, q](int n) -> BigInt {
    BigInt fn = forbidden.count(n);
    BigInt qa = 1;
    for (int i = 0; i < n; ++i) qa *= q;
    return 2 * fn * qa - fn * fn;
  };
  auto member = [forbidden, q](const Word& w) -> bool {
    Word first, second;
    for (Letter p : w) {
      first.push_back(static_cast<Letter>(p / q));
      second.push_back(static_cast<Letter>(p % q));
    }
    return forbidden.member(first) || forbidden.member(second);
  };
  auto materialize = [forbidden, q, count, materialize_limit](int n) -> std::vector<Word> {
    if (count(n) > materialize_limit)
      throw SubshiftError("horizon unsupported: product list too large to materialize");
    std::vector<Word> out;
    auto all_words = [&](int len) {
      std::vector<Word> acc;
      Word scratch;
      std::function<void()> rec = [&]() {
        if (scratch.size() == len) {
          acc.push_back(scratch);
          return;
        }
        for (Letter a = 0; a < q; ++a) {
          scratch.push_back(a);
          rec();
          scratch.pop_back();
        }
      };
      rec();
      return acc;
    };
    auto zip = [q](const Word& x, const Word& y) {
      Word w;
      for (int i = 0; i < x.size(); ++i)
        w.push_back(static_cast<Letter>(x[i] * q + y[i]));
      return w;
    };
    std::vector<Word> any = all_words(n);
    for (const Word& v : forbidden.words_of_length(n))
      for (const Word& w : any) {
        out.push_back(zip(v, w));
        out.push_back(zip(w, v));
      }
    return out;  // duplicates removed by ForbiddenList::rule consumers via sort/unique
  };

  // Materializer must return the exact set; dedupe here to match the counter.
  auto materialize_unique = [materialize](int n) {
    std::vector<Word> ws = materialize(n);
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
  };

  return ForbiddenList::rule(product, m, count, materialize_unique, member, std::nullopt, m);
}

}  // namespace subshift
