#ifndef SUBSHIFT_AUTOMATON_HPP_
#define SUBSHIFT_AUTOMATON_HPP_

#include <cstdint>
#include <limits>
#include <vector>

#include "subshift/forbidden.hpp"
#include "subshift/types.hpp"

namespace subshift {

// Deterministic failure-link pattern automaton over the prefix tree of
// F_{<=horizon}. Every state whose suffix chain hits a forbidden word is
// collapsed into a single absorbing dead state, so a word drives the automaton
// through live states iff it avoids F_{<=horizon}.
class AvoidanceAutomaton {
 public:
  using State = std::uint32_t;
  static constexpr State kDead = std::numeric_limits<State>::max();

  AvoidanceAutomaton(Alphabet alphabet, const ForbiddenList& forbidden, int horizon);

  const Alphabet& alphabet() const { return alphabet_; }
  int horizon() const { return horizon_; }
  State root() const { return 0; }
  int live_states() const { return live_states_; }
  // Live states plus the dead state when one exists.
  int state_count() const { return live_states_ + (has_dead_ ? 1 : 0); }
  bool has_dead_state() const { return has_dead_; }

  State step(State s, Letter a) const {
    if (s == kDead) return kDead;
    return table_[static_cast<std::size_t>(s) * alphabet_.size() + a];
  }
  State run(State s, const Word& w) const {
    for (Letter a : w) {
      s = step(s, a);
      if (s == kDead) return kDead;
    }
    return s;
  }
  bool contains_forbidden(const Word& w) const { return run(root(), w) == kDead; }

 private:
  Alphabet alphabet_;
  int horizon_;
  int live_states_ = 0;
  bool has_dead_ = false;
  std::vector<State> table_;  // live_states x |A|, entries live state or kDead
};

inline AvoidanceAutomaton build_automaton(const Alphabet& alphabet,
                                          const ForbiddenList& forbidden, int horizon) {
  return AvoidanceAutomaton(alphabet, forbidden, horizon);
}
inline AvoidanceAutomaton build_automaton(const ForbiddenList& forbidden, int horizon = -1) {
  return AvoidanceAutomaton(forbidden.alphabet(), forbidden,
                            horizon < 0 ? forbidden.horizon() : horizon);
}

}  // namespace subshift

#endif  // SUBSHIFT_AUTOMATON_HPP_
