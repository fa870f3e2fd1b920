#ifndef SUBSHIFT_POWER_SHIFT_HPP_
#define SUBSHIFT_POWER_SHIFT_HPP_

#include <vector>

#include "subshift/automaton.hpp"
#include "subshift/forbidden.hpp"
#include "subshift/types.hpp"

namespace subshift {

// Higher power construction: letters of the power shift are the words of
// L~_n in lexicographic order; forbidden power-words are the minimal
// concatenation covers of members of F.
struct PowerShift {
  int block_len;                 // n
  std::vector<Word> letters;     // L~_n, lexicographic; power letter i spells letters[i]
  ForbiddenList forbidden;       // over Alphabet(letters.size())

  Word expand(const Word& power_word) const {
    Word out;
    for (Letter p : power_word)
      for (Letter a : letters[p]) out.push_back(a);
    return out;
  }
};

// All v in (L~_n)^j, 2 <= j <= j_max, whose letter-concatenation contains a
// member of F while the concatenations of v_1..v_{j-1} and v_2..v_j do not.
PowerShift higher_power_forbidden(const ForbiddenList& forbidden,
                                  const AvoidanceAutomaton& automaton, int n, int j_max,
                                  const BigInt& letter_limit = BigInt(4096));

// F^(2) over A x A: pairs where either track is forbidden. Letter (a, b) is
// encoded as a*|A|+b. Counts are exact (inclusion-exclusion); words are
// materialized lazily when small enough.
ForbiddenList product_forbidden(const ForbiddenList& forbidden,
                                const BigInt& materialize_limit = BigInt(200000));

}  // namespace subshift

#endif  // SUBSHIFT_POWER_SHIFT_HPP_
