#ifndef SUBSHIFT_PLISS_HPP_
#define SUBSHIFT_PLISS_HPP_

#include <vector>

#include "subshift/types.hpp"

namespace subshift {

// Finite set of positive integers with density/syndeticity helpers.
struct IndexSet {
  std::vector<int> values;  // sorted, 1-based positions

  // |S cap {1..n}| / n.
  double prefix_density(int n) const;
  // Least prefix density over P <= n <= full range; the empirical stand-in for
  // lower density on a finite window.
  double min_prefix_density(int from_n, int to_n) const;
  // Every window {k,...,k+window-1} inside [1, range] meets the set.
  bool syndetic(int window, int range) const;
};

struct PlissResult {
  IndexSet set;
  double density;        // |S cap {1..N}| / N over the whole provided prefix
  double density_bound;  // (prefix_avg - beta) / (A - beta), may be <= 0 (vacuous)
};

// Pliss times of a sequence 0 <= a_n <= A: positions n such that every
// trailing window average (a_{k+1}+...+a_n)/(n-k) is >= beta.
PlissResult pliss_set(const std::vector<double>& a, double A, double beta);

}  // namespace subshift

#endif  // SUBSHIFT_PLISS_HPP_
