#include "subshift/pliss.hpp"

#include <algorithm>
#include <cmath>

namespace subshift {

double IndexSet::prefix_density(int n) const {
  if (n <= 0) return 0.0;
  auto it = std::upper_bound(values.begin(), values.end(), n);
  return static_cast<double>(it - values.begin()) / n;
}

double IndexSet::min_prefix_density(int from_n, int to_n) const {
  double best = 1.0;
  for (int n = from_n; n <= to_n; ++n) best = std::min(best, prefix_density(n));
  return best;
}

bool IndexSet::syndetic(int window, int range) const {
  for (int k = 1; k + window - 1 <= range; ++k) {
    auto it = std::lower_bound(values.begin(), values.end(), k);
    if (it == values.end() || *it > k + window - 1) return false;
  }
  return true;
}

PlissResult pliss_set(const std::vector<double>& a, double A, double beta) {
  const int N = static_cast<int>(a.size());
  const double slack = 1e-12;
  for (double x : a)
    if (x < -slack || x > A + slack) throw SubshiftError("sequence bound violated");

  std::vector<double> prefix(N + 1, 0.0);
  for (int i = 0; i < N; ++i) prefix[i + 1] = prefix[i] + a[i];

  PlissResult r;
  for (int n = 1; n <= N; ++n) {
    bool ok = true;
    for (int k = 0; k < n; ++k) {
      if (prefix[n] - prefix[k] < beta * (n - k)) {
        ok = false;
        break;
      }
    }
    if (ok) r.set.values.push_back(n);
  }
  r.density = r.set.prefix_density(N);
  double avg = N > 0 ? prefix[N] / N : 0.0;
  r.density_bound = (A > beta) ? (avg - beta) / (A - beta) : 0.0;
  return r;
}

}  // namespace subshift
