#include "subshift/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace subshift {

double CylinderMeasure::operator()(const Word& w) const {
  if (kind_ == Kind::kParry) {
    if (w.empty()) return 1.0;
    double total = 0.0;
    const auto& aut = *automaton_;
    for (int node = 0; node < static_cast<int>(transfer_->nodes.size()); ++node) {
      if (!transfer_->in_chosen(node)) continue;
      auto s = transfer_->nodes[node];
      bool alive = true;
      for (Letter a : w) {
        s = aut.step(s, a);
        if (s == AvoidanceAutomaton::kDead || transfer_->node_of_state[s] < 0 ||
            !transfer_->in_chosen(transfer_->node_of_state[s])) {
          alive = false;
          break;
        }
      }
      if (!alive) continue;
      total += left_(node) * right_(transfer_->node_of_state[s]);
    }
    return total / std::pow(lambda_, w.size());
  }

  // Walters empirical: interior occurrence counting over L~_N.
  if (w.empty()) return 1.0;
  if (w.size() > n_cap_) throw SubshiftError("cylinder word longer than the Walters horizon");
  if (total_ == 0) return 0.0;
  const auto& aut = *automaton_;
  BigInt occurrences = 0;
  for (int i = 0; i + w.size() <= n_cap_; ++i) {
    int j = n_cap_ - i - w.size();
    for (int s = 0; s < aut.live_states(); ++s) {
      if (from_root_[i][s] == 0) continue;
      auto e = aut.run(static_cast<AvoidanceAutomaton::State>(s), w);
      if (e == AvoidanceAutomaton::kDead) continue;
      occurrences += from_root_[i][s] * to_anywhere_[j][e];
    }
  }
  Rational value(occurrences, BigInt(n_cap_ - w.size() + 1) * total_);
  return value.convert_to<double>();
}

CylinderEvaluator CylinderMeasure::evaluator() const {
  return [this](const Word& w) { return (*this)(w); };
}

CylinderMeasure parry_measure(const PerronData& perron_data, const TransferSystem& transfer) {
  if (transfer.chosen < 0) throw SubshiftError("choose component first");
  CylinderMeasure m;
  m.kind_ = CylinderMeasure::Kind::kParry;
  m.automaton_ = transfer.automaton;
  m.transfer_ = &transfer;
  m.lambda_ = perron_data.lambda;
  m.right_ = perron_data.right;
  m.left_ = perron_data.left;
  // Normalize so that sum_s l_s r_s = 1 (stationary distribution mass).
  double z = 0.0;
  for (int node = 0; node < static_cast<int>(transfer.nodes.size()); ++node)
    if (transfer.in_chosen(node)) z += m.left_(node) * m.right_(node);
  m.left_ /= z;
  m.description_ = "parry(m=" + std::to_string(transfer.automaton->horizon()) +
                   ", lambda=" + std::to_string(perron_data.lambda) + ")";
  return m;
}

CylinderMeasure walters_measure(const AvoidanceAutomaton& automaton, int N) {
  CylinderMeasure m;
  m.kind_ = CylinderMeasure::Kind::kWaltersEmpirical;
  m.automaton_ = &automaton;
  m.n_cap_ = N;
  const int q = automaton.alphabet().size();
  const int states = automaton.live_states();

  m.from_root_.assign(N + 1, std::vector<BigInt>(states, 0));
  m.from_root_[0][automaton.root()] = 1;
  for (int i = 1; i <= N; ++i)
    for (int s = 0; s < states; ++s) {
      if (m.from_root_[i - 1][s] == 0) continue;
      for (Letter a = 0; a < q; ++a) {
        auto t = automaton.step(s, a);
        if (t != AvoidanceAutomaton::kDead) m.from_root_[i][t] += m.from_root_[i - 1][s];
      }
    }

  m.to_anywhere_.assign(N + 1, std::vector<BigInt>(states, 0));
  for (int s = 0; s < states; ++s) m.to_anywhere_[0][s] = 1;
  for (int j = 1; j <= N; ++j)
    for (int s = 0; s < states; ++s) {
      BigInt total = 0;
      for (Letter a = 0; a < q; ++a) {
        auto t = automaton.step(s, a);
        if (t != AvoidanceAutomaton::kDead) total += m.to_anywhere_[j - 1][t];
      }
      m.to_anywhere_[j][s] = std::move(total);
    }

  for (int s = 0; s < states; ++s) m.total_ += m.from_root_[N][s];
  m.description_ = "walters(N=" + std::to_string(N) + ", bias O(|v|/N))";
  return m;
}

double walters_empirical(const AvoidanceAutomaton& automaton, int N, const Word& v) {
  return walters_measure(automaton, N)(v);
}

void GibbsReport::write_csv(std::ostream& out) const {
  out << "n,min_ratio_good,max_ratio_all,h_n\n";
  for (const auto& r : rows) {
    char buf[160];
    if (r.good_empty)
      std::snprintf(buf, sizeof buf, "%d,nan,%.12f,%.12f", r.n, r.max_ratio_all, r.h_n);
    else
      std::snprintf(buf, sizeof buf, "%d,%.12f,%.12f,%.12f", r.n, r.min_ratio_good,
                    r.max_ratio_all, r.h_n);
    out << buf << '\n';
  }
}

GibbsReport gibbs_report(const CylinderMeasure& measure, const GoodWordSet& goodset, double h,
                         int n_lo, int n_hi, const BigInt& enumeration_limit) {
  GibbsReport report;
  report.D = std::numeric_limits<double>::infinity();
  report.D_prime = 0.0;
  const auto& automaton = measure.automaton();

  std::vector<double> log_good, good_n;
  for (int n = n_lo; n <= n_hi; ++n) {
    GibbsRow row{n, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0, true};
    std::vector<Word> lang = enumerate_language(automaton, n, enumeration_limit);
    if (!lang.empty()) row.h_n = ln_big(BigInt(lang.size())) / n;
    double scale = std::exp(h * n);
    for (const Word& w : lang) {
      double ratio = measure(w) * scale;
      row.max_ratio_all = std::max(row.max_ratio_all, ratio);
      if (ratio < 1e-12 && report.zero_ratio_witnesses.size() < 8)
        report.zero_ratio_witnesses.push_back(w);
    }
    const auto& good = goodset.of_length(n);
    if (!good.empty()) {
      row.good_empty = false;
      row.min_ratio_good = std::numeric_limits<double>::infinity();
      for (const Word& w : good)
        row.min_ratio_good = std::min(row.min_ratio_good, measure(w) * scale);
      report.D = std::min(report.D, row.min_ratio_good);
      if (row.min_ratio_good > 0) {
        log_good.push_back(std::log(row.min_ratio_good));
        good_n.push_back(n);
      }
    }
    report.D_prime = std::max(report.D_prime, row.max_ratio_all);
    report.rows.push_back(row);
  }
  if (!std::isfinite(report.D)) report.D = 0.0;

  // Least-squares slope of ln(min good ratio) against n; a clearly negative
  // slope marks a Gibbs lower bound decaying inside the good set.
  if (log_good.size() >= 3) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = static_cast<int>(log_good.size());
    for (int i = 0; i < k; ++i) {
      sx += good_n[i];
      sy += log_good[i];
      sxx += good_n[i] * good_n[i];
      sxy += good_n[i] * log_good[i];
    }
    double denom = k * sxx - sx * sx;
    if (denom > 0) {
      report.trend_slope = (k * sxy - sx * sy) / denom;
      report.trend_flagged = report.trend_slope < -1e-3;
    }
  }
  if (!report.zero_ratio_witnesses.empty()) report.trend_flagged = true;
  return report;
}

std::vector<SpecbdRow> specbd_check(
    const CylinderMeasure& measure, int n,
    const std::vector<std::pair<std::string, std::vector<Word>>>& subsets, double h,
    const BigInt& language_count) {
  std::vector<SpecbdRow> out;
  const double ln_lang = ln_big(language_count);
  for (const auto& [label, words] : subsets) {
    SpecbdRow row;
    row.label = label;
    for (const Word& w : words) {
      if (w.size() != n) throw SubshiftError("specbd subset word of wrong length");
      row.mu += measure(w);
    }
    if (row.mu <= 0.0) {
      row.vacuous = true;
      out.push_back(row);
      continue;
    }
    row.lhs_log = ln_big(BigInt(words.size()));
    double inv = 1.0 / row.mu;
    row.rhs_log = inv * (n * h) + (1.0 - inv) * ln_lang - inv * std::log(2.0);
    row.margin = row.lhs_log - row.rhs_log;
    row.holds = row.margin >= -1e-9;
    out.push_back(row);
  }
  return out;
}

std::vector<EntropyRow> measure_entropy(const CylinderMeasure& measure, int n_lo, int n_hi,
                                        const BigInt& enumeration_limit) {
  std::vector<EntropyRow> out;
  const auto& automaton = measure.automaton();
  double prev_sum = 0.0;
  int prev_n = 0;
  for (int n = std::max(1, n_lo - 1); n <= n_hi; ++n) {
    std::vector<Word> lang = enumerate_language(automaton, n, enumeration_limit);
    double sum = 0.0;
    for (const Word& w : lang) {
      double mu = measure(w);
      if (mu > 0) sum -= mu * std::log(mu);
    }
    if (n >= n_lo) {
      EntropyRow row;
      row.n = n;
      row.block_avg = sum / n;
      row.conditional = (prev_n == n - 1) ? sum - prev_sum : std::numeric_limits<double>::quiet_NaN();
      out.push_back(row);
    }
    prev_sum = sum;
    prev_n = n;
  }
  return out;
}

}  // namespace subshift
