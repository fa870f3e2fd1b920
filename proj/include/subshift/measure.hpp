#ifndef SUBSHIFT_MEASURE_HPP_
#define SUBSHIFT_MEASURE_HPP_

#include <memory>
#include <string>
#include <vector>

#include "subshift/goodwords.hpp"
#include "subshift/language.hpp"
#include "subshift/transfer.hpp"
#include "subshift/types.hpp"

namespace subshift {

// Approximate MME evaluable on cylinders [w]: either the Parry measure of the
// chosen irreducible component of an SFT truncation, or the Walters empirical
// average over L~_N with interior occurrence counting.
class CylinderMeasure {
 public:
  enum class Kind { kParry, kWaltersEmpirical };

  Kind kind() const { return kind_; }
  const std::string& description() const { return description_; }
  double operator()(const Word& w) const;
  CylinderEvaluator evaluator() const;
  const AvoidanceAutomaton& automaton() const { return *automaton_; }

 private:
  friend CylinderMeasure parry_measure(const PerronData&, const TransferSystem&);
  friend CylinderMeasure walters_measure(const AvoidanceAutomaton&, int N);
  CylinderMeasure() = default;

  Kind kind_ = Kind::kParry;
  std::string description_;
  const AvoidanceAutomaton* automaton_ = nullptr;

  // Parry data: mu([w]) = lambda^{-|w|} sum_{s in comp} l_s r_{end(s, w)}
  // over starts whose w-path stays inside the component.
  const TransferSystem* transfer_ = nullptr;
  Eigen::VectorXd left_, right_;
  double lambda_ = 0.0;

  // Walters data: per-depth big-integer path counts.
  int n_cap_ = 0;
  std::vector<std::vector<BigInt>> from_root_;   // [i][state]
  std::vector<std::vector<BigInt>> to_anywhere_; // [j][state]
  BigInt total_ = 0;
};

// Stationary Markov evaluator from Perron eigendata on the chosen component.
CylinderMeasure parry_measure(const PerronData& perron_data, const TransferSystem& transfer);

// nu_N-style estimate: (occurrences of v among words of L~_N) divided by
// (N - |v| + 1) |L~_N|. Bias O(|v|/N) versus the shifted-point-mass average.
CylinderMeasure walters_measure(const AvoidanceAutomaton& automaton, int N);
double walters_empirical(const AvoidanceAutomaton& automaton, int N, const Word& v);

struct GibbsRow {
  int n;
  double min_ratio_good;  // min over w in G'_n of mu([w]) e^{n h}; NaN if G'_n empty
  double max_ratio_all;   // max over w in L~_n
  double h_n;             // (1/n) ln |L~_n|
  bool good_empty;
};

struct GibbsReport {
  std::vector<GibbsRow> rows;
  double D = 0.0;        // min over the range of min_ratio_good
  double D_prime = 0.0;  // max over the range of max_ratio_all
  bool trend_flagged = false;  // log min-good-ratio decreasing linearly in n
  double trend_slope = 0.0;
  std::vector<Word> zero_ratio_witnesses;  // admissible words of ~zero measure

  void write_csv(std::ostream& out) const;
};

GibbsReport gibbs_report(const CylinderMeasure& measure, const GoodWordSet& goodset, double h,
                         int n_lo, int n_hi, const BigInt& enumeration_limit = BigInt(2000000));

struct SpecbdRow {
  std::string label;
  double mu = 0.0;
  double lhs_log = 0.0;  // ln |S|
  double rhs_log = 0.0;  // ln of the counting bound
  bool vacuous = false;  // mu(S) = 0
  bool holds = true;
  double margin = 0.0;
};

// |S| >= (e^{nh})^{1/mu(S)} |L~_n|^{1 - 1/mu(S)} 2^{-1/mu(S)} for S inside L~_n.
std::vector<SpecbdRow> specbd_check(const CylinderMeasure& measure, int n,
                                    const std::vector<std::pair<std::string, std::vector<Word>>>& subsets,
                                    double h, const BigInt& language_count);

struct EntropyRow {
  int n;
  double block_avg;    // -(1/n) sum mu ln mu over length-n cylinders
  double conditional;  // block sum at n minus block sum at n-1
};

// Finite-n entropy sequence of the measure. For a Parry (first-order Markov)
// measure the conditional column equals ln lambda up to float error from
// n = 2 on; the block average converges like O(1/n).
std::vector<EntropyRow> measure_entropy(const CylinderMeasure& measure, int n_lo, int n_hi,
                                        const BigInt& enumeration_limit = BigInt(2000000));

}  // namespace subshift

#endif  // SUBSHIFT_MEASURE_HPP_
