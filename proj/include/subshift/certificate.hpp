#ifndef SUBSHIFT_CERTIFICATE_HPP_
#define SUBSHIFT_CERTIFICATE_HPP_

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "subshift/series.hpp"
#include "subshift/types.hpp"

namespace subshift {

enum class Verdict { kPass, kFail, kInconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    default: return "inconclusive";
  }
}

// One recorded comparison, recomputable from the stored endpoints.
struct CheckRecord {
  std::string name;
  std::string lhs;       // decimal interval or exact rational, as a string
  std::string relation;  // "<", "<=", ">"
  std::string rhs;
  Verdict verdict = Verdict::kInconclusive;
  double margin = 0.0;  // rhs - lhs midpoint distance, sign follows the relation
};

// Machine-readable pass/fail record for one theorem's hypothesis.
struct Certificate {
  std::string theorem;
  std::string inputs;  // provenance of the forbidden list / profile
  std::map<std::string, std::string> params;
  std::vector<CheckRecord> checks;
  std::vector<Certificate> subcertificates;
  std::vector<std::string> conclusions;
  std::string missing;  // named missing ingredient when inconclusive
  int precision_bits = 128;

  Verdict verdict() const {
    Verdict v = Verdict::kPass;
    auto fold = [&v](Verdict w) {
      if (w == Verdict::kFail) v = Verdict::kFail;
      else if (w == Verdict::kInconclusive && v == Verdict::kPass) v = Verdict::kInconclusive;
    };
    for (const auto& c : checks) fold(c.verdict);
    for (const auto& s : subcertificates) fold(s.verdict());
    if (!missing.empty() && v == Verdict::kPass) v = Verdict::kInconclusive;
    return v;
  }
  bool passed() const { return verdict() == Verdict::kPass; }

  nlohmann::json to_json() const;
};

// lhs < rhs with strict interval separation; touching intervals are
// inconclusive. Exact rationals on both sides compare exactly.
CheckRecord check_less(const std::string& name, const SeriesValue& lhs, const SeriesValue& rhs);
CheckRecord check_less(const std::string& name, const SeriesValue& lhs, const Rational& rhs);
CheckRecord check_less(const std::string& name, const Rational& lhs, const SeriesValue& rhs);

// Non-strict variant (lhs <= rhs).
CheckRecord check_leq(const std::string& name, const SeriesValue& lhs, const SeriesValue& rhs);

SeriesValue series_value_of(const Rational& q, mpfr_prec_t prec = Interval::kDefaultPrec);
SeriesValue series_value_of(Interval box);

}  // namespace subshift

#endif  // SUBSHIFT_CERTIFICATE_HPP_
