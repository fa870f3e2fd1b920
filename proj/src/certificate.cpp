#include "subshift/certificate.hpp"

namespace subshift {

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem;
  j["inputs"] = inputs;
  j["verdict"] = verdict_name(verdict());
  j["precision_bits"] = precision_bits;
  j["params"] = params;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"lhs", c.lhs},
                           {"relation", c.relation},
                           {"rhs", c.rhs},
                           {"verdict", verdict_name(c.verdict)},
                           {"margin", c.margin}});
  }
  j["subcertificates"] = nlohmann::json::array();
  for (const auto& s : subcertificates) j["subcertificates"].push_back(s.to_json());
  j["conclusions"] = conclusions;
  if (!missing.empty()) j["missing"] = missing;
  return j;
}

SeriesValue series_value_of(const Rational& q, mpfr_prec_t prec) {
  SeriesValue v;
  v.exact = q;
  v.box = Interval::of_rational(q, prec);
  return v;
}

SeriesValue series_value_of(Interval box) {
  SeriesValue v;
  v.box = std::move(box);
  return v;
}

CheckRecord check_less(const std::string& name, const SeriesValue& lhs, const SeriesValue& rhs) {
  CheckRecord r;
  r.name = name;
  r.relation = "<";
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.margin = rhs.box.lo_d() - lhs.box.hi_d();
  if (lhs.exact && rhs.exact) {
    r.verdict = (*lhs.exact < *rhs.exact) ? Verdict::kPass : Verdict::kFail;
    return r;
  }
  if (lhs.box.strictly_below(rhs.box)) {
    r.verdict = Verdict::kPass;
  } else if (lhs.box.lo_d() >= rhs.box.hi_d()) {
    // lo is rounded down and hi up, so this soundly certifies lhs >= rhs.
    r.verdict = Verdict::kFail;
  } else {
    r.verdict = Verdict::kInconclusive;  // touching intervals: increase precision
  }
  return r;
}

CheckRecord check_less(const std::string& name, const SeriesValue& lhs, const Rational& rhs) {
  return check_less(name, lhs, series_value_of(rhs, lhs.box.precision()));
}

CheckRecord check_leq(const std::string& name, const SeriesValue& lhs, const SeriesValue& rhs) {
  CheckRecord r;
  r.name = name;
  r.relation = "<=";
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.margin = rhs.box.lo_d() - lhs.box.hi_d();
  if (lhs.exact && rhs.exact) {
    r.verdict = (*lhs.exact <= *rhs.exact) ? Verdict::kPass : Verdict::kFail;
    return r;
  }
  if (lhs.box.hi_d() <= rhs.box.lo_d() && !rhs.box.strictly_below(lhs.box)) {
    r.verdict = Verdict::kPass;
  } else if (rhs.box.strictly_below(lhs.box)) {
    r.verdict = Verdict::kFail;
  } else {
    r.verdict = Verdict::kInconclusive;
  }
  return r;
}

CheckRecord check_less(const std::string& name, const Rational& lhs, const SeriesValue& rhs) {
  return check_less(name, series_value_of(lhs, rhs.box.precision()), rhs);
}

}  // namespace subshift
