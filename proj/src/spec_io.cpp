#include "subshift/spec_io.hpp"

#include <fstream>

namespace subshift {

Rational parse_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    try {
      return Rational(s);
    } catch (const std::exception&) {
      throw SubshiftError("cannot parse rational: " + s);
    }
  }
  if (v.is_number_float()) {
    // Accept simple decimals exactly: scale by a power of ten.
    double d = v.get<double>();
    long long scaled = static_cast<long long>(d * 1000000.0 + (d >= 0 ? 0.5 : -0.5));
    return Rational(scaled, 1000000);
  }
  throw SubshiftError("cannot parse rational from spec value");
}

SubshiftSpec parse_spec(const nlohmann::json& j) {
  SubshiftSpec spec;
  spec.raw = j;
  if (j.contains("family")) {
    spec.family = j.at("family").get<std::string>();
    if (spec.family != "alpha_beta" && spec.family != "bounded_density" &&
        spec.family != "nonsupport")
      throw SubshiftError("unknown family: " + spec.family);
  } else {
    if (!j.contains("alphabet_size")) throw SubshiftError("spec missing alphabet_size");
    if (j.at("alphabet_size").get<int>() < 1)
      throw SubshiftError("alphabet_size must be positive");
    if (!j.contains("forbidden") || !j.at("forbidden").is_array())
      throw SubshiftError("spec missing forbidden word array");
  }
  spec.requested_horizon = j.value("horizon", 24);
  if (spec.requested_horizon < 1) throw SubshiftError("horizon must be positive");
  return spec;
}

ForbiddenList SubshiftSpec::build(int horizon_override) const {
  int horizon = horizon_override > 0 ? horizon_override : requested_horizon;
  if (family.empty()) {
    Alphabet alphabet(raw.at("alphabet_size").get<int>());
    std::vector<Word> words;
    for (const auto& arr : raw.at("forbidden")) {
      std::vector<Letter> letters;
      for (const auto& x : arr) {
        long v = x.get<long>();
        if (v < 0 || v >= alphabet.size())
          throw SubshiftError("forbidden word letter out of alphabet");
        letters.push_back(static_cast<Letter>(v));
      }
      words.emplace_back(std::move(letters));
    }
    std::optional<TailModel> tail;
    if (raw.contains("tail_model")) {
      const auto& t = raw.at("tail_model");
      tail = TailModel{parse_rational(t.at("C")), parse_rational(t.at("r")),
                       t.value("start", 1)};
    }
    return ForbiddenList::from_words(alphabet, std::move(words), tail);
  }
  if (family == "alpha_beta") {
    AlphaBetaParams params;
    params.alpha = parse_rational(raw.at("alpha"));
    params.beta = parse_rational(raw.at("beta"));
    params.depth = raw.value("depth", std::max(64, horizon));
    if (params.depth < horizon) params.depth = horizon;
    AlphaBetaCoding coding = alpha_beta_coding(params);
    return alpha_beta_forbidden(coding.a_prefix, coding.b_prefix, params.ell(), horizon);
  }
  if (family == "bounded_density") {
    BoundedDensityParams params{raw.at("k").get<int>(),
                                HFunction(raw.at("h_table").get<std::vector<long long>>()),
                                raw.value("signed", false)};
    if (raw.contains("h_gradient"))
      params.h = HFunction(raw.at("h_table").get<std::vector<long long>>(),
                           parse_rational(raw.at("h_gradient")));
    return bounded_density_forbidden(params, horizon);
  }
  // nonsupport
  return nonsupport_forbidden(raw.at("alphabet").get<int>(), raw.at("N").get<int>());
}

SubshiftSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SubshiftError("cannot open spec file: " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SubshiftError(std::string("malformed spec: ") + e.what());
  }
  try {
    return parse_spec(j);
  } catch (const nlohmann::json::exception& e) {
    throw SubshiftError(std::string("malformed spec: ") + e.what());
  }
}

std::string canonical_json(const nlohmann::json& j) {
  // nlohmann::json::dump already emits object keys sorted.
  return j.dump();
}

std::uint64_t stable_hash64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace subshift
