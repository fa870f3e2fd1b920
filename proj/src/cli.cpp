#include "subshift/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "subshift/automaton.hpp"
#include "subshift/certify.hpp"
#include "subshift/families.hpp"
#include "subshift/goodwords.hpp"
#include "subshift/language.hpp"
#include "subshift/measure.hpp"
#include "subshift/spec_io.hpp"
#include "subshift/transfer.hpp"
#include "subshift/weights.hpp"

namespace subshift {

namespace {

constexpr const char* kCodeVersion = "subshift-lab-1";

void RunConfigValidateOrThrow(const RunConfig& c) {
  if (c.n_lo < 1 || c.n_hi < c.n_lo) throw SubshiftError("n range must be positive and ordered");
  if (c.walters_n < 1 || c.extend_t < 0 || c.window < 1)
    throw SubshiftError("horizons must be positive");
  if (c.horizon == 0 || c.horizon < -1) throw SubshiftError("horizon must be positive");
  if (c.precision_bits < 64)
    throw SubshiftError("precision must be >= 64 bits for certificate-grade runs");
}

// Atomic file write: stage to a temp file, then rename over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedSpec {
  SubshiftSpec spec;
  ForbiddenList forbidden;
  int horizon;
};

LoadedSpec load(const RunConfig& config) {
  SubshiftSpec spec = load_spec_file(config.spec_path);
  int horizon = config.horizon > 0 ? config.horizon : spec.requested_horizon;
  return {spec, spec.build(horizon), horizon};
}

std::string double_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void RunConfig::validate() const { RunConfigValidateOrThrow(*this); }

std::filesystem::path RunConfig::resolved_cache_dir() const {
  if (const char* env = std::getenv("SUBSHIFT_LAB_CACHE")) return env;
  if (cache_dir) return *cache_dir;
  return out_dir / "cache";
}

int cmd_analyze(const RunConfig& config) {
  try {
    config.validate();
    LoadedSpec in = load(config);
    AvoidanceAutomaton automaton = build_automaton(in.forbidden, in.horizon);

    // Language table, through the cache when enabled.
    nlohmann::json key_obj{{"spec", in.spec.raw},
                           {"horizon", in.horizon},
                           {"n_hi", config.n_hi},
                           {"version", kCodeVersion}};
    std::string key = canonical_json(key_obj);
    char keyhex[32];
    std::snprintf(keyhex, sizeof keyhex, "%016llx",
                  static_cast<unsigned long long>(stable_hash64(key)));
    std::filesystem::path cache_file =
        config.resolved_cache_dir() / ("langtable_" + std::string(keyhex) + ".csv");

    std::optional<LanguageTable> table;
    if (config.use_cache && std::filesystem::exists(cache_file)) {
      std::ifstream cached(cache_file);
      table = LanguageTable::read_csv(cached, in.forbidden.alphabet().size(), in.horizon);
    }
    if (!table) {
      // Counts are exact for L_n (not just the locally admissible superset)
      // when nothing is forbidden or the zero-padding argument applies.
      bool exact_for_L =
          in.forbidden.total_count() == 0 || in.spec.family == "bounded_density";
      table = LanguageTable::build(automaton, config.n_hi, exact_for_L);
      if (config.use_cache) {
        std::ostringstream csv;
        table->write_csv(csv);
        write_file_atomic(cache_file, csv.str());
      }
    }

    std::ostringstream lang_csv;
    table->write_csv(lang_csv);
    write_file_atomic(config.out_dir / "language_table.csv", lang_csv.str());

    nlohmann::json summary;
    summary["spec"] = in.spec.raw;
    summary["alphabet_size"] = in.forbidden.alphabet().size();
    summary["horizon"] = in.horizon;
    summary["language_semantics"] = "locally_admissible(m=" + std::to_string(in.horizon) + ")";
    summary["automaton_states"] = automaton.state_count();
    if (table->empty_subshift()) {
      summary["empty_subshift"] = true;
      summary["empty_from"] = table->empty_from();
      write_file_atomic(config.out_dir / "summary.json", summary.dump(2) + "\n");
      std::cout << "analyze: empty subshift (no admissible words at length "
                << table->empty_from() << ")\n";
      return 0;
    }
    EntropyEstimates est = entropy_estimates(*table);
    summary["h_upper_at_n_hi"] = double_str(est.h_upper[config.n_hi]);

    TransferSystem transfer = build_transfer(automaton);
    PerronData perron_data = perron(transfer);
    summary["lambda"] = double_str(perron_data.lambda);
    summary["lambda_lo"] = double_str(perron_data.lambda_lo);
    summary["lambda_hi"] = double_str(perron_data.lambda_hi);
    summary["h"] = double_str(perron_data.entropy());
    summary["radius_tie"] = transfer.radius_tie;
    CylinderMeasure mu = parry_measure(perron_data, transfer);

    int good_hi = std::min(config.n_hi, 14);
    GoodWordSet good = good_words_range(config.n_lo, good_hi, in.forbidden, 3, automaton);
    GoodWordSet good_prime = good_words_range(config.n_lo, good_hi, in.forbidden, 4, automaton);
    nlohmann::json good_stats = nlohmann::json::array();
    for (int n = config.n_lo; n <= good_hi; ++n)
      good_stats.push_back({{"n", n},
                            {"good", good.of_length(n).size()},
                            {"good_prime", good_prime.of_length(n).size()}});
    summary["good_words"] = good_stats;

    GibbsReport gibbs =
        gibbs_report(mu, good_prime, perron_data.entropy(), config.n_lo, good_hi);
    std::ostringstream gibbs_csv;
    gibbs.write_csv(gibbs_csv);
    write_file_atomic(config.out_dir / "gibbs_report.csv", gibbs_csv.str());
    summary["gibbs_D"] = double_str(gibbs.D);
    summary["gibbs_D_prime"] = double_str(gibbs.D_prime);
    summary["gibbs_flagged"] = gibbs.trend_flagged;

    GoodMeasureReport gm =
        measure_of_goodset(mu.evaluator(), good, config.n_lo, good_hi, config.window);
    GoodMeasureReport gpm =
        measure_of_goodset(mu.evaluator(), good_prime, config.n_lo, good_hi, config.window);
    summary["good_measure_epsilon"] = double_str(gm.epsilon);
    summary["good_prime_measure_epsilon"] = double_str(gpm.epsilon);

    auto entropy_rows = measure_entropy(mu, config.n_lo, good_hi);
    nlohmann::json ent = nlohmann::json::array();
    for (const auto& r : entropy_rows)
      ent.push_back({{"n", r.n},
                     {"block_avg", double_str(r.block_avg)},
                     {"conditional", double_str(r.conditional)}});
    summary["measure_entropy"] = ent;

    write_file_atomic(config.out_dir / "summary.json", summary.dump(2) + "\n");
    std::cout << "analyze: h ~ " << perron_data.entropy() << ", reports in " << config.out_dir
              << "\n";
    return 0;
  } catch (const EnumerationTooLarge& e) {
    std::cerr << "analyze: " << e.what() << "\n";
    return 2;
  } catch (const SubshiftError& e) {
    std::string msg = e.what();
    std::cerr << "analyze: " << msg << "\n";
    return msg.find("too large") != std::string::npos ? 2 : 1;
  }
}

int cmd_certify(const RunConfig& config) {
  try {
    config.validate();
    LoadedSpec in = load(config);
    std::vector<std::string> theorems = config.theorems;
    if (theorems.empty()) {
      theorems = {"mainthm2", "gibbsthm"};
      if (in.spec.family == "bounded_density") theorems = {"bddthm"};
      if (in.spec.family == "alpha_beta") theorems.push_back("hardbeta");
    }

    bool any_fail = false, any_inconclusive = false;
    for (const std::string& id : theorems) {
      Certificate cert;
      if (id == "bddthm") {
        if (in.spec.family != "bounded_density")
          throw SubshiftError("bddthm certificate requires a bounded_density family spec");
        BoundedDensityParams params{
            in.spec.raw.at("k").get<int>(),
            HFunction(in.spec.raw.at("h_table").get<std::vector<long long>>()),
            in.spec.raw.value("signed", false)};
        cert = bddthm_certify(params, in.horizon,
                              static_cast<mpfr_prec_t>(config.precision_bits));
      } else if (id == "hardbeta") {
        AlphaBetaParams params;
        params.alpha = parse_rational(in.spec.raw.at("alpha"));
        params.beta = parse_rational(in.spec.raw.at("beta"));
        cert = hardbeta_search(params.ell(), static_cast<mpfr_prec_t>(config.precision_bits));
      } else {
        CertifyParams params;
        params.prec = static_cast<mpfr_prec_t>(config.precision_bits);
        cert = certify_theorem(id, in.forbidden, params);
      }
      write_file_atomic(config.out_dir / ("certificate_" + id + ".json"),
                        cert.to_json().dump(2) + "\n");
      Verdict v = cert.verdict();
      std::cout << id << ": " << verdict_name(v) << "\n";
      any_fail = any_fail || v == Verdict::kFail;
      any_inconclusive = any_inconclusive || v == Verdict::kInconclusive;
    }
    if (any_fail) return 3;
    if (any_inconclusive) return 4;
    return 0;
  } catch (const SubshiftError& e) {
    std::cerr << "certify: " << e.what() << "\n";
    return 1;
  }
}

int cmd_construct(const RunConfig& config) {
  try {
    config.validate();
    LoadedSpec in = load(config);
    Rational c(3, in.forbidden.alphabet().size());
    if (!config.c.empty()) {
      try {
        c = Rational(config.c);
      } catch (const std::exception&) {
        throw SubshiftError("cannot parse --c, expected a rational like 7/10");
      }
    }
    WeightParams params{c};
    if (params.c <= 0 || params.c > 1)
      throw SubshiftError("construct needs a rational c in (0, 1]");
    ExtensionTrace trace;
    try {
      if (config.direction == "right")
        trace = extend_right_greedy(Word{}, in.forbidden, params, config.steps);
      else
        trace = extend_two_sided(Word{}, in.forbidden, params, config.steps);
    } catch (const SubshiftError& e) {
      std::string msg = e.what();
      if (msg.find("Miller hypothesis") != std::string::npos ||
          msg.find("extension stuck") != std::string::npos) {
        std::cerr << "construct: " << msg << "\n";
        return 3;
      }
      throw;
    }
    AvoidanceAutomaton automaton = build_automaton(in.forbidden, in.horizon);
    if (automaton.contains_forbidden(trace.final_word()))
      throw SubshiftError("internal: constructed word fails the avoidance check");
    Alphabet alphabet = in.forbidden.alphabet();
    write_file_atomic(config.out_dir / "trace.json", trace.to_json(&alphabet).dump(2) + "\n");
    std::cout << "construct: " << trace.steps.size() << " steps, trace written\n";
    return 0;
  } catch (const SubshiftError& e) {
    std::cerr << "construct: " << e.what() << "\n";
    return 1;
  }
}

int cmd_family(const RunConfig& config) {
  try {
    config.validate();
    LoadedSpec in = load(config);
    if (in.spec.family.empty())
      throw SubshiftError("family command needs a family spec");
    BigInt total = 0;
    for (int n = 1; n <= in.forbidden.horizon(); ++n) total += in.forbidden.count(n);
    if (total > 100000) throw EnumerationTooLarge(total);
    nlohmann::json out;
    out["alphabet_size"] = in.forbidden.alphabet().size();
    out["horizon"] = in.forbidden.horizon();
    out["generated_from"] = in.spec.raw;
    out["forbidden"] = nlohmann::json::array();
    for (int n = 1; n <= in.forbidden.horizon(); ++n)
      for (const Word& w : in.forbidden.words_of_length(n))
        out["forbidden"].push_back(w.letters());
    if (in.forbidden.tail_model()) {
      out["tail_model"] = {{"C", in.forbidden.tail_model()->C.str()},
                           {"r", in.forbidden.tail_model()->r.str()},
                           {"start", in.forbidden.tail_model()->start}};
    }
    write_file_atomic(config.out_dir / "generated_spec.json", out.dump(2) + "\n");
    std::cout << "family: wrote explicit spec with " << total.str() << " words\n";
    return 0;
  } catch (const EnumerationTooLarge& e) {
    std::cerr << "family: " << e.what() << "\n";
    return 2;
  } catch (const SubshiftError& e) {
    std::cerr << "family: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"subshift-lab: forbidden-list subshift analysis and certification"};
  app.require_subcommand(1);
  RunConfig config;

  std::string nrange;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--spec", config.spec_path, "subshift or family spec file")->required();
    cmd->add_option("--horizon", config.horizon, "truncation horizon m");
    cmd->add_option("--nrange", nrange, "length range A..B");
    cmd->add_option("--precision", config.precision_bits, "interval precision bits (>= 64)");
    cmd->add_option("--out", config.out_dir, "output directory");
    cmd->add_flag_callback("--no-cache", [&config]() { config.use_cache = false; },
                           "disable the language-table cache");
    cmd->add_option("--walters-n", config.walters_n, "Walters empirical horizon N");
    cmd->add_option("--extend-t", config.extend_t, "extendability horizon t");
    cmd->add_option("--window", config.window, "syndeticity window");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "language table, good words, Gibbs report");
  add_common(analyze);
  CLI::App* certify = app.add_subcommand("certify", "theorem hypothesis certificates");
  add_common(certify);
  certify->add_option("--theorems", config.theorems, "theorem ids")->delimiter(',');
  CLI::App* construct = app.add_subcommand("construct", "greedy weight-function constructions");
  add_common(construct);
  construct->add_option("--c", config.c, "weight parameter c (rational, e.g. 7/10)");
  construct->add_option("--steps", config.steps, "number of greedy steps");
  construct->add_option("--direction", config.direction, "right or two-sided");
  CLI::App* family = app.add_subcommand("family", "emit a generated forbidden list as a spec");
  add_common(family);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (!nrange.empty()) {
    auto dots = nrange.find("..");
    if (dots == std::string::npos) {
      std::cerr << "bad --nrange, expected A..B\n";
      return 1;
    }
    config.n_lo = std::stoi(nrange.substr(0, dots));
    config.n_hi = std::stoi(nrange.substr(dots + 2));
  }

  if (app.got_subcommand("analyze")) return cmd_analyze(config);
  if (app.got_subcommand("certify")) return cmd_certify(config);
  if (app.got_subcommand("construct")) return cmd_construct(config);
  return cmd_family(config);
}

}  // namespace subshift
