#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "subshift/cli.hpp"
#include "subshift/families.hpp"
#include "subshift/spec_io.hpp"

using namespace subshift;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("subshift_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

fs::path write_spec(const TempDir& dir, const std::string& name, const nlohmann::json& j) {
  fs::path p = dir.path / name;
  std::ofstream out(p);
  out << j.dump(2);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json golden_spec() {
  return {{"alphabet_size", 2}, {"forbidden", {{1, 1}}}, {"horizon", 4}};
}

}  // namespace

TEST_SUITE("spec parsing") {
  TEST_CASE("explicit lists build with tail models") {
    nlohmann::json j = {{"alphabet_size", 2},
                        {"forbidden", {{1, 1}}},
                        {"horizon", 8},
                        {"tail_model", {{"C", "2"}, {"r", "1"}, {"start", 3}}}};
    auto spec = parse_spec(j);
    auto f = spec.build();
    CHECK(f.alphabet().size() == 2);
    CHECK(f.count(2) == 1);
    CHECK(f.tail_model().has_value());
  }

  TEST_CASE("family specs build their generators") {
    auto ab = parse_spec({{"family", "alpha_beta"},
                          {"alpha", "1/5"},
                          {"beta", "8/5"},
                          {"depth", 24},
                          {"horizon", 10}});
    CHECK(ab.build().alphabet().size() == 2);

    auto bd = parse_spec({{"family", "bounded_density"},
                          {"k", 2},
                          {"h_table", {2, 3, 5, 6, 7, 8}},
                          {"horizon", 6}});
    CHECK(bd.build().count(2) == 1);

    auto ns = parse_spec({{"family", "nonsupport"}, {"alphabet", 4}, {"N", 3}, {"horizon", 4}});
    CHECK(ns.build().count(4) == 6);
  }

  TEST_CASE("malformed specs are rejected with diagnostics") {
    CHECK_THROWS_AS(parse_spec({{"alphabet_size", 0}, {"forbidden", nlohmann::json::array()}}),
                    SubshiftError);
    CHECK_THROWS_AS(parse_spec({{"alphabet_size", 2}}), SubshiftError);
    CHECK_THROWS_AS(parse_spec({{"family", "unknown_family"}}), SubshiftError);
  }

  TEST_CASE("rationals parse from strings and integers") {
    CHECK(parse_rational(nlohmann::json(3)) == Rational(3));
    CHECK(parse_rational(nlohmann::json("7/10")) == Rational(7, 10));
  }
}

TEST_SUITE("commands") {
  TEST_CASE("analyze writes reports and the summary, exit 0") {
    TempDir dir;
    RunConfig config;
    config.spec_path = write_spec(dir, "golden.json", golden_spec());
    config.out_dir = dir.path / "out";
    config.n_hi = 12;
    CHECK(cmd_analyze(config) == 0);
    CHECK(fs::exists(config.out_dir / "language_table.csv"));
    CHECK(fs::exists(config.out_dir / "gibbs_report.csv"));
    auto summary = nlohmann::json::parse(slurp(config.out_dir / "summary.json"));
    CHECK(summary["h"].get<std::string>().substr(0, 6) == "0.4812");
    CHECK(summary["language_semantics"].get<std::string>().find("locally_admissible") !=
          std::string::npos);
  }

  TEST_CASE("analyze on the full shift reports h = ln |A| exactly") {
    TempDir dir;
    RunConfig config;
    config.spec_path = write_spec(
        dir, "full.json",
        {{"alphabet_size", 2}, {"forbidden", nlohmann::json::array()}, {"horizon", 2}});
    config.out_dir = dir.path / "out";
    CHECK(cmd_analyze(config) == 0);
    auto summary = nlohmann::json::parse(slurp(config.out_dir / "summary.json"));
    CHECK(std::stod(summary["h_upper_at_n_hi"].get<std::string>()) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-9));
  }

  TEST_CASE("analyze rejects malformed specs with exit 1") {
    TempDir dir;
    RunConfig config;
    config.spec_path = write_spec(
        dir, "bad.json",
        {{"alphabet_size", 0}, {"forbidden", nlohmann::json::array()}, {"horizon", 4}});
    config.out_dir = dir.path / "out";
    CHECK(cmd_analyze(config) == 1);
  }

  TEST_CASE("cached and cold runs produce byte-identical reports") {
    TempDir dir;
    RunConfig config;
    config.spec_path = write_spec(dir, "golden.json", golden_spec());
    config.out_dir = dir.path / "out";
    config.cache_dir = dir.path / "cache";
    REQUIRE(cmd_analyze(config) == 0);
    std::string cold_lang = slurp(config.out_dir / "language_table.csv");
    std::string cold_summary = slurp(config.out_dir / "summary.json");
    REQUIRE(cmd_analyze(config) == 0);  // warm: language table comes from the cache
    CHECK(slurp(config.out_dir / "language_table.csv") == cold_lang);
    CHECK(slurp(config.out_dir / "summary.json") == cold_summary);
  }

  TEST_CASE("certify: golden mean fails mainthm2 with exit 3") {
    TempDir dir;
    RunConfig config;
    config.spec_path = write_spec(dir, "golden.json", golden_spec());
    config.out_dir = dir.path / "out";
    config.theorems = {"mainthm2"};
    CHECK(cmd_certify(config) == 3);
    auto cert = nlohmann::json::parse(slurp(config.out_dir / "certificate_mainthm2.json"));
    CHECK(cert["verdict"] == "fail");
  }

  TEST_CASE("certify: empty list passes everything with exit 0") {
    TempDir dir;
    RunConfig config;
    config.spec_path = write_spec(
        dir, "full.json",
        {{"alphabet_size", 4}, {"forbidden", nlohmann::json::array()}, {"horizon", 2}});
    config.out_dir = dir.path / "out";
    config.theorems = {"mainthm2", "gibbsthm", "entbound"};
    CHECK(cmd_certify(config) == 0);
  }

  TEST_CASE("certify: missing tail model is inconclusive with exit 4") {
    TempDir dir;
    RunConfig config;
    // bounded density via explicit theorems on the rule-backed list
    config.spec_path = write_spec(dir, "bd.json", {{"family", "bounded_density"},
                                                   {"k", 2},
                                                   {"h_table", {2, 3, 5, 6, 7, 8}},
                                                   {"horizon", 6}});
    config.out_dir = dir.path / "out";
    config.theorems = {"mainthm2"};
    CHECK(cmd_certify(config) == 4);
  }

  TEST_CASE("certify: bounded density k = 25 certificate passes") {
    TempDir dir;
    std::vector<long long> table;
    {
      auto h = bounded_density_h_near_threshold(25, 40);
      for (int n = 1; n <= 40; ++n) table.push_back(h(n));
    }
    RunConfig config;
    config.spec_path = write_spec(
        dir, "bd25.json",
        {{"family", "bounded_density"}, {"k", 25}, {"h_table", table}, {"horizon", 12}});
    config.out_dir = dir.path / "out";
    config.theorems = {"bddthm"};
    CHECK(cmd_certify(config) == 0);
    auto cert = nlohmann::json::parse(slurp(config.out_dir / "certificate_bddthm.json"));
    CHECK(cert["verdict"] == "pass");
  }

  TEST_CASE("construct: golden mean trace of 100 admissible letters") {
    TempDir dir;
    RunConfig config;
    config.spec_path = write_spec(dir, "golden.json", golden_spec());
    config.out_dir = dir.path / "out";
    config.c = "1";
    config.steps = 100;
    CHECK(cmd_construct(config) == 0);
    auto trace = nlohmann::json::parse(slurp(config.out_dir / "trace.json"));
    CHECK(trace["steps"].size() == 100);
    CHECK(trace["final"].get<std::string>().find("11") == std::string::npos);
  }

  TEST_CASE("construct: malformed c exits 1") {
    TempDir dir;
    RunConfig config;
    config.spec_path = write_spec(dir, "golden.json", golden_spec());
    config.out_dir = dir.path / "out";
    config.c = "not-a-rational";
    CHECK(cmd_construct(config) == 1);
  }

  TEST_CASE("construct: everything forbidden at length 1 exits 3") {
    TempDir dir;
    RunConfig config;
    config.spec_path =
        write_spec(dir, "dead.json",
                   {{"alphabet_size", 2}, {"forbidden", {{0}, {1}}}, {"horizon", 1}});
    config.out_dir = dir.path / "out";
    config.c = "9/10";
    CHECK(cmd_construct(config) == 3);
  }

  TEST_CASE("family: emits an explicit spec that reparses") {
    TempDir dir;
    RunConfig config;
    config.spec_path = write_spec(dir, "ab.json", {{"family", "alpha_beta"},
                                                   {"alpha", "1/5"},
                                                   {"beta", "8/5"},
                                                   {"depth", 24},
                                                   {"horizon", 8}});
    config.out_dir = dir.path / "out";
    CHECK(cmd_family(config) == 0);
    auto spec = load_spec_file(config.out_dir / "generated_spec.json");
    auto f = spec.build();
    CHECK(f.alphabet().size() == 2);
    // the regenerated explicit list matches the in-process family generator
    AlphaBetaParams params{Rational(1, 5), Rational(8, 5), 24};
    auto coding = alpha_beta_coding(params);
    auto direct = alpha_beta_forbidden(coding.a_prefix, coding.b_prefix, params.ell(), 8);
    CHECK(direct.total_count() > 0);
    for (int n = 1; n <= 8; ++n) {
      CHECK(f.count(n) == direct.count(n));
      CHECK(f.words_of_length(n) == direct.words_of_length(n));
    }
  }

  TEST_CASE("emitted certificates re-verify from their serialized numbers") {
    TempDir dir;
    RunConfig config;
    config.spec_path = write_spec(dir, "golden.json", golden_spec());
    config.out_dir = dir.path / "out";
    config.theorems = {"mainthm2", "entbound", "concat"};
    cmd_certify(config);

    // parse "N/D (exact)" or "[lo, hi]" into endpoint doubles
    auto endpoints = [](const std::string& s) -> std::pair<double, double> {
      if (s.find("(exact)") != std::string::npos) {
        Rational q(s.substr(0, s.find(' ')));
        double v = q.convert_to<double>();
        return {v, v};
      }
      auto comma = s.find(',');
      double lo = std::stod(s.substr(1, comma - 1));
      double hi = std::stod(s.substr(comma + 1, s.size() - comma - 2));
      return {lo, hi};
    };
    std::function<void(const nlohmann::json&)> verify = [&](const nlohmann::json& cert) {
      for (const auto& check : cert["checks"]) {
        std::string lhs_s = check["lhs"], rhs_s = check["rhs"], rel = check["relation"];
        if (lhs_s.find('/') == std::string::npos && lhs_s.find('[') == std::string::npos)
          continue;  // descriptive records ("holds" / "observed")
        auto [llo, lhi] = endpoints(lhs_s);
        auto [rlo, rhi] = endpoints(rhs_s);
        double slack = 1e-12 * (1 + std::abs(rlo));
        if (check["verdict"] == "pass" && (rel == "<" || rel == "<="))
          CHECK(lhi <= rlo + slack);
        if (check["verdict"] == "fail" && (rel == "<" || rel == "<="))
          CHECK(llo >= rhi - slack);
      }
      for (const auto& sub : cert["subcertificates"]) verify(sub);
    };
    for (const char* name : {"certificate_mainthm2.json", "certificate_entbound.json",
                             "certificate_concat.json"})
      verify(nlohmann::json::parse(slurp(config.out_dir / name)));
  }

  TEST_CASE("run_cli wires subcommands and flags") {
    TempDir dir;
    auto spec = write_spec(dir, "golden.json", golden_spec());
    auto out = (dir.path / "cliout").string();
    std::string spec_s = spec.string();
    const char* argv[] = {"subshift-lab", "analyze",  "--spec", spec_s.c_str(),
                          "--out",        out.c_str(), "--nrange", "1..10",
                          "--no-cache"};
    CHECK(run_cli(9, argv) == 0);
    CHECK(fs::exists(fs::path(out) / "summary.json"));
  }
}
