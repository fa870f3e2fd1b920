#ifndef SUBSHIFT_CLI_HPP_
#define SUBSHIFT_CLI_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "subshift/types.hpp"

namespace subshift {

struct RunConfig {
  std::filesystem::path spec_path;
  int horizon = -1;  // -1: use the spec file's horizon
  int n_lo = 1;
  int n_hi = 12;
  int walters_n = 60;
  int extend_t = 8;
  int window = 4;
  int precision_bits = 128;
  std::filesystem::path out_dir = "out";
  bool use_cache = true;
  std::optional<std::filesystem::path> cache_dir;
  std::vector<std::string> theorems;
  std::string c = "";  // construct weight parameter, rational text
  int steps = 100;
  std::string direction = "right";

  void validate() const;
  std::filesystem::path resolved_cache_dir() const;
};

// Exit codes: 0 success; 1 malformed spec; 2 enumeration too large;
// 3 certificate failure / hypothesis not satisfied; 4 inconclusive.
int cmd_analyze(const RunConfig& config);
int cmd_certify(const RunConfig& config);
int cmd_construct(const RunConfig& config);
int cmd_family(const RunConfig& config);

int run_cli(int argc, const char* const* argv);

}  // namespace subshift

#endif  // SUBSHIFT_CLI_HPP_
