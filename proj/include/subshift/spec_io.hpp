#ifndef SUBSHIFT_SPEC_IO_HPP_
#define SUBSHIFT_SPEC_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "subshift/families.hpp"
#include "subshift/forbidden.hpp"
#include "subshift/types.hpp"

namespace subshift {

// A parsed subshift spec file: either an explicit forbidden list
// ({"alphabet_size", "forbidden", "horizon", "tail_model"}) or a family
// object ({"family": "alpha_beta" | "bounded_density" | "nonsupport", ...}).
struct SubshiftSpec {
  std::string family;  // empty for explicit lists
  int requested_horizon = 0;
  nlohmann::json raw;

  ForbiddenList build(int horizon_override = -1) const;
};

SubshiftSpec parse_spec(const nlohmann::json& j);
SubshiftSpec load_spec_file(const std::filesystem::path& path);

Rational parse_rational(const nlohmann::json& v);

// Canonical serialization used for cache keys: sorted keys, no whitespace.
std::string canonical_json(const nlohmann::json& j);
std::uint64_t stable_hash64(const std::string& s);

}  // namespace subshift

#endif  // SUBSHIFT_SPEC_IO_HPP_
