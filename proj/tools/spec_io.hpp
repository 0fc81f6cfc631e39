#ifndef LPMCH_SPEC_IO_HPP
#define LPMCH_SPEC_IO_HPP

#include <cstdint>
#include <string>

#include "json.hpp"
#include "lpmchol/inequality.hpp"
#include "lpmchol/random.hpp"

namespace lpmch {

lpmchol::ConeKind parse_cone(const std::string& text);

/// Distribution from a JSON object with a "dist" key: wishart, inv-wishart,
/// cholesky-normal, clone or point.
lpmchol::DistributionSpec spec_from_json(const nlohmann::json& j);

/// Inverse of spec_from_json, numbers at 17 significant digits.
std::string spec_json(const lpmchol::DistributionSpec& spec);

struct WalkConfig {
  lpmchol::WalkSpec walk;
  lpmchol::InequalityParams params;
  std::size_t paths = 100000;
  std::uint64_t seed = 1;
};

WalkConfig walk_config_from_json(const nlohmann::json& j);
WalkConfig read_walk_config(const std::string& path);

}  // namespace lpmch

#endif  // LPMCH_SPEC_IO_HPP
