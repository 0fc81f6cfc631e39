#ifndef LPMCHOL_INEQUALITY_HPP
#define LPMCHOL_INEQUALITY_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "lpmchol/random.hpp"

namespace lpmchol {

enum class Inequality { mogulskii_min, mogulskii_max, ottaviani_skorohod, levy_ottaviani, hoffmann_jorgensen };

std::string_view to_string(Inequality which);
/// Accepts the names printed by to_string; ParseError otherwise.
Inequality parse_inequality(std::string_view name);

/// Per-cone group (operation transferred from Cholesky space, one pattern) or
/// the global group over all patterns with metric d_p.
enum class GroupKind { star, box };

/// Random walk S_k = X_1 + ... + X_k with independent steps X_i.
struct WalkSpec {
  std::vector<DistributionSpec> steps;
  RealConePoint start;  // z_1
  GroupKind group = GroupKind::star;
  double p = 2.0;       // d_p exponent for the global group
};

struct InequalityParams {
  // Mogul'skii
  double a = 1.0;
  double b = 1.0;
  int m = 1;
  // Ottaviani-Skorohod
  double alpha = 1.0;
  double beta = 1.0;
  // Levy-Ottaviani thresholds a_1, ..., a_l with l >= 2
  std::vector<double> levy{1.0, 1.0};
  // Hoffmann-Jorgensen multiplicities n_i >= 1, thresholds t_i, and s
  std::vector<int> hj_n{1};
  std::vector<double> hj_t{1.0};
  double hj_s = 1.0;
};

/// Per-path distances: d(z_1, S_k), d(S_k, S_n), d(Id, X_k) for k = 1..n.
struct WalkSample {
  int steps = 0;
  int batches = 0;
  std::vector<int> batch_of;  // batch index per path
  std::vector<double> to_start;
  std::vector<double> to_end;
  std::vector<double> step_size;

  std::size_t paths() const { return batch_of.size(); }
};

struct Report {
  Inequality which;
  double lhs = 0.0;
  double rhs = 0.0;
  double se_lhs = 0.0;
  double se_rhs = 0.0;
  double se_diff = 0.0;
  std::size_t paths = 0;
  bool pass = false;
};

/// Raises GroupMismatch when the steps and start do not share a group.
void validate(const WalkSpec& walk);

/// Paths are split into `batches` groups; batch b draws from RngStream(seed, b).
WalkSample simulate_walk(const WalkSpec& walk, std::size_t paths, std::uint64_t seed, int batches = 50,
                         int threads = 1);

/// LHS and RHS estimates with batch-means standard errors. Passes when
/// LHS - RHS <= 3 SE of the difference.
Report evaluate_inequality(const WalkSample& sample, Inequality which, const InequalityParams& params);

Report verify_inequality(const WalkSpec& walk, Inequality which, const InequalityParams& params, std::size_t paths,
                         std::uint64_t seed);

}  // namespace lpmchol

#endif  // LPMCHOL_INEQUALITY_HPP
