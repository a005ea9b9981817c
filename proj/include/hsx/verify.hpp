#ifndef HSX_VERIFY_HPP
#define HSX_VERIFY_HPP

#include <string>
#include <vector>

#include "hsx/types.hpp"

namespace hsx {

struct VerifyConfig {
  Real grid_half_width = 200.0;
  Eigen::Index grid_points = 1 << 16;
  Eigen::Index quad_nodes = 128;
  Eigen::Index galerkin_dim = 16;
  Real tolerance_scale = 1.0;  // multiplies every pass threshold
};

/// Throws InvalidInput when the configuration is below the verification floor.
void validate_config(const VerifyConfig& config);

struct CheckRecord {
  int criterion = 0;  // acceptance criterion this record belongs to
  std::string theorem_tag;
  std::string inputs;
  Real measured = 0.0;
  Real bound_or_target = 0.0;
  bool pass = false;
};

std::vector<std::string> suite_names();  // boundary pw kernel algebra spectrum composition

/// Runs one named suite ("all" for every suite) and returns its records.
std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyConfig& config);

}  // namespace hsx

#endif
