#ifndef MERIDIAN_CONFIG_HPP
#define MERIDIAN_CONFIG_HPP

#include <string>
#include <vector>

#include "meridian/classifier.hpp"

namespace meridian {

// Parsed analysis config: the surface, the evaluation grid, policy overrides
// and an optional column selection.
struct AnalysisConfig {
  Surface surface;
  GridSpec grid;
  TolerancePolicy policy;
  std::vector<std::string> columns;  // empty = all
};

// Parses the JSON config document. The MERIDIAN_FD_STEP environment variable,
// when set, overrides policy.fd_step after parsing.
AnalysisConfig parse_config(const std::string& json_text);

}  // namespace meridian

#endif
