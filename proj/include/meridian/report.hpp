#ifndef MERIDIAN_REPORT_HPP
#define MERIDIAN_REPORT_HPP

#include <iosfwd>
#include <string>

#include "meridian/config.hpp"

namespace meridian {

struct AnalyzeResult {
  std::string bytes;  // full report document, deterministic for fixed inputs
  long rows_emitted = 0;
  long rows_skipped = 0;
};

// Grid analysis in "csv" or "json" format. Rows hitting the profile pole
// guard are skipped and counted; any other evaluation failure throws.
AnalyzeResult run_analyze(const AnalysisConfig& config, const std::string& format);

// Classification document (JSON) for a meridian config.
std::string run_classify(const AnalysisConfig& config);

// Built-in verification suite; prints one PASS/FAIL line per group (plus INFO
// lines) to `out` and returns the number of failed groups. `filter` selects
// groups by substring; empty runs everything.
int run_verify(const std::string& filter, std::ostream& out);

}  // namespace meridian

#endif
