#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ncgeom {

inline constexpr std::string_view kToolVersion = "0.1.0";

using ParamValue = std::variant<std::int64_t, double, std::string>;
using Params = std::map<std::string, ParamValue>;

struct CheckResult {
  std::string name;
  std::string paper_anchor;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  Params params;
};

/// pass is max_residual <= tolerance; NaN residuals fail.
CheckResult makeCheck(std::string name, std::string anchor, double residual, double tolerance,
                      Params params = {});

struct SuiteReport {
  std::string suite;
  Params params;
  std::string tool_version{kToolVersion};
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double wall_time_ms = 0.0;

  bool allPass() const;
  /// Orders checks by name.
  void sortChecks();
};

/// Traceability anchors every check must carry.
const std::vector<std::string_view>& documentedAnchors();
bool isDocumentedAnchor(std::string_view anchor);

/// %.17g; non-finite values become null in JSON.
std::string formatDouble(double v);

/// Single JSON object, lowercase snake_case keys, doubles at 17 significant digits.
std::string toJson(const SuiteReport& report);
void writeText(const SuiteReport& report, std::ostream& out);

}  // namespace ncgeom
