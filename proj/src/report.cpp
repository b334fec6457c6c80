#include "ncgeom/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ncgeom {

namespace {

const std::vector<std::string_view> kAnchors = {
    "algebra:epsilon-identities",
    "algebra:fuzzy-sphere-relations",
    "algebra:nc-torus-exchange",
    "algebra:nc-torus-relations",
    "classical:bracket",
    "classical:metric-inverse",
    "classical:projector",
    "classical:sphere-curvature",
    "classical:torus-flatness",
    "connection:affine-axioms",
    "connection:metric-compatibility",
    "curvature:fuzzy-sphere-closed-form",
    "curvature:fuzzy-sphere-scalar",
    "curvature:nc-torus-flatness",
    "curvature:operator-tensor-agreement",
    "derivation:inner-star",
    "limit:sphere-convergence",
    "module:fuzzy-sphere-normal-free",
    "module:nc-torus-normal-basis",
    "module:nc-torus-orthogonality",
    "module:nc-torus-tangent-basis",
    "module:rank",
    "projector:fuzzy-sphere",
    "projector:nc-torus",
    "trace:closedness-criterion",
    "trace:fuzzy-sphere-closed",
    "trace:nc-torus-closed",
};

std::string jsonString(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string jsonNumber(double v) { return std::isfinite(v) ? formatDouble(v) : "null"; }

std::string jsonValue(const ParamValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return jsonString(x);
        } else if constexpr (std::is_same_v<T, double>) {
          return jsonNumber(x);
        } else {
          return std::to_string(x);
        }
      },
      v);
}

std::string textValue(const ParamValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, double>) {
          return formatDouble(x);
        } else {
          return std::to_string(x);
        }
      },
      v);
}

std::string jsonParams(const Params& params) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ",";
    first = false;
    out += jsonString(k) + ":" + jsonValue(v);
  }
  return out + "}";
}

}  // namespace

CheckResult makeCheck(std::string name, std::string anchor, double residual, double tolerance,
                      Params params) {
  CheckResult c;
  c.name = std::move(name);
  c.paper_anchor = std::move(anchor);
  c.max_residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  c.params = std::move(params);
  return c;
}

bool SuiteReport::allPass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void SuiteReport::sortChecks() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

const std::vector<std::string_view>& documentedAnchors() { return kAnchors; }

bool isDocumentedAnchor(std::string_view anchor) {
  return std::find(kAnchors.begin(), kAnchors.end(), anchor) != kAnchors.end();
}

std::string formatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string toJson(const SuiteReport& report) {
  std::string out = "{";
  out += "\"suite\":" + jsonString(report.suite);
  out += ",\"params\":" + jsonParams(report.params);
  out += ",\"tool_version\":" + jsonString(report.tool_version);
  out += ",\"seed\":" + std::to_string(report.seed);
  out += ",\"checks\":[";
  for (std::size_t n = 0; n < report.checks.size(); ++n) {
    const CheckResult& c = report.checks[n];
    if (n > 0) out += ",";
    out += "{\"name\":" + jsonString(c.name);
    out += ",\"paper_anchor\":" + jsonString(c.paper_anchor);
    out += ",\"max_residual\":" + jsonNumber(c.max_residual);
    out += ",\"tolerance\":" + jsonNumber(c.tolerance);
    out += std::string(",\"pass\":") + (c.pass ? "true" : "false");
    out += ",\"params\":" + jsonParams(c.params) + "}";
  }
  out += "]";
  out += ",\"wall_time_ms\":" + jsonNumber(report.wall_time_ms);
  out += "}\n";
  return out;
}

void writeText(const SuiteReport& report, std::ostream& out) {
  out << "suite " << report.suite << " (ncverify " << report.tool_version << ", seed "
      << report.seed << ")\n";
  for (const auto& [k, v] : report.params) out << "  " << k << " = " << textValue(v) << "\n";
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    if (c.pass) ++passed;
    char line[160];
    std::snprintf(line, sizeof line, "%s %-40s residual=%.3e tol=%.3e", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.max_residual, c.tolerance);
    out << line;
    for (const auto& [k, v] : c.params) out << " " << k << "=" << textValue(v);
    out << "  [" << c.paper_anchor << "]\n";
  }
  out << passed << "/" << report.checks.size() << " checks passed\n";
}

}  // namespace ncgeom
