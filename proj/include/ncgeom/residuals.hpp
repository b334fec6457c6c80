#pragma once

#include <string>
#include <vector>

namespace ncgeom {

/// Named residual produced by a verification routine. Thresholds are applied
/// by the caller; routines only measure.
struct Residual {
  std::string name;
  double value = 0.0;
};

using ResidualReport = std::vector<Residual>;

double worstResidual(const ResidualReport& report);
/// Throws std::out_of_range for unknown names.
double residualNamed(const ResidualReport& report, const std::string& name);

}  // namespace ncgeom
