#include "ncgeom/residuals.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncgeom {

double worstResidual(const ResidualReport& report) {
  double w = 0.0;
  for (const auto& r : report) w = std::max(w, r.value);
  return w;
}

double residualNamed(const ResidualReport& report, const std::string& name) {
  for (const auto& r : report) {
    if (r.name == name) return r.value;
  }
  throw std::out_of_range("no residual named " + name);
}

}  // namespace ncgeom
