#include "qtel/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qtel {

namespace {

void require_unit(double x, const char* name) {
  if (x < 0.0 || x > 1.0) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

double kappa(double ew) {
  require_unit(ew, "channel entanglement");
  return (2.0 * ew + 1.0) / 3.0;
}

double fidelity_formula(double e12, double ew) {
  require_unit(e12, "input entanglement");
  require_unit(ew, "channel entanglement");
  return (ew + 2.0) * (ew + 2.0) / 9.0 +
         (2.0 * ew + 1.0) * (ew - 1.0) / 9.0 * e12 * e12;
}

double replica_entanglement_formula(double e12, double ew) {
  require_unit(e12, "input entanglement");
  require_unit(ew, "channel entanglement");
  const double bracket =
      (2.0 * ew * ew + 2.0 * ew - 4.0) + (1.0 + 2.0 * ew) * (1.0 + 2.0 * ew) * e12;
  return std::max(0.0, bracket / 9.0);
}

double critical_channel_entanglement(double e12) {
  require_unit(e12, "input entanglement");
  const double r = std::sqrt(2.0 * e12 + 1.0);
  return (3.0 - r) / (2.0 * r);
}

double correlation_transfer(double ic12, double ew) {
  if (ic12 < 0.0 || ic12 > 2.0) {
    throw std::domain_error("correlation information must lie in [0, 2]");
  }
  const double k = kappa(ew);
  return k * k * k * k * ic12;
}

double intermediate_correlation(double e72, double ew) {
  if (ew <= 0.0 || ew > 1.0) {
    throw std::domain_error("intermediate correlation requires an entangled channel");
  }
  const double k = kappa(ew);
  const double y = e72 * (e72 + (1.0 - k)) / (ew * (2.0 + ew));
  return 2.0 * k * k * (4.0 - 3.0 * y) * y;
}

double intermediate_entanglement(double e12, double ew) {
  require_unit(e12, "input entanglement");
  require_unit(ew, "channel entanglement");
  const double u = 1.0 - kappa(ew);
  const double q = ew * (2.0 + ew) * e12 * e12 / 3.0;
  return (-u + std::sqrt(u * u + 4.0 * q)) / 2.0;
}

}  // namespace qtel
