#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pnt {

/// Slots for the absolute constants that appear in the implemented bounds.
/// None of them has a published numerical value; every report echoes the
/// values it used.
struct ConstantsConfig {
  double c_zfr = 1.0;               // classical zero-free region width
  double c_siegel_effective = 1.0;  // >= 1
  double c_siegel_1 = 1.0;          // repulsion numerator
  double c_siegel_2 = 1.0;          // repulsion log argument
  double c_density_exp = 1e7;       // exponent base of the log-free density bound
  double c_density_coeff = 1.0;     // m^{c m^3} factor of the density bound
  double c_repulsion = 1.0;         // >= 1, density bound with repulsion
  double c_main1 = 1.0;             // >= 1, range exponent of the main theorem
  double c_main2 = 1.0;
  double c_main3 = 1.0;  // >= 1
  double c_ik = 1.0;
  double c_unsmoothing = 1.0;
  double c_zero_count = 1.0;      // zeros per unit height near t
  double c_discretization = 1.0;  // truncated-contour allowance of the zero side
  double c_kernel_main = 1.0;     // allowance of the main-term difference
  double c_l1 = 1.0;              // O(m^2) term of the Dirichlet l1 bound
  double c_short_interval = 1.0;  // implied constant of the short-interval l1 bound
  double kappa_nu = 10.0;         // comparison constant of the nu sandwich

  /// Brumley constant c_{m,m',eps}; defaults to 1.
  std::function<double(int, int, double)> brumley_c;

  double brumley(int m, int m2, double eps) const {
    return brumley_c ? brumley_c(m, m2, eps) : 1.0;
  }

  /// Throws InvariantViolation when a slot is non-positive or a >= 1 slot is below 1.
  void validate() const;

  /// Sets a slot by name; returns false for unknown names.
  bool set(std::string_view name, double value);

  std::vector<std::pair<std::string, double>> entries() const;

  /// `name=value` pairs joined by spaces, `%.12g` formatting.
  std::string echo() const;
};

}  // namespace pnt
