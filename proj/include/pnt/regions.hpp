#pragma once

#include <string>

#include "pnt/constants.hpp"

namespace pnt::regions {

enum class RegionKind { classical, brumley, constant, grh };

/// Zero-free region width delta(t), t >= 3. Each family already folds in its
/// own +3 shift in t.
struct ZeroFreeRegion {
  RegionKind kind = RegionKind::grh;
  // classical: c / ((m + m2) (log_cc + m log t))
  double c = 1.0;
  int m = 1;
  int m2 = 1;
  double log_cc = 0.0;
  // brumley: A t^{-B}
  double brumley_a = 1.0;
  double brumley_b = 1.0;
  // constant
  double delta0 = 0.25;

  static ZeroFreeRegion classical(double c, int m, int m2, double log_cc);
  static ZeroFreeRegion brumley(double a, double b);
  static ZeroFreeRegion constant(double delta0);
  static ZeroFreeRegion grh();

  double delta(double t) const;
  /// Throws InvariantViolation on parameters that break delta in (0, 1/2].
  void validate() const;
};

std::string to_string(RegionKind kind);

/// Closed-form lower bound for inf_{t >= 3} (delta(t) log x + log t).
double eta_closed_form(const ZeroFreeRegion& region, double x);

/// Grid-plus-golden-section minimization of delta(t) log x + log t over
/// [3, t_max]; the reference value for eta_closed_form.
double eta_grid(const ZeroFreeRegion& region, double x, double t_max, int points);

/// Default upper end of the eta_grid search: comfortably past every minimizer
/// of the built-in families at this x.
double eta_grid_tmax(const ZeroFreeRegion& region, double x);

struct BrumleyParams {
  double a = 0.0;
  double b = 0.0;
};

/// A = c_{m,m',eps} / (C C')^{(m+m')(1+eps/2)-1}, B = m m' (1 - 1/(m+m') + eps/2).
BrumleyParams brumley_params(int m, int m2, double c_pi, double c_pi2, double eps,
                             const ConstantsConfig& constants);

/// The eps used when none is given: (m + m')^{-2}.
double brumley_default_eps(int m, int m2);

/// 1 - c1 log(c2 / ((1-beta0) m log(C (|gamma|+3)^m))) / (m log(C (|gamma|+3)^m));
/// returns 1 when the log argument is at most 1.
double repulsion_bound(double beta0, double conductor, int m, double gamma,
                       const ConstantsConfig& constants);

/// min(1, (1 - beta0) log(C T)).
double nu(double beta0, double conductor, double T);

struct NuSandwich {
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
  bool holds = false;
};

NuSandwich nu_sandwich(double x, double beta0, double conductor, int m,
                       const ConstantsConfig& constants);

/// e^t t (L - t)(L - 1) / ((e^t (L - t) - L) L) with L = log x; 1 at t = 0.
double lemma54_f(double x, double t);

/// Same function with L = log x supplied directly (for x beyond binary64).
double lemma54_f_log(double log_x, double t);

/// exp(-c log x / ((m+m') log CC' + sqrt(m (m+m') c log x))).
double eta_bound_pnt2(int m, int m2, double log_cc, double x, const ConstantsConfig& constants);

}  // namespace pnt::regions
