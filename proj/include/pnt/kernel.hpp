#pragma once

#include "pnt/constants.hpp"
#include "pnt/numeric.hpp"

namespace pnt::kernel {

/// Smoothing weight parameters. The weight is the indicator of [1/2, 1 + 2 l B]
/// convolved l times with the uniform density on [-2B, 0], B = eps/(2 l log x).
struct KernelParams {
  double x = 0.0;
  int ell = 0;
  double eps = 0.0;
  double B = 0.0;
  double log_x = 0.0;

  /// Validates x >= 3, ell >= 2, 0 < eps < 1/4 and a positive support start.
  static KernelParams make(double x, int ell, double eps);

  double support_lo() const noexcept { return 0.5 - eps / log_x; }
  double support_hi() const noexcept { return 1.0 + eps / log_x; }
};

/// CDF of the sum of n independent U(0,1) variables, evaluated as a sum of
/// nonnegative cardinal B-spline values (no alternating binomial sum).
double irwin_hall_cdf(int n, double u);

/// f(t): 0 outside the support, exactly 1 on [1/2, 1], Irwin-Hall ramps between.
double f_eval(const KernelParams& kp, double t);

/// (e^w - 1)/w with the removable singularity filled by a degree-12 series
/// for |w| < 1e-2.
cplx box_factor(cplx w);

/// e^{w} - 1 without cancellation for small |w|.
cplx expm1(cplx w);

/// Laplace transform F(z) = int f(t) e^{-zt} dt, in closed form.
cplx F_eval(const KernelParams& kp, cplx z);

/// (e^{sigma eps} x^sigma / (|s| log x)) (1 + x^{-sigma/2}) (2 l/(eps |s|))^alpha.
/// Requires Re(s) > 0 and 0 <= alpha <= l.
double F_decay_bound(const KernelParams& kp, cplx s, double alpha);

struct MainTermDiff {
  double value = 0.0;
  double predicted = 0.0;
  double allowance = 0.0;
};

/// F(-log x) - F(-sigma log x) against x/log x - x^sigma/(sigma log x), with
/// allowance c (eps predicted + x^{1/2}/log x). Requires x >= 10, sigma in (3/4, 1].
MainTermDiff main_term_diff(const KernelParams& kp, double sigma, double c);

struct Recipe {
  int ell = 2;
  double eps = 0.2;
};

/// l = ceil(A c_repulsion m^3) (at least 2), eps = min(1/5, 2 A l x^{-1/(2 A l)}).
Recipe default_recipe(double x, int m, double A, const ConstantsConfig& constants);

}  // namespace pnt::kernel
