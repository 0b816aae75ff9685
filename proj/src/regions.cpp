#include "pnt/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pnt/error.hpp"

namespace pnt::regions {

namespace {

const double kLog3 = std::log(3.0);

double objective(const ZeroFreeRegion& r, double log_x, double v) {
  return r.delta(std::exp(v)) * log_x + v;
}

}  // namespace

ZeroFreeRegion ZeroFreeRegion::classical(double c, int m, int m2, double log_cc) {
  ZeroFreeRegion r;
  r.kind = RegionKind::classical;
  r.c = c;
  r.m = m;
  r.m2 = m2;
  r.log_cc = log_cc;
  r.validate();
  return r;
}

ZeroFreeRegion ZeroFreeRegion::brumley(double a, double b) {
  ZeroFreeRegion r;
  r.kind = RegionKind::brumley;
  r.brumley_a = a;
  r.brumley_b = b;
  r.validate();
  return r;
}

ZeroFreeRegion ZeroFreeRegion::constant(double delta0) {
  ZeroFreeRegion r;
  r.kind = RegionKind::constant;
  r.delta0 = delta0;
  r.validate();
  return r;
}

ZeroFreeRegion ZeroFreeRegion::grh() { return ZeroFreeRegion{}; }

double ZeroFreeRegion::delta(double t) const {
  switch (kind) {
    case RegionKind::classical:
      return c / ((m + m2) * (log_cc + m * std::log(t)));
    case RegionKind::brumley:
      return brumley_a * std::pow(t, -brumley_b);
    case RegionKind::constant:
      return delta0;
    case RegionKind::grh:
      return 0.5;
  }
  return 0.5;
}

void ZeroFreeRegion::validate() const {
  switch (kind) {
    case RegionKind::classical:
      if (!(c > 0.0) || m < 1 || m2 < 1 || !(log_cc >= 0.0)) {
        fail(ErrorKind::invariant_violation, "classical region needs c > 0, m, m' >= 1, log CC' >= 0");
      }
      break;
    case RegionKind::brumley:
      if (!(brumley_a > 0.0) || !(brumley_b > 0.0)) {
        fail(ErrorKind::invariant_violation, "Brumley region needs A > 0 and B > 0");
      }
      break;
    case RegionKind::constant:
      if (!(delta0 > 0.0 && delta0 < 0.5)) fail(ErrorKind::invariant_violation, "delta0 must lie in (0, 1/2)");
      break;
    case RegionKind::grh:
      break;
  }
  const double d3 = delta(3.0);
  if (!(d3 > 0.0 && d3 <= 0.5)) {
    fail(ErrorKind::invariant_violation, "zero-free region width at t = 3 is outside (0, 1/2]");
  }
}

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::classical: return "classical";
    case RegionKind::brumley: return "brumley";
    case RegionKind::constant: return "constant";
    case RegionKind::grh: return "grh";
  }
  return "grh";
}

double eta_closed_form(const ZeroFreeRegion& r, double x) {
  if (!(x >= 3.0)) fail(ErrorKind::domain, "eta needs x >= 3");
  const double log_x = std::log(x);
  switch (r.kind) {
    case RegionKind::classical: {
      const double mm = r.m + r.m2;
      const double a = std::sqrt(r.c * log_x / (r.m * mm));
      if (r.log_cc == 0.0) return a;
      return std::min(a, r.c * log_x / (mm * r.log_cc));
    }
    case RegionKind::brumley: {
      const double A = r.brumley_a;
      const double B = r.brumley_b;
      // t0 = (A B log x)^{1/B} > 3  <=>  log x > 3^B / (A B).
      if (log_x > std::pow(3.0, B) / (A * B)) return (1.0 + std::log(A * B * log_x)) / B;
      return kLog3 + A * std::pow(3.0, -B) * log_x;
    }
    case RegionKind::constant:
      return r.delta(3.0) * log_x + kLog3;
    case RegionKind::grh:
      return r.delta(3.0) * log_x + kLog3;
  }
  return 0.0;
}

double eta_grid_tmax(const ZeroFreeRegion& r, double x) {
  const double log_x = std::log(std::max(x, 3.0));
  switch (r.kind) {
    case RegionKind::classical: {
      const double u0 = std::sqrt(r.c * log_x / (r.m * (r.m + r.m2))) - r.log_cc / r.m;
      return 3.0 * std::exp(2.0 * std::max(u0, 1.0) + 2.0);
    }
    case RegionKind::brumley: {
      const double log_t0 = std::log(r.brumley_a * r.brumley_b * log_x) / r.brumley_b;
      return 3.0 * std::exp(std::max(log_t0, 1.0) + 3.0);
    }
    default:
      return 1e6;
  }
}

double eta_grid(const ZeroFreeRegion& r, double x, double t_max, int points) {
  if (!(x >= 3.0)) fail(ErrorKind::domain, "eta needs x >= 3");
  if (!(t_max >= 3.0) || points < 100) fail(ErrorKind::domain, "eta grid needs t_max >= 3 and at least 100 points");
  const double log_x = std::log(x);
  const double v_lo = kLog3;
  const double v_hi = std::log(t_max);
  const double step = (v_hi - v_lo) / (points - 1);
  int best = 0;
  double best_value = objective(r, log_x, v_lo);
  for (int i = 1; i < points; ++i) {
    const double v = (i == points - 1) ? v_hi : v_lo + i * step;
    const double value = objective(r, log_x, v);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  if (step == 0.0) return best_value;
  // Golden-section search on the bracket around the best grid node.
  double a = std::max(v_lo, v_lo + (best - 1) * step);
  double b = std::min(v_hi, v_lo + (best + 1) * step);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = objective(r, log_x, c);
  double fd = objective(r, log_x, d);
  for (int it = 0; it < 200 && (b - a) > 1e-15 * std::max(1.0, std::fabs(a)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = objective(r, log_x, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = objective(r, log_x, d);
    }
  }
  return std::min({best_value, fc, fd});
}

double brumley_default_eps(int m, int m2) { return 1.0 / ((m + m2) * (m + m2)); }

BrumleyParams brumley_params(int m, int m2, double c_pi, double c_pi2, double eps,
                             const ConstantsConfig& constants) {
  if (!(eps > 0.0 && eps < 1.0)) fail(ErrorKind::domain, "Brumley eps must lie in (0, 1)");
  if (!(c_pi >= 3.0 && c_pi2 >= 3.0)) fail(ErrorKind::domain, "analytic conductors must be at least 3");
  const double mm = m + m2;
  BrumleyParams p;
  p.a = constants.brumley(m, m2, eps) / std::pow(c_pi * c_pi2, mm * (1.0 + eps / 2.0) - 1.0);
  p.b = m * m2 * (1.0 - 1.0 / mm + eps / 2.0);
  return p;
}

double repulsion_bound(double beta0, double conductor, int m, double gamma,
                       const ConstantsConfig& constants) {
  if (!(beta0 > 0.5 && beta0 < 1.0)) fail(ErrorKind::domain, "beta0 must lie in (1/2, 1)");
  const double log_term = std::log(conductor) + m * std::log(std::fabs(gamma) + 3.0);
  const double arg = constants.c_siegel_2 / ((1.0 - beta0) * m * log_term);
  if (arg <= 1.0) return 1.0;
  return 1.0 - constants.c_siegel_1 * std::log(arg) / (m * log_term);
}

double nu(double beta0, double conductor, double T) {
  if (!(T >= 1.0) || !(conductor >= 3.0)) fail(ErrorKind::domain, "nu needs T >= 1 and C >= 3");
  return std::min(1.0, (1.0 - beta0) * std::log(conductor * T));
}

NuSandwich nu_sandwich(double x, double beta0, double conductor, int m,
                       const ConstantsConfig& constants) {
  if (!(x >= 3.0)) fail(ErrorKind::domain, "nu sandwich needs x >= 3");
  NuSandwich s;
  const double m4 = static_cast<double>(m) * m * m * m;
  s.lower = std::pow(x, 1.0 - 1.0 / (1056.0 * constants.c_repulsion * m4));
  s.upper = x - std::pow(x, beta0) / beta0;
  s.middle = nu(beta0, conductor, 1.0) * x;
  s.holds = s.lower <= constants.kappa_nu * s.middle && s.middle <= constants.kappa_nu * s.upper;
  return s;
}

double lemma54_f_log(double L, double t) {
  if (!(L >= 4.0 - 1e-12)) fail(ErrorKind::domain, "lemma54_f needs x >= e^4");
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorKind::domain, "lemma54_f needs t in (0, 1]");
  if (t == 0.0) return 1.0;
  // e^t (L - t) - L rewritten as expm1(t)(L - t) - t.
  const double den = std::expm1(t) * (L - t) - t;
  return std::exp(t) * t * (L - t) * (L - 1.0) / (den * L);
}

double lemma54_f(double x, double t) { return lemma54_f_log(std::log(x), t); }

double eta_bound_pnt2(int m, int m2, double log_cc, double x, const ConstantsConfig& constants) {
  if (!(x >= 3.0)) fail(ErrorKind::domain, "x must be at least 3");
  const double c = constants.c_zfr;
  const double log_x = std::log(x);
  const double mm = m + m2;
  return std::exp(-c * log_x / (mm * log_cc + std::sqrt(m * mm * c * log_x)));
}

}  // namespace pnt::regions
