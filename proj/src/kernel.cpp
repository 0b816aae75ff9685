#include "pnt/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "pnt/error.hpp"

namespace pnt::kernel {

KernelParams KernelParams::make(double x, int ell, double eps) {
  if (!(x >= 3.0) || !std::isfinite(x)) fail(ErrorKind::domain, "kernel needs x >= 3");
  if (ell < 2) fail(ErrorKind::domain, "kernel needs l >= 2");
  if (!(eps > 0.0 && eps < 0.25)) fail(ErrorKind::domain, "kernel needs 0 < eps < 1/4");
  KernelParams kp;
  kp.x = x;
  kp.ell = ell;
  kp.eps = eps;
  kp.log_x = std::log(x);
  kp.B = eps / (2.0 * ell * kp.log_x);
  if (!(kp.support_lo() > 0.0)) fail(ErrorKind::domain, "kernel support must start above 0");
  return kp;
}

double irwin_hall_cdf(int n, double u) {
  if (u <= 0.0) return 0.0;
  if (u >= n) return 1.0;
  // The upper half goes through the symmetry CDF(u) = 1 - CDF(n - u) so that
  // values near 1 keep their small complement exactly.
  if (2.0 * u > n) return 1.0 - irwin_hall_cdf(n, n - u);
  // CDF_n(u) = sum_{i >= 0} M_{n+1}(u - i), M the cardinal B-spline of order
  // n + 1. Cox-de Boor on integer knots gives the n + 1 nonzero values.
  const int s = static_cast<int>(std::floor(u));
  std::vector<double> N(static_cast<std::size_t>(n) + 2, 0.0);  // N[j] <-> knot index s - n + j
  N[n] = 1.0;
  for (int d = 1; d <= n; ++d) {
    for (int j = n - d; j <= n; ++j) {
      const double i = s - n + j;
      const double left = (u - i) / d * N[j];
      const double right = (i + d + 1 - u) / d * N[j + 1];
      N[j] = left + right;
    }
  }
  double sum = 0.0;
  for (int j = std::max(0, n - s); j <= n; ++j) sum += N[j];
  return std::min(sum, 1.0);
}

double f_eval(const KernelParams& kp, double t) {
  if (t <= kp.support_lo() || t >= kp.support_hi()) return 0.0;
  if (t >= 0.5 && t <= 1.0) return 1.0;
  const double w = 2.0 * kp.B;
  if (t < 0.5) return irwin_hall_cdf(kp.ell, kp.ell - (0.5 - t) / w);
  return irwin_hall_cdf(kp.ell, kp.ell + (1.0 - t) / w);
}

cplx expm1(cplx w) {
  const double a = w.real();
  const double b = w.imag();
  const double s = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

cplx box_factor(cplx w) {
  if (std::abs(w) < 1e-2) {
    // sum_{k=0}^{12} w^k/(k+1)!, Horner form.
    cplx acc = 1.0 / 6227020800.0;  // 1/13!
    double fact = 6227020800.0;
    for (int k = 11; k >= 0; --k) {
      fact /= (k + 2);
      acc = acc * w + 1.0 / fact;
    }
    return acc;
  }
  return expm1(w) / w;
}

namespace {

cplx integer_power(cplx base, int n) {
  cplx result = 1.0;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace

cplx F_eval(const KernelParams& kp, cplx z) {
  const double l = kp.ell;
  const double a = 0.5 + 2.0 * l * kp.B;
  const cplx lead = std::exp(-(1.0 + 2.0 * l * kp.B) * z);
  const cplx body = a * box_factor(a * z);
  const cplx w = 2.0 * kp.B * z;
  const cplx base = box_factor(w);
  // The base has no zeros for |w| < pi, so the logarithm is safe there.
  const cplx power = std::abs(w) < std::numbers::pi ? std::exp(l * std::log(base)) : integer_power(base, kp.ell);
  return lead * body * power;
}

double F_decay_bound(const KernelParams& kp, cplx s, double alpha) {
  const double sigma = s.real();
  if (!(sigma > 0.0)) fail(ErrorKind::domain, "decay bound needs Re(s) > 0");
  if (!(alpha >= 0.0 && alpha <= kp.ell)) fail(ErrorKind::domain, "decay bound needs 0 <= alpha <= l");
  const double mod = std::abs(s);
  return std::exp(sigma * kp.eps + sigma * kp.log_x) / (mod * kp.log_x) *
         (1.0 + std::exp(-0.5 * sigma * kp.log_x)) * std::pow(2.0 * kp.ell / (kp.eps * mod), alpha);
}

MainTermDiff main_term_diff(const KernelParams& kp, double sigma, double c) {
  if (!(sigma > 0.75 && sigma <= 1.0)) fail(ErrorKind::domain, "sigma must lie in (3/4, 1]");
  if (!(kp.x >= 10.0)) fail(ErrorKind::domain, "main-term comparison needs x >= 10");
  MainTermDiff out;
  out.value = (F_eval(kp, -kp.log_x) - F_eval(kp, -sigma * kp.log_x)).real();
  out.predicted = kp.x / kp.log_x - std::pow(kp.x, sigma) / (sigma * kp.log_x);
  out.allowance = c * (kp.eps * out.predicted + std::sqrt(kp.x) / kp.log_x);
  return out;
}

Recipe default_recipe(double x, int m, double A, const ConstantsConfig& constants) {
  if (!(x >= 3.0)) fail(ErrorKind::domain, "recipe needs x >= 3");
  if (m < 1 || !(A >= 2.0)) fail(ErrorKind::domain, "recipe needs m >= 1 and A >= 2");
  Recipe r;
  r.ell = std::max(2, static_cast<int>(std::ceil(A * constants.c_repulsion * m * m * m)));
  const double al = 2.0 * A * r.ell;
  r.eps = std::min(0.2, al * std::exp(-std::log(x) / al));
  return r;
}

}  // namespace pnt::kernel
