#pragma once

#include <optional>
#include <vector>

#include "pnt/constants.hpp"
#include "pnt/kernel.hpp"
#include "pnt/lfunction.hpp"
#include "pnt/regions.hpp"
#include "pnt/sieve.hpp"
#include "pnt/table.hpp"
#include "pnt/zeros.hpp"

namespace pnt {

/// sum_{n <= x} a(n) Lambda(n).
cplx sharp_sum(const LFunction& lf, double x, const StreamOptions& options = {});

/// sum_n a(n) Lambda(n) f(log n / log x) over n <= x e^eps.
cplx smooth_sum(const LFunction& lf, const kernel::KernelParams& kp, const StreamOptions& options = {});

struct ZeroSideOptions {
  double T_trunc = 0.0;
  std::optional<double> tail_alpha;  // defaults to l
  bool include_beta0 = true;
  /// Real part used for the zeros beyond the truncation height.
  double tail_sigma = 1.0;
  std::size_t block_size = 1024;
};

struct ZeroSideResult {
  cplx value{};
  double tail_estimate = 0.0;
  /// Truncated-contour allowance c ((l/eps) x^{1-1/(2m)} + m x^{1/4}) log C.
  double allowance = 0.0;
  std::size_t zeros_used = 0;
};

/// log x [r F(-log x) - F(-beta0 log x) - sum_{|gamma| <= T} F(-rho log x)].
ZeroSideResult zero_side(const LFunction& lf, const kernel::KernelParams& kp, const ZeroDataset& zeros,
                         const ZeroSideOptions& options, const ConstantsConfig& constants);

/// Dyadic-block bound for the zeros above height T: per-unit zero count
/// c m log(C (2 + t)) times the transform decay bound, scaled by log x.
double zero_tail_estimate(const LFunction& lf, const kernel::KernelParams& kp, double T, double alpha,
                          double sigma, const ConstantsConfig& constants);

double discretization_allowance(const LFunction& lf, const kernel::KernelParams& kp,
                                const ConstantsConfig& constants);

/// Throws a contract failure when a self-dual datum produced a value with a
/// visible imaginary part.
void check_real_for_self_dual(const LFunction& lf, cplx value, const char* what);

/// r x - x^{beta0}/beta0.
double pnt_main_term(int pole_order, double x, double beta0);

/// Uses the datum's pole order and exceptional zero (1/2 when absent);
/// `drop_exceptional` removes the x^{beta0}/beta0 term.
double pnt_main_term(const LFunction& lf, double x, bool drop_exceptional = false);

struct EnvelopeParams {
  double A = 2.0;
  double beta0 = 0.5;
};

/// (x - x^{beta0}/beta0) (m^5 x^{-c2/m^4} + m^{c3 m^3} A^2 e^{-(1-1/A) eta}).
double pnt_error_envelope(int m, double x, const EnvelopeParams& ep, double eta,
                          const ConstantsConfig& constants);

/// log of the smallest x covered by the main theorem: c1 A^2 m^5 log C.
double log_x_min_main(int m, double log_c, double A, const ConstantsConfig& constants);

struct IkEnvelope {
  double value = 0.0;
  double x_nontrivial = 0.0;
  double log_x_nontrivial = 0.0;
};

/// m^4 (log xC)^4 x exp(-c log x / (m^4 (log C + sqrt(log x)))), nontrivial
/// from x = C^{4 m^4 log(m log C)/c}.
IkEnvelope ik_error_envelope(int m, double conductor, double x, const ConstantsConfig& constants);

/// Standard-region shape (x - x^{beta}/beta) exp(-c log x / ((m+m') log CC' + sqrt(m (m+m') log x))).
/// The single-form case is m' = 1 with the trivial second factor.
double pnt_standard_envelope(int m, int m2, double log_cc, double x, double beta0,
                             const ConstantsConfig& constants);

/// Narrow-region shape x (log x)^{-1/(m m')}.
double pnt_narrow_envelope(int m, int m2, double x);

struct ReportOptions {
  EnvelopeParams envelope;
  regions::ZeroFreeRegion region = regions::ZeroFreeRegion::grh();
  bool drop_exceptional = false;
};

/// One row per x: sharp sum, main term, residual, eta, the main-theorem
/// envelope and the region-specific shape.
Table pnt_report(const LFunction& lf, const std::vector<double>& x_grid, const ReportOptions& options,
                 const ConstantsConfig& constants, const StreamOptions& stream = {});

}  // namespace pnt
