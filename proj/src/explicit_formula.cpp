#include "pnt/explicit_formula.hpp"

#include <algorithm>
#include <cmath>

#include "pnt/error.hpp"

namespace pnt {

namespace {

cplx merged(const std::vector<ComplexSum>& parts) {
  ComplexSum total;
  for (const auto& p : parts) total.merge(p);
  return total.value();
}

}  // namespace

cplx sharp_sum(const LFunction& lf, double x, const StreamOptions& options) {
  const auto last = stream_bound(x, options);
  if (last < 2) return {0.0, 0.0};
  SegmentPlan plan(2, last, options.segment_size);
  return merged(map_segments<ComplexSum>(lf, plan, options,
                                         [](ComplexSum& acc, std::span<const CoefficientTerm> terms) {
                                           for (const auto& t : terms) acc.add(t.value);
                                         }));
}

cplx smooth_sum(const LFunction& lf, const kernel::KernelParams& kp, const StreamOptions& options) {
  const auto last = stream_bound(std::exp(kp.support_hi() * kp.log_x), options);
  if (last < 2) return {0.0, 0.0};
  const auto first = std::max<std::uint64_t>(
      2, static_cast<std::uint64_t>(std::floor(std::exp(kp.support_lo() * kp.log_x))));
  SegmentPlan plan(first, last, options.segment_size);
  return merged(map_segments<ComplexSum>(
      lf, plan, options, [&kp](ComplexSum& acc, std::span<const CoefficientTerm> terms) {
        for (const auto& t : terms) {
          const double w = kernel::f_eval(kp, std::log(static_cast<double>(t.n)) / kp.log_x);
          if (w != 0.0) acc.add(t.value * w);
        }
      }));
}

double zero_tail_estimate(const LFunction& lf, const kernel::KernelParams& kp, double T, double alpha,
                          double sigma, const ConstantsConfig& constants) {
  const double C = analytic_conductor(lf);
  const double m = lf.degree();
  auto block = [&](double lo, double hi) {
    // Both signs of the ordinate, per-unit count taken at the top of the block.
    const double count = 2.0 * constants.c_zero_count * m * std::log(C * (2.0 + hi)) * (hi - lo);
    return count * kernel::F_decay_bound(kp, cplx(sigma, lo), alpha);
  };
  CompensatedSum total;
  double lo = T;
  if (lo < 1.0) {
    total.add(block(lo, 1.0));
    lo = 1.0;
  }
  for (int k = 0; k < 400; ++k) {
    const double term = block(lo, 2.0 * lo);
    total.add(term);
    if (k >= 3 && term <= 1e-17 * total.value()) break;
    lo *= 2.0;
  }
  return kp.log_x * total.value();
}

double discretization_allowance(const LFunction& lf, const kernel::KernelParams& kp,
                                const ConstantsConfig& constants) {
  const double m = lf.degree();
  const double main = (kp.ell / kp.eps) * std::pow(kp.x, 1.0 - 1.0 / (2.0 * m));
  const double quarter = m * std::pow(kp.x, 0.25);
  return constants.c_discretization * (main + quarter) * std::log(analytic_conductor(lf));
}

ZeroSideResult zero_side(const LFunction& lf, const kernel::KernelParams& kp, const ZeroDataset& zeros,
                         const ZeroSideOptions& options, const ConstantsConfig& constants) {
  const double T = options.T_trunc;
  if (!(T >= 0.0)) fail(ErrorKind::domain, "truncation height must be nonnegative");
  if (T > zeros.completeness) {
    fail(ErrorKind::incomplete_dataset, "truncation height " + format_number(T) +
                                            " exceeds dataset completeness " + format_number(zeros.completeness));
  }
  if (lf.self_dual() && !zeros.conjugate_closed) {
    fail(ErrorKind::invariant_violation, "zero dataset for a self-dual datum must be closed under conjugation");
  }
  const double alpha = options.tail_alpha.value_or(kp.ell);
  const bool use_beta0 = options.include_beta0 && lf.beta0().has_value();
  const double beta0 = lf.effective_beta0();

  std::vector<const Zero*> used;
  bool skipped_beta0 = false;
  for (const auto& z : zeros.zeros) {
    if (std::fabs(z.gamma) > T) continue;
    if (use_beta0 && !skipped_beta0 && z.gamma == 0.0 && std::fabs(z.beta - beta0) <= 1e-12) {
      skipped_beta0 = true;
      continue;
    }
    used.push_back(&z);
  }
  // Fixed-size blocks summed in order keep the result independent of any
  // future parallel split.
  ComplexSum zero_sum;
  const std::size_t bs = std::max<std::size_t>(1, options.block_size);
  for (std::size_t start = 0; start < used.size(); start += bs) {
    ComplexSum part;
    const std::size_t end = std::min(used.size(), start + bs);
    for (std::size_t i = start; i < end; ++i) {
      part.add(kernel::F_eval(kp, -cplx(used[i]->beta, used[i]->gamma) * kp.log_x));
    }
    zero_sum.merge(part);
  }
  ComplexSum inner;
  inner.add(static_cast<double>(lf.pole_order()) * kernel::F_eval(kp, -kp.log_x));
  if (use_beta0) inner.add(-kernel::F_eval(kp, -beta0 * kp.log_x));
  inner.add(-zero_sum.value());

  ZeroSideResult out;
  out.value = kp.log_x * inner.value();
  out.tail_estimate = zero_tail_estimate(lf, kp, T, alpha, options.tail_sigma, constants);
  out.allowance = discretization_allowance(lf, kp, constants);
  out.zeros_used = used.size();
  return out;
}

void check_real_for_self_dual(const LFunction& lf, cplx value, const char* what) {
  if (!lf.self_dual()) return;
  if (std::fabs(value.imag()) > 1e-8 * (1.0 + std::fabs(value.real()))) {
    fail(ErrorKind::contract, std::string(what) + " of self-dual " + lf.label() +
                                  " has imaginary part " + format_number(value.imag()));
  }
}

double pnt_main_term(int pole_order, double x, double beta0) {
  if (!(beta0 >= 0.5 && beta0 < 1.0)) fail(ErrorKind::domain, "beta0 must lie in [1/2, 1)");
  return pole_order * x - std::pow(x, beta0) / beta0;
}

double pnt_main_term(const LFunction& lf, double x, bool drop_exceptional) {
  if (drop_exceptional) return lf.pole_order() * x;
  return pnt_main_term(lf.pole_order(), x, lf.effective_beta0());
}

double pnt_error_envelope(int m, double x, const EnvelopeParams& ep, double eta,
                          const ConstantsConfig& constants) {
  if (!(eta >= 0.0)) fail(ErrorKind::domain, "eta must be nonnegative");
  if (!(ep.A >= 2.0)) fail(ErrorKind::domain, "A must be at least 2");
  const double md = m;
  const double m3 = md * md * md;
  const double lead = x - std::pow(x, ep.beta0) / ep.beta0;
  const double first = std::pow(md, 5) * std::pow(x, -constants.c_main2 / (m3 * md));
  const double second = std::pow(md, constants.c_main3 * m3) * ep.A * ep.A * std::exp(-(1.0 - 1.0 / ep.A) * eta);
  return lead * (first + second);
}

double log_x_min_main(int m, double log_c, double A, const ConstantsConfig& constants) {
  return constants.c_main1 * A * A * std::pow(static_cast<double>(m), 5) * log_c;
}

IkEnvelope ik_error_envelope(int m, double conductor, double x, const ConstantsConfig& constants) {
  if (!(x >= 3.0)) fail(ErrorKind::domain, "x must be at least 3");
  const double m4 = std::pow(static_cast<double>(m), 4);
  const double log_x = std::log(x);
  const double log_c = std::log(conductor);
  IkEnvelope out;
  out.value = m4 * std::pow(log_x + log_c, 4) * x *
              std::exp(-constants.c_ik * log_x / (m4 * (log_c + std::sqrt(log_x))));
  out.log_x_nontrivial = 4.0 / constants.c_ik * m4 * std::log(m * log_c) * log_c;
  out.x_nontrivial = std::exp(out.log_x_nontrivial);
  return out;
}

double pnt_standard_envelope(int m, int m2, double log_cc, double x, double beta0,
                             const ConstantsConfig& constants) {
  const double mm = m + m2;
  const double log_x = std::log(x);
  return (x - std::pow(x, beta0) / beta0) *
         std::exp(-constants.c_zfr * log_x / (mm * log_cc + std::sqrt(m * mm * log_x)));
}

double pnt_narrow_envelope(int m, int m2, double x) {
  return x * std::pow(std::log(x), -1.0 / (static_cast<double>(m) * m2));
}

Table pnt_report(const LFunction& lf, const std::vector<double>& x_grid, const ReportOptions& options,
                 const ConstantsConfig& constants, const StreamOptions& stream) {
  Table table({"x", "sharp_re", "sharp_im", "main_term", "residual", "residual_over_x", "eta",
               "envelope_main", "ratio_main", "vacuous", "shape", "envelope_shape", "ratio_shape"});
  const auto& region = options.region;
  for (double x : x_grid) {
    const cplx sharp = sharp_sum(lf, x, stream);
    check_real_for_self_dual(lf, sharp, "sharp sum");
    const double main = pnt_main_term(lf, x, options.drop_exceptional);
    const double residual = sharp.real() - main;
    const double eta = regions::eta_closed_form(region, x);
    EnvelopeParams ep = options.envelope;
    ep.beta0 = lf.effective_beta0();
    const double env = pnt_error_envelope(lf.degree(), x, ep, eta, constants);
    const bool vacuous = env >= std::fabs(main) && env >= x - std::pow(x, ep.beta0) / ep.beta0;
    std::string shape;
    double shape_env = 0.0;
    switch (region.kind) {
      case regions::RegionKind::classical:
        shape = "standard";
        shape_env = pnt_standard_envelope(region.m, region.m2, region.log_cc, x, ep.beta0, constants);
        break;
      case regions::RegionKind::brumley:
        shape = "narrow";
        shape_env = pnt_narrow_envelope(region.m, region.m2, x);
        break;
      default:
        shape = "main";
        shape_env = env;
        break;
    }
    table.add_row({x, sharp.real(), sharp.imag(), main, residual, residual / x, eta, env,
                   std::fabs(residual) / env, static_cast<std::int64_t>(vacuous ? 1 : 0), shape, shape_env,
                   std::fabs(residual) / shape_env});
  }
  return table;
}

}  // namespace pnt
