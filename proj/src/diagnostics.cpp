#include "pnt/diagnostics.hpp"

#include <cmath>

#include "pnt/error.hpp"

namespace pnt {

double l1_dirichlet_diagnostic(const LFunction& lf, double eta, double cutoff,
                               const StreamOptions& options) {
  if (!(eta > 0.0)) fail(ErrorKind::domain, "eta must be positive");
  const auto last = stream_bound(cutoff, options);
  if (last < 2) return 0.0;
  SegmentPlan plan(2, last, options.segment_size);
  auto parts = map_segments<CompensatedSum>(
      lf, plan, options, [eta](CompensatedSum& acc, std::span<const CoefficientTerm> terms) {
        for (const auto& t : terms) {
          acc.add(std::abs(t.value) * std::exp(-(1.0 + eta) * std::log(static_cast<double>(t.n))));
        }
      });
  CompensatedSum total;
  for (const auto& p : parts) total.merge(p);
  return total.value();
}

double l1_dirichlet_reference(const LFunction& lf, double eta, const ConstantsConfig& constants) {
  const double m = lf.degree();
  return m / eta + m * std::log(analytic_conductor(lf)) + constants.c_l1 * m * m;
}

double short_interval_l1_diagnostic(const LFunction& lf, double x, double T,
                                    const StreamOptions& options) {
  if (!(x >= 2.0)) fail(ErrorKind::domain, "x must be at least 2");
  if (!(T >= 1.0)) fail(ErrorKind::domain, "T must be at least 1");
  const auto first = static_cast<std::uint64_t>(std::floor(x)) + 1;
  const auto last = stream_bound(x * std::exp(1.0 / T), options);
  if (last < first) return 0.0;
  SegmentPlan plan(first, last, options.segment_size);
  auto parts = map_segments<CompensatedSum>(
      lf, plan, options, [](CompensatedSum& acc, std::span<const CoefficientTerm> terms) {
        for (const auto& t : terms) acc.add(std::abs(t.value));
      });
  CompensatedSum total;
  for (const auto& p : parts) total.merge(p);
  return total.value();
}

double short_interval_reference(const LFunction& lf, double x, double T,
                                const ConstantsConfig& constants) {
  return constants.c_short_interval * lf.degree() * x / T;
}

}  // namespace pnt
