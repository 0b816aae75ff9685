#pragma once

#include "pnt/constants.hpp"
#include "pnt/lfunction.hpp"
#include "pnt/sieve.hpp"

namespace pnt {

/// sum_{n <= cutoff} |a(n)| Lambda(n) / n^{1+eta}.
double l1_dirichlet_diagnostic(const LFunction& lf, double eta, double cutoff,
                               const StreamOptions& options = {});

/// m/eta + m log C + c_l1 m^2, the shape the truncated sum is compared against.
double l1_dirichlet_reference(const LFunction& lf, double eta, const ConstantsConfig& constants);

/// sum over x < n <= x e^{1/T} of |a(n)| Lambda(n).
double short_interval_l1_diagnostic(const LFunction& lf, double x, double T,
                                    const StreamOptions& options = {});

/// c_short_interval * m * x / T.
double short_interval_reference(const LFunction& lf, double x, double T,
                                const ConstantsConfig& constants);

}  // namespace pnt
