#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnt/constants.hpp"
#include "pnt/lfunction.hpp"
#include "pnt/table.hpp"

namespace pnt {

struct Zero {
  double beta = 0.5;
  double gamma = 0.0;
};

/// Nontrivial zeros sorted by ordinate. All zeros with |gamma| <= completeness
/// are present; one entry per unit of multiplicity.
struct ZeroDataset {
  std::vector<Zero> zeros;
  double completeness = 0.0;
  bool conjugate_closed = false;
  std::string source;
};

struct LoadZerosOptions {
  /// Mirror positive ordinates across the real axis even without `# half`.
  bool half = false;
};

/// Text format: `# completeness <T>`, `# half`, `# source <text>` headers,
/// then `gamma` or `beta gamma` per line.
ZeroDataset parse_zeros(std::string_view text, const LoadZerosOptions& options = {},
                        const std::string& origin = "<memory>");
ZeroDataset load_zeros(const std::filesystem::path& path, const LoadZerosOptions& options = {});

/// #{beta >= sigma, |gamma| <= T}.
std::int64_t count_N(const ZeroDataset& ds, double sigma, double T);

struct StarCount {
  std::int64_t count = 0;
  /// False when beta0 > 1/2 was requested but no real zero at beta0 exists.
  bool beta0_found = true;
};

/// count_N without one copy of the exceptional zero (beta0, 0) when beta0 > 1/2.
StarCount count_N_star(const ZeroDataset& ds, double sigma, double T, double beta0);

/// #{rho : |rho - (1 + it)| <= radius}.
std::int64_t disc_count(const ZeroDataset& ds, double t, double radius);

/// radius m log(C (2 + |t|)) + m^2, the shape disc counts are compared to.
double disc_reference(double t, double radius, int m, double conductor);

/// log of m^{c_coeff m^3} (C T)^{c_exp m^3 (1 - sigma)}.
double log_density_envelope(double sigma, double T, int m, double conductor,
                            const ConstantsConfig& constants);

/// log of nu(T) m^{c m^3} (C T)^{c m^3 (1 - sigma)}, c = c_repulsion.
double log_repulsion_envelope(double sigma, double T, int m, double conductor, double beta0,
                              const ConstantsConfig& constants);

/// Per (sigma, T): counts, both envelopes (and their logs), ratios and log
/// ratios, and the
/// empirical exponent log(count)/log(C T).
Table density_report(const ZeroDataset& ds, const LFunction& lf, const std::vector<double>& sigmas,
                     const std::vector<double>& heights, const ConstantsConfig& constants);

}  // namespace pnt
