#include "pnt/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pnt/error.hpp"
#include "pnt/regions.hpp"

namespace pnt {

namespace {

bool by_ordinate(const Zero& a, const Zero& b) {
  return a.gamma != b.gamma ? a.gamma < b.gamma : a.beta < b.beta;
}

[[noreturn]] void parse_error(const std::string& origin, std::size_t line, const std::string& what) {
  fail(ErrorKind::parse, origin + ":" + std::to_string(line) + ": " + what);
}

// Zeros with gamma in [lo, hi].
std::pair<std::size_t, std::size_t> ordinate_range(const ZeroDataset& ds, double lo, double hi) {
  auto first = std::lower_bound(ds.zeros.begin(), ds.zeros.end(), lo,
                                [](const Zero& z, double v) { return z.gamma < v; });
  auto last = std::upper_bound(ds.zeros.begin(), ds.zeros.end(), hi,
                               [](double v, const Zero& z) { return v < z.gamma; });
  return {static_cast<std::size_t>(first - ds.zeros.begin()), static_cast<std::size_t>(last - ds.zeros.begin())};
}

void require_height(const ZeroDataset& ds, double T) {
  if (T > ds.completeness) {
    fail(ErrorKind::incomplete_dataset, "height " + format_number(T) + " exceeds dataset completeness " +
                                            format_number(ds.completeness));
  }
}

}  // namespace

ZeroDataset parse_zeros(std::string_view text, const LoadZerosOptions& options, const std::string& origin) {
  ZeroDataset ds;
  bool half = options.half;
  std::vector<Zero> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto words = split_ws(line.substr(1));
      if (words.empty()) continue;
      if (words[0] == "completeness") {
        if (words.size() != 2) parse_error(origin, line_no, "expected `# completeness <T>`");
        auto v = parse_real(words[1]);
        if (!v || *v < 0) parse_error(origin, line_no, "bad completeness height");
        ds.completeness = *v;
      } else if (words[0] == "half") {
        half = true;
      } else if (words[0] == "source") {
        const auto at = line.find("source");
        ds.source = std::string(trim(line.substr(at + 6)));
      }
      continue;
    }
    auto words = split_ws(line);
    Zero z;
    if (words.size() == 1) {
      auto g = parse_real(words[0]);
      if (!g) parse_error(origin, line_no, "cannot parse ordinate `" + std::string(words[0]) + "`");
      z.gamma = *g;
    } else if (words.size() == 2) {
      auto b = parse_real(words[0]);
      auto g = parse_real(words[1]);
      if (!b || !g) parse_error(origin, line_no, "cannot parse `" + std::string(line) + "`");
      z.beta = *b;
      z.gamma = *g;
    } else {
      parse_error(origin, line_no, "expected `gamma` or `beta gamma`");
    }
    if (!(z.beta > 0.0 && z.beta < 1.0)) {
      fail(ErrorKind::invariant_violation, origin + ":" + std::to_string(line_no) + ": beta outside (0, 1)");
    }
    if (half && z.gamma < 0.0) {
      fail(ErrorKind::invariant_violation,
           origin + ":" + std::to_string(line_no) + ": negative ordinate in a half dataset");
    }
    raw.push_back(z);
  }
  for (const auto& z : raw) {
    ds.zeros.push_back(z);
    if (half && z.gamma > 0.0) ds.zeros.push_back({z.beta, -z.gamma});
  }
  std::sort(ds.zeros.begin(), ds.zeros.end(), by_ordinate);
  if (half) {
    ds.conjugate_closed = true;
  } else {
    std::vector<Zero> mirrored;
    mirrored.reserve(ds.zeros.size());
    for (const auto& z : ds.zeros) mirrored.push_back({z.beta, -z.gamma});
    std::sort(mirrored.begin(), mirrored.end(), by_ordinate);
    ds.conjugate_closed = std::equal(ds.zeros.begin(), ds.zeros.end(), mirrored.begin(), mirrored.end(),
                                     [](const Zero& a, const Zero& b) { return a.beta == b.beta && a.gamma == b.gamma; });
  }
  if (ds.source.empty()) ds.source = origin;
  return ds;
}

ZeroDataset load_zeros(const std::filesystem::path& path, const LoadZerosOptions& options) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::io, "cannot open zero file " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_zeros(ss.str(), options, path.string());
}

std::int64_t count_N(const ZeroDataset& ds, double sigma, double T) {
  if (!(T >= 0.0)) fail(ErrorKind::domain, "T must be nonnegative");
  require_height(ds, T);
  const auto [a, b] = ordinate_range(ds, -T, T);
  std::int64_t n = 0;
  for (std::size_t i = a; i < b; ++i) {
    if (ds.zeros[i].beta >= sigma) ++n;
  }
  return n;
}

StarCount count_N_star(const ZeroDataset& ds, double sigma, double T, double beta0) {
  StarCount out{count_N(ds, sigma, T), true};
  if (!(beta0 > 0.5)) return out;
  const auto [a, b] = ordinate_range(ds, 0.0, 0.0);
  bool found = false;
  for (std::size_t i = a; i < b; ++i) {
    if (std::fabs(ds.zeros[i].beta - beta0) <= 1e-12) found = true;
  }
  out.beta0_found = found;
  if (found && beta0 >= sigma) --out.count;
  return out;
}

std::int64_t disc_count(const ZeroDataset& ds, double t, double radius) {
  if (!(radius > 0.0 && radius <= 2.0)) fail(ErrorKind::domain, "disc radius must lie in (0, 2]");
  require_height(ds, std::fabs(t) + radius);
  const auto [a, b] = ordinate_range(ds, t - radius, t + radius);
  std::int64_t n = 0;
  for (std::size_t i = a; i < b; ++i) {
    const double dx = 1.0 - ds.zeros[i].beta;
    const double dy = ds.zeros[i].gamma - t;
    if (dx * dx + dy * dy <= radius * radius) ++n;
  }
  return n;
}

double disc_reference(double t, double radius, int m, double conductor) {
  return radius * m * std::log(conductor * (2.0 + std::fabs(t))) + static_cast<double>(m) * m;
}

double log_density_envelope(double sigma, double T, int m, double conductor,
                            const ConstantsConfig& constants) {
  const double m3 = static_cast<double>(m) * m * m;
  return constants.c_density_coeff * m3 * std::log(static_cast<double>(m)) +
         constants.c_density_exp * m3 * (1.0 - sigma) * std::log(conductor * T);
}

double log_repulsion_envelope(double sigma, double T, int m, double conductor, double beta0,
                              const ConstantsConfig& constants) {
  const double m3 = static_cast<double>(m) * m * m;
  const double c = constants.c_repulsion;
  return std::log(regions::nu(beta0, conductor, T)) + c * m3 * std::log(static_cast<double>(m)) +
         c * m3 * (1.0 - sigma) * std::log(conductor * T);
}

Table density_report(const ZeroDataset& ds, const LFunction& lf, const std::vector<double>& sigmas,
                     const std::vector<double>& heights, const ConstantsConfig& constants) {
  Table table({"sigma", "T", "count_N", "count_N_star", "log_density_envelope", "density_envelope",
               "density_ratio", "log_density_ratio", "log_repulsion_envelope", "repulsion_envelope",
               "repulsion_ratio", "log_repulsion_ratio", "empirical_exponent"});
  const double C = analytic_conductor(lf);
  const int m = lf.degree();
  const double beta0 = lf.effective_beta0();
  for (double sigma : sigmas) {
    for (double T : heights) {
      if (!(T >= 1.0)) fail(ErrorKind::domain, "density report needs T >= 1");
      const auto n = count_N(ds, sigma, T);
      const auto star = count_N_star(ds, sigma, T, beta0);
      const double ld = log_density_envelope(sigma, T, m, C, constants);
      const double lr = log_repulsion_envelope(sigma, T, m, C, beta0, constants);
      const double d = std::exp(ld);
      const double r = std::exp(lr);
      const double exponent = n > 0 ? std::log(static_cast<double>(n)) / std::log(C * T) : 0.0;
      // The envelopes overflow binary64 at the default exponent base; the log
      // ratios stay finite (-inf for an empty count).
      const double ln = std::log(static_cast<double>(n));
      const double ls = std::log(static_cast<double>(star.count));
      table.add_row({sigma, T, n, star.count, ld, d, static_cast<double>(n) / d, ln - ld, lr, r,
                     static_cast<double>(star.count) / r, ls - lr, exponent});
    }
  }
  return table;
}

}  // namespace pnt
