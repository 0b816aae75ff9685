#include "pnt/cli/descriptor.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "pnt/error.hpp"

namespace pnt::cli {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

[[noreturn]] void at_line(ErrorKind kind, const std::string& origin, std::size_t line, const std::string& what) {
  fail(kind, origin + ":" + std::to_string(line) + ": " + what);
}

template <class Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) fn(line_no, line);
    pos = end + 1;
  }
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    if (v > (UINT64_MAX - (c - '0')) / 10) return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

bool is_prime(std::uint64_t p) {
  auto pk = prime_power(p);
  return pk && pk->second == 1;
}

struct Field {
  std::string value;
  std::size_t line = 0;
};

}  // namespace

std::map<std::uint64_t, double> load_hecke_file(const std::filesystem::path& path) {
  const std::string origin = path.string();
  std::map<std::uint64_t, double> out;
  for_each_line(read_file(path), [&](std::size_t n, std::string_view line) {
    auto words = split_ws(line);
    if (words.size() != 2) at_line(ErrorKind::parse, origin, n, "expected `p lambda_p`");
    auto p = parse_uint(words[0]);
    auto lambda = parse_real(words[1]);
    if (!p || !lambda) at_line(ErrorKind::parse, origin, n, "cannot parse `" + std::string(line) + "`");
    if (!is_prime(*p)) at_line(ErrorKind::invariant_violation, origin, n, std::to_string(*p) + " is not prime");
    if (!out.emplace(*p, *lambda).second) {
      at_line(ErrorKind::invariant_violation, origin, n, "duplicate prime " + std::to_string(*p));
    }
  });
  return out;
}

std::map<std::uint64_t, std::vector<cplx>> load_satake_file(const std::filesystem::path& path,
                                                            const LFunctionHeader& header) {
  const std::string origin = path.string();
  std::map<std::uint64_t, std::vector<cplx>> out;
  for_each_line(read_file(path), [&](std::size_t n, std::string_view line) {
    auto words = split_ws(line);
    if (words.size() < 2) at_line(ErrorKind::parse, origin, n, "expected `p alpha_1 ... alpha_m`");
    auto p = parse_uint(words[0]);
    if (!p) at_line(ErrorKind::parse, origin, n, "cannot parse prime `" + std::string(words[0]) + "`");
    if (!is_prime(*p)) at_line(ErrorKind::invariant_violation, origin, n, std::to_string(*p) + " is not prime");
    std::vector<cplx> alphas;
    for (std::size_t i = 1; i < words.size(); ++i) {
      auto z = parse_complex(words[i]);
      if (!z) at_line(ErrorKind::parse, origin, n, "cannot parse complex `" + std::string(words[i]) + "`");
      alphas.push_back(*z);
    }
    if (auto err = check_satake(*p, alphas, header.degree, header.conductor)) {
      at_line(ErrorKind::invariant_violation, origin, n, *err);
    }
    if (!out.emplace(*p, std::move(alphas)).second) {
      at_line(ErrorKind::invariant_violation, origin, n, "duplicate prime " + std::to_string(*p));
    }
  });
  return out;
}

LFunction parse_descriptor(std::string_view text, const std::filesystem::path& base_dir,
                           const std::string& origin) {
  static const char* const kKeys[] = {"label", "degree", "conductor", "mu", "pole_order", "beta0",
                                      "family", "unit", "archimedean_unramified"};
  std::map<std::string, Field> fields;
  for_each_line(text, [&](std::size_t n, std::string_view line) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) at_line(ErrorKind::parse, origin, n, "expected `key = value`");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) at_line(ErrorKind::parse, origin, n, "unknown key `" + key + "`");
    if (fields.count(key)) at_line(ErrorKind::parse, origin, n, "duplicate key `" + key + "`");
    fields[key] = {value, n};
  });
  auto line_of = [&](const char* key) { return fields.count(key) ? fields[key].line : 0; };
  if (!fields.count("family")) fail(ErrorKind::parse, origin + ": missing `family`");
  const std::string family = fields["family"].value;

  LFunctionHeader h;
  std::optional<int> degree;
  std::optional<std::uint64_t> conductor;
  std::optional<std::vector<cplx>> mu;
  std::optional<int> pole;
  if (fields.count("degree")) {
    auto v = parse_uint(fields["degree"].value);
    if (!v || *v == 0 || *v > 64) at_line(ErrorKind::parse, origin, line_of("degree"), "bad degree");
    degree = static_cast<int>(*v);
  }
  if (fields.count("conductor")) {
    auto v = parse_uint(fields["conductor"].value);
    if (!v || *v == 0) at_line(ErrorKind::parse, origin, line_of("conductor"), "bad conductor");
    conductor = *v;
  }
  if (fields.count("mu")) {
    std::vector<cplx> list;
    std::string_view rest = fields["mu"].value;
    while (true) {
      const auto comma = rest.find(',');
      auto z = parse_complex(rest.substr(0, comma));
      if (!z) at_line(ErrorKind::parse, origin, line_of("mu"), "cannot parse archimedean parameter list");
      list.push_back(*z);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    mu = std::move(list);
  }
  if (fields.count("pole_order")) {
    auto v = parse_uint(fields["pole_order"].value);
    if (!v || *v > 64) at_line(ErrorKind::parse, origin, line_of("pole_order"), "bad pole order");
    pole = static_cast<int>(*v);
  }
  std::optional<double> beta0;
  if (fields.count("beta0")) {
    auto v = parse_real(fields["beta0"].value);
    if (!v) at_line(ErrorKind::parse, origin, line_of("beta0"), "bad beta0");
    if (!(*v > 0.5 && *v < 1.0)) at_line(ErrorKind::invariant_violation, origin, line_of("beta0"), "beta0 must lie in (1/2, 1)");
    beta0 = *v;
  }
  bool arch_unramified = true;
  if (fields.count("archimedean_unramified")) {
    const auto& v = fields["archimedean_unramified"].value;
    if (v == "true" || v == "1" || v == "yes") {
      arch_unramified = true;
    } else if (v == "false" || v == "0" || v == "no") {
      arch_unramified = false;
    } else {
      at_line(ErrorKind::parse, origin, line_of("archimedean_unramified"), "expected true or false");
    }
  }
  cplx unit = 1.0;
  if (fields.count("unit")) {
    auto z = parse_complex(fields["unit"].value);
    if (!z) at_line(ErrorKind::parse, origin, line_of("unit"), "bad unit");
    unit = *z;
  }

  // Check the header fields one by one so each error names its line.
  auto check_fields = [&](const LFunctionHeader& hd) {
    if (mu) {
      if (auto err = check_mu(hd.mu, hd.degree)) at_line(ErrorKind::invariant_violation, origin, line_of("mu"), *err);
    }
    if (hd.pole_order < 0 || hd.pole_order > hd.degree) {
      at_line(ErrorKind::invariant_violation, origin, line_of("pole_order"), "pole order must lie in [0, degree]");
    }
  };

  auto builtin_consistency = [&](const LFunction& lf) {
    auto mismatch = [&](const char* key, const std::string& expected) {
      at_line(ErrorKind::invariant_violation, origin, line_of(key),
              std::string(key) + " does not match family `" + family + "` (expected " + expected + ")");
    };
    if (degree && *degree != lf.degree()) mismatch("degree", std::to_string(lf.degree()));
    if (conductor && *conductor != lf.conductor()) mismatch("conductor", std::to_string(lf.conductor()));
    if (mu) {
      LFunctionHeader hd;
      hd.degree = lf.degree();
      hd.mu = *mu;
      check_fields(hd);
      if (*mu != std::vector<cplx>(lf.mu().begin(), lf.mu().end())) mismatch("mu", format_complex(lf.mu()[0]));
    }
    if (pole && *pole != lf.pole_order()) mismatch("pole_order", std::to_string(lf.pole_order()));
  };

  LFunction lf = LFunction::zeta();
  if (family == "zeta") {
    builtin_consistency(lf);
  } else if (family.rfind("dirichlet:", 0) == 0) {
    std::string_view rest = std::string_view(family).substr(10);
    const auto colon = rest.find(':');
    auto q = parse_uint(rest.substr(0, colon));
    std::optional<std::uint64_t> idx;
    if (colon != std::string_view::npos) idx = parse_uint(rest.substr(colon + 1));
    if (!q || !idx) at_line(ErrorKind::parse, origin, line_of("family"), "expected dirichlet:<modulus>:<index>");
    try {
      lf = LFunction::dirichlet(*q, *idx);
    } catch (const Error& e) {
      at_line(ErrorKind::invariant_violation, origin, line_of("family"), e.what());
    }
    builtin_consistency(lf);
  } else if (family.rfind("gl2-hecke:", 0) == 0 || family.rfind("explicit:", 0) == 0) {
    const bool hecke = family.rfind("gl2-hecke:", 0) == 0;
    const std::filesystem::path data = base_dir / family.substr(hecke ? 10 : 9);
    for (const char* key : {"degree", "conductor", "mu"}) {
      if (!fields.count(key)) fail(ErrorKind::parse, origin + ": family `" + family + "` needs `" + key + "`");
    }
    h.degree = *degree;
    h.conductor = *conductor;
    h.mu = *mu;
    h.pole_order = pole.value_or(0);
    h.archimedean_unramified = arch_unramified;
    check_fields(h);
    if (hecke) {
      if (h.degree != 2) at_line(ErrorKind::invariant_violation, origin, line_of("degree"), "gl2-hecke needs degree 2");
      lf = LFunction::gl2_hecke(h, load_hecke_file(data), unit);
    } else {
      lf = LFunction::from_satake(h, load_satake_file(data, h));
    }
  } else {
    at_line(ErrorKind::parse, origin, line_of("family"), "unknown family `" + family + "`");
  }
  if (fields.count("label")) lf = lf.with_label(fields["label"].value);
  if (beta0) lf = lf.with_beta0(beta0);
  return lf;
}

LFunction load_descriptor(const std::filesystem::path& path) {
  return parse_descriptor(read_file(path), path.parent_path(), path.string());
}

}  // namespace pnt::cli
