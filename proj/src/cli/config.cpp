#include "pnt/cli/config.hpp"

#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "pnt/error.hpp"
#include "pnt/numeric.hpp"

namespace pnt::cli {

namespace pt = boost::property_tree;

namespace {

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  fail(ErrorKind::parse, "config: `" + key + "` expects true or false");
}

double number(const std::string& key, const std::string& v) {
  auto d = parse_real(v);
  if (!d) fail(ErrorKind::parse, "config: `" + key + "` is not a number");
  return *d;
}

}  // namespace

void RunConfig::validate() const {
  constants.validate();
  if (capacity < 10'000) fail(ErrorKind::invariant_violation, "capacity must be at least 10000");
  if (cache_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir, ec);
    const auto probe = *cache_dir / ".pnt_write_probe";
    std::ofstream f(probe);
    if (ec || !f) fail(ErrorKind::invariant_violation, "cache directory " + cache_dir->string() + " is not writable");
    f.close();
    std::filesystem::remove(probe, ec);
  }
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    fail(ErrorKind::parse, "config:" + std::to_string(e.line()) + ": " + e.message());
  }
  RunConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      fail(ErrorKind::parse, "config: key `" + section + "` outside a section");
    }
    for (const auto& [key, node] : body) {
      const std::string value(trim(node.data()));
      if (section == "constants") {
        if (!cfg.constants.set(key, number(key, value))) {
          fail(ErrorKind::parse, "config: unknown constant `" + key + "`");
        }
      } else if (section == "run") {
        if (key == "capacity") {
          const double c = number(key, value);
          if (!(c >= 0.0 && c < 1.8e19)) fail(ErrorKind::parse, "config: capacity out of range");
          cfg.capacity = static_cast<std::uint64_t>(c);
        } else if (key == "cache_dir") {
          std::filesystem::path p(value);
          cfg.cache_dir = p.is_relative() ? base_dir / p : p;
        } else if (key == "format") {
          if (value == "csv") {
            cfg.format = TableFormat::csv;
          } else if (value == "tsv") {
            cfg.format = TableFormat::tsv;
          } else {
            fail(ErrorKind::parse, "config: format must be csv or tsv");
          }
        } else if (key == "precision_report") {
          cfg.precision_report = parse_bool(key, value);
        } else if (key == "threads") {
          const double t = number(key, value);
          if (!(t >= 0.0 && t <= 4096.0)) fail(ErrorKind::parse, "config: threads out of range");
          cfg.threads = static_cast<unsigned>(t);
        } else {
          fail(ErrorKind::parse, "config: unknown run key `" + key + "`");
        }
      } else {
        fail(ErrorKind::parse, "config: unknown section `" + section + "`");
      }
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::io, "cannot open config " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

}  // namespace pnt::cli
