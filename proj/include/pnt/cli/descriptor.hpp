#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "pnt/lfunction.hpp"

namespace pnt::cli {

/// Reads an L-function descriptor: `key = value` lines with `#` comments.
/// Keys: label, degree, conductor, mu, pole_order, beta0, family, plus the
/// optional unit (GL(2) central character value) and archimedean_unramified.
/// Paths inside `family` are relative to the descriptor's directory.
LFunction load_descriptor(const std::filesystem::path& path);

LFunction parse_descriptor(std::string_view text, const std::filesystem::path& base_dir,
                           const std::string& origin = "<memory>");

/// `p lambda_p` lines.
std::map<std::uint64_t, double> load_hecke_file(const std::filesystem::path& path);

/// `p alpha_1 ... alpha_m` lines, checked against the header.
std::map<std::uint64_t, std::vector<cplx>> load_satake_file(const std::filesystem::path& path,
                                                            const LFunctionHeader& header);

}  // namespace pnt::cli
