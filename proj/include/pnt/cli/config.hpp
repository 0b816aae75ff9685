#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

#include "pnt/constants.hpp"
#include "pnt/table.hpp"

namespace pnt::cli {

struct RunConfig {
  ConstantsConfig constants;
  std::uint64_t capacity = 10'000'000'000ULL;
  std::optional<std::filesystem::path> cache_dir;
  TableFormat format = TableFormat::csv;
  bool precision_report = false;
  unsigned threads = 0;

  /// capacity >= 1e4, constants valid, cache directory creatable and writable.
  void validate() const;
};

/// INI text: `[constants]` holds ConstantsConfig slots by name; `[run]` holds
/// capacity, cache_dir, format, precision_report and threads. Relative
/// cache paths are taken from `base_dir`.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});

RunConfig load_config(const std::filesystem::path& path);

}  // namespace pnt::cli
