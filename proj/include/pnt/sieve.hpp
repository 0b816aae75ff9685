#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pnt/lfunction.hpp"

namespace pnt {

/// Bump when the on-disk segment layout or coefficient arithmetic changes.
inline constexpr std::uint32_t kSegmentCacheVersion = 1;

struct StreamOptions {
  std::uint64_t capacity = 10'000'000'000ULL;
  unsigned threads = 0;  // 0: hardware concurrency
  /// Segments are aligned to multiples of this size regardless of the thread
  /// count, which is what makes the reduction order fixed.
  std::uint64_t segment_size = 1ULL << 16;
  std::optional<std::filesystem::path> cache_dir;
};

/// Largest integer n <= X, or 0 when X < 2. Throws CapacityExceeded above
/// the configured capacity.
std::uint64_t stream_bound(double X, const StreamOptions& options);

/// Aligned segments covering [first, last].
class SegmentPlan {
 public:
  SegmentPlan(std::uint64_t first, std::uint64_t last, std::uint64_t segment_size);

  std::size_t count() const noexcept { return count_; }
  /// Inclusive bounds of segment i, clipped to [first, last].
  std::pair<std::uint64_t, std::uint64_t> segment(std::size_t i) const noexcept;
  /// True when segment i is a whole aligned block (eligible for caching).
  bool full(std::size_t i) const noexcept;
  std::uint64_t first() const noexcept { return first_; }
  std::uint64_t last() const noexcept { return last_; }

 private:
  std::uint64_t first_, last_, size_, base_;
  std::size_t count_;
};

/// Prime powers in [first, last] with values, single-threaded and uncached.
std::vector<CoefficientTerm> coefficient_range(const LFunction& lf, std::uint64_t first,
                                               std::uint64_t last);

/// Prime powers n <= X in increasing order.
std::vector<CoefficientTerm> coefficient_stream(const LFunction& lf, double X,
                                                const StreamOptions& options = {});

using SegmentVisitor = std::function<void(std::size_t, std::span<const CoefficientTerm>)>;

/// Calls `visit(i, terms)` once per segment, possibly from several threads at
/// once. If any segment fails, the error of the lowest failing segment is
/// rethrown after all workers stop.
void visit_segments(const LFunction& lf, const SegmentPlan& plan, const StreamOptions& options,
                    const SegmentVisitor& visit);

/// Per-segment partial results in segment order; `fold(partial, terms)`
/// reduces one segment. Merging the partials in order gives a result that
/// does not depend on the thread count.
template <class Partial, class Fold>
std::vector<Partial> map_segments(const LFunction& lf, const SegmentPlan& plan,
                                  const StreamOptions& options, Fold fold) {
  std::vector<Partial> parts(plan.count());
  visit_segments(lf, plan, options, [&](std::size_t i, std::span<const CoefficientTerm> terms) {
    fold(parts[i], terms);
  });
  return parts;
}

/// Cache location: PNT_CACHE_DIR wins over the configured directory.
std::optional<std::filesystem::path> resolve_cache_dir(
    const std::optional<std::filesystem::path>& configured);

}  // namespace pnt
