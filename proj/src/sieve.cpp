#include "pnt/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "pnt/error.hpp"

namespace pnt {

namespace {

using u64 = std::uint64_t;

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct PendingTerm {
  u64 n;
  u64 p;
  int k;
};

// Prime powers in [lo, hi]; base holds every prime up to sqrt(hi).
void segment_terms(const LFunction& lf, u64 lo, u64 hi, std::span<const u64> base,
                   std::vector<CoefficientTerm>& out) {
  out.clear();
  if (hi < 2 || lo > hi) return;
  lo = std::max<u64>(lo, 2);
  std::vector<std::uint8_t> composite(hi - lo + 1, 0);
  std::vector<PendingTerm> pending;
  for (u64 p : base) {
    if (p * p > hi) break;
    u64 start = std::max(p * p, (lo + p - 1) / p * p);
    for (u64 m = start; m <= hi; m += p) composite[m - lo] = 1;
    // Higher powers p^k, k >= 2.
    u64 pk = p * p;
    int k = 2;
    while (pk <= hi) {
      if (pk >= lo) pending.push_back({pk, p, k});
      if (pk > hi / p) break;
      pk *= p;
      ++k;
    }
  }
  for (u64 n = lo; n <= hi; ++n) {
    if (!composite[n - lo]) pending.push_back({n, n, 1});
  }
  std::sort(pending.begin(), pending.end(),
            [](const PendingTerm& a, const PendingTerm& b) { return a.n < b.n; });
  out.reserve(pending.size());
  std::vector<cplx> alphas;
  for (const auto& t : pending) {
    lf.satake(t.p, alphas);
    if (alphas.empty()) continue;  // skipped ramified prime
    out.push_back({t.n, local_coefficient(alphas, t.p, t.k)});
  }
}

// ---- segment cache ---------------------------------------------------------

constexpr char kMagic[8] = {'P', 'N', 'T', 'S', 'E', 'G', '1', '\0'};

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& fingerprint,
                                 u64 lo, u64 hi) {
  char name[128];
  std::snprintf(name, sizeof name, "%016llx_%llu_%llu_v%u.seg",
                static_cast<unsigned long long>(fnv1a(fingerprint)), static_cast<unsigned long long>(lo),
                static_cast<unsigned long long>(hi), kSegmentCacheVersion);
  return dir / name;
}

template <class T>
void put(std::string& buf, const T& v) {
  buf.append(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
bool get(std::string_view& in, T& v) {
  if (in.size() < sizeof v) return false;
  std::memcpy(&v, in.data(), sizeof v);
  in.remove_prefix(sizeof v);
  return true;
}

bool read_cached(const std::filesystem::path& path, const std::string& fingerprint, u64 lo, u64 hi,
                 std::vector<CoefficientTerm>& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  const std::string data = ss.str();
  std::string_view in(data);
  if (in.size() < sizeof kMagic || std::memcmp(in.data(), kMagic, sizeof kMagic) != 0) return false;
  in.remove_prefix(sizeof kMagic);
  std::uint32_t version = 0;
  u64 flen = 0, rlo = 0, rhi = 0, count = 0;
  if (!get(in, version) || version != kSegmentCacheVersion) return false;
  if (!get(in, flen) || in.size() < flen || in.substr(0, flen) != fingerprint) return false;
  in.remove_prefix(flen);
  if (!get(in, rlo) || !get(in, rhi) || rlo != lo || rhi != hi || !get(in, count)) return false;
  if (in.size() != count * (sizeof(u64) + 2 * sizeof(double))) return false;
  out.clear();
  out.reserve(count);
  for (u64 i = 0; i < count; ++i) {
    CoefficientTerm t;
    double re = 0, im = 0;
    get(in, t.n);
    get(in, re);
    get(in, im);
    t.value = {re, im};
    out.push_back(t);
  }
  return true;
}

void write_cached(const std::filesystem::path& path, const std::string& fingerprint, u64 lo, u64 hi,
                  const std::vector<CoefficientTerm>& terms) {
  std::string buf(kMagic, sizeof kMagic);
  put(buf, kSegmentCacheVersion);
  put(buf, static_cast<u64>(fingerprint.size()));
  buf += fingerprint;
  put(buf, lo);
  put(buf, hi);
  put(buf, static_cast<u64>(terms.size()));
  for (const auto& t : terms) {
    put(buf, t.n);
    put(buf, t.value.real());
    put(buf, t.value.imag());
  }
  std::ostringstream tmpname;
  tmpname << path.string() << ".tmp." << std::this_thread::get_id();
  const std::filesystem::path tmp = tmpname.str();
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) return;  // an unwritable cache only costs recomputation
    f.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!f) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

std::uint64_t stream_bound(double X, const StreamOptions& options) {
  if (std::isnan(X)) fail(ErrorKind::domain, "bound is NaN");
  if (X < 2.0) return 0;
  if (X >= 1.8e19 || static_cast<u64>(std::floor(X)) > options.capacity) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", X);
    fail(ErrorKind::capacity_exceeded,
         std::string("bound ") + buf + " exceeds sieve capacity " + std::to_string(options.capacity));
  }
  return static_cast<u64>(std::floor(X));
}

SegmentPlan::SegmentPlan(std::uint64_t first, std::uint64_t last, std::uint64_t segment_size)
    : first_(first), last_(last), size_(segment_size == 0 ? 1 : segment_size) {
  base_ = first_ / size_;
  count_ = (first_ > last_) ? 0 : static_cast<std::size_t>(last_ / size_ - base_ + 1);
}

std::pair<std::uint64_t, std::uint64_t> SegmentPlan::segment(std::size_t i) const noexcept {
  const u64 lo = (base_ + i) * size_;
  const u64 hi = lo + size_ - 1;
  return {std::max(lo, first_), std::min(hi, last_)};
}

bool SegmentPlan::full(std::size_t i) const noexcept {
  const u64 lo = (base_ + i) * size_;
  const u64 hi = lo + size_ - 1;
  return lo >= first_ && hi <= last_;
}

std::vector<CoefficientTerm> coefficient_range(const LFunction& lf, std::uint64_t first,
                                               std::uint64_t last) {
  std::vector<CoefficientTerm> out;
  if (last < 2 || first > last) return out;
  const auto base = primes_up_to(isqrt(last));
  segment_terms(lf, first, last, base, out);
  return out;
}

std::optional<std::filesystem::path> resolve_cache_dir(
    const std::optional<std::filesystem::path>& configured) {
  if (const char* env = std::getenv("PNT_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return configured;
}

void visit_segments(const LFunction& lf, const SegmentPlan& plan, const StreamOptions& options,
                    const SegmentVisitor& visit) {
  const std::size_t count = plan.count();
  if (count == 0) return;
  const auto base = primes_up_to(isqrt(plan.last()));
  const auto& cache_dir = options.cache_dir;
  if (cache_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir, ec);
    if (ec) fail(ErrorKind::io, "cannot create cache directory " + cache_dir->string());
  }

  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  std::atomic<std::size_t> next{0};
  // Segments above the lowest failure are skipped; everything below it still
  // runs, so the reported error does not depend on scheduling.
  std::atomic<std::size_t> first_failure{count};
  std::vector<std::exception_ptr> errors(count);

  auto work = [&] {
    std::vector<CoefficientTerm> terms;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      if (i > first_failure.load()) continue;
      try {
        const auto [lo, hi] = plan.segment(i);
        const bool cacheable = cache_dir && plan.full(i);
        bool loaded = false;
        std::filesystem::path path;
        if (cacheable) {
          path = cache_path(*cache_dir, lf.fingerprint(), lo, hi);
          loaded = read_cached(path, lf.fingerprint(), lo, hi, terms);
        }
        if (!loaded) {
          segment_terms(lf, lo, hi, base, terms);
          if (cacheable) write_cached(path, lf.fingerprint(), lo, hi, terms);
        }
        visit(i, std::span<const CoefficientTerm>(terms));
      } catch (...) {
        errors[i] = std::current_exception();
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<CoefficientTerm> coefficient_stream(const LFunction& lf, double X,
                                                const StreamOptions& options) {
  const u64 last = stream_bound(X, options);
  std::vector<CoefficientTerm> out;
  if (last < 2) return out;
  SegmentPlan plan(2, last, options.segment_size);
  auto parts = map_segments<std::vector<CoefficientTerm>>(
      lf, plan, options, [](std::vector<CoefficientTerm>& dst, std::span<const CoefficientTerm> terms) {
        dst.assign(terms.begin(), terms.end());
      });
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace pnt
