#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <cstring>
#include <unistd.h>

#include "oracles.hpp"
#include "pnt/cli/descriptor.hpp"
#include "pnt/diagnostics.hpp"
#include "pnt/error.hpp"
#include "pnt/explicit_formula.hpp"
#include "pnt/sieve.hpp"

using namespace pnt;
namespace fs = std::filesystem;

namespace {

LFunction delta() { return cli::load_descriptor(PNT_DATA_DIR "/lf/delta.lf"); }

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("pnt_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

bool same_bits(cplx a, cplx b) {
  return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

TEST_CASE("zeta terms up to 10") {
  const auto terms = coefficient_stream(LFunction::zeta(), 10.0);
  const std::vector<std::uint64_t> ns{2, 3, 4, 5, 7, 8, 9};
  REQUIRE(terms.size() == ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    CHECK(terms[i].n == ns[i]);
    CHECK(terms[i].value.real() == doctest::Approx(oracle::von_mangoldt(ns[i])).epsilon(1e-15));
  }
  CHECK(coefficient_stream(LFunction::zeta(), 1.5).empty());
}

TEST_CASE("stream matches the direct coefficient at every n") {
  for (const auto& lf : {LFunction::zeta(), LFunction::dirichlet(12, 3), delta()}) {
    StreamOptions o;
    o.segment_size = 97;  // many ragged segments
    const auto terms = coefficient_stream(lf, 5000.0, o);
    std::size_t j = 0;
    for (std::uint64_t n = 2; n <= 5000; ++n) {
      if (oracle::von_mangoldt(n) == 0.0) continue;
      REQUIRE(j < terms.size());
      CHECK(terms[j].n == n);
      CHECK(same_bits(terms[j].value, coefficient(lf, n)));
      ++j;
    }
    CHECK(j == terms.size());
  }
}

TEST_CASE("partition independence") {
  const auto lf = delta();
  const auto whole = coefficient_range(lf, 2, 30'000);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<CoefficientTerm> joined;
    std::uint64_t lo = 2;
    while (lo <= 30'000) {
      const std::uint64_t hi = std::min<std::uint64_t>(30'000, lo + rng() % 4000);
      const auto part = coefficient_range(lf, lo, hi);
      joined.insert(joined.end(), part.begin(), part.end());
      lo = hi + 1;
    }
    REQUIRE(joined.size() == whole.size());
    for (std::size_t i = 0; i < whole.size(); ++i) {
      REQUIRE(joined[i].n == whole[i].n);
      REQUIRE(same_bits(joined[i].value, whole[i].value));
    }
  }
}

TEST_CASE("sharp sum against the log-lcm oracle") {
  for (std::uint64_t x : {100ULL, 1000ULL, 10000ULL}) {
    const double expected = oracle::log_lcm(x);
    const double got = sharp_sum(LFunction::zeta(), static_cast<double>(x)).real();
    CHECK(std::fabs(got - expected) <= 1e-9 * expected);
  }
  CHECK(sharp_sum(LFunction::zeta(), 100.0).real() == doctest::Approx(94.0453112).epsilon(1e-9));
}

TEST_CASE("thread count does not change any bit") {
  const auto lf = LFunction::dirichlet(7, 1);
  StreamOptions one;
  one.threads = 1;
  one.segment_size = 1000;
  const cplx ref = sharp_sum(lf, 200'000.0, one);
  for (unsigned t : {2u, 3u, 4u, 8u}) {
    StreamOptions o = one;
    o.threads = t;
    CHECK(same_bits(sharp_sum(lf, 200'000.0, o), ref));
  }
}

TEST_CASE("warm and cold cache agree bit for bit") {
  const auto dir = fresh_dir("cache");
  const auto lf = delta();
  StreamOptions cold;
  cold.threads = 4;
  cold.segment_size = 4096;
  const cplx uncached = sharp_sum(lf, 25'000.0, cold);
  StreamOptions cached = cold;
  cached.cache_dir = dir;
  const cplx first = sharp_sum(lf, 25'000.0, cached);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    CHECK(e.path().extension() == ".seg");
    ++files;
  }
  // Only whole segments are stored; the first one starts at 2, not 0.
  CHECK(files == 25'000 / 4096 - 1);
  const cplx warm = sharp_sum(lf, 25'000.0, cached);
  CHECK(same_bits(uncached, first));
  CHECK(same_bits(uncached, warm));

  // A damaged file is ignored and rewritten.
  const auto victim = fs::directory_iterator(dir)->path();
  { std::ofstream(victim, std::ios::binary | std::ios::trunc) << "junk"; }
  CHECK(same_bits(sharp_sum(lf, 25'000.0, cached), uncached));
  CHECK(fs::file_size(victim) > 4);

  // A different datum never reads these files.
  const cplx other = sharp_sum(LFunction::zeta(), 25'000.0, cached);
  StreamOptions plain = cold;
  CHECK(same_bits(other, sharp_sum(LFunction::zeta(), 25'000.0, plain)));
  fs::remove_all(dir);
}

TEST_CASE("environment cache directory wins") {
  ::setenv("PNT_CACHE_DIR", "/tmp/from_env", 1);
  CHECK(resolve_cache_dir(fs::path("/tmp/configured")) == fs::path("/tmp/from_env"));
  ::unsetenv("PNT_CACHE_DIR");
  CHECK(resolve_cache_dir(fs::path("/tmp/configured")) == fs::path("/tmp/configured"));
  CHECK_FALSE(resolve_cache_dir(std::nullopt).has_value());
}

TEST_CASE("capacity and missing data") {
  StreamOptions o;
  o.capacity = 10'000;
  CHECK_THROWS_AS(sharp_sum(LFunction::zeta(), 20'000.0, o), Error);
  try {
    sharp_sum(LFunction::zeta(), 20'000.0, o);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::capacity_exceeded);
  }
  // Hecke data stop at p < 30000; the lowest failing segment is reported.
  StreamOptions small;
  small.segment_size = 1000;
  small.threads = 8;
  std::string first_message;
  for (int rep = 0; rep < 3; ++rep) {
    try {
      sharp_sum(delta(), 200'000.0, small);
      FAIL("expected missing local data");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::missing_local_data);
      if (rep == 0) first_message = e.what();
      CHECK(first_message == e.what());
    }
  }
}

TEST_CASE("segment plan") {
  SegmentPlan plan(2, 10, 4);
  REQUIRE(plan.count() == 3);
  CHECK(plan.segment(0) == std::pair<std::uint64_t, std::uint64_t>{2, 3});
  CHECK(plan.segment(1) == std::pair<std::uint64_t, std::uint64_t>{4, 7});
  CHECK(plan.segment(2) == std::pair<std::uint64_t, std::uint64_t>{8, 10});
  CHECK_FALSE(plan.full(0));
  CHECK(plan.full(1));
  CHECK_FALSE(plan.full(2));
}

TEST_CASE("l1 diagnostics") {
  ConstantsConfig k;
  const auto z = LFunction::zeta();
  const double v = l1_dirichlet_diagnostic(z, 1.0, 1e6);
  double direct = 0.0;
  for (std::uint64_t n = 2; n <= 100'000; ++n) direct += oracle::von_mangoldt(n) / std::pow(n, 2.0);
  CHECK(v >= direct);
  CHECK(v - direct < 1e-4);
  CHECK(v <= l1_dirichlet_reference(z, 1.0, k));
  CHECK(l1_dirichlet_diagnostic(z, 1.0, 1.5) == 0.0);
  const auto chi = LFunction::dirichlet(4, 1);
  CHECK(l1_dirichlet_diagnostic(chi, 0.5, 1e6) <= 2.0 + std::log(12.0) + k.c_l1);
}

TEST_CASE("short-interval diagnostics") {
  const auto z = LFunction::zeta();
  const double x = 1e4;
  double direct = 0.0;
  const auto hi = static_cast<std::uint64_t>(std::floor(x * std::exp(0.1)));
  for (std::uint64_t n = 10'001; n <= hi; ++n) direct += oracle::von_mangoldt(n);
  const double got = short_interval_l1_diagnostic(z, x, 10.0);
  CHECK(got == doctest::Approx(direct).epsilon(1e-12));
  // Close to the expected mass x (e^{1/T} - 1).
  CHECK(got == doctest::Approx(x * std::expm1(0.1)).epsilon(5e-2));
  // 888 .. 906 holds no prime power: 887 and 907 are the neighbours.
  CHECK(short_interval_l1_diagnostic(z, 887.0, 1.0 / std::log(906.5 / 887.0)) == 0.0);
  CHECK(short_interval_l1_diagnostic(delta(), x, 10.0) <= 2.0 * direct);
}
