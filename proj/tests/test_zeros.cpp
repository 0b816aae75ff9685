#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pnt/error.hpp"
#include "pnt/zeros.hpp"

using namespace pnt;

namespace {

const ZeroDataset& zeta_zeros() {
  static const ZeroDataset ds = load_zeros(PNT_DATA_DIR "/zeros/zeta.zeros");
  return ds;
}

ErrorKind kind_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::contract;
}

}  // namespace

TEST_CASE("parsing") {
  const auto one = parse_zeros("14.134725141734693\n", {true});
  REQUIRE(one.zeros.size() == 2);
  CHECK(one.zeros[0].gamma == doctest::Approx(-14.134725141734693));
  CHECK(one.zeros[1].beta == 0.5);
  CHECK(one.conjugate_closed);
  const auto empty = parse_zeros("");
  CHECK(empty.zeros.empty());
  CHECK(empty.completeness == 0.0);
  CHECK(kind_of([] { parse_zeros("abc\n"); }) == ErrorKind::parse);
  try {
    parse_zeros("# completeness 5\n1.0\nabc\n", {}, "f.zeros");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("f.zeros:3") != std::string::npos);
  }
  CHECK(kind_of([] { parse_zeros("1.5 3.0\n"); }) == ErrorKind::invariant_violation);
  CHECK(kind_of([] { parse_zeros("# half\n-3.0\n"); }) == ErrorKind::invariant_violation);
  const auto explicit_pair = parse_zeros("# completeness 20\n0.5 10\n0.5 -10\n0.9 0\n# source test data\n");
  CHECK(explicit_pair.conjugate_closed);
  CHECK(explicit_pair.source == "test data");
  CHECK_FALSE(parse_zeros("0.5 10\n").conjugate_closed);
  // Duplicate lines encode multiplicity.
  CHECK(parse_zeros("# completeness 20\n# half\n12\n12\n").zeros.size() == 4);
}

TEST_CASE("shipped zeta dataset") {
  const auto& ds = zeta_zeros();
  CHECK(ds.completeness == 10000.0);
  CHECK(ds.conjugate_closed);
  CHECK(ds.zeros.size() >= 2000);
  CHECK(count_N(ds, 0.0, 100.0) == 58);
  CHECK(disc_count(ds, 14.0, 0.6) == 1);
  CHECK(count_N(ds, 0.0, 0.0) == 0);
  for (double T = 1.0; T <= ds.completeness; T *= 1.5) CHECK(count_N(ds, 0.51, T) == 0);
  CHECK(count_N(ds, 0.6, 100.0) == 0);
  CHECK(kind_of([&] { count_N(ds, 0.0, 2e4); }) == ErrorKind::incomplete_dataset);
  CHECK(kind_of([&] { disc_count(ds, 9999.8, 0.5); }) == ErrorKind::incomplete_dataset);
}

TEST_CASE("counting invariants") {
  const auto& ds = zeta_zeros();
  std::int64_t prev = 0;
  for (double T = 0.0; T <= 2000.0; T += 37.0) {
    const auto n = count_N(ds, 0.0, T);
    CHECK(n >= prev);
    CHECK(n % 2 == 0);
    prev = n;
  }
  CHECK(count_N(ds, 0.2, 500.0) <= count_N(ds, 0.1, 500.0));
  for (double t = 10.0; t < 500.0; t += 13.1) {
    for (double r : {0.3, 0.6, 1.0, 2.0}) {
      const auto d = disc_count(ds, t, r);
      if (r < 0.5) CHECK(d == 0);
      CHECK(d <= count_N(ds, 0.0, std::fabs(t) + r));
    }
  }
}

TEST_CASE("counts without the exceptional zero") {
  const auto ds = parse_zeros("# completeness 50\n0.9 0\n0.5 14\n0.5 -14\n");
  CHECK(count_N(ds, 0.8, 20.0) == 1);
  CHECK(count_N_star(ds, 0.8, 20.0, 0.9).count == 0);
  CHECK(count_N_star(ds, 0.0, 20.0, 0.9).count == 2);
  CHECK(count_N_star(ds, 0.0, 20.0, 0.5).count == count_N(ds, 0.0, 20.0));
  const auto missing = count_N_star(zeta_zeros(), 0.0, 100.0, 0.9);
  CHECK_FALSE(missing.beta0_found);
  CHECK(missing.count == 58);
  for (double s : {0.0, 0.5, 0.85, 0.95}) {
    const auto n = count_N(ds, s, 30.0);
    const auto star = count_N_star(ds, s, 30.0, 0.9).count;
    CHECK(star <= n);
    CHECK(n <= star + 1);
  }
}

TEST_CASE("disc reference shape") {
  CHECK(disc_reference(14.0, 0.6, 1, 3.0) == doctest::Approx(0.6 * std::log(3.0 * 16.0) + 1.0));
}

TEST_CASE("density report") {
  ConstantsConfig k;
  const auto& ds = zeta_zeros();
  const auto lf = LFunction::zeta();
  const auto t = density_report(ds, lf, {0.0, 0.6, 0.8}, {100.0, 1000.0}, k);
  REQUIRE(t.rows.size() == 6);
  CHECK(t.number(0, "count_N") == 58.0);
  // The default exponent base 1e7 overflows the envelope; the log ratio does not.
  CHECK(std::isinf(t.number(0, "density_envelope")));
  CHECK(t.number(0, "density_ratio") == 0.0);
  CHECK(std::isfinite(t.number(0, "log_density_ratio")));
  CHECK(t.number(0, "log_density_ratio") < 0.0);
  ConstantsConfig small;
  small.c_density_exp = 1.0;
  const auto u = density_report(ds, lf, {0.0}, {100.0}, small);
  CHECK(u.number(0, "density_ratio") == doctest::Approx(58.0 / std::exp(u.number(0, "log_density_envelope"))));
  for (std::size_t r = 2; r < 6; ++r) {
    CHECK(t.number(r, "count_N") == 0.0);
    CHECK(t.number(r, "density_ratio") == 0.0);
    CHECK(t.number(r, "repulsion_ratio") == 0.0);
  }
  // Envelopes: nonincreasing in sigma, nondecreasing in T.
  CHECK(t.number(2, "log_density_envelope") <= t.number(0, "log_density_envelope"));
  CHECK(t.number(1, "log_density_envelope") >= t.number(0, "log_density_envelope"));
  CHECK(t.number(0, "empirical_exponent") == doctest::Approx(std::log(58.0) / std::log(300.0)));
}
