#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pnt/error.hpp"
#include "pnt/regions.hpp"

using namespace pnt;
using namespace pnt::regions;

namespace {

double grid(const ZeroFreeRegion& r, double x) { return eta_grid(r, x, eta_grid_tmax(r, x), 4000); }

}  // namespace

TEST_CASE("worked eta values") {
  const double e10 = std::exp(10.0);
  const double e100 = std::exp(100.0);
  CHECK(eta_closed_form(ZeroFreeRegion::constant(0.1), e10) == doctest::Approx(1.0 + std::log(3.0)).epsilon(1e-14));
  CHECK(eta_closed_form(ZeroFreeRegion::constant(0.1), 22026.46) == doctest::Approx(2.09861).epsilon(1e-6));

  const auto classical = ZeroFreeRegion::classical(1.0, 1, 1, std::log(9.0));
  CHECK(eta_closed_form(classical, e100) == doctest::Approx(7.0711).epsilon(1e-5));
  const double g = grid(classical, e100);
  CHECK(g >= eta_closed_form(classical, e100) - 1e-6);
  // The exact infimum: u0 = sqrt(50) - log 9 gives 2 sqrt(50) - log 9.
  CHECK(g == doctest::Approx(2.0 * std::sqrt(50.0) - std::log(9.0)).epsilon(1e-9));

  const auto brumley = ZeroFreeRegion::brumley(1.0, 2.0);
  CHECK(eta_closed_form(brumley, e100) == doctest::Approx((1.0 + std::log(200.0)) / 2.0).epsilon(1e-14));
  CHECK(eta_closed_form(brumley, e100) == doctest::Approx(3.1491).epsilon(1e-4));
  CHECK(grid(brumley, e100) >= eta_closed_form(brumley, e100) - 1e-6);

  CHECK(eta_closed_form(ZeroFreeRegion::grh(), e10) == doctest::Approx(5.0 + std::log(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(eta_closed_form(ZeroFreeRegion::grh(), 2.0), Error);
}

TEST_CASE("classical case split") {
  // Small x: the minimizer sits at the left end t = 3.
  const auto r = ZeroFreeRegion::classical(1.0, 1, 1, 5.0);
  const double x = std::exp(10.0);
  const double closed = eta_closed_form(r, x);
  CHECK(closed == doctest::Approx(std::min(std::sqrt(10.0 / 2.0), 10.0 / (2.0 * 5.0))).epsilon(1e-14));
  CHECK(grid(r, x) >= closed - 1e-6);
  // log CC' = 0 uses the square-root branch only.
  const auto r0 = ZeroFreeRegion::classical(2.0, 2, 1, 0.0);
  CHECK(eta_closed_form(r0, 1e8) == doctest::Approx(std::sqrt(2.0 * std::log(1e8) / 6.0)).epsilon(1e-14));
}

TEST_CASE("grid dominates the closed forms on random draws") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double log_x = 2.0 + 200.0 * U(rng);
    const double x = std::exp(log_x);
    const int m = 1 + static_cast<int>(4 * U(rng));
    const int m2 = 1 + static_cast<int>(4 * U(rng));
    const auto cl = ZeroFreeRegion::classical(0.1 + 2.0 * U(rng), m, m2, 10.0 * U(rng));
    REQUIRE(grid(cl, x) >= eta_closed_form(cl, x) - 1e-6);
    const double B = 0.2 + 3.0 * U(rng);
    const double A = 0.5 * std::pow(3.0, B) * U(rng) + 1e-3;  // delta(3) <= 1/2
    const auto br = ZeroFreeRegion::brumley(A, B);
    REQUIRE(grid(br, x) >= eta_closed_form(br, x) - 1e-6);
    const auto co = ZeroFreeRegion::constant(0.001 + 0.498 * U(rng));
    REQUIRE(std::fabs(grid(co, x) - eta_closed_form(co, x)) <= 1e-10);
    REQUIRE(std::fabs(grid(ZeroFreeRegion::grh(), x) - eta_closed_form(ZeroFreeRegion::grh(), x)) <= 1e-10);
  }
}

TEST_CASE("eta is nondecreasing in x") {
  const std::vector<ZeroFreeRegion> families{ZeroFreeRegion::classical(1.0, 2, 1, 3.0),
                                             ZeroFreeRegion::brumley(0.3, 1.5), ZeroFreeRegion::constant(0.2),
                                             ZeroFreeRegion::grh()};
  for (const auto& r : families) {
    double prev = 0.0;
    for (double lx = 1.1; lx < 300.0; lx *= 1.1) {
      const double v = eta_closed_form(r, std::exp(lx));
      REQUIRE(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("region validation") {
  CHECK_THROWS_AS(ZeroFreeRegion::constant(0.6).validate(), Error);
  CHECK_THROWS_AS(ZeroFreeRegion::brumley(10.0, 1.0).validate(), Error);
  CHECK_NOTHROW(ZeroFreeRegion::brumley(1.0, 1.0).validate());
  CHECK(to_string(RegionKind::brumley) == "brumley");
}

TEST_CASE("Brumley parameters") {
  ConstantsConfig k;
  auto p = brumley_params(1, 1, 3.0, 3.0, 0.25, k);
  CHECK(p.b == doctest::Approx(5.0 / 8.0).epsilon(1e-15));
  CHECK(p.a == doctest::Approx(std::pow(9.0, -1.25)).epsilon(1e-14));
  CHECK(brumley_params(1, 2, 3.0, 3.0, 1.0 / 9.0, k).b == doctest::Approx(13.0 / 9.0).epsilon(1e-15));
  CHECK(brumley_params(1, 1, 3.0, 3.0, 0.5, k).b > p.b);
  CHECK(brumley_params(1, 1, 5.0, 3.0, 0.25, k).a < p.a);
  CHECK(brumley_default_eps(1, 2) == doctest::Approx(1.0 / 9.0));
  k.brumley_c = [](int, int, double) { return 2.0; };
  CHECK(brumley_params(1, 1, 3.0, 3.0, 0.25, k).a == doctest::Approx(2.0 * p.a));
}

TEST_CASE("repulsion bound") {
  ConstantsConfig k;
  const double b = repulsion_bound(1.0 - 1e-6, 3.0, 1, 0.0, k);
  const double L = std::log(9.0);
  CHECK(b == doctest::Approx(1.0 - std::log(1e6 / L) / L).epsilon(1e-9));  // 1 - beta0 rounds
  CHECK(b == doctest::Approx(1.0 - 5.9298).epsilon(1e-4));
  double prev = 2.0;
  for (double beta0 = 0.51; beta0 < 1.0; beta0 += 0.01) {
    const double v = repulsion_bound(beta0, 3.0, 1, 0.0, k);
    CHECK(v <= 1.0);
    CHECK(v <= prev);
    prev = v;
  }
  double prev_g = -1e300;
  for (double g = 0.0; g < 1e6; g = g * 2 + 1) {
    const double v = repulsion_bound(0.999, 3.0, 2, g, k);
    CHECK(v >= prev_g);
    prev_g = v;
  }
  CHECK_THROWS_AS(repulsion_bound(0.4, 3.0, 1, 0.0, k), Error);
}

TEST_CASE("nu and its sandwich") {
  ConstantsConfig k;
  CHECK(nu(0.5, 3.0, 1.0) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-15));
  CHECK(nu(0.5, 3.0, 1.0) == doctest::Approx(0.5493).epsilon(1e-4));
  CHECK(nu(1.0 - 1e-12, 3.0, 1.0) < 1e-11);
  CHECK(nu(0.5, 3.0, 100.0) == 1.0);
  const auto s = nu_sandwich(std::exp(20.0), 1.0 - 1.0 / 30.0, std::exp(10.0), 1, k);
  CHECK(s.holds);
  CHECK(s.lower > 0.0);
  const auto h = nu_sandwich(1e6, 0.5, 3.0, 1, k);
  CHECK(h.upper == doctest::Approx(1e6 - 2e3));
  CHECK(h.middle <= h.upper);
  // (1 - beta0) log x >= 1 branch.
  const double x = std::exp(50.0);
  const auto w = nu_sandwich(x, 0.9, 3.0, 1, k);
  CHECK(w.upper >= x * (1.0 - 2.0 / std::exp(1.0)));
}

TEST_CASE("auxiliary function of the range lemma") {
  const double cap = std::exp(1.0) / (std::exp(1.0) - 1.0);
  CHECK(lemma54_f(std::exp(4.0), 0.0) == 1.0);
  CHECK(lemma54_f(std::exp(4.0), 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::fabs(lemma54_f_log(400.0, 1.0) - 1.58198) <= 1e-2);
  CHECK_THROWS_AS(lemma54_f(10.0, 0.5), Error);
  CHECK_THROWS_AS(lemma54_f(std::exp(5.0), 1.5), Error);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double L = 4.0 + 36.0 * i / 999.0;
    double prev = 1.0;
    for (int j = 1; j <= 1000; ++j) {
      const double v = lemma54_f_log(L, j / 1000.0);
      REQUIRE(v >= prev - 1e-13);
      prev = v;
      worst = std::max(worst, v);
    }
  }
  CHECK(worst <= cap + 1e-9);
}

TEST_CASE("eta factor of the standard envelope") {
  ConstantsConfig k;
  const double e100 = std::exp(100.0);
  CHECK(eta_bound_pnt2(1, 1, 0.0, e100, k) == doctest::Approx(std::exp(-std::sqrt(100.0 / 2.0))).epsilon(1e-12));
  const double v = eta_bound_pnt2(1, 1, std::log(9.0), e100, k);
  CHECK(v == doctest::Approx(std::exp(-100.0 / (2.0 * std::log(9.0) + std::sqrt(200.0)))).epsilon(1e-12));
  CHECK(std::log(v) == doctest::Approx(-5.395).epsilon(1e-3));
  const auto r = ZeroFreeRegion::classical(1.0, 1, 1, std::log(9.0));
  CHECK(v >= std::exp(-eta_closed_form(r, e100)));
}
