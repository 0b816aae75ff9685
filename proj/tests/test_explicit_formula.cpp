#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pnt/cli/descriptor.hpp"
#include "pnt/error.hpp"
#include "pnt/explicit_formula.hpp"

using namespace pnt;
using kernel::KernelParams;

namespace {

LFunction delta() { return cli::load_descriptor(PNT_DATA_DIR "/lf/delta.lf"); }

const ZeroDataset& zeros_of(const std::string& name) {
  static const ZeroDataset zeta = load_zeros(PNT_DATA_DIR "/zeros/zeta.zeros");
  static const ZeroDataset chi = load_zeros(PNT_DATA_DIR "/zeros/chi_m4.zeros");
  return name == "zeta" ? zeta : chi;
}

struct Closure {
  double discrepancy;
  double tail;
  double allowance;
};

Closure closure(const LFunction& lf, const ZeroDataset& ds, double T) {
  ConstantsConfig k;
  const auto kp = KernelParams::make(1e3, 2, 0.05);
  ZeroSideOptions o;
  o.T_trunc = T;
  const auto zs = zero_side(lf, kp, ds, o, k);
  return {std::abs(zs.value - smooth_sum(lf, kp)), zs.tail_estimate, zs.allowance};
}

double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

TEST_CASE("sharp sums against direct loops") {
  const auto chi = LFunction::dirichlet(4, 1);
  double direct = 0.0;
  for (std::uint64_t n = 2; n <= 100; ++n) direct += oracle::chi_m4(n) * oracle::von_mangoldt(n);
  const cplx s = sharp_sum(chi, 100.0);
  CHECK(s.real() == doctest::Approx(direct).epsilon(1e-13));
  CHECK(s.real() == doctest::Approx(-0.1125648875540).epsilon(1e-10));
  CHECK(s.imag() == 0.0);
  for (const auto& lf : {LFunction::zeta(), chi, delta()}) CHECK(sharp_sum(lf, 1.5) == cplx(0.0, 0.0));
}

TEST_CASE("conjugation symmetry") {
  for (std::uint64_t i : {1ULL, 3ULL}) {
    const auto lf = LFunction::dirichlet(5, i);
    for (double x : {100.0, 5000.0}) {
      const cplx a = sharp_sum(lf, x);
      const cplx b = sharp_sum(dual(lf), x);
      CHECK(std::abs(b - std::conj(a)) <= 1e-12 * (1.0 + std::abs(a)));
      CHECK(std::fabs(a.imag()) > 1e-3);
    }
  }
}

TEST_CASE("smooth sum near the sharp sum") {
  const auto kp = KernelParams::make(1e3, 2, 0.05);
  const auto z = LFunction::zeta();
  const double gap = std::abs(smooth_sum(z, kp) - sharp_sum(z, 1e3));
  CHECK(gap <= 5.0 * (std::sqrt(kp.x) + kp.eps * kp.x));
  // Against an oracle weighted loop.
  double direct = 0.0;
  for (std::uint64_t n = 2; n <= 1100; ++n) {
    direct += oracle::von_mangoldt(n) * oracle::kernel_weight(std::log(static_cast<double>(n)) / kp.log_x, 2, kp.B);
  }
  CHECK(smooth_sum(z, kp).real() == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("support at x = 9") {
  const auto kp = KernelParams::make(9.0, 2, 0.05);
  const double lo = 0.5 - kp.eps / kp.log_x;
  CHECK(std::log(2.0) / kp.log_x < lo);
  CHECK(kernel::f_eval(kp, std::log(2.0) / kp.log_x) == 0.0);
  double expect = 0.0;
  for (std::uint64_t n = 3; n <= 10; ++n) {
    expect += oracle::von_mangoldt(n) * kernel::f_eval(kp, std::log(static_cast<double>(n)) / kp.log_x);
  }
  CHECK(smooth_sum(LFunction::zeta(), kp).real() == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("Hecke datum is dominated pointwise") {
  const auto kp = KernelParams::make(1e4, 2, 0.05);
  CHECK(std::abs(smooth_sum(delta(), kp)) <= 2.0 * smooth_sum(LFunction::zeta(), kp).real());
}

TEST_CASE("zero side of an empty dataset") {
  ConstantsConfig k;
  const auto kp = KernelParams::make(1e3, 2, 0.05);
  const auto empty = parse_zeros("# completeness 100\n");
  ZeroSideOptions o;
  o.T_trunc = 50.0;
  o.include_beta0 = false;
  const auto zs = zero_side(LFunction::dirichlet(4, 1), kp, empty, o, k);
  CHECK(zs.value == cplx(0.0, 0.0));
  CHECK(zs.zeros_used == 0);
  CHECK(zs.tail_estimate > 0.0);
  o.T_trunc = 200.0;
  CHECK_THROWS_AS(zero_side(LFunction::dirichlet(4, 1), kp, empty, o, k), Error);
  try {
    zero_side(LFunction::dirichlet(4, 1), kp, empty, o, k);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::incomplete_dataset);
  }
}

TEST_CASE("tail estimate shrinks with the truncation height") {
  ConstantsConfig k;
  const auto kp = KernelParams::make(1e3, 2, 0.05);
  double prev = 1e300;
  for (double T = 10.0; T <= 1e5; T *= 2.0) {
    const double t = zero_tail_estimate(LFunction::zeta(), kp, T, 2.0, 1.0, k);
    CHECK(t < prev);
    prev = t;
  }
}

TEST_CASE("explicit formula closes") {
  for (const auto& [lf, name] : {std::pair{LFunction::zeta(), "zeta"}, std::pair{LFunction::dirichlet(4, 1), "chi"}}) {
    const auto& ds = zeros_of(name);
    std::vector<Closure> rows;
    for (double T : {1e2, 1e3, 1e4}) {
      rows.push_back(closure(lf, ds, T));
      CHECK(rows.back().discrepancy <= rows.back().tail + rows.back().allowance);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].discrepancy <= 1.1 * rows[i - 1].discrepancy);
    MESSAGE(std::string(name) << " discrepancies " << rows[0].discrepancy << " " << rows[1].discrepancy << " "
                 << rows[2].discrepancy);
  }
  // Zeta at full height: the discrepancy is far below the allowance.
  CHECK(closure(LFunction::zeta(), zeros_of("zeta"), 1e4).discrepancy < 1e-2);
}

TEST_CASE("main term") {
  CHECK(pnt_main_term(1, 1e4, 0.5) == doctest::Approx(9800.0).epsilon(1e-15));
  CHECK(pnt_main_term(0, 1e4, 0.9) == doctest::Approx(-4423.41).epsilon(1e-6));
  CHECK(pnt_main_term(0, 1e4, 0.9) == doctest::Approx(-std::pow(1e4, 0.9) / 0.9).epsilon(1e-15));
  CHECK(std::fabs(pnt_main_term(1, 1e4, 1.0 - 1e-12)) < 1e-6);
  CHECK_THROWS_AS(pnt_main_term(1, 1e4, 1.0), Error);
  CHECK(pnt_main_term(LFunction::zeta(), 1e4) == doctest::Approx(9800.0));
  CHECK(pnt_main_term(LFunction::zeta(), 1e4, true) == 1e4);
}

TEST_CASE("error envelope") {
  ConstantsConfig k;
  EnvelopeParams ep;
  const double x = 1e6;
  const double v = pnt_error_envelope(1, x, ep, 0.5 * std::log(x), k);
  // The leading factor is x - x^{1/2}/(1/2) = 998000.
  CHECK(v == doctest::Approx(998000.0 * (1e-6 + 4.0 * std::pow(10.0, -1.5))).epsilon(1e-12));
  CHECK(pnt_error_envelope(1, x, ep, 0.0, k) >= x - 2000.0);
  double prev = 1e300;
  for (double eta = 0.0; eta < 50.0; eta += 0.25) {
    const double e = pnt_error_envelope(2, x, ep, eta, k);
    CHECK(e <= prev);
    prev = e;
  }
  CHECK_THROWS_AS(pnt_error_envelope(1, x, ep, -1.0, k), Error);
  // Along the classical eta(x) the envelope is o(x).
  const auto region = regions::ZeroFreeRegion::classical(1.0, 1, 1, std::log(9.0));
  std::vector<double> ratios;
  for (double lx = 50.0; lx <= 700.0; lx += 50.0) {
    const double xx = std::exp(lx);
    ratios.push_back(pnt_error_envelope(1, xx, ep, regions::eta_closed_form(region, xx), k) / xx);
  }
  for (std::size_t i = 1; i < ratios.size(); ++i) CHECK(ratios[i] < ratios[i - 1]);
}

TEST_CASE("comparison envelope and its range") {
  ConstantsConfig k;
  const auto ik = ik_error_envelope(1, 3.0, std::exp(100.0), k);
  const double expect = std::pow(100.0 + std::log(3.0), 4) * std::exp(100.0) * std::exp(-100.0 / (std::log(3.0) + 10.0));
  CHECK(ik.value == doctest::Approx(expect).epsilon(1e-12));
  double prev = 1e300;
  for (double lx = 20.0; lx < 700.0; lx += 20.0) {
    const double r = ik_error_envelope(1, 3.0, std::exp(lx), k).value / std::exp(lx);
    if (lx > 100.0) CHECK(r < prev);
    prev = r;
  }
  std::vector<double> ratio;
  for (double log_c : {50.0, 100.0, 200.0}) {
    const double main = log_x_min_main(2, log_c, 2.0, k);
    CHECK(main == doctest::Approx(128.0 * log_c));
    ratio.push_back(main / ik_error_envelope(2, std::exp(log_c), 3.0, k).log_x_nontrivial);
  }
  CHECK(ratio[1] < ratio[0]);
  CHECK(ratio[2] < ratio[1]);
  CHECK(ratio[0] == doctest::Approx(2.0 / std::log(100.0)));
}

TEST_CASE("report") {
  ConstantsConfig k;
  ReportOptions o;
  CHECK(pnt_report(LFunction::zeta(), {}, o, k).rows.empty());

  std::vector<double> grid;
  for (double lx = 3.0; lx <= 6.0 + 1e-9; lx += 0.1) grid.push_back(std::pow(10.0, lx));
  const auto t = pnt_report(LFunction::zeta(), grid, o, k);
  REQUIRE(t.rows.size() == grid.size());
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 1e4) {
      CHECK(t.number(i, "sharp_re") ==
            doctest::Approx(oracle::log_lcm(static_cast<std::uint64_t>(grid[i]))).epsilon(1e-9));
    }
    lx.push_back(std::log(grid[i]));
    ly.push_back(std::log(std::fabs(t.number(i, "residual"))));
  }
  const double s = slope(lx, ly);
  MESSAGE("zeta residual slope " << s);
  CHECK(s >= 0.4);
  CHECK(s <= 0.6);
  CHECK(std::fabs(t.number(grid.size() - 1, "residual_over_x")) < std::fabs(t.number(0, "residual_over_x")));

  std::vector<double> big;
  for (double x = 1e4; x <= 1e6; x *= 1.5) big.push_back(x);
  const auto c = pnt_report(LFunction::dirichlet(4, 1), big, o, k);
  for (std::size_t i = 0; i < big.size(); ++i) CHECK(std::fabs(c.number(i, "sharp_re")) / big[i] < 0.05);
}
