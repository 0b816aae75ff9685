#include "pnt/cli/app.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pnt/cli/config.hpp"
#include "pnt/cli/descriptor.hpp"
#include "pnt/diagnostics.hpp"
#include "pnt/error.hpp"
#include "pnt/explicit_formula.hpp"
#include "pnt/kernel.hpp"
#include "pnt/regions.hpp"
#include "pnt/zeros.hpp"

namespace pnt::cli {

namespace {

struct GlobalArgs {
  std::string config_path;
  std::optional<unsigned> threads;
  std::string cache_dir;
  bool no_cache = false;
  std::string format;
  bool strict = false;
  std::optional<double> capacity;
  std::vector<std::string> constants;
};

// Region flags shared by eta, envelope and report.
struct RegionArgs {
  std::string family = "grh";
  std::optional<double> c;
  int m = 1;
  int m2 = 1;
  double log_cc = 0.0;
  std::optional<double> brumley_a;
  std::optional<double> brumley_b;
  std::optional<double> conductor;
  std::optional<double> conductor2;
  std::optional<double> brumley_eps;
  double delta0 = 0.25;
  std::vector<std::string> params;
};

void add_region_options(CLI::App* cmd, RegionArgs& r) {
  cmd->add_option("--family", r.family, "zero-free region: classical, brumley, constant or grh")
      ->check(CLI::IsMember({"classical", "brumley", "constant", "grh"}));
  cmd->add_option("--c", r.c, "classical width constant (default c_zfr)");
  cmd->add_option("--m", r.m, "degree m")->check(CLI::Range(1, 64));
  cmd->add_option("--m2", r.m2, "second degree m'")->check(CLI::Range(1, 64));
  cmd->add_option("--log-cc", r.log_cc, "log of the conductor product C C'");
  cmd->add_option("--brumley-a", r.brumley_a, "Brumley region scale");
  cmd->add_option("--brumley-b", r.brumley_b, "Brumley region exponent");
  cmd->add_option("--conductor", r.conductor, "analytic conductor C (Brumley parameters)");
  cmd->add_option("--conductor2", r.conductor2, "analytic conductor C' (Brumley parameters)");
  cmd->add_option("--brumley-eps", r.brumley_eps, "eps of the Brumley parameters");
  cmd->add_option("--delta0", r.delta0, "constant region width");
  cmd->add_option("--params", r.params, "key=value region parameters (c, m, m2, log_cc, a, b, delta0)")
      ->delimiter(',');
}

double param_number(const std::string& key, const std::string& v) {
  auto d = parse_real(v);
  if (!d) fail(ErrorKind::parse, "--params: `" + key + "` is not a number");
  return *d;
}

regions::ZeroFreeRegion build_region(RegionArgs r, const ConstantsConfig& constants) {
  for (const auto& kv : r.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) fail(ErrorKind::parse, "--params expects key=value, got `" + kv + "`");
    const std::string key(trim(std::string_view(kv).substr(0, eq)));
    const std::string value(trim(std::string_view(kv).substr(eq + 1)));
    const double v = param_number(key, value);
    if (key == "c") {
      r.c = v;
    } else if (key == "m") {
      r.m = static_cast<int>(v);
    } else if (key == "m2") {
      r.m2 = static_cast<int>(v);
    } else if (key == "log_cc") {
      r.log_cc = v;
    } else if (key == "a") {
      r.brumley_a = v;
    } else if (key == "b") {
      r.brumley_b = v;
    } else if (key == "delta0") {
      r.delta0 = v;
    } else {
      fail(ErrorKind::parse, "--params: unknown key `" + key + "`");
    }
  }
  regions::ZeroFreeRegion region;
  if (r.family == "classical") {
    region = regions::ZeroFreeRegion::classical(r.c.value_or(constants.c_zfr), r.m, r.m2, r.log_cc);
  } else if (r.family == "brumley") {
    if (r.brumley_a && r.brumley_b) {
      region = regions::ZeroFreeRegion::brumley(*r.brumley_a, *r.brumley_b);
    } else if (r.conductor && r.conductor2) {
      const double eps = r.brumley_eps.value_or(regions::brumley_default_eps(r.m, r.m2));
      const auto p = regions::brumley_params(r.m, r.m2, *r.conductor, *r.conductor2, eps, constants);
      region = regions::ZeroFreeRegion::brumley(p.a, p.b);
    } else {
      fail(ErrorKind::domain, "brumley region needs --brumley-a/--brumley-b or --conductor/--conductor2");
    }
  } else if (r.family == "constant") {
    region = regions::ZeroFreeRegion::constant(r.delta0);
  } else {
    region = regions::ZeroFreeRegion::grh();
  }
  region.validate();
  return region;
}

std::optional<std::filesystem::path> pick_cache_dir(const GlobalArgs& g, const RunConfig& cfg) {
  if (g.no_cache) return std::nullopt;
  std::optional<std::filesystem::path> configured = cfg.cache_dir;
  if (!g.cache_dir.empty()) configured = std::filesystem::path(g.cache_dir);
  return resolve_cache_dir(configured);
}

struct Context {
  RunConfig config;
  StreamOptions stream;
  bool strict = false;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  int status = exit_ok;

  void emit(const Table& t, bool echo_constants) {
    if (echo_constants) *out << "# constants " << config.constants.echo() << '\n';
    *out << emit_table(t, config.format);
    if (strict && has_nan(t)) {
      *err << "pnt: output contains nan\n";
      status = exit_contract;
    }
  }
};

std::vector<cplx> parse_complex_list(const std::vector<std::string>& items) {
  std::vector<cplx> out;
  for (const auto& s : items) {
    auto z = parse_complex(s);
    if (!z) fail(ErrorKind::parse, "cannot parse complex literal `" + s + "`");
    out.push_back(*z);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform prime number theorem numerics for L-functions", "pnt"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalArgs g;
  app.add_option("--config", g.config_path, "pnt.conf with [constants] and [run] sections");
  app.add_option("--threads", g.threads, "worker threads (0: hardware concurrency)");
  app.add_option("--cache-dir", g.cache_dir, "sieve segment cache directory");
  app.add_flag("--no-cache", g.no_cache, "disable the sieve segment cache");
  app.add_option("--format", g.format, "table format")->check(CLI::IsMember({"csv", "tsv"}));
  app.add_flag("--strict", g.strict, "exit 3 when a table holds nan");
  app.add_option("--capacity", g.capacity, "largest n the sieve may reach");
  app.add_option("--constant", g.constants, "override a constant, name=value (repeatable)");

  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  // Actions run after parsing, once the configuration is assembled.
  std::function<void()> action;

  // psi
  auto* psi = app.add_subcommand("psi", "sum_{n<=x} a(n) Lambda(n) against the main term");
  std::string psi_lf;
  std::vector<double> psi_x;
  bool psi_no_exc = false;
  psi->add_option("--lf", psi_lf, "descriptor file")->required();
  psi->add_option("--x", psi_x, "cutoffs")->required()->delimiter(',');
  psi->add_flag("--no-exceptional", psi_no_exc, "drop the x^beta0/beta0 term");
  psi->callback([&] {
    action = [&] {
      const auto lf = load_descriptor(psi_lf);
      Table t({"label", "x", "sharp_re", "sharp_im", "main_term", "residual"});
      for (double x : psi_x) {
        const cplx s = sharp_sum(lf, x, ctx.stream);
        check_real_for_self_dual(lf, s, "sharp sum");
        const double main = pnt_main_term(lf, x, psi_no_exc);
        t.add_row({lf.label(), x, s.real(), s.imag(), main, s.real() - main});
      }
      ctx.emit(t, false);
    };
  });

  // compare
  auto* compare = app.add_subcommand("compare", "smoothed prime sum against the zero side");
  std::string cmp_lf, cmp_zeros;
  std::vector<double> cmp_x, cmp_T;
  int cmp_ell = 2;
  double cmp_eps = 0.05;
  double cmp_sigma = 1.0;
  bool cmp_half = false;
  bool cmp_no_exc = false;
  compare->add_option("--lf", cmp_lf, "descriptor file")->required();
  compare->add_option("--zeros", cmp_zeros, "zero file")->required();
  compare->add_option("--x", cmp_x, "cutoffs")->required()->delimiter(',');
  compare->add_option("--ell", cmp_ell, "kernel smoothness l")->check(CLI::Range(2, 64));
  compare->add_option("--eps", cmp_eps, "kernel width eps");
  compare->add_option("--T", cmp_T, "truncation heights (default: dataset completeness)")->delimiter(',');
  compare->add_option("--tail-sigma", cmp_sigma, "real part used for the tail bound");
  compare->add_flag("--half", cmp_half, "mirror positive ordinates");
  compare->add_flag("--no-exceptional", cmp_no_exc, "leave the exceptional zero out of the zero side");
  compare->callback([&] {
    action = [&] {
      const auto lf = load_descriptor(cmp_lf);
      const auto ds = load_zeros(cmp_zeros, {cmp_half});
      std::vector<double> heights = cmp_T;
      if (heights.empty()) heights.push_back(ds.completeness);
      Table t({"label", "x", "ell", "eps", "T", "zeros_used", "smooth_re", "smooth_im", "zero_side_re",
               "zero_side_im", "discrepancy", "tail_estimate", "allowance", "within"});
      bool all_within = true;
      for (double x : cmp_x) {
        const auto kp = kernel::KernelParams::make(x, cmp_ell, cmp_eps);
        const cplx smooth = smooth_sum(lf, kp, ctx.stream);
        check_real_for_self_dual(lf, smooth, "smoothed sum");
        for (double T : heights) {
          ZeroSideOptions zo;
          zo.T_trunc = T;
          zo.tail_sigma = cmp_sigma;
          zo.include_beta0 = !cmp_no_exc;
          const auto zs = zero_side(lf, kp, ds, zo, ctx.config.constants);
          check_real_for_self_dual(lf, zs.value, "zero side");
          const double disc = std::abs(zs.value - smooth);
          const bool within = disc <= zs.tail_estimate + zs.allowance;
          all_within = all_within && within;
          t.add_row({lf.label(), x, static_cast<std::int64_t>(cmp_ell), cmp_eps, T,
                     static_cast<std::int64_t>(zs.zeros_used), smooth.real(), smooth.imag(), zs.value.real(),
                     zs.value.imag(), disc, zs.tail_estimate, zs.allowance,
                     static_cast<std::int64_t>(within ? 1 : 0)});
        }
      }
      ctx.emit(t, true);
      if (!all_within) {
        err << "pnt: discrepancy exceeds tail estimate plus allowance\n";
        ctx.status = exit_contract;
      }
    };
  });

  // envelope
  auto* envelope = app.add_subcommand("envelope", "error envelopes of the main theorems");
  std::string env_theorem;
  std::vector<double> env_x, env_eta, env_log_c;
  double env_A = 2.0;
  double env_beta0 = 0.5;
  double env_conductor = 1.0;
  RegionArgs env_region;
  envelope->add_option("--theorem", env_theorem, "main, ik, pnt2, pnt3 or range")
      ->required()
      ->check(CLI::IsMember({"main", "ik", "pnt2", "pnt3", "range"}));
  envelope->add_option("--x", env_x, "cutoffs")->delimiter(',');
  envelope->add_option("--eta", env_eta, "eta values (main; default: from the region)")->delimiter(',');
  envelope->add_option("--A", env_A, "range parameter A >= 2");
  envelope->add_option("--beta0", env_beta0, "exceptional zero (1/2 when absent)");
  envelope->add_option("--analytic-conductor", env_conductor, "analytic conductor (ik)");
  envelope->add_option("--log-c", env_log_c, "log C values (main range column, range table)")->delimiter(',');
  add_region_options(envelope, env_region);
  envelope->callback([&] {
    action = [&] {
      const auto& k = ctx.config.constants;
      const int m = env_region.m;
      if (env_theorem != "range" && env_x.empty()) fail(ErrorKind::domain, "envelope needs --x");
      if (env_theorem == "main") {
        const auto region = build_region(env_region, k);
        const double log_c = env_log_c.empty() ? env_region.log_cc : env_log_c.front();
        const double log_x_min = log_x_min_main(m, log_c, env_A, k);
        Table t({"x", "eta", "envelope", "envelope_over_x", "log_x_min", "in_range"});
        for (double x : env_x) {
          std::vector<double> etas = env_eta;
          if (etas.empty()) etas.push_back(regions::eta_closed_form(region, x));
          for (double eta : etas) {
            const double e = pnt_error_envelope(m, x, {env_A, env_beta0}, eta, k);
            t.add_row({x, eta, e, e / x, log_x_min, static_cast<std::int64_t>(std::log(x) >= log_x_min)});
          }
        }
        ctx.emit(t, true);
      } else if (env_theorem == "ik") {
        Table t({"x", "envelope", "envelope_over_x", "log_x_nontrivial"});
        for (double x : env_x) {
          const auto e = ik_error_envelope(m, env_conductor, x, k);
          t.add_row({x, e.value, e.value / x, e.log_x_nontrivial});
        }
        ctx.emit(t, true);
      } else if (env_theorem == "pnt2") {
        Table t({"x", "eta_factor", "envelope", "envelope_over_x"});
        for (double x : env_x) {
          const double f = regions::eta_bound_pnt2(m, env_region.m2, env_region.log_cc, x, k);
          const double e = pnt_standard_envelope(m, env_region.m2, env_region.log_cc, x, env_beta0, k);
          t.add_row({x, f, e, e / x});
        }
        ctx.emit(t, true);
      } else if (env_theorem == "pnt3") {
        Table t({"x", "envelope", "envelope_over_x"});
        for (double x : env_x) {
          const double e = pnt_narrow_envelope(m, env_region.m2, x);
          t.add_row({x, e, e / x});
        }
        ctx.emit(t, false);
      } else {
        if (env_log_c.empty()) fail(ErrorKind::domain, "range table needs --log-c");
        Table t({"log_c", "log_x_min_main", "log_x_nontrivial_ik", "ratio"});
        for (double lc : env_log_c) {
          const double main = log_x_min_main(m, lc, env_A, k);
          const double ik = ik_error_envelope(m, std::exp(lc), 3.0, k).log_x_nontrivial;
          t.add_row({lc, main, ik, main / ik});
        }
        ctx.emit(t, true);
      }
    };
  });

  // eta
  auto* eta = app.add_subcommand("eta", "inf over t >= 3 of delta(t) log x + log t");
  std::vector<double> eta_x;
  std::optional<double> eta_tmax;
  int eta_points = 4000;
  RegionArgs eta_region;
  eta->add_option("--x,--x-grid", eta_x, "cutoffs")->required()->delimiter(',');
  eta->add_option("--t-max", eta_tmax, "upper end of the grid search");
  eta->add_option("--points", eta_points, "grid points")->check(CLI::Range(100, 10'000'000));
  add_region_options(eta, eta_region);
  eta->callback([&] {
    action = [&] {
      const auto region = build_region(eta_region, ctx.config.constants);
      Table t({"x", "eta_closed", "eta_grid", "exp_neg_eta"});
      for (double x : eta_x) {
        const double closed = regions::eta_closed_form(region, x);
        const double grid = regions::eta_grid(region, x, eta_tmax.value_or(regions::eta_grid_tmax(region, x)),
                                              eta_points);
        t.add_row({x, closed, grid, std::exp(-closed)});
      }
      ctx.emit(t, region.kind == regions::RegionKind::classical || region.kind == regions::RegionKind::brumley);
    };
  });

  // repulsion
  auto* repulsion = app.add_subcommand("repulsion", "exceptional-zero repulsion bound");
  double rep_beta0 = 0.9;
  double rep_conductor = 1.0;
  int rep_m = 1;
  std::vector<double> rep_gamma;
  repulsion->add_option("--beta0", rep_beta0, "exceptional zero")->required();
  repulsion->add_option("--conductor", rep_conductor, "analytic conductor")->required();
  repulsion->add_option("--m", rep_m, "degree")->check(CLI::Range(1, 64));
  repulsion->add_option("--gamma-grid", rep_gamma, "ordinates")->required()->delimiter(',');
  repulsion->callback([&] {
    action = [&] {
      if (!(rep_beta0 > 0.5 && rep_beta0 < 1.0)) fail(ErrorKind::domain, "beta0 must lie in (1/2, 1)");
      if (!(rep_conductor >= 1.0)) fail(ErrorKind::domain, "conductor must be at least 1");
      Table t({"gamma", "bound", "nu"});
      for (double gamma : rep_gamma) {
        t.add_row({gamma, regions::repulsion_bound(rep_beta0, rep_conductor, rep_m, gamma, ctx.config.constants),
                   regions::nu(rep_beta0, rep_conductor, std::fabs(gamma) + 3.0)});
      }
      ctx.emit(t, true);
    };
  });

  // kernel probe
  auto* kernel_cmd = app.add_subcommand("kernel", "smoothing kernel");
  kernel_cmd->require_subcommand(1);
  auto* probe = kernel_cmd->add_subcommand("probe", "grids of f(t) and F(z)");
  double kp_x = 1000.0;
  int kp_ell = 2;
  double kp_eps = 0.05;
  int kp_points = 201;
  std::vector<std::string> kp_z;
  probe->add_option("--x", kp_x, "cutoff");
  probe->add_option("--ell", kp_ell, "smoothness l")->check(CLI::Range(2, 64));
  probe->add_option("--eps", kp_eps, "width eps");
  probe->add_option("--t-points", kp_points, "points across the support")->check(CLI::Range(2, 1'000'000));
  probe->add_option("--z", kp_z, "complex arguments of F (default: a fixed grid)")->delimiter(',');
  probe->callback([&] {
    action = [&] {
      const auto kp = kernel::KernelParams::make(kp_x, kp_ell, kp_eps);
      Table t({"kind", "arg_re", "arg_im", "value_re", "value_im"});
      const double lo = kp.support_lo();
      const double hi = kp.support_hi();
      for (int i = 0; i < kp_points; ++i) {
        const double u = lo + (hi - lo) * i / (kp_points - 1);
        t.add_row({std::string("f"), u, 0.0, kernel::f_eval(kp, u), 0.0});
      }
      std::vector<cplx> zs;
      if (kp_z.empty()) {
        zs = {0.0, 1.0, -1.0, cplx(0.0, 1.0), cplx(2.0, 30.0), -kp.log_x, cplx(-0.5, -14.134725) * kp.log_x};
      } else {
        zs = parse_complex_list(kp_z);
      }
      for (cplx z : zs) {
        const cplx v = kernel::F_eval(kp, z);
        t.add_row({std::string("F"), z.real(), z.imag(), v.real(), v.imag()});
      }
      ctx.emit(t, false);
    };
  });

  // zeros
  auto* zeros_cmd = app.add_subcommand("zeros", "zero dataset statistics");
  zeros_cmd->require_subcommand(1);
  std::string z_file, z_lf;
  bool z_half = false;
  std::vector<double> z_sigma, z_T;
  std::optional<double> z_beta0;
  auto* zcount = zeros_cmd->add_subcommand("count", "N(sigma, T)");
  zcount->add_option("--file", z_file, "zero file")->required();
  zcount->add_flag("--half", z_half, "mirror positive ordinates");
  zcount->add_option("--sigma", z_sigma, "sigma values")->required()->delimiter(',');
  zcount->add_option("--T", z_T, "heights")->required()->delimiter(',');
  zcount->add_option("--beta0", z_beta0, "exceptional zero to exclude (N*)");
  zcount->callback([&] {
    action = [&] {
      const auto ds = load_zeros(z_file, {z_half});
      Table t({"sigma", "T", "count_N", "count_N_star"});
      bool missing = false;
      for (double s : z_sigma) {
        for (double T : z_T) {
          const auto star = count_N_star(ds, s, T, z_beta0.value_or(0.5));
          missing = missing || !star.beta0_found;
          t.add_row({s, T, count_N(ds, s, T), star.count});
        }
      }
      if (z_beta0 && *z_beta0 > 0.5 && missing) {
        err << "pnt: warning: no zero at " << format_number(*z_beta0) << " on the real axis; N* equals N\n";
      }
      ctx.emit(t, false);
    };
  });
  double zd_t = 14.0;
  double zd_radius = 0.6;
  int zd_m = 1;
  double zd_conductor = 3.0;
  auto* zdisc = zeros_cmd->add_subcommand("disc", "zeros within a radius of 1 + it");
  zdisc->add_option("--file", z_file, "zero file")->required();
  zdisc->add_flag("--half", z_half, "mirror positive ordinates");
  zdisc->add_option("--t", zd_t, "ordinate of the centre");
  zdisc->add_option("--radius", zd_radius, "radius in (0, 2]");
  zdisc->add_option("--m", zd_m, "degree for the reference shape")->check(CLI::Range(1, 64));
  zdisc->add_option("--conductor", zd_conductor, "analytic conductor for the reference shape");
  zdisc->callback([&] {
    action = [&] {
      const auto ds = load_zeros(z_file, {z_half});
      Table t({"t", "radius", "count", "reference"});
      t.add_row({zd_t, zd_radius, disc_count(ds, zd_t, zd_radius),
                 disc_reference(zd_t, zd_radius, zd_m, zd_conductor)});
      ctx.emit(t, false);
    };
  });
  auto* zdensity = zeros_cmd->add_subcommand("density", "counts against the density envelopes");
  zdensity->add_option("--file", z_file, "zero file")->required();
  zdensity->add_option("--lf", z_lf, "descriptor file")->required();
  zdensity->add_flag("--half", z_half, "mirror positive ordinates");
  zdensity->add_option("--sigma,--sigma-grid", z_sigma, "sigma values")->delimiter(',');
  zdensity->add_option("--T,--T-grid", z_T, "heights")->delimiter(',');
  zdensity->callback([&] {
    action = [&] {
      const auto ds = load_zeros(z_file, {z_half});
      const auto lf = load_descriptor(z_lf);
      std::vector<double> sigmas = z_sigma.empty() ? std::vector<double>{0.5, 0.6, 0.75, 0.9} : z_sigma;
      std::vector<double> heights = z_T;
      if (heights.empty()) heights = {std::min(100.0, ds.completeness), ds.completeness};
      ctx.emit(density_report(ds, lf, sigmas, heights, ctx.config.constants), true);
    };
  });

  // conductor
  auto* conductor = app.add_subcommand("conductor", "analytic conductors and the Rankin-Selberg sandwich");
  std::string c_lf, c_lf2;
  bool c_skip = false;
  std::optional<std::uint64_t> c_exact;
  conductor->add_option("--lf", c_lf, "descriptor file")->required();
  conductor->add_option("--lf2", c_lf2, "second descriptor (Rankin-Selberg product)");
  conductor->add_flag("--skip-ramified", c_skip, "omit ramified primes without data");
  conductor->add_option("--exact-conductor", c_exact, "known arithmetic conductor of the product");
  conductor->callback([&] {
    action = [&] {
      const auto a = load_descriptor(c_lf);
      Table t({"label", "degree", "conductor", "conductor_exact", "analytic_conductor", "lower", "upper",
               "omitted_primes"});
      auto row = [&](const LFunction& lf, double lower, double upper) {
        std::string omitted;
        for (auto p : lf.omitted_primes()) omitted += (omitted.empty() ? "" : " ") + std::to_string(p);
        t.add_row({lf.label(), static_cast<std::int64_t>(lf.degree()), static_cast<std::int64_t>(lf.conductor()),
                   static_cast<std::int64_t>(lf.conductor_exact() ? 1 : 0), analytic_conductor(lf), lower, upper,
                   omitted});
      };
      const double ca = analytic_conductor(a);
      row(a, ca, ca);
      if (!c_lf2.empty()) {
        const auto b = load_descriptor(c_lf2);
        const double cb = analytic_conductor(b);
        row(b, cb, cb);
        RankinSelbergOptions ro;
        ro.skip_ramified = c_skip;
        ro.exact_conductor = c_exact;
        const auto rs = rankin_selberg(a, b, ro);
        const auto bounds = conductor_bounds(a, b);
        if (!(bounds.lower <= bounds.upper)) fail(ErrorKind::contract, "conductor sandwich is inverted");
        row(rs, bounds.lower, bounds.upper);
      }
      ctx.emit(t, false);
    };
  });

  // diagnose-d
  auto* diag = app.add_subcommand("diagnose-d", "Dirichlet-series l1 and short-interval diagnostics");
  std::string d_lf;
  std::vector<double> d_eta;
  double d_cutoff = 1e6;
  std::vector<double> d_x;
  double d_T = 100.0;
  diag->add_option("--lf", d_lf, "descriptor file")->required();
  diag->add_option("--eta", d_eta, "eta values of the l1 sum")->delimiter(',');
  diag->add_option("--cutoff", d_cutoff, "truncation of the l1 sum");
  diag->add_option("--x", d_x, "short-interval starting points")->delimiter(',');
  diag->add_option("--T", d_T, "short-interval parameter (interval x < n <= x e^{1/T})");
  diag->callback([&] {
    action = [&] {
      const auto lf = load_descriptor(d_lf);
      const auto& k = ctx.config.constants;
      const std::vector<double> etas = d_eta.empty() ? std::vector<double>{0.1, 0.01} : d_eta;
      const std::vector<double> xs = d_x.empty() ? std::vector<double>{1e5, 1e6} : d_x;
      Table t({"diagnostic", "parameter", "value", "reference", "ratio"});
      for (double e : etas) {
        const double v = l1_dirichlet_diagnostic(lf, e, d_cutoff, ctx.stream);
        const double r = l1_dirichlet_reference(lf, e, k);
        t.add_row({std::string("l1_dirichlet"), e, v, r, v / r});
      }
      for (double x : xs) {
        const double v = short_interval_l1_diagnostic(lf, x, d_T, ctx.stream);
        const double r = short_interval_reference(lf, x, d_T, k);
        t.add_row({std::string("short_interval"), x, v, r, v / r});
      }
      ctx.emit(t, true);
    };
  });

  // report
  auto* report = app.add_subcommand("report", "prime sum residuals against the theorem envelopes");
  std::string r_lf;
  std::vector<double> r_x;
  double r_A = 2.0;
  bool r_no_exc = false;
  RegionArgs r_region;
  report->add_option("--lf", r_lf, "descriptor file")->required();
  report->add_option("--x", r_x, "cutoffs")->required()->delimiter(',');
  report->add_option("--A", r_A, "range parameter A >= 2");
  report->add_flag("--no-exceptional", r_no_exc, "drop the x^beta0/beta0 term");
  add_region_options(report, r_region);
  report->callback([&] {
    action = [&] {
      const auto lf = load_descriptor(r_lf);
      ReportOptions ro;
      ro.envelope.A = r_A;
      ro.region = build_region(r_region, ctx.config.constants);
      ro.drop_exceptional = r_no_exc;
      ctx.emit(pnt_report(lf, r_x, ro, ctx.config.constants, ctx.stream), true);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "pnt: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  try {
    ctx.config = g.config_path.empty() ? RunConfig{} : load_config(g.config_path);
    for (const auto& kv : g.constants) {
      const auto eq = kv.find('=');
      const auto v = eq == std::string::npos ? std::nullopt : parse_real(std::string_view(kv).substr(eq + 1));
      if (!v) {
        err << "pnt: --constant expects name=value, got `" << kv << "`\n";
        return exit_usage;
      }
      if (!ctx.config.constants.set(kv.substr(0, eq), *v)) {
        err << "pnt: unknown constant `" << kv.substr(0, eq) << "`\n";
        return exit_usage;
      }
    }
    if (g.threads) ctx.config.threads = *g.threads;
    if (g.capacity) {
      if (!(*g.capacity >= 0.0 && *g.capacity < 1.8e19)) fail(ErrorKind::domain, "capacity out of range");
      ctx.config.capacity = static_cast<std::uint64_t>(*g.capacity);
    }
    if (!g.format.empty()) ctx.config.format = g.format == "tsv" ? TableFormat::tsv : TableFormat::csv;
    ctx.config.cache_dir = pick_cache_dir(g, ctx.config);
    ctx.config.validate();
    ctx.strict = g.strict;
    ctx.stream.threads = ctx.config.threads;
    ctx.stream.capacity = ctx.config.capacity;
    ctx.stream.cache_dir = ctx.config.cache_dir;
    if (action) action();
  } catch (const Error& e) {
    err << "pnt: " << e.what() << "\n";
    return e.kind() == ErrorKind::contract ? exit_contract : exit_data;
  } catch (const std::exception& e) {
    err << "pnt: " << e.what() << "\n";
    return exit_data;
  }
  return ctx.status;
}

}  // namespace pnt::cli
