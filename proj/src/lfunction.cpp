#include "pnt/lfunction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "pnt/error.hpp"

namespace pnt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxCharacterModulus = 100'000'000;

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * b % m);
    b = static_cast<u64>(static_cast<u128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

u64 smallest_primitive_root(u64 p) {
  if (p == 2) return 1;
  const auto factors = prime_divisors(p - 1);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 r : factors) {
      if (powmod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

// One cyclic factor of (Z/qZ)^*: residues mod `pe` carry discrete logs in Z/order.
struct CyclicFactor {
  u64 pe;
  u64 order;
  std::vector<std::uint32_t> dlog;
};

std::vector<CyclicFactor> cyclic_factors(u64 q) {
  std::vector<CyclicFactor> out;
  for (u64 p : prime_divisors(q)) {
    u64 pe = 1;
    int e = 0;
    while (q % (pe * p) == 0) {
      pe *= p;
      ++e;
    }
    if (p == 2) {
      if (e == 1) continue;
      if (e == 2) {
        CyclicFactor f{4, 2, std::vector<std::uint32_t>(4, 0)};
        f.dlog[3] = 1;
        out.push_back(std::move(f));
        continue;
      }
      CyclicFactor sign{pe, 2, std::vector<std::uint32_t>(pe, 0)};
      for (u64 n = 1; n < pe; n += 2) sign.dlog[n] = (n % 4 == 1) ? 0 : 1;
      CyclicFactor five{pe, pe / 4, std::vector<std::uint32_t>(pe, 0)};
      u64 x = 1;
      for (u64 k = 0; k < pe / 4; ++k) {
        five.dlog[x] = static_cast<std::uint32_t>(k);
        five.dlog[pe - x] = static_cast<std::uint32_t>(k);
        x = x * 5 % pe;
      }
      out.push_back(std::move(sign));
      out.push_back(std::move(five));
      continue;
    }
    u64 g = smallest_primitive_root(p);
    if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
    const u64 order = pe / p * (p - 1);
    CyclicFactor f{pe, order, std::vector<std::uint32_t>(pe, 0)};
    u64 x = 1;
    for (u64 k = 0; k < order; ++k) {
      f.dlog[x] = static_cast<std::uint32_t>(k);
      x = static_cast<u64>(static_cast<u128>(x) * g % pe);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string hex64(u64 h) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

u64 hash_bytes(const void* data, std::size_t n, u64 seed) {
  return fnv1a(std::string_view(static_cast<const char*>(data), n), seed);
}

u64 hash_satake_map(const std::map<u64, std::vector<cplx>>& m, bool conjugated) {
  u64 h = 0xcbf29ce484222325ULL;
  for (const auto& [p, alphas] : m) {
    h = hash_bytes(&p, sizeof p, h);
    for (cplx a : alphas) {
      const double re = a.real();
      const double im = conjugated ? -a.imag() : a.imag();
      h = hash_bytes(&re, sizeof re, h);
      h = hash_bytes(&im, sizeof im, h);
    }
    h = hash_bytes("|", 1, h);
  }
  return h;
}

bool mu_conjugation_closed(std::span<const cplx> mu) {
  std::vector<cplx> left(mu.begin(), mu.end());
  std::vector<cplx> right;
  for (cplx z : mu) right.push_back(std::conj(z));
  auto less = [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  std::sort(left.begin(), left.end(), less);
  std::sort(right.begin(), right.end(), less);
  return left == right;
}

bool divides(u64 p, u64 q) { return q % p == 0; }

// q_A^{m'} q_B^{m} with saturation; the flag reports overflow.
std::pair<u64, bool> rs_arithmetic_conductor(u64 qa, int ma, u64 qb, int mb) {
  u128 acc = 1;
  bool overflow = false;
  auto mul = [&](u64 base, int times) {
    for (int i = 0; i < times; ++i) {
      acc *= base;
      if (acc > UINT64_MAX) {
        overflow = true;
        acc = UINT64_MAX;
      }
    }
  };
  mul(qa, mb);
  mul(qb, ma);
  return {static_cast<u64>(acc), overflow};
}

}  // namespace

// ---------------------------------------------------------------------------
// DirichletCharacter

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::uint64_t index)
    : modulus_(modulus), index_(index) {
  if (modulus == 0) fail(ErrorKind::domain, "character modulus must be positive");
  if (modulus > kMaxCharacterModulus) {
    fail(ErrorKind::capacity_exceeded, "character modulus " + std::to_string(modulus) +
                                           " exceeds " + std::to_string(kMaxCharacterModulus));
  }
  const auto factors = cyclic_factors(modulus);
  group_order_ = 1;
  for (const auto& f : factors) group_order_ *= f.order;
  if (index >= group_order_) {
    fail(ErrorKind::domain, "character index " + std::to_string(index) + " out of range for modulus " +
                                std::to_string(modulus) + " (group order " +
                                std::to_string(group_order_) + ")");
  }
  u64 rest = index;
  u64 lcm = 1;
  for (const auto& f : factors) {
    orders_.push_back(f.order);
    digits_.push_back(rest % f.order);
    rest /= f.order;
    lcm = std::lcm(lcm, f.order);
  }
  values_.assign(modulus, cplx(0.0, 0.0));
  for (u64 n = 0; n < modulus; ++n) {
    if (std::gcd(n, modulus) != 1) continue;
    u64 num = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      const u128 term = static_cast<u128>(digits_[i]) * f.dlog[n % f.pe] * (lcm / f.order);
      num = static_cast<u64>((num + term) % lcm);
    }
    values_[n] = root_of_unity(static_cast<std::int64_t>(num), static_cast<std::int64_t>(lcm));
  }
}

bool DirichletCharacter::is_real() const noexcept {
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if ((2 * digits_[i]) % orders_[i] != 0) return false;
  }
  return true;
}

bool DirichletCharacter::is_even() const noexcept {
  if (modulus_ <= 2) return true;
  return values_[modulus_ - 1].real() > 0.0;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  u64 idx = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    idx = idx * orders_[i] + (orders_[i] - digits_[i]) % orders_[i];
  }
  return DirichletCharacter(modulus_, idx);
}

// ---------------------------------------------------------------------------
// LFunction

enum class Rule { zeta, dirichlet, gl2, stored, rankin_selberg };

struct LFunction::Impl {
  LFunctionHeader header;
  Rule rule = Rule::zeta;
  bool conductor_exact = true;
  bool archimedean_known = true;
  std::string fingerprint;
  std::string dual_fingerprint;
  std::string family;
  std::optional<ConductorInterval> interval;
  std::vector<u64> omitted;

  std::shared_ptr<const DirichletCharacter> chi;
  std::shared_ptr<const std::map<u64, double>> hecke;
  cplx unit{1.0, 0.0};
  std::shared_ptr<const std::map<u64, std::vector<cplx>>> stored;
  std::shared_ptr<const LFunction> left;
  std::shared_ptr<const LFunction> right;
  bool skip_ramified = false;
};

std::optional<std::string> check_mu(std::span<const cplx> mu, int degree) {
  if (static_cast<int>(mu.size()) != degree) {
    return "expected " + std::to_string(degree) + " archimedean parameters, got " +
           std::to_string(mu.size());
  }
  const double floor_re = -1.0 + 1.0 / degree;
  for (cplx z : mu) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return "non-finite archimedean parameter";
    if (z.real() < floor_re) {
      return "archimedean parameter " + format_complex(z) + " has real part below " +
             std::to_string(floor_re);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_satake(std::uint64_t p, std::span<const cplx> alphas, int degree,
                                        std::uint64_t conductor) {
  if (static_cast<int>(alphas.size()) != degree) {
    return "prime " + std::to_string(p) + ": expected " + std::to_string(degree) +
           " Satake parameters, got " + std::to_string(alphas.size());
  }
  const double bound = std::pow(static_cast<double>(p), 1.0 - 1.0 / degree) * (1.0 + 1e-12);
  bool has_zero = false;
  for (cplx a : alphas) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      return "prime " + std::to_string(p) + ": non-finite Satake parameter";
    }
    if (std::abs(a) > bound) {
      return "prime " + std::to_string(p) + ": |alpha| = " + std::to_string(std::abs(a)) +
             " exceeds p^(1-1/m)";
    }
    if (a == cplx(0.0, 0.0)) has_zero = true;
  }
  const bool ramified = divides(p, conductor);
  if (!ramified && has_zero) return "prime " + std::to_string(p) + " is unramified but has a zero parameter";
  if (ramified && !has_zero) return "prime " + std::to_string(p) + " divides the conductor but no parameter is zero";
  return std::nullopt;
}

std::optional<std::string> check_header(const LFunctionHeader& h) {
  if (h.degree < 1) return "degree must be positive";
  if (h.conductor < 1) return "conductor must be positive";
  if (auto err = check_mu(h.mu, h.degree)) return err;
  if (h.pole_order < 0 || h.pole_order > h.degree) return "pole order must lie in [0, degree]";
  if (h.beta0 && !(*h.beta0 > 0.5 && *h.beta0 < 1.0)) return "beta0 must lie in (1/2, 1)";
  return std::nullopt;
}

namespace {

void require_header(const LFunctionHeader& h) {
  if (auto err = check_header(h)) fail(ErrorKind::invariant_violation, *err);
}

}  // namespace

LFunction LFunction::zeta() {
  auto impl = std::make_shared<Impl>();
  impl->header = LFunctionHeader{"zeta", 1, 1, {cplx(0.0, 0.0)}, 1, std::nullopt, true};
  impl->rule = Rule::zeta;
  impl->fingerprint = impl->dual_fingerprint = "zeta";
  impl->family = "zeta";
  return LFunction(std::move(impl));
}

LFunction LFunction::dirichlet(std::uint64_t modulus, std::uint64_t index) {
  auto chi = std::make_shared<const DirichletCharacter>(modulus, index);
  auto impl = std::make_shared<Impl>();
  const std::string family = "dirichlet:" + std::to_string(modulus) + ":" + std::to_string(index);
  impl->header.label = family;
  impl->header.degree = 1;
  impl->header.conductor = modulus;
  impl->header.mu = {chi->is_even() ? cplx(0.0, 0.0) : cplx(1.0, 0.0)};
  impl->header.pole_order = index == 0 ? 1 : 0;
  impl->rule = Rule::dirichlet;
  impl->fingerprint = family;
  impl->dual_fingerprint = "dirichlet:" + std::to_string(modulus) + ":" +
                           std::to_string(chi->is_real() ? index : chi->conjugate().index());
  impl->family = family;
  impl->chi = std::move(chi);
  return LFunction(std::move(impl));
}

LFunction LFunction::gl2_hecke(LFunctionHeader header, std::map<std::uint64_t, double> hecke,
                               cplx unit) {
  if (header.degree != 2) fail(ErrorKind::invariant_violation, "Hecke data requires degree 2");
  require_header(header);
  if (std::fabs(std::abs(unit) - 1.0) > 1e-12) fail(ErrorKind::domain, "central unit must have modulus 1");
  for (const auto& [p, lambda] : hecke) {
    std::vector<cplx> alphas;
    if (divides(p, header.conductor)) {
      alphas = {cplx(lambda, 0.0), cplx(0.0, 0.0)};
      if (std::fabs(lambda) > std::sqrt(static_cast<double>(p)) * (1.0 + 1e-12)) {
        fail(ErrorKind::invariant_violation, "prime " + std::to_string(p) + ": |lambda_p| exceeds p^(1/2)");
      }
      continue;
    }
    auto [a1, a2] = satake_from_hecke_gl2(lambda, unit);
    alphas = {a1, a2};
    if (auto err = check_satake(p, alphas, 2, header.conductor)) {
      fail(ErrorKind::invariant_violation, *err);
    }
  }
  u64 h = 0xcbf29ce484222325ULL;
  for (const auto& [p, lambda] : hecke) {
    h = hash_bytes(&p, sizeof p, h);
    h = hash_bytes(&lambda, sizeof lambda, h);
  }
  auto unit_text = [](cplx u) { return format_complex(u); };
  const std::string base = "gl2:" + std::to_string(header.conductor) + ":" + hex64(h) + ":";
  auto impl = std::make_shared<Impl>();
  impl->header = std::move(header);
  impl->rule = Rule::gl2;
  impl->fingerprint = base + unit_text(unit);
  impl->dual_fingerprint = base + unit_text(std::conj(unit));
  impl->family = "gl2-hecke";
  impl->hecke = std::make_shared<const std::map<u64, double>>(std::move(hecke));
  impl->unit = unit;
  return LFunction(std::move(impl));
}

LFunction LFunction::from_satake(LFunctionHeader header,
                                 std::map<std::uint64_t, std::vector<cplx>> satake) {
  require_header(header);
  for (const auto& [p, alphas] : satake) {
    if (auto err = check_satake(p, alphas, header.degree, header.conductor)) {
      fail(ErrorKind::invariant_violation, *err);
    }
  }
  auto impl = std::make_shared<Impl>();
  const std::string q = std::to_string(header.conductor) + ":";
  impl->fingerprint = "explicit:" + q + hex64(hash_satake_map(satake, false));
  impl->dual_fingerprint = "explicit:" + q + hex64(hash_satake_map(satake, true));
  impl->header = std::move(header);
  impl->rule = Rule::stored;
  impl->family = "explicit";
  impl->stored = std::make_shared<const std::map<u64, std::vector<cplx>>>(std::move(satake));
  return LFunction(std::move(impl));
}

const std::string& LFunction::label() const { return impl_->header.label; }
int LFunction::degree() const { return impl_->header.degree; }
std::uint64_t LFunction::conductor() const { return impl_->header.conductor; }
bool LFunction::conductor_exact() const { return impl_->conductor_exact; }
std::span<const cplx> LFunction::mu() const { return impl_->header.mu; }
bool LFunction::archimedean_known() const { return impl_->archimedean_known; }
bool LFunction::archimedean_unramified() const { return impl_->header.archimedean_unramified; }
int LFunction::pole_order() const { return impl_->header.pole_order; }
std::optional<double> LFunction::beta0() const { return impl_->header.beta0; }
double LFunction::effective_beta0() const { return impl_->header.beta0.value_or(0.5); }
const std::string& LFunction::fingerprint() const { return impl_->fingerprint; }
const std::string& LFunction::family() const { return impl_->family; }
std::optional<ConductorInterval> LFunction::conductor_interval() const { return impl_->interval; }
const std::vector<std::uint64_t>& LFunction::omitted_primes() const { return impl_->omitted; }

bool LFunction::self_dual() const {
  return impl_->fingerprint == impl_->dual_fingerprint && mu_conjugation_closed(impl_->header.mu);
}

bool LFunction::is_dual_of(const LFunction& other) const {
  return impl_->dual_fingerprint == other.impl_->fingerprint;
}

void LFunction::satake(std::uint64_t p, std::vector<cplx>& out) const {
  out.clear();
  const Impl& im = *impl_;
  switch (im.rule) {
    case Rule::zeta:
      out.push_back(1.0);
      return;
    case Rule::dirichlet:
      out.push_back((*im.chi)(p));
      return;
    case Rule::gl2: {
      auto it = im.hecke->find(p);
      if (it == im.hecke->end()) {
        fail(ErrorKind::missing_local_data,
             label() + ": no Hecke eigenvalue for p = " + std::to_string(p));
      }
      if (divides(p, im.header.conductor)) {
        out = {cplx(it->second, 0.0), cplx(0.0, 0.0)};
      } else {
        auto [a1, a2] = satake_from_hecke_gl2(it->second, im.unit);
        out = {a1, a2};
      }
      return;
    }
    case Rule::stored: {
      auto it = im.stored->find(p);
      if (it == im.stored->end()) {
        fail(ErrorKind::missing_local_data,
             label() + ": no Satake parameters for p = " + std::to_string(p));
      }
      out = it->second;
      return;
    }
    case Rule::rankin_selberg: {
      const bool ramified = divides(p, im.left->conductor()) || divides(p, im.right->conductor());
      if (ramified) {
        if (im.stored) {
          auto it = im.stored->find(p);
          if (it != im.stored->end()) {
            out = it->second;
            return;
          }
        }
        if (im.skip_ramified) return;
        fail(ErrorKind::missing_local_data,
             label() + ": ramified prime p = " + std::to_string(p) +
                 " needs supplied Rankin-Selberg parameters (or skip-ramified)");
      }
      thread_local std::vector<cplx> a, b;
      im.left->satake(p, a);
      im.right->satake(p, b);
      out.reserve(a.size() * b.size());
      for (cplx x : a) {
        for (cplx y : b) out.push_back(x * y);
      }
      return;
    }
  }
}

std::vector<cplx> LFunction::satake(std::uint64_t p) const {
  std::vector<cplx> out;
  satake(p, out);
  return out;
}

LFunction LFunction::with_label(std::string label) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->header.label = std::move(label);
  return LFunction(std::move(impl));
}

LFunction LFunction::with_beta0(std::optional<double> beta0) const {
  if (beta0 && !(*beta0 > 0.5 && *beta0 < 1.0)) fail(ErrorKind::invariant_violation, "beta0 must lie in (1/2, 1)");
  auto impl = std::make_shared<Impl>(*impl_);
  impl->header.beta0 = beta0;
  return LFunction(std::move(impl));
}

namespace {

std::map<u64, std::vector<cplx>> conjugate_map(const std::map<u64, std::vector<cplx>>& m) {
  std::map<u64, std::vector<cplx>> out;
  for (const auto& [p, alphas] : m) {
    auto& v = out[p];
    for (cplx a : alphas) v.push_back(std::conj(a));
  }
  return out;
}

}  // namespace

LFunction dual(const LFunction& lf) {
  const auto& src = *lf.impl_;
  if (src.fingerprint == src.dual_fingerprint && mu_conjugation_closed(src.header.mu)) return lf;
  auto impl = std::make_shared<LFunction::Impl>(src);
  for (auto& z : impl->header.mu) z = std::conj(z);
  std::swap(impl->fingerprint, impl->dual_fingerprint);
  switch (src.rule) {
    case Rule::zeta:
      break;
    case Rule::dirichlet: {
      auto conj = std::make_shared<const DirichletCharacter>(src.chi->conjugate());
      impl->family = "dirichlet:" + std::to_string(conj->modulus()) + ":" + std::to_string(conj->index());
      impl->chi = std::move(conj);
      break;
    }
    case Rule::gl2:
      impl->unit = std::conj(src.unit);
      break;
    case Rule::stored:
      impl->stored = std::make_shared<const std::map<u64, std::vector<cplx>>>(conjugate_map(*src.stored));
      break;
    case Rule::rankin_selberg:
      impl->left = std::make_shared<const LFunction>(dual(*src.left));
      impl->right = std::make_shared<const LFunction>(dual(*src.right));
      if (src.stored) {
        impl->stored = std::make_shared<const std::map<u64, std::vector<cplx>>>(conjugate_map(*src.stored));
      }
      break;
  }
  impl->header.label = "dual(" + src.header.label + ")";
  return LFunction(std::move(impl));
}

struct RankinSelbergBuilder {
  static LFunction build(const LFunction& a, const LFunction& b, const RankinSelbergOptions& opt) {
    const int ma = a.degree();
    const int mb = b.degree();
    auto impl = std::make_shared<LFunction::Impl>();
    auto& h = impl->header;
    h.label = "rs(" + a.label() + "," + b.label() + ")";
    h.degree = ma * mb;
    h.pole_order = b.is_dual_of(a) ? 1 : 0;
    h.archimedean_unramified = a.archimedean_unramified() && b.archimedean_unramified();
    impl->archimedean_known = h.archimedean_unramified && a.archimedean_known() && b.archimedean_known();
    if (impl->archimedean_known) {
      for (cplx x : a.mu()) {
        for (cplx y : b.mu()) h.mu.push_back(x + y);
      }
    }
    auto [q, overflow] = rs_arithmetic_conductor(a.conductor(), ma, b.conductor(), mb);
    if (opt.exact_conductor) {
      h.conductor = *opt.exact_conductor;
      impl->conductor_exact = true;
    } else {
      h.conductor = q;
      impl->conductor_exact = (q == 1 && !overflow && a.conductor_exact() && b.conductor_exact());
    }
    for (const auto& [p, alphas] : opt.ramified) {
      if (static_cast<int>(alphas.size()) != h.degree) {
        fail(ErrorKind::invariant_violation, "ramified Rankin-Selberg data at p = " + std::to_string(p) +
                                                 " must list " + std::to_string(h.degree) + " parameters");
      }
    }
    if (!opt.ramified.empty()) {
      impl->stored = std::make_shared<const std::map<u64, std::vector<cplx>>>(opt.ramified);
    }
    impl->skip_ramified = opt.skip_ramified;
    if (opt.skip_ramified) {
      for (u64 p : prime_divisors(a.conductor() * b.conductor())) {
        if (!opt.ramified.count(p)) impl->omitted.push_back(p);
      }
    }
    try {
      impl->interval = conductor_bounds(a, b);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::missing_local_data) throw;
    }

    // Fingerprints ignore the order of the factors: A x B and B x A carry the
    // same multiset of local parameters.
    auto key = [&](const std::string& fa, const std::string& fb, bool conj) {
      std::string lo = std::min(fa, fb), hi = std::max(fa, fb);
      std::string s = "rs{" + lo + "|" + hi + "}";
      if (impl->stored) s += ":r" + hex64(hash_satake_map(*impl->stored, conj));
      if (opt.skip_ramified) s += ":skip";
      return s;
    };
    impl->fingerprint = key(a.fingerprint(), b.fingerprint(), false);
    impl->dual_fingerprint = key(dual(a).fingerprint(), dual(b).fingerprint(), true);
    impl->family = "rankin-selberg";
    impl->rule = Rule::rankin_selberg;
    impl->left = std::make_shared<const LFunction>(a);
    impl->right = std::make_shared<const LFunction>(b);
    return LFunction(std::move(impl));
  }
};

LFunction rankin_selberg(const LFunction& a, const LFunction& b, const RankinSelbergOptions& options) {
  return RankinSelbergBuilder::build(a, b, options);
}

double analytic_conductor(const LFunction& lf, ConductorRepresentative rep) {
  if (lf.conductor_exact() && lf.archimedean_known()) {
    double c = static_cast<double>(lf.conductor());
    for (cplx z : lf.mu()) c *= std::abs(z) + 3.0;
    return c;
  }
  if (auto iv = lf.conductor_interval()) {
    return rep == ConductorRepresentative::upper ? iv->upper : iv->lower;
  }
  fail(ErrorKind::missing_local_data, lf.label() + ": analytic conductor is not determined");
}

namespace {

// C(pi x pi~) with the arithmetic conductor of the self product taken as 1.
double self_product_conductor(const LFunction& lf) {
  if (!lf.archimedean_unramified() || !lf.archimedean_known()) {
    fail(ErrorKind::missing_local_data,
         lf.label() + ": archimedean parameters of the self Rankin-Selberg product are unavailable");
  }
  double c = 1.0;
  for (cplx x : lf.mu()) {
    for (cplx y : lf.mu()) c *= std::abs(x + std::conj(y)) + 3.0;
  }
  return c;
}

}  // namespace

ConductorInterval conductor_bounds(const LFunction& a, const LFunction& b) {
  const double m = a.degree();
  const double m2 = b.degree();
  const double upper = std::pow(analytic_conductor(a), m2) * std::pow(analytic_conductor(b), m);
  const double lower = std::pow(self_product_conductor(a), m2 / (4.0 * m)) *
                       std::pow(self_product_conductor(b), m / (4.0 * m2));
  if (!(lower <= upper)) {
    fail(ErrorKind::invariant_violation, "conductor sandwich violated for " + a.label() + " x " + b.label());
  }
  return {lower, upper};
}

void power_sums(std::span<const cplx> alphas, std::span<cplx> out) {
  thread_local std::vector<cplx> pw;
  pw.assign(alphas.begin(), alphas.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k > 0) {
      for (std::size_t j = 0; j < pw.size(); ++j) pw[j] *= alphas[j];
    }
    cplx s{0.0, 0.0};
    for (cplx v : pw) s += v;
    out[k] = s;
  }
}

cplx local_coefficient(std::span<const cplx> alphas, std::uint64_t p, int k) {
  cplx sums[64];
  power_sums(alphas, std::span<cplx>(sums, static_cast<std::size_t>(k)));
  return sums[k - 1] * std::log(static_cast<double>(p));
}

cplx coefficient(const LFunction& lf, std::uint64_t n) {
  if (n == 0) fail(ErrorKind::domain, "coefficient index must be positive");
  const auto pk = prime_power(n);
  if (!pk) return {0.0, 0.0};
  const auto alphas = lf.satake(pk->first);
  if (alphas.empty()) return {0.0, 0.0};
  return local_coefficient(alphas, pk->first, pk->second);
}

std::pair<cplx, cplx> satake_from_hecke_gl2(double lambda, cplx unit) {
  const cplx disc = cplx(lambda * lambda, 0.0) - 4.0 * unit;
  cplx root = std::sqrt(disc);
  // Pick the sign that avoids cancellation, then recover the partner from the product.
  if (std::abs(lambda + root) < std::abs(lambda - root)) root = -root;
  const cplx big = (lambda + root) / 2.0;
  const cplx small = unit / big;
  auto before = [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() > y.real() : x.imag() >= y.imag();
  };
  return before(big, small) ? std::make_pair(big, small) : std::make_pair(small, big);
}

}  // namespace pnt
