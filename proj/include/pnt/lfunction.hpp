#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pnt/constants.hpp"
#include "pnt/numeric.hpp"

namespace pnt {

/// a(n) * Lambda(n) at a prime power n.
struct CoefficientTerm {
  std::uint64_t n = 0;
  cplx value{};

  friend bool operator==(const CoefficientTerm&, const CoefficientTerm&) = default;
};

/// Dirichlet character modulo q, indexed by mixed-radix exponents over the
/// canonical generators of (Z/qZ)^*. Prime-power components come in
/// increasing order of p (least significant digit first); odd p uses the
/// smallest primitive root, 4 uses 3, and 2^e with e >= 3 uses -1 then 5.
/// Index 0 is the principal character.
class DirichletCharacter {
 public:
  DirichletCharacter(std::uint64_t modulus, std::uint64_t index);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t index() const noexcept { return index_; }
  std::uint64_t group_order() const noexcept { return group_order_; }

  cplx operator()(std::uint64_t n) const noexcept { return values_[n % modulus_]; }

  bool is_real() const noexcept;
  bool is_even() const noexcept;
  DirichletCharacter conjugate() const;

 private:
  std::uint64_t modulus_;
  std::uint64_t index_;
  std::uint64_t group_order_ = 1;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint64_t> digits_;
  std::vector<cplx> values_;
};

/// Fields shared by every L-function datum.
struct LFunctionHeader {
  std::string label;
  int degree = 1;
  std::uint64_t conductor = 1;
  std::vector<cplx> mu;
  int pole_order = 0;
  std::optional<double> beta0;
  bool archimedean_unramified = true;
};

struct ConductorInterval {
  double lower = 0.0;
  double upper = 0.0;
};

enum class ConductorRepresentative { upper, lower };

/// Immutable L-function datum: header fields plus a rule producing the Satake
/// parameters at each prime. Copies share state.
class LFunction {
 public:
  /// zeta(s): m = 1, q = 1, mu = {0}, r = 1.
  static LFunction zeta();

  /// Dirichlet L-function of the character (q, index); conductor is the modulus
  /// and mu = {0} or {1} by parity.
  static LFunction dirichlet(std::uint64_t modulus, std::uint64_t index);

  /// Degree-2 datum generated from normalized Hecke eigenvalues; at p | q the
  /// Satake list is {lambda_p, 0}.
  static LFunction gl2_hecke(LFunctionHeader header, std::map<std::uint64_t, double> hecke,
                             cplx unit = 1.0);

  /// Datum whose Satake lists are all stored explicitly.
  static LFunction from_satake(LFunctionHeader header,
                               std::map<std::uint64_t, std::vector<cplx>> satake);

  const std::string& label() const;
  int degree() const;
  std::uint64_t conductor() const;
  bool conductor_exact() const;
  std::span<const cplx> mu() const;
  /// False when the archimedean parameters could not be formed (ramified RS).
  bool archimedean_known() const;
  bool archimedean_unramified() const;
  int pole_order() const;
  std::optional<double> beta0() const;
  /// The exceptional zero, or 1/2 when none is recorded.
  double effective_beta0() const;
  bool self_dual() const;
  /// Identifies the local data; equal fingerprints mean equal coefficients.
  const std::string& fingerprint() const;
  /// Descriptor-style family text (`zeta`, `dirichlet:4:1`, ...).
  const std::string& family() const;
  std::optional<ConductorInterval> conductor_interval() const;
  /// Ramified primes skipped by a Rankin-Selberg construction.
  const std::vector<std::uint64_t>& omitted_primes() const;

  bool is_dual_of(const LFunction& other) const;

  /// Satake parameters at the prime p. Throws MissingLocalData when neither a
  /// stored list nor a generation rule covers p. An empty list means the
  /// prime was skipped.
  void satake(std::uint64_t p, std::vector<cplx>& out) const;
  std::vector<cplx> satake(std::uint64_t p) const;

  LFunction with_label(std::string label) const;
  LFunction with_beta0(std::optional<double> beta0) const;

  struct Impl;

 private:
  explicit LFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend LFunction dual(const LFunction& lf);
  friend struct RankinSelbergBuilder;
};

/// Contragredient datum: conjugated Satake and archimedean parameters, same q.
LFunction dual(const LFunction& lf);

struct RankinSelbergOptions {
  /// Satake lists alpha_{j,j'}(p) at primes dividing q_A q_B.
  std::map<std::uint64_t, std::vector<cplx>> ramified;
  /// Ramified primes without data contribute nothing instead of failing.
  bool skip_ramified = false;
  std::optional<std::uint64_t> exact_conductor;
};

/// L(s, A x B). Good primes carry the m m' pairwise products; archimedean
/// parameters are the pairwise sums when both sides are unramified at
/// infinity. The pole order is 1 when B is the dual of A, else 0.
LFunction rankin_selberg(const LFunction& a, const LFunction& b,
                         const RankinSelbergOptions& options = {});

/// q * prod (|mu_j| + 3). Rankin-Selberg data without an exact conductor use
/// the chosen end of their conductor interval.
double analytic_conductor(const LFunction& lf,
                          ConductorRepresentative rep = ConductorRepresentative::upper);

/// (C(A x A~)^{m'/(4m)} C(B x B~)^{m/(4m')}, C(A)^{m'} C(B)^{m}).
/// The arithmetic conductor of the self products is taken as 1, which keeps
/// the lower end a valid lower bound.
ConductorInterval conductor_bounds(const LFunction& a, const LFunction& b);

/// a(n) Lambda(n): zero off prime powers, (sum_j alpha_j(p)^k) log p at n = p^k.
cplx coefficient(const LFunction& lf, std::uint64_t n);

/// Power sums sum_j alpha_j^k for k = 1..out.size().
void power_sums(std::span<const cplx> alphas, std::span<cplx> out);

/// (sum_j alpha_j^k) log p. Every coefficient in the library goes through this
/// so that direct and streamed values agree bit for bit.
cplx local_coefficient(std::span<const cplx> alphas, std::uint64_t p, int k);

/// Roots of X^2 - lambda X + unit, ordered by nonincreasing real part, then
/// nonincreasing imaginary part.
std::pair<cplx, cplx> satake_from_hecke_gl2(double lambda, cplx unit = 1.0);

/// Type-invariant checks shared with the descriptor parser. Each returns an
/// error message, or nothing when the value is admissible.
std::optional<std::string> check_mu(std::span<const cplx> mu, int degree);
std::optional<std::string> check_satake(std::uint64_t p, std::span<const cplx> alphas,
                                        int degree, std::uint64_t conductor);
std::optional<std::string> check_header(const LFunctionHeader& header);

}  // namespace pnt
