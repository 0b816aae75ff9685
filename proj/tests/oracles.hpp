#pragma once

// Reference implementations that share no code with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

/// Smallest prime factor table for n <= limit.
inline std::vector<std::uint32_t> spf_table(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

/// Lambda(n) by trial division.
inline double von_mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::log(static_cast<double>(n));
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

/// log lcm(1..x) from the exact integer.
inline double log_lcm(std::uint64_t x) {
  using boost::multiprecision::cpp_int;
  // lcm(1..x) is the product of the largest prime powers <= x; primes by trial division.
  cpp_int l = 1;
  for (std::uint64_t p = 2; p <= x; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (!prime) continue;
    std::uint64_t q = p;
    while (q <= x / p) q *= p;
    l *= q;
  }
  const auto bits = boost::multiprecision::msb(l);
  if (bits < 60) return std::log(l.convert_to<double>());
  const auto shift = bits - 60;
  const double top = static_cast<cpp_int>(l >> shift).convert_to<double>();
  return std::log(top) + static_cast<double>(shift) * std::log(2.0);
}

/// chi_{-4}(n).
inline int chi_m4(std::uint64_t n) {
  if (n % 2 == 0) return 0;
  return n % 4 == 1 ? 1 : -1;
}

/// tau(1..N) from q prod (1 - q^n)^24, with prod (1 - q^n)^3 taken from
/// Jacobi's triple-product series and raised to the 8th power by squaring.
inline std::vector<__int128> ramanujan_tau(int N) {
  std::vector<__int128> cube(N, 0);  // degrees 0..N-1
  for (long k = 0;; ++k) {
    const long e = k * (k + 1) / 2;
    if (e >= N) break;
    cube[e] += (k % 2 == 0 ? 1 : -1) * (2 * k + 1);
  }
  auto square = [N](const std::vector<__int128>& a) {
    std::vector<__int128> out(N, 0);
    for (int i = 0; i < N; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j < N; ++j) out[i + j] += a[i] * a[j];
    }
    return out;
  };
  const auto p24 = square(square(square(cube)));
  std::vector<__int128> tau(N + 1, 0);
  for (int n = 1; n <= N; ++n) tau[n] = p24[n - 1];
  return tau;
}

/// Irwin-Hall CDF by the alternating binomial sum, in long double.
inline double irwin_hall_alternating(int n, double u) {
  if (u <= 0.0) return 0.0;
  if (u >= n) return 1.0;
  long double s = 0.0L;
  long double binom = 1.0L;
  long double fact = 1.0L;
  for (int i = 2; i <= n; ++i) fact *= i;
  for (int k = 0; k <= static_cast<int>(std::floor(u)); ++k) {
    s += (k % 2 == 0 ? 1.0L : -1.0L) * binom * std::pow(static_cast<long double>(u) - k, n);
    binom = binom * (n - k) / (k + 1);
  }
  return static_cast<double>(s / fact);
}

/// The kernel weight as P(1/2 <= t + 2B W <= 1 + 2lB), W ~ Irwin-Hall(l).
inline double kernel_weight(double t, int ell, double B) {
  return irwin_hall_alternating(ell, ell + (1.0 - t) / (2.0 * B)) -
         irwin_hall_alternating(ell, (0.5 - t) / (2.0 * B));
}

/// int g(t) e^{-zt} dt over the breakpoints `knots` (sorted), each piece
/// split into `sub` Gauss-Kronrod panels.
template <class G>
std::complex<double> laplace_quadrature(G g, std::complex<double> z, const std::vector<double>& knots,
                                        int sub = 8) {
  using boost::math::quadrature::gauss_kronrod;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i];
    const double b = knots[i + 1];
    if (!(b > a)) continue;
    for (int k = 0; k < sub; ++k) {
      const double lo = a + (b - a) * k / sub;
      const double hi = a + (b - a) * (k + 1) / sub;
      re += gauss_kronrod<double, 61>::integrate(
          [&](double t) { return g(t) * std::real(std::exp(-z * t)); }, lo, hi, 0, 0.0);
      im += gauss_kronrod<double, 61>::integrate(
          [&](double t) { return g(t) * std::imag(std::exp(-z * t)); }, lo, hi, 0, 0.0);
    }
  }
  return {re, im};
}

}  // namespace oracle
