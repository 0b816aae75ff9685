#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pnt {

using cplx = std::complex<double>;

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) noexcept;
  void merge(const CompensatedSum& other) noexcept;
  double value() const noexcept { return sum_ + comp_; }
  double compensation() const noexcept { return comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexSum {
 public:
  void add(cplx v) noexcept {
    re_.add(v.real());
    im_.add(v.imag());
  }
  void merge(const ComplexSum& other) noexcept {
    re_.merge(other.re_);
    im_.merge(other.im_);
  }
  cplx value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// Parses `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i` (decimal or exponent notation).
std::optional<cplx> parse_complex(std::string_view text);

std::optional<double> parse_real(std::string_view text);

std::string format_complex(cplx z);

/// Exact root of unity exp(2 pi i num/den); quarter turns are returned exactly.
cplx root_of_unity(std::int64_t num, std::int64_t den);

/// Primes p <= limit in increasing order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// If n = p^k with p prime and k >= 1, returns (p, k).
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string_view trim(std::string_view s) noexcept;

std::vector<std::string_view> split_ws(std::string_view s);

}  // namespace pnt
