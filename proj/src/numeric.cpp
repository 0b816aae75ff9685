#include "pnt/numeric.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace pnt {

void CompensatedSum::add(double v) noexcept {
  const double t = sum_ + v;
  if (std::fabs(sum_) >= std::fabs(v)) {
    comp_ += (sum_ - t) + v;
  } else {
    comp_ += (v - t) + sum_;
  }
  sum_ = t;
}

void CompensatedSum::merge(const CompensatedSum& other) noexcept {
  add(other.sum_);
  add(other.comp_);
}

std::optional<double> parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::optional<cplx> parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    auto re = parse_real(text);
    if (!re) return std::nullopt;
    return cplx(*re, 0.0);
  }
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string_view s) -> std::optional<double> {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string_view::npos) {
    auto im = imag_part(body);
    if (!im) return std::nullopt;
    return cplx(0.0, *im);
  }
  auto re = parse_real(body.substr(0, split));
  auto im = imag_part(body.substr(split));
  if (!re || !im) return std::nullopt;
  return cplx(*re, *im);
}

std::string format_complex(cplx z) {
  char buf[96];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%c%.17gi", z.real(), std::signbit(z.imag()) ? '-' : '+',
                  std::fabs(z.imag()));
  }
  return buf;
}

cplx root_of_unity(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  if ((4 * num) % den == 0) {
    switch ((4 * num) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  if (2 * num > den) return std::conj(root_of_unity(den - num, den));
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<std::uint8_t> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view trim(std::string_view s) noexcept {
  const char* ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace pnt
