#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tempocut {

/// Exact nonnegative-friendly fraction on 64-bit integers; always normalized
/// with a positive denominator. Arithmetic throws std::overflow_error rather
/// than wrapping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {  // NOLINT(google-explicit-constructor)
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t l = std::lcm(a.den, b.den);
    std::int64_t x = 0, y = 0, s = 0;
    if (__builtin_mul_overflow(a.num, l / a.den, &x) || __builtin_mul_overflow(b.num, l / b.den, &y) ||
        __builtin_add_overflow(x, y, &s)) {
      throw std::overflow_error("rational overflow");
    }
    return {s, l};
  }
  friend Rational operator*(const Rational& a, std::int64_t k) {
    std::int64_t x = 0;
    if (__builtin_mul_overflow(a.num, k, &x)) throw std::overflow_error("rational overflow");
    return {x, a.den};
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
};

}  // namespace tempocut
