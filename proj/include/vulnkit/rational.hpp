#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vulnkit {

// Exact fraction over 64-bit integers, always kept in lowest terms with a
// positive denominator.  All values in this project are tiny (graph orders
// stay below 32), so 64-bit components with 128-bit cross-multiplication in
// the comparisons are far beyond what is ever needed.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num(value), den(1) {}
  constexpr Rational(std::int64_t p, std::int64_t q) : num(p), den(q) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    normalize();
  }

  constexpr void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  constexpr bool is_integer() const { return den == 1; }

  // Largest integer <= value and smallest integer >= value.
  constexpr std::int64_t floor() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }
  constexpr std::int64_t ceil() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  constexpr Rational operator-() const {
    Rational r;
    r.num = -num;
    r.den = den;
    return r;
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend constexpr bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend constexpr bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend constexpr bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend constexpr bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend constexpr bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// Parses "p" or "p/q" with optional leading minus signs; rejects anything else.
Rational parse_rational(const std::string& text);

}  // namespace vulnkit
