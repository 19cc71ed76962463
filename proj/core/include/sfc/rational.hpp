#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace sfc {

namespace detail {
__extension__ typedef __int128 Int128;
}  // namespace detail

// Exact fraction with 64-bit numerator and denominator, always reduced and
// with a positive denominator. Intermediate products use 128-bit arithmetic;
// results that do not fit in 64 bits throw std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "num/den" (or "num" when the denominator is 1).
  std::string str() const;

 private:
  static Rational from_wide(detail::Int128 num, detail::Int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& r);

// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& r, int significant = 6);

}  // namespace sfc
