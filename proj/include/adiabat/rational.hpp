// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace adiabat {

/// Exact fraction with 64-bit numerator and denominator, always normalised
/// (den > 0, gcd(num, den) == 1). Arithmetic that would overflow throws
/// Error(capacity); callers that want a floating-point fallback catch it.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept;
  std::string to_string() const;

  /// Exact conversion of a binary floating-point value. Succeeds only when the
  /// value is m / 2^e with both parts fitting in 64 bits.
  static std::optional<Rational> from_double(double value) noexcept;

  /// Parses "p/q", an integer, or a plain decimal such as "-0.66" exactly.
  /// Exponent notation is not accepted; returns nullopt on anything else.
  static std::optional<Rational> parse(std::string_view text) noexcept;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  /// 128-bit intermediate used by the arithmetic.
  __extension__ typedef __int128 wide_int;

 private:
  static Rational from_wide(wide_int num, wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace adiabat
