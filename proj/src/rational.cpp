// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#include "adiabat/rational.hpp"

#include <cmath>
#include <limits>

#include "adiabat/error.hpp"

namespace adiabat {
namespace {

using wide = Rational::wide_int;

wide wide_gcd(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr wide kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0) throw Error(ErrorCode::invalid_argument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < -kMax || den > kMax)
    throw Error(ErrorCode::capacity, "rational arithmetic overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

double Rational::to_double() const noexcept {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::from_double(double value) noexcept {
  if (!std::isfinite(value)) return std::nullopt;
  if (value == 0.0) return Rational{};
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);  // value = mantissa * 2^exponent
  // Scale the 53-bit mantissa to an integer.
  auto m = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  int e = exponent - 53;
  while (e < 0 && (m % 2) == 0) {
    m /= 2;
    ++e;
  }
  try {
    if (e >= 0) {
      if (e > 62) return std::nullopt;
      return from_wide(static_cast<wide>(m) << e, 1);
    }
    if (-e > 62) return std::nullopt;
    return from_wide(m, static_cast<wide>(1) << (-e));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Rational> Rational::parse(std::string_view text) noexcept {
  auto parse_int = [](std::string_view s) -> std::optional<wide> {
    if (s.empty()) return std::nullopt;
    bool negative = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
      negative = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) return std::nullopt;
    wide v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      v = v * 10 + (s[i] - '0');
      if (v > kMax) return std::nullopt;
    }
    return negative ? -v : v;
  };

  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto p = parse_int(text.substr(0, slash));
      auto q = parse_int(text.substr(slash + 1));
      if (!p || !q || *q == 0) return std::nullopt;
      return from_wide(*p, *q);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
      auto p = parse_int(text);
      if (!p) return std::nullopt;
      return from_wide(*p, 1);
    }
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) return std::nullopt;
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    digits += frac;
    auto p = parse_int(digits);
    if (!p) return std::nullopt;
    wide den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return from_wide(*p, den);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                             static_cast<wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<wide>(a.num_) * b.den_ - static_cast<wide>(b.num_) * a.den_,
                             static_cast<wide>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a) { return Rational::from_wide(-static_cast<wide>(a.num_), a.den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  wide lhs = static_cast<wide>(a.num_) * b.den_;
  wide rhs = static_cast<wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace adiabat
