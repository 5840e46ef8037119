// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace packtk {

// Exact rational on int64 with __int128 intermediates. Denominators stay tiny
// in this codebase (grid denominators like 2n, eps denominators, squared shrink
// maps with early termination), so overflow is a hard error, not a mode.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(runtime/explicit)
  Rat(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  // Parses "p", "p/q" or a decimal like "0.25".
  static Rat parse(const std::string& s);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  std::int64_t floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }
  std::int64_t ceil() const { return -(-*this).floor(); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

 private:
  using i128 = __int128;

  static Rat make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rat r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
  static std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat: overflow");
    return static_cast<std::int64_t>(v);
  }
  void normalize() {
    Rat r = make(num_, den_);
    num_ = r.num_;
    den_ = r.den_;
  }

  std::int64_t num_;
  std::int64_t den_;
};

// ceil(a*num/den) and floor(a*num/den) for non-negative a with exact arithmetic.
inline std::int64_t ceil_mul(std::int64_t a, const Rat& r) { return (Rat(a) * r).ceil(); }
inline std::int64_t floor_mul(std::int64_t a, const Rat& r) { return (Rat(a) * r).floor(); }

inline Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    if (frac.size() > 12) frac.resize(12);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
    bool neg = !s.empty() && s[0] == '-';
    std::int64_t num = std::llabs(whole) * den + (frac.empty() ? 0 : std::stoll(frac));
    return Rat(neg ? -num : num, den);
  }
  return Rat(std::stoll(s));
}

}  // namespace packtk
