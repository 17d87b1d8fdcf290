/*
 * Copyright 2026 The comod Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * \file comod/rational.hpp
 *
 * \brief Arbitrary-precision rational numbers backed by GMP.
 *
 * A thin value type over mpq_class. Wrapping keeps gmpxx expression
 * templates out of generic code, so `std::min`, `auto` and containers
 * behave as they do for built-in arithmetic types.
 */

#ifndef COMOD_RATIONAL_HPP
#define COMOD_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <comod/error.hpp>

namespace comod {

class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::unsigned_integral I>
  Rational(I value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT(implicit)

  Rational(long num, long den) {
    if (den == 0) throw error(errc::parse_error, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p", "p/q" and decimal forms such as "-0.125" or "2.5e-3";
  /// decimals are converted exactly.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return q_; }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Correctly rounded when numerator and denominator fit in 53 bits
  /// (mpq_get_d truncates, which would print 1/5 as 0.19999999999999998).
  double to_double() const {
    const mpz_class& num = q_.get_num();
    const mpz_class& den = q_.get_den();
    if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 53)
      return num.get_d() / den.get_d();
    return q_.get_d();
  }

  /// Canonical text: "p" for integers, "p/q" otherwise, q > 0, gcd(p,q)=1.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw error(errc::parse_error, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  text = detail::trim(text);
  auto fail = [&]() -> Rational {
    throw error(errc::parse_error, "not a rational number: '" + std::string(original) + "'");
  };
  if (text.empty()) return fail();

  bool negative = false;
  std::string_view body = text;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = detail::trim(body.substr(0, slash));
    std::string_view den = detail::trim(body.substr(slash + 1));
    bool den_negative = false;
    if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
      den_negative = den.front() == '-';
      den.remove_prefix(1);
    }
    if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw error(errc::parse_error, "zero denominator in '" + std::string(original) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    if (negative != den_negative) q = -q;
    return Rational(q);
  }

  // Decimal with optional exponent.
  std::string_view mantissa = body;
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = body.substr(0, e);
    std::string_view exp_text = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!detail::all_digits(exp_text) || exp_text.size() > 6) return fail();
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return fail();
    if (!int_part.empty() && !detail::all_digits(int_part)) return fail();
    if (!frac_part.empty() && !detail::all_digits(frac_part)) return fail();
    digits = std::string(int_part) + std::string(frac_part);
    frac_len = static_cast<long>(frac_part.size());
  } else {
    if (!detail::all_digits(mantissa)) return fail();
    digits = std::string(mantissa);
  }
  if (digits.empty()) return fail();
  mpq_class q{mpz_class(digits, 10)};
  const long shift = exponent - frac_len;
  if (shift > 0) q *= mpq_class(detail::pow10(static_cast<unsigned long>(shift)));
  if (shift < 0) q /= mpq_class(detail::pow10(static_cast<unsigned long>(-shift)));
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

}  // namespace comod

#endif  // COMOD_RATIONAL_HPP
