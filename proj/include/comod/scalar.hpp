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

#ifndef COMOD_SCALAR_HPP
#define COMOD_SCALAR_HPP

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include <comod/rational.hpp>

namespace comod {

/// Customization point for the scalar field. Two instantiations ship:
/// `Rational` (exact, the default everywhere) and `double` (float mode,
/// comparisons up to an absolute tolerance).
template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view mode_name = "rational";

  static Rational parse(std::string_view text) { return Rational::parse(text); }
  static Rational from_rational(const Rational& r) { return r; }
  static std::string format(const Rational& r) { return r.str(); }
  static int sign(const Rational& r) { return r.sign(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view mode_name = "float";

  static double parse(std::string_view text) { return Rational::parse(text).to_double(); }
  static double from_rational(const Rational& r) { return r.to_double(); }
  static std::string format(double d) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
    if (ec != std::errc{}) return std::to_string(d);
    return std::string(buf, end);
  }
  static int sign(double d) { return (d > 0) - (d < 0); }
};

template <typename S>
concept Scalar = requires { scalar_traits<S>::exact; };

/// Comparison policy. In exact mode `eps` is ignored.
struct Tolerance {
  double eps = 1e-9;
};

template <Scalar S>
bool near(const S& a, const S& b, Tolerance tol = {}) {
  if constexpr (scalar_traits<S>::exact) {
    return a == b;
  } else {
    return std::fabs(a - b) <= tol.eps;
  }
}

/// a <= b, relaxed by eps in float mode.
template <Scalar S>
bool less_eq(const S& a, const S& b, Tolerance tol = {}) {
  if constexpr (scalar_traits<S>::exact) {
    return a <= b;
  } else {
    return a <= b + tol.eps;
  }
}

template <Scalar S>
S parse_scalar(std::string_view text) {
  return scalar_traits<S>::parse(text);
}

template <Scalar S>
std::string to_string(const S& s) {
  return scalar_traits<S>::format(s);
}

template <Scalar S>
int sign_of(const S& s) {
  return scalar_traits<S>::sign(s);
}

template <Scalar S>
S ratio(long num, long den) {
  return scalar_traits<S>::from_rational(Rational(num, den));
}

}  // namespace comod

#endif  // COMOD_SCALAR_HPP
