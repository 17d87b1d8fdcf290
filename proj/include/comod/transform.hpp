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
 * \file comod/transform.hpp
 *
 * \brief Unary transforms φ applied componentwise by the quasi-integrals.
 */

#ifndef COMOD_TRANSFORM_HPP
#define COMOD_TRANSFORM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <comod/error.hpp>
#include <comod/scalar.hpp>
#include <comod/tuple.hpp>

namespace comod {

enum class TransformProperty : std::uint8_t {
  nondecreasing = 1,
  vanishes_at_zero = 2,
  odd = 4,
};

/// Bit set of TransformProperty.
class PropertySet {
 public:
  constexpr PropertySet() = default;
  constexpr PropertySet(std::initializer_list<TransformProperty> props) {
    for (auto p : props) bits_ |= static_cast<std::uint8_t>(p);
  }
  constexpr bool has(TransformProperty p) const noexcept { return bits_ & static_cast<std::uint8_t>(p); }
  constexpr bool contains(PropertySet other) const noexcept { return (bits_ & other.bits_) == other.bits_; }
  constexpr PropertySet& add(TransformProperty p) noexcept {
    bits_ |= static_cast<std::uint8_t>(p);
    return *this;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (has(TransformProperty::nondecreasing)) out.emplace_back("nondecreasing");
    if (has(TransformProperty::vanishes_at_zero)) out.emplace_back("vanishes-at-0");
    if (has(TransformProperty::odd)) out.emplace_back("odd");
    return out;
  }

  friend constexpr bool operator==(PropertySet, PropertySet) = default;

 private:
  std::uint8_t bits_ = 0;
};

inline TransformProperty parse_property(std::string_view name) {
  if (name == "nondecreasing") return TransformProperty::nondecreasing;
  if (name == "vanishes-at-0") return TransformProperty::vanishes_at_zero;
  if (name == "odd") return TransformProperty::odd;
  throw error(errc::invalid_transform, "unknown transform property '" + std::string(name) + "'");
}

enum class TransformKind { identity, piecewise_linear, cube, signed_square, constant };

/// φ: identity, a linearly interpolated breakpoint list, or a named closed
/// form (cube x³, signed square x|x|, constant c).
///
/// Declared properties are verified against the representation when the
/// transform is built. Piecewise-linear evaluation outside the breakpoint
/// range is an error, never a clamp.
template <Scalar S>
class TransformFn {
 public:
  using Breakpoint = std::pair<S, S>;

  static TransformFn identity() {
    return TransformFn(TransformKind::identity, {}, S(0),
                       {TransformProperty::nondecreasing, TransformProperty::vanishes_at_zero, TransformProperty::odd});
  }

  static TransformFn cube() {
    return TransformFn(TransformKind::cube, {}, S(0),
                       {TransformProperty::nondecreasing, TransformProperty::vanishes_at_zero, TransformProperty::odd});
  }

  static TransformFn signed_square() {
    return TransformFn(TransformKind::signed_square, {}, S(0),
                       {TransformProperty::nondecreasing, TransformProperty::vanishes_at_zero, TransformProperty::odd});
  }

  static TransformFn constant(const S& c) {
    PropertySet props{TransformProperty::nondecreasing};
    if (c == S(0)) props.add(TransformProperty::vanishes_at_zero).add(TransformProperty::odd);
    return TransformFn(TransformKind::constant, {}, c, props);
  }

  /// Breakpoints must be strictly increasing in x. Each declared property is
  /// checked; a declaration the breakpoints contradict throws InvalidTransform.
  static TransformFn piecewise_linear(std::vector<Breakpoint> breakpoints, PropertySet declared) {
    if (breakpoints.size() < 2) throw error(errc::invalid_transform, "need at least two breakpoints");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
      if (!(breakpoints[i - 1].first < breakpoints[i].first))
        throw error(errc::invalid_transform, "breakpoints must be strictly increasing in x");
    TransformFn fn(TransformKind::piecewise_linear, std::move(breakpoints), S(0), declared);
    fn.verify_declared();
    return fn;
  }

  /// Builds the largest property set the breakpoints support.
  static TransformFn piecewise_linear(std::vector<Breakpoint> breakpoints) {
    auto probe = piecewise_linear(breakpoints, PropertySet{});
    return piecewise_linear(std::move(breakpoints), probe.detected_properties());
  }

  TransformKind kind() const noexcept { return kind_; }
  PropertySet properties() const noexcept { return props_; }
  bool has(TransformProperty p) const noexcept { return props_.has(p); }
  const std::vector<Breakpoint>& breakpoints() const noexcept { return breakpoints_; }
  const S& constant_value() const noexcept { return constant_; }

  /// Domain of a piecewise-linear transform; unbounded otherwise.
  std::optional<std::pair<S, S>> domain() const {
    if (kind_ != TransformKind::piecewise_linear) return std::nullopt;
    return std::make_pair(breakpoints_.front().first, breakpoints_.back().first);
  }

  S operator()(const S& x) const {
    switch (kind_) {
      case TransformKind::identity: return x;
      case TransformKind::cube: return x * x * x;
      case TransformKind::signed_square: return x < S(0) ? -(x * x) : x * x;
      case TransformKind::constant: return constant_;
      case TransformKind::piecewise_linear: return interpolate(x);
    }
    return x;
  }

  std::vector<S> apply(span_of<S> x) const {
    std::vector<S> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (*this)(x[i]);
    return out;
  }

  std::string describe() const {
    switch (kind_) {
      case TransformKind::identity: return "identity";
      case TransformKind::cube: return "cube";
      case TransformKind::signed_square: return "signed-square";
      case TransformKind::constant: return "constant(" + to_string(constant_) + ")";
      case TransformKind::piecewise_linear: {
        std::string s = "pl[";
        for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
          if (i) s += ",";
          s += "(" + to_string(breakpoints_[i].first) + "," + to_string(breakpoints_[i].second) + ")";
        }
        return s + "]";
      }
    }
    return "?";
  }

 private:
  TransformFn(TransformKind kind, std::vector<Breakpoint> bps, S c, PropertySet props)
      : kind_(kind), breakpoints_(std::move(bps)), constant_(std::move(c)), props_(props) {}

  S interpolate(const S& x) const {
    const auto& bp = breakpoints_;
    if (x < bp.front().first || x > bp.back().first)
      throw error(errc::extrapolation, "x=" + to_string(x) + " outside breakpoint range [" + to_string(bp.front().first) +
                                           "," + to_string(bp.back().first) + "]");
    auto it = std::lower_bound(bp.begin(), bp.end(), x, [](const Breakpoint& b, const S& v) { return b.first < v; });
    if (it->first == x) return it->second;
    const auto& right = *it;
    const auto& left = *(it - 1);
    return left.second + (right.second - left.second) * (x - left.first) / (right.first - left.first);
  }

  PropertySet detected_properties() const {
    PropertySet found;
    const auto& bp = breakpoints_;
    bool monotone = true;
    for (std::size_t i = 1; i < bp.size(); ++i) monotone = monotone && bp[i - 1].second <= bp[i].second;
    if (monotone) found.add(TransformProperty::nondecreasing);
    const S zero(0);
    if (bp.front().first <= zero && zero <= bp.back().first && interpolate(zero) == zero)
      found.add(TransformProperty::vanishes_at_zero);
    bool mirrored = true;
    for (std::size_t i = 0, j = bp.size() - 1; i < bp.size(); ++i, --j)
      mirrored = mirrored && bp[i].first == -bp[j].first && bp[i].second == -bp[j].second;
    if (mirrored) found.add(TransformProperty::odd);
    return found;
  }

  void verify_declared() const {
    PropertySet found = detected_properties();
    for (auto p : {TransformProperty::nondecreasing, TransformProperty::vanishes_at_zero, TransformProperty::odd}) {
      if (props_.has(p) && !found.has(p)) {
        PropertySet one;
        one.add(p);
        throw error(errc::invalid_transform, "declared property '" + one.names().front() +
                                                 "' does not hold for breakpoints " + describe());
      }
    }
  }

  TransformKind kind_;
  std::vector<Breakpoint> breakpoints_;
  S constant_;
  PropertySet props_;
};

/// Tabulates φ at the given strictly increasing points as a piecewise-linear
/// transform (exact at those points).
template <Scalar S>
TransformFn<S> sample_transform(const std::vector<S>& points, const std::vector<S>& values, PropertySet declared) {
  std::vector<typename TransformFn<S>::Breakpoint> bps;
  bps.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) bps.emplace_back(points[i], values[i]);
  return TransformFn<S>::piecewise_linear(std::move(bps), declared);
}

}  // namespace comod

#endif  // COMOD_TRANSFORM_HPP
