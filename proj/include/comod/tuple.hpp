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
 * \file comod/tuple.hpp
 *
 * \brief n-tuples over a box I^n and the tuple operations the integrals and
 *  axioms are phrased in: sorting permutations, comonotonicity, positive and
 *  negative parts, horizontal cuts, brackets, median clamps, indicators.
 *
 * Span-based free functions do the arithmetic; `Tuple` adds box membership,
 * which is enforced once, at construction.
 */

#ifndef COMOD_TUPLE_HPP
#define COMOD_TUPLE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <comod/error.hpp>
#include <comod/scalar.hpp>
#include <comod/set_function.hpp>

namespace comod {

template <typename S>
using span_of = std::span<const std::type_identity_t<S>>;

template <Scalar S>
std::string format_tuple(span_of<S> x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += to_string(x[i]);
  }
  return s + ")";
}

template <Scalar S>
class Tuple {
 public:
  Tuple(std::vector<S> coords, Interval<S> box) : coords_(std::move(coords)), box_(std::move(box)) {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (!box_.contains(coords_[i]))
        throw error(errc::out_of_box, "coordinate " + std::to_string(i + 1) + " = " + to_string(coords_[i]) +
                                          " lies outside " + box_.str());
  }

  std::size_t size() const noexcept { return coords_.size(); }
  const S& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<S>& coords() const noexcept { return coords_; }
  const Interval<S>& box() const noexcept { return box_; }

  operator std::span<const S>() const noexcept { return coords_; }  // NOLINT(implicit)

  std::string str() const { return format_tuple<S>(coords_); }

  friend bool operator==(const Tuple& a, const Tuple& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<S> coords_;
  Interval<S> box_;
};

/// A sorting permutation σ of x (0-based indices) and the sign split p.
///
/// x[perm[0]] <= ... <= x[perm[n-1]]; p counts the strictly negative
/// entries, so x_{σ(p)} < 0 <= x_{σ(p+1)} with x_{σ(0)} = -∞, x_{σ(n+1)} = +∞.
struct SortedView {
  std::vector<std::size_t> perm;
  std::size_t split = 0;

  std::size_t n() const noexcept { return perm.size(); }

  /// S↑(i) = {σ(i),...,σ(n)} for 1-based i in 1..n+1; S↑(n+1) = ∅.
  Subset ascending_chain(std::size_t i) const {
    std::uint32_t mask = 0;
    for (std::size_t k = i; k <= perm.size(); ++k) mask |= std::uint32_t{1} << perm[k - 1];
    return Subset(mask);
  }

  /// S↓(i) = {σ(1),...,σ(i)} for i in 0..n; S↓(0) = ∅.
  Subset descending_chain(std::size_t i) const {
    std::uint32_t mask = 0;
    for (std::size_t k = 1; k <= i; ++k) mask |= std::uint32_t{1} << perm[k - 1];
    return Subset(mask);
  }

  /// 1-based permutation, as written in the literature.
  std::vector<std::size_t> one_based() const {
    std::vector<std::size_t> out(perm);
    for (auto& p : out) ++p;
    return out;
  }
};

/// Stable sort: ties keep ascending original index.
template <Scalar S>
SortedView sorted_view(span_of<S> x) {
  SortedView view;
  view.perm.resize(x.size());
  std::iota(view.perm.begin(), view.perm.end(), std::size_t{0});
  std::stable_sort(view.perm.begin(), view.perm.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  const S zero(0);
  view.split = static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [&](const S& v) { return v < zero; }));
  return view;
}

namespace detail {

template <Scalar S>
void require_same_size(span_of<S> x, span_of<S> y) {
  if (x.size() != y.size())
    throw error(errc::dimension_mismatch,
                "tuples of length " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
}

}  // namespace detail

/// (x_i - x_j)(y_i - y_j) >= 0 for all i, j.
template <Scalar S>
bool is_comonotonic(span_of<S> x, span_of<S> y) {
  detail::require_same_size<S>(x, y);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if ((x[i] < x[j] && y[j] < y[i]) || (x[j] < x[i] && y[i] < y[j])) return false;
  return true;
}

template <Scalar S>
bool is_comonotonic(const Tuple<S>& x, const Tuple<S>& y) {
  return is_comonotonic<S>(x.coords(), y.coords());
}

template <Scalar S>
std::vector<S> meet(span_of<S> x, span_of<S> y) {
  detail::require_same_size<S>(x, y);
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], y[i]);
  return out;
}

template <Scalar S>
std::vector<S> join(span_of<S> x, span_of<S> y) {
  detail::require_same_size<S>(x, y);
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i], y[i]);
  return out;
}

/// Componentwise (x ∧ y, x ∨ y); the box is closed under both.
template <Scalar S>
std::pair<Tuple<S>, Tuple<S>> meet_join(const Tuple<S>& x, const Tuple<S>& y) {
  if (!(x.box() == y.box())) throw error(errc::dimension_mismatch, "tuples live in different boxes");
  return {Tuple<S>(meet<S>(x.coords(), y.coords()), x.box()), Tuple<S>(join<S>(x.coords(), y.coords()), x.box())};
}

template <Scalar S>
std::vector<S> add(span_of<S> x, span_of<S> y) {
  detail::require_same_size<S>(x, y);
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

template <Scalar S>
std::vector<S> subtract(span_of<S> x, span_of<S> y) {
  detail::require_same_size<S>(x, y);
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

template <Scalar S>
std::vector<S> negate(span_of<S> x) {
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
  return out;
}

template <Scalar S>
std::vector<S> scale(span_of<S> x, const S& c) {
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

/// x ∧ c, componentwise against a constant.
template <Scalar S>
std::vector<S> meet_const(span_of<S> x, const S& c) {
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], c);
  return out;
}

/// x ∨ c, componentwise against a constant.
template <Scalar S>
std::vector<S> join_const(span_of<S> x, const S& c) {
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i], c);
  return out;
}

template <Scalar S>
std::vector<S> positive_part(span_of<S> x) {
  return join_const<S>(x, S(0));
}

/// x⁻ = (-x)⁺.
template <Scalar S>
std::vector<S> negative_part(span_of<S> x) {
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] < S(0) ? -x[i] : S(0);
  return out;
}

/// (x⁺, x⁻). The parts live in the hulls of I ∪ {0} and -I ∪ {0}.
template <Scalar S>
std::pair<Tuple<S>, Tuple<S>> split_parts(const Tuple<S>& x) {
  const S zero(0);
  return {Tuple<S>(positive_part<S>(x.coords()), x.box().including(zero)),
          Tuple<S>(negative_part<S>(x.coords()), x.box().negated().including(zero))};
}

enum class CutMode { min, max };

/// (x ∧ c, x - x ∧ c) or (x ∨ c, x - x ∨ c); both parts must stay in the box.
template <Scalar S>
std::pair<Tuple<S>, Tuple<S>> horizontal_split(const Tuple<S>& x, const S& c, CutMode mode) {
  std::vector<S> cut = mode == CutMode::min ? meet_const<S>(x.coords(), c) : join_const<S>(x.coords(), c);
  std::vector<S> rest = subtract<S>(x.coords(), cut);
  return {Tuple<S>(std::move(cut), x.box()), Tuple<S>(std::move(rest), x.box())};
}

enum class BracketMode { low, high };

/// [x]_c (low, c >= 0): 0 where x_i <= c, x_i elsewhere.
/// [x]^c (high, c <= 0): 0 where x_i >= c, x_i elsewhere.
template <Scalar S>
std::vector<S> bracket(span_of<S> x, const S& c, BracketMode mode) {
  const S zero(0);
  if (mode == BracketMode::low && c < zero)
    throw error(errc::bad_threshold_sign, "low bracket needs c >= 0, got " + to_string(c));
  if (mode == BracketMode::high && c > zero)
    throw error(errc::bad_threshold_sign, "high bracket needs c <= 0, got " + to_string(c));
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool zeroed = mode == BracketMode::low ? x[i] <= c : x[i] >= c;
    out[i] = zeroed ? zero : x[i];
  }
  return out;
}

template <Scalar S>
Tuple<S> bracket(const Tuple<S>& x, const S& c, BracketMode mode) {
  return Tuple<S>(bracket<S>(x.coords(), c, mode), x.box().including(S(0)));
}

/// med(-c, x, c): clamp every coordinate into [-c, c].
template <Scalar S>
std::vector<S> median_clamp(span_of<S> x, const S& c) {
  if (c < S(0)) throw error(errc::negative_radius, "median clamp radius " + to_string(c));
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::clamp(x[i], -c, c);
  return out;
}

template <Scalar S>
Tuple<S> median_clamp(const Tuple<S>& x, const S& c) {
  return Tuple<S>(median_clamp<S>(x.coords(), c), x.box().including(S(0)));
}

/// `value` on S, `rest` elsewhere.
template <Scalar S>
std::vector<S> two_level(std::size_t n, Subset s, const S& value, const S& rest) {
  if (!s.within(n)) throw error(errc::subset_out_of_range, s.str() + " for n=" + std::to_string(n));
  std::vector<S> out(n, rest);
  for (std::size_t i = 0; i < n; ++i)
    if (s.has_index(i)) out[i] = value;
  return out;
}

/// x·1_S.
template <Scalar S>
std::vector<S> ray_point(std::size_t n, Subset s, const S& x) {
  return two_level<S>(n, s, x, S(0));
}

template <Scalar S>
std::vector<S> constant_tuple(std::size_t n, const S& c) {
  return std::vector<S>(n, c);
}

enum class IndicatorKind { unit, negated, endpoints };

/// 1_S, -1_S or e_S ∈ {a,b}^n (b on S, a elsewhere).
template <Scalar S>
std::vector<S> indicator(std::size_t n, Subset s, IndicatorKind kind, const std::optional<Interval<S>>& ends = {}) {
  switch (kind) {
    case IndicatorKind::unit: return two_level<S>(n, s, S(1), S(0));
    case IndicatorKind::negated: return two_level<S>(n, s, S(-1), S(0));
    case IndicatorKind::endpoints:
      if (!ends) throw error(errc::invalid_interval, "endpoint indicator needs an interval");
      return two_level<S>(n, s, ends->hi(), ends->lo());
  }
  return {};
}

/// Every σ under which x is sorted nondecreasingly (used by tie-independence
/// checks and as the reference for `is_comonotonic`).
template <Scalar S>
std::vector<std::vector<std::size_t>> admissible_permutations(span_of<S> x) {
  std::vector<std::size_t> perm(x.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    bool sorted = true;
    for (std::size_t k = 1; k < perm.size() && sorted; ++k) sorted = !(x[perm[k]] < x[perm[k - 1]]);
    if (sorted) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace comod

#endif  // COMOD_TUPLE_HPP
