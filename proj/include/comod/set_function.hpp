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
 * \file comod/set_function.hpp
 *
 * \brief Set functions on X = {1,...,n}: capacities, signed capacities and
 *  interval-valued capacities, stored as full 2^n tables.
 *
 * Subsets are bitmasks: bit (i-1) is set iff element i belongs to the set.
 */

#ifndef COMOD_SET_FUNCTION_HPP
#define COMOD_SET_FUNCTION_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <comod/error.hpp>
#include <comod/scalar.hpp>

namespace comod {

inline constexpr std::size_t max_criteria = 20;

/// A subset of X = {1,...,n}.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t mask) : mask_(mask) {}

  /// Builds a subset from 1-based elements; bounds are checked by the caller
  /// through `within`.
  static Subset of(std::initializer_list<std::size_t> elements) {
    return of(std::vector<std::size_t>(elements));
  }

  static Subset of(const std::vector<std::size_t>& elements) {
    std::uint32_t mask = 0;
    for (std::size_t e : elements) {
      if (e == 0 || e > max_criteria)
        throw error(errc::subset_out_of_range, "element " + std::to_string(e));
      mask |= std::uint32_t{1} << (e - 1);
    }
    return Subset(mask);
  }

  static constexpr Subset empty() { return Subset(0); }
  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool contains(std::size_t element) const noexcept {
    return element >= 1 && element <= 32 && (mask_ >> (element - 1)) & 1u;
  }
  /// 0-based membership, convenient for index loops.
  constexpr bool has_index(std::size_t i) const noexcept { return (mask_ >> i) & 1u; }
  constexpr bool is_empty() const noexcept { return mask_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool within(std::size_t n) const noexcept { return (mask_ & ~full(n).mask_) == 0; }
  constexpr bool subset_of(Subset other) const noexcept { return (mask_ & ~other.mask_) == 0; }

  constexpr Subset with(std::size_t index0) const noexcept { return Subset(mask_ | (std::uint32_t{1} << index0)); }
  constexpr Subset complement(std::size_t n) const noexcept { return Subset(full(n).mask_ & ~mask_); }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i)
      if (has_index(i)) out.push_back(i + 1);
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

/// A nontrivial closed interval [lo, hi], lo < hi.
template <Scalar S>
class Interval {
 public:
  Interval(S lo, S hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_))
      throw error(errc::invalid_interval,
                  "[" + to_string(lo_) + "," + to_string(hi_) + "] is not a nontrivial interval");
  }

  const S& lo() const noexcept { return lo_; }
  const S& hi() const noexcept { return hi_; }

  bool contains(const S& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool centered() const { return lo_ == -hi_; }

  /// I+ = I ∩ [0,∞), when nontrivial.
  std::optional<Interval> nonnegative_part() const {
    S zero(0);
    if (!(zero < hi_)) return std::nullopt;
    return Interval(lo_ < zero ? zero : lo_, hi_);
  }

  /// I- = I ∩ (-∞,0], when nontrivial.
  std::optional<Interval> nonpositive_part() const {
    S zero(0);
    if (!(lo_ < zero)) return std::nullopt;
    return Interval(lo_, hi_ > zero ? zero : hi_);
  }

  /// Smallest interval containing this one and `x`.
  Interval including(const S& x) const {
    return Interval(x < lo_ ? x : lo_, x > hi_ ? x : hi_);
  }

  Interval negated() const { return Interval(-hi_, -lo_); }

  std::string str() const { return "[" + to_string(lo_) + "," + to_string(hi_) + "]"; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  S lo_;
  S hi_;
};

enum class Role { capacity, signed_capacity, ivalued };

inline std::string_view role_name(Role r) {
  switch (r) {
    case Role::capacity: return "capacity";
    case Role::signed_capacity: return "signed";
    case Role::ivalued: return "ivalued";
  }
  return "?";
}

inline Role parse_role(std::string_view name) {
  if (name == "capacity") return Role::capacity;
  if (name == "signed") return Role::signed_capacity;
  if (name == "ivalued") return Role::ivalued;
  throw error(errc::bad_role, "unknown role '" + std::string(name) + "'");
}

/// Outcome of `validate`: pass, or the violating pair / endpoint.
struct RoleVerdict {
  bool pass = true;
  std::optional<std::pair<Subset, Subset>> violating_pair;  ///< S ⊆ T with value(S) > value(T)
  std::optional<Subset> violating_endpoint;                 ///< ∅ or X
  std::string reason;

  explicit operator bool() const noexcept { return pass; }
};

template <Scalar S>
class SetFunction {
 public:
  /// Full table constructor; `values[mask]` is the value at that subset.
  SetFunction(std::size_t n, std::vector<S> values) : n_(n), values_(std::move(values)) {
    check_n(n_);
    if (values_.size() != (std::size_t{1} << n_))
      throw error(errc::dimension_mismatch, "table for n=" + std::to_string(n_) + " needs " +
                                                std::to_string(std::size_t{1} << n_) + " entries, got " +
                                                std::to_string(values_.size()));
    compute_flags();
  }

  /// Sparse constructor; unassigned subsets are 0.
  static SetFunction from_assignments(std::size_t n, const std::vector<std::pair<Subset, S>>& assignments) {
    check_n(n);
    std::vector<S> table(std::size_t{1} << n, S(0));
    std::set<std::uint32_t> seen;
    for (const auto& [subset, value] : assignments) {
      if (!subset.within(n))
        throw error(errc::subset_out_of_range, subset.str() + " is not a subset of {1.." + std::to_string(n) + "}");
      if (!seen.insert(subset.mask()).second) throw error(errc::duplicate_subset, subset.str());
      table[subset.mask()] = value;
    }
    return SetFunction(n, std::move(table));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<S>& values() const noexcept { return values_; }

  const S& operator()(Subset s) const { return values_[s.mask()]; }
  const S& at(std::uint32_t mask) const { return values_.at(mask); }

  bool is_signed_capacity() const noexcept { return signed_; }
  bool is_capacity() const noexcept { return capacity_; }

  /// Interval-valued role; set only through `with_codomain` after validation.
  const std::optional<Interval<S>>& codomain() const noexcept { return codomain_; }
  bool is_ivalued() const noexcept { return codomain_.has_value(); }

  /// Attaches the I-valued role; throws BadRole when the table does not qualify.
  SetFunction with_codomain(const Interval<S>& interval) const;

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  static void check_n(std::size_t n) {
    if (n == 0) throw error(errc::dimension_mismatch, "n must be positive");
    if (n > max_criteria)
      throw error(errc::n_exceeds_limit, "n=" + std::to_string(n) + " exceeds " + std::to_string(max_criteria));
  }

  void compute_flags();

  std::size_t n_;
  std::vector<S> values_;
  bool signed_ = false;
  bool capacity_ = false;
  std::optional<Interval<S>> codomain_;
};

namespace detail {

/// First covering pair (S, S ∪ {i}) in mask order with value(S) > value(S ∪ {i}).
/// Covering pairs suffice: any violation along S ⊆ T shows up on a chain.
template <Scalar S>
std::optional<std::pair<Subset, Subset>> first_monotonicity_violation(std::size_t n, const std::vector<S>& v) {
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) continue;
      const std::uint32_t up = mask | (std::uint32_t{1} << i);
      if (v[mask] > v[up]) return std::make_pair(Subset(mask), Subset(up));
    }
  }
  return std::nullopt;
}

}  // namespace detail

template <Scalar S>
void SetFunction<S>::compute_flags() {
  signed_ = values_.front() == S(0);
  capacity_ = signed_ && !detail::first_monotonicity_violation(n_, values_).has_value();
}

/// Checks the table against a role. For `ivalued`, `interval` is required.
template <Scalar S>
RoleVerdict validate(const SetFunction<S>& sf, Role role, const std::optional<Interval<S>>& interval = std::nullopt) {
  RoleVerdict verdict;
  const Subset full = Subset::full(sf.n());
  auto fail_endpoint = [&](Subset s, std::string reason) {
    verdict.pass = false;
    verdict.violating_endpoint = s;
    verdict.reason = std::move(reason);
    return verdict;
  };

  switch (role) {
    case Role::signed_capacity:
    case Role::capacity:
      if (!(sf(Subset::empty()) == S(0)))
        return fail_endpoint(Subset::empty(), "value at the empty set is " + to_string(sf(Subset::empty())) + ", not 0");
      break;
    case Role::ivalued: {
      if (!interval) throw error(errc::bad_role, "ivalued validation needs an interval");
      if (!(sf(Subset::empty()) == interval->lo()))
        return fail_endpoint(Subset::empty(), "value at the empty set must equal " + to_string(interval->lo()));
      if (!(sf(full) == interval->hi()))
        return fail_endpoint(full, "value at X must equal " + to_string(interval->hi()));
      break;
    }
  }
  if (role == Role::signed_capacity) return verdict;

  if (auto bad = detail::first_monotonicity_violation(sf.n(), sf.values())) {
    verdict.pass = false;
    verdict.violating_pair = bad;
    verdict.reason = "value at " + bad->first.str() + " (" + to_string(sf(bad->first)) + ") exceeds value at " +
                     bad->second.str() + " (" + to_string(sf(bad->second)) + ")";
  }
  return verdict;
}

template <Scalar S>
RoleVerdict validate(const SetFunction<S>& sf, Role role, const Interval<S>& interval) {
  return validate(sf, role, std::optional<Interval<S>>(interval));
}

template <Scalar S>
SetFunction<S> SetFunction<S>::with_codomain(const Interval<S>& interval) const {
  auto verdict = validate(*this, Role::ivalued, std::optional<Interval<S>>(interval));
  if (!verdict) throw error(errc::bad_role, "not an I-valued capacity over " + interval.str() + ": " + verdict.reason);
  SetFunction out = *this;
  out.codomain_ = interval;
  return out;
}

/// v^d(S) = v(X) - v(X \ S).
template <Scalar S>
SetFunction<S> dual(const SetFunction<S>& v) {
  if (!v.is_signed_capacity())
    throw error(errc::not_signed_capacity, "dual needs v(∅)=0, got " + to_string(v(Subset::empty())));
  const std::size_t n = v.n();
  const Subset full = Subset::full(n);
  std::vector<S> table(v.size());
  for (std::uint32_t mask = 0; mask < table.size(); ++mask)
    table[mask] = v(full) - v(Subset(mask).complement(n));
  return SetFunction<S>(n, std::move(table));
}

}  // namespace comod

#endif  // COMOD_SET_FUNCTION_HPP
