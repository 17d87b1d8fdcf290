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
 * \file comod/integrals.hpp
 *
 * \brief Discrete integrals: signed Choquet (Lovász extension), symmetric
 *  signed Choquet, Sugeno, their quasi- variants, and the Shilkret integral.
 *
 * All evaluators are pure. Signed Choquet uses the telescoping sorted form
 *
 *   C_v(x) = Σ_i x_σ(i) (v(S↑(i)) − v(S↑(i+1))),   x_σ(1) ≤ … ≤ x_σ(n),
 *
 * in O(n log n); no 2^n precomputation.
 */

#ifndef COMOD_INTEGRALS_HPP
#define COMOD_INTEGRALS_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include <comod/error.hpp>
#include <comod/scalar.hpp>
#include <comod/set_function.hpp>
#include <comod/transform.hpp>
#include <comod/tuple.hpp>

namespace comod {

/// Whether symmetric_choquet cross-evaluates its region formula.
enum class Checking { off, on };

#ifdef NDEBUG
inline constexpr Checking default_checking = Checking::off;
#else
inline constexpr Checking default_checking = Checking::on;
#endif

namespace detail {

template <Scalar S>
void require_arity(const SetFunction<S>& v, std::size_t size) {
  if (v.n() != size)
    throw error(errc::dimension_mismatch,
                "set function on n=" + std::to_string(v.n()) + " applied to a tuple of length " + std::to_string(size));
}

template <Scalar S>
void require_signed(const SetFunction<S>& v) {
  if (!v.is_signed_capacity()) throw error(errc::not_signed_capacity, "value at ∅ must be 0");
}

/// Σ_i x_σ(i)(v(S↑(i)) − v(S↑(i+1))) for a fixed σ (0-based indices).
template <Scalar S>
S choquet_along(const SetFunction<S>& v, span_of<S> x, const std::vector<std::size_t>& perm) {
  S total(0);
  std::uint32_t upper = 0;  // S↑(i+1)
  for (std::size_t k = perm.size(); k-- > 0;) {
    const std::uint32_t with = upper | (std::uint32_t{1} << perm[k]);
    total += x[perm[k]] * (v.at(with) - v.at(upper));
    upper = with;
  }
  return total;
}

}  // namespace detail

/// Signed Choquet integral C_v(x).
template <Scalar S>
S choquet(const SetFunction<S>& v, span_of<S> x) {
  detail::require_arity(v, x.size());
  detail::require_signed(v);
  return detail::choquet_along(v, x, sorted_view<S>(x).perm);
}

/// C_v evaluated with an explicit sorting permutation; σ must sort x.
template <Scalar S>
S choquet_with_permutation(const SetFunction<S>& v, span_of<S> x, const std::vector<std::size_t>& perm) {
  detail::require_arity(v, x.size());
  for (std::size_t k = 1; k < perm.size(); ++k)
    if (x[perm[k]] < x[perm[k - 1]]) throw error(errc::dimension_mismatch, "permutation does not sort the tuple");
  return detail::choquet_along(v, x, perm);
}

/// Region formula for Č_v on ℝⁿ_σ:
///   Σ_{i≤p} x_σ(i)(v(S↓(i)) − v(S↓(i−1))) + Σ_{i>p} x_σ(i)(v(S↑(i)) − v(S↑(i+1))).
template <Scalar S>
S symmetric_choquet_regions(const SetFunction<S>& v, span_of<S> x) {
  detail::require_arity(v, x.size());
  detail::require_signed(v);
  const SortedView view = sorted_view<S>(x);
  const std::size_t n = x.size();
  S total(0);
  std::uint32_t lower = 0;  // S↓(i−1)
  for (std::size_t i = 1; i <= view.split; ++i) {
    const std::uint32_t with = lower | (std::uint32_t{1} << view.perm[i - 1]);
    total += x[view.perm[i - 1]] * (v.at(with) - v.at(lower));
    lower = with;
  }
  std::uint32_t upper = 0;  // S↑(i+1)
  for (std::size_t i = n; i > view.split; --i) {
    const std::uint32_t with = upper | (std::uint32_t{1} << view.perm[i - 1]);
    total += x[view.perm[i - 1]] * (v.at(with) - v.at(upper));
    upper = with;
  }
  return total;
}

/// Symmetric signed Choquet integral Č_v(x) = C_v(x⁺) − C_v(x⁻).
template <Scalar S>
S symmetric_choquet(const SetFunction<S>& v, span_of<S> x, Checking checking = default_checking) {
  detail::require_arity(v, x.size());
  const S value = choquet<S>(v, positive_part<S>(x)) - choquet<S>(v, negative_part<S>(x));
  if (checking == Checking::on) {
    const S regions = symmetric_choquet_regions<S>(v, x);
    if (!near(value, regions))
      throw error(errc::internal_cross_check_failed, "C(x+)-C(x-) = " + to_string(value) + " but region formula gives " +
                                                         to_string(regions) + " at " + format_tuple<S>(x));
  }
  return value;
}

/// C_v(x⁺) − C_{v^d}(x⁻); an independent route to C_v(x).
template <Scalar S>
S choquet_via_dual(const SetFunction<S>& v, span_of<S> x) {
  detail::require_arity(v, x.size());
  return choquet<S>(v, positive_part<S>(x)) - choquet<S>(dual(v), negative_part<S>(x));
}

namespace detail {

template <Scalar S>
const Interval<S>& require_ivalued(const SetFunction<S>& mu) {
  if (!mu.codomain()) throw error(errc::bad_role, "Sugeno integrals need an I-valued capacity");
  return *mu.codomain();
}

template <Scalar S>
void require_in(const Interval<S>& interval, span_of<S> x, errc code) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!interval.contains(x[i]))
      throw error(code, "coordinate " + std::to_string(i + 1) + " = " + to_string(x[i]) + " outside " + interval.str());
}

}  // namespace detail

/// Sugeno integral ⋁_i x_σ(i) ∧ μ(S↑(i)) for an I-valued capacity μ and x ∈ Iⁿ.
template <Scalar S>
S sugeno(const SetFunction<S>& mu, span_of<S> x) {
  detail::require_arity(mu, x.size());
  const Interval<S>& interval = detail::require_ivalued(mu);
  detail::require_in(interval, x, errc::tuple_outside_interval);
  const SortedView view = sorted_view<S>(x);
  S best = interval.lo();
  for (std::size_t i = 1; i <= x.size(); ++i) {
    const std::size_t idx = view.perm[i - 1];
    best = std::max(best, std::min(x[idx], mu(view.ascending_chain(i))));
  }
  return best;
}

/// Max-min normal form ⋁_{S⊆X} μ(S) ∧ ⋀_{i∈S} x_i (empty meet = b).
template <Scalar S>
S sugeno_normal_form(const SetFunction<S>& mu, span_of<S> x) {
  detail::require_arity(mu, x.size());
  const Interval<S>& interval = detail::require_ivalued(mu);
  detail::require_in(interval, x, errc::tuple_outside_interval);
  S best = interval.lo();
  for (std::uint32_t mask = 0; mask < mu.size(); ++mask) {
    S term = mu.at(mask);
    for (std::size_t i = 0; i < x.size(); ++i)
      if ((mask >> i) & 1u) term = std::min(term, x[i]);
    best = std::max(best, term);
  }
  return best;
}

namespace detail {

inline void require_property(bool present, const char* what) {
  if (!present) throw error(errc::phi_missing_property, std::string("transform is not declared ") + what);
}

}  // namespace detail

/// Signed quasi-Choquet integral C_v(φ(x_1),…,φ(x_n)); φ nondecreasing, φ(0)=0.
template <Scalar S>
S quasi_choquet(const SetFunction<S>& v, const TransformFn<S>& phi, span_of<S> x) {
  detail::require_property(phi.has(TransformProperty::nondecreasing), "nondecreasing");
  detail::require_property(phi.has(TransformProperty::vanishes_at_zero), "vanishing at 0");
  return choquet<S>(v, phi.apply(x));
}

/// Symmetric signed quasi-Choquet integral Č_v(φ(x_1),…,φ(x_n)); φ nondecreasing and odd.
template <Scalar S>
S symmetric_quasi_choquet(const SetFunction<S>& v, const TransformFn<S>& phi, span_of<S> x,
                          Checking checking = default_checking) {
  detail::require_property(phi.has(TransformProperty::nondecreasing), "nondecreasing");
  detail::require_property(phi.has(TransformProperty::odd), "odd");
  return symmetric_choquet<S>(v, phi.apply(x), checking);
}

/// Quasi-Sugeno integral S_μ(φ(x_1),…,φ(x_n)); φ: J → I nondecreasing.
template <Scalar S>
S quasi_sugeno(const SetFunction<S>& mu, const TransformFn<S>& phi, span_of<S> x) {
  detail::require_property(phi.has(TransformProperty::nondecreasing), "nondecreasing");
  const Interval<S>& interval = detail::require_ivalued(mu);
  std::vector<S> mapped = phi.apply(x);
  detail::require_in(interval, std::span<const S>(mapped), errc::phi_range_outside_interval);
  return sugeno<S>(mu, mapped);
}

/// Shilkret integral ⋁_i x_σ(i) · μ(S↑(i)) for a capacity μ and x ≥ 0.
template <Scalar S>
S shilkret(const SetFunction<S>& mu, span_of<S> x) {
  detail::require_arity(mu, x.size());
  if (!mu.is_capacity()) throw error(errc::bad_role, "Shilkret integral needs a capacity");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < S(0)) throw error(errc::negative_input, "coordinate " + std::to_string(i + 1) + " = " + to_string(x[i]));
  const SortedView view = sorted_view<S>(x);
  S best(0);
  for (std::size_t i = 1; i <= x.size(); ++i) best = std::max(best, x[view.perm[i - 1]] * mu(view.ascending_chain(i)));
  return best;
}

/// Arithmetic mean; comonotonically modular yet not comonotonically maxitive.
template <Scalar S>
S arithmetic_mean(span_of<S> x) {
  S total(0);
  for (const S& v : x) total += v;
  return total / S(static_cast<long>(x.size()));
}

}  // namespace comod

#endif  // COMOD_INTEGRALS_HPP
