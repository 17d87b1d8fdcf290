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
 * \file comod/random.hpp
 *
 * \brief Seeded generators for set functions and transforms.
 *
 * Only raw mt19937_64 output is consumed (reduced with %), so a seed yields
 * the same tables on every platform and standard library.
 */

#ifndef COMOD_RANDOM_HPP
#define COMOD_RANDOM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <comod/error.hpp>
#include <comod/scalar.hpp>
#include <comod/set_function.hpp>
#include <comod/transform.hpp>

namespace comod {

inline constexpr std::size_t max_generated_criteria = 8;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// A rational num/den in [lo, hi] with den drawn from 1..max_den.
  template <Scalar S>
  S rational(long lo, long hi, long max_den = 10) {
    const long den = 1 + static_cast<long>(below(static_cast<std::uint64_t>(max_den)));
    const long span = (hi - lo) * den;
    const long num = lo * den + static_cast<long>(below(static_cast<std::uint64_t>(span + 1)));
    return ratio<S>(num, den);
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline void check_generated_n(std::size_t n) {
  if (n == 0 || n > max_generated_criteria)
    throw error(errc::n_exceeds_limit, "generation supports 1 <= n <= " + std::to_string(max_generated_criteria));
}

/// w(∅)=0, w(S) = max_{i∈S} w(S∖{i}) + increment, increments in [0, 1/2];
/// the top gets at least 1/10 so w(X) > 0.
template <Scalar S>
std::vector<S> monotone_table(Rng& rng, std::size_t n) {
  std::vector<S> w(std::size_t{1} << n, S(0));
  for (std::uint32_t mask = 1; mask < w.size(); ++mask) {
    S base(0);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) base = std::max(base, w[mask & ~(std::uint32_t{1} << i)]);
    S inc = rng.rational<S>(0, 1, 10) / S(2);
    if (mask + 1 == w.size() && inc == S(0)) inc = ratio<S>(1, 10);
    w[mask] = base + inc;
  }
  return w;
}

}  // namespace detail

/// v(∅)=0 and every other value a rational in [−1,1].
template <Scalar S>
SetFunction<S> random_signed_capacity(std::uint64_t seed, std::size_t n) {
  detail::check_generated_n(n);
  Rng rng(seed);
  std::vector<S> values(std::size_t{1} << n, S(0));
  for (std::size_t mask = 1; mask < values.size(); ++mask) values[mask] = rng.rational<S>(-1, 1);
  return SetFunction<S>(n, std::move(values));
}

/// A monotone table built from nonnegative increments along the lattice.
template <Scalar S>
SetFunction<S> random_capacity(std::uint64_t seed, std::size_t n) {
  detail::check_generated_n(n);
  Rng rng(seed);
  return SetFunction<S>(n, detail::monotone_table<S>(rng, n));
}

/// A monotone table rescaled onto [a,b]: μ(∅)=a and μ(X)=b exactly.
template <Scalar S>
SetFunction<S> random_ivalued_capacity(std::uint64_t seed, std::size_t n, const Interval<S>& interval) {
  detail::check_generated_n(n);
  Rng rng(seed);
  std::vector<S> w = detail::monotone_table<S>(rng, n);
  const S top = w.back();
  const S width = interval.hi() - interval.lo();
  for (auto& value : w) value = interval.lo() + width * value / top;
  w.front() = interval.lo();
  w.back() = interval.hi();
  return SetFunction<S>(n, std::move(w)).with_codomain(interval);
}

template <Scalar S>
SetFunction<S> random_set_function(std::uint64_t seed, std::size_t n, Role role,
                                   const Interval<S>& interval = Interval<S>(S(0), S(1))) {
  switch (role) {
    case Role::capacity: return random_capacity<S>(seed, n);
    case Role::signed_capacity: return random_signed_capacity<S>(seed, n);
    case Role::ivalued: return random_ivalued_capacity<S>(seed, n, interval);
  }
  throw error(errc::bad_role, "unknown role");
}

/// Nondecreasing piecewise-linear φ on [lo,hi] with `interior` random inner
/// breakpoints and values in `range`. With `through_origin`, 0 is a breakpoint
/// mapped to 0 (0 must lie in [lo,hi] and in range).
template <Scalar S>
TransformFn<S> random_transform(std::uint64_t seed, const Interval<S>& domain, const Interval<S>& range,
                                std::size_t interior = 2, bool through_origin = false) {
  Rng rng(seed);
  const S zero(0);
  std::vector<S> xs{domain.lo(), domain.hi()};
  for (std::size_t k = 0; k < interior; ++k)
    xs.push_back(domain.lo() + (domain.hi() - domain.lo()) * rng.rational<S>(0, 1, 12));
  if (through_origin) xs.push_back(zero);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<S> ys;
  for (std::size_t k = 0; k < xs.size(); ++k)
    ys.push_back(range.lo() + (range.hi() - range.lo()) * rng.rational<S>(0, 1, 12));
  std::sort(ys.begin(), ys.end());
  PropertySet props{TransformProperty::nondecreasing};
  if (through_origin) {
    // Shift so the breakpoint at 0 lands on 0, keeping values inside range.
    const std::size_t at = static_cast<std::size_t>(std::find(xs.begin(), xs.end(), zero) - xs.begin());
    for (std::size_t k = 0; k < ys.size(); ++k) {
      if (k < at) ys[k] = std::min(ys[k], zero);
      if (k > at) ys[k] = std::max(ys[k], zero);
    }
    ys[at] = zero;
    props.add(TransformProperty::vanishes_at_zero);
  }
  return sample_transform<S>(xs, ys, props);
}

}  // namespace comod

#endif  // COMOD_RANDOM_HPP
