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
 * \file comod/grid.hpp
 *
 * \brief Finite rational grids A^n ⊂ I^n and memoized black-box functions.
 *
 * Grid points are numbered in lexicographic order of their coordinates
 * (first coordinate most significant), so "lowest index" and "lowest
 * lexicographic witness" coincide.
 */

#ifndef COMOD_GRID_HPP
#define COMOD_GRID_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <comod/error.hpp>
#include <comod/scalar.hpp>
#include <comod/set_function.hpp>
#include <comod/tuple.hpp>

namespace comod {

/// An n-variable function treated as a black box.
template <Scalar S>
struct Function {
  std::size_t arity = 0;
  std::function<S(std::span<const S>)> eval;
  std::string name = "f";

  S operator()(span_of<S> x) const {
    if (x.size() != arity)
      throw error(errc::dimension_mismatch,
                  name + " takes " + std::to_string(arity) + " arguments, got " + std::to_string(x.size()));
    return eval(x);
  }
};

template <Scalar S, typename F>
Function<S> make_function(std::size_t arity, F&& f, std::string name = "f") {
  return Function<S>{arity, std::function<S(std::span<const S>)>(std::forward<F>(f)), std::move(name)};
}

/// Axis generation: k equispaced points over the box, plus 0, ±1 and the
/// endpoints whenever they lie in the box and the flags ask for them.
template <Scalar S>
struct GridSpec {
  Interval<S> box;
  std::size_t points_per_axis = 5;
  bool include_zero = true;
  bool include_units = true;
  bool include_endpoints = true;

  explicit GridSpec(Interval<S> b, std::size_t k = 5) : box(std::move(b)), points_per_axis(k) {}

  std::vector<S> axis() const {
    if (points_per_axis < 2) throw error(errc::bad_grid, "points_per_axis must be at least 2");
    std::vector<S> pts;
    const S width = box.hi() - box.lo();
    const long steps = static_cast<long>(points_per_axis - 1);
    for (long j = 0; j <= steps; ++j) {
      if (j == 0) {
        pts.push_back(box.lo());
      } else if (j == steps) {
        pts.push_back(box.hi());
      } else {
        pts.push_back(box.lo() + width * S(j) / S(steps));
      }
    }
    auto add_if_inside = [&](const S& p) {
      if (box.contains(p)) pts.push_back(p);
    };
    if (include_zero) add_if_inside(S(0));
    if (include_units) {
      add_if_inside(S(1));
      add_if_inside(S(-1));
    }
    if (include_endpoints) {
      pts.push_back(box.lo());
      pts.push_back(box.hi());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(), [](const S& a, const S& b) { return near(a, b); }), pts.end());
    return pts;
  }
};

/// The point set Aⁿ for an axis A.
template <Scalar S>
class Grid {
 public:
  Grid(std::size_t n, std::vector<S> axis) : n_(n), axis_(std::move(axis)) {
    if (n_ == 0) throw error(errc::dimension_mismatch, "grid dimension must be positive");
    if (axis_.empty()) throw error(errc::bad_grid, "empty axis");
    count_ = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (count_ > (std::size_t{1} << 40) / axis_.size()) throw error(errc::bad_grid, "grid too large");
      count_ *= axis_.size();
    }
  }

  Grid(std::size_t n, const GridSpec<S>& spec) : Grid(n, spec.axis()) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return count_; }
  std::size_t axis_size() const noexcept { return axis_.size(); }
  const std::vector<S>& axis() const noexcept { return axis_; }

  /// Axis indices of point `index`, most significant first.
  std::vector<std::size_t> digits(std::size_t index) const {
    std::vector<std::size_t> d(n_);
    for (std::size_t i = n_; i-- > 0;) {
      d[i] = index % axis_.size();
      index /= axis_.size();
    }
    return d;
  }

  std::size_t index_of(const std::vector<std::size_t>& digits) const {
    std::size_t index = 0;
    for (std::size_t d : digits) index = index * axis_.size() + d;
    return index;
  }

  std::vector<S> point(std::size_t index) const {
    std::vector<S> x(n_);
    for (std::size_t i = n_; i-- > 0;) {
      x[i] = axis_[index % axis_.size()];
      index /= axis_.size();
    }
    return x;
  }

  /// Position of `value` on the axis, if present.
  std::optional<std::size_t> axis_position(const S& value) const {
    auto it = std::lower_bound(axis_.begin(), axis_.end(), value);
    if (it != axis_.end() && near(*it, value)) return static_cast<std::size_t>(it - axis_.begin());
    if (it != axis_.begin() && near(*(it - 1), value)) return static_cast<std::size_t>(it - 1 - axis_.begin());
    return std::nullopt;
  }

  std::optional<std::size_t> locate(span_of<S> x) const {
    if (x.size() != n_) return std::nullopt;
    std::size_t index = 0;
    for (const S& v : x) {
      auto pos = axis_position(v);
      if (!pos) return std::nullopt;
      index = index * axis_.size() + *pos;
    }
    return index;
  }

 private:
  std::size_t n_;
  std::vector<S> axis_;
  std::size_t count_ = 0;
};

/// Memoizes a black box: grid points in a flat table, everything else in a map.
template <Scalar S>
class CachedFunction {
 public:
  CachedFunction(const Function<S>& f, const Grid<S>& grid)
      : f_(&f), grid_(&grid), digits_(grid.size()), on_grid_(grid.size()) {
    for (std::size_t i = 0; i < grid.size(); ++i) digits_[i] = grid.digits(i);
  }

  const Grid<S>& grid() const noexcept { return *grid_; }
  const Function<S>& function() const noexcept { return *f_; }
  const std::vector<std::size_t>& digits(std::size_t index) const { return digits_[index]; }

  const S& at(std::size_t index) {
    auto& slot = on_grid_[index];
    if (!slot) slot = (*f_)(grid_->point(index));
    return *slot;
  }

  S operator()(span_of<S> x) {
    if (auto index = grid_->locate(x)) return at(*index);
    std::vector<S> key(x.begin(), x.end());
    auto it = off_grid_.find(key);
    if (it != off_grid_.end()) return it->second;
    S value = (*f_)(x);
    off_grid_.emplace(std::move(key), value);
    return value;
  }

  /// Index-level helpers for pair axioms; axis order matches value order.
  std::size_t meet_index(std::size_t a, std::size_t b) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < grid_->n(); ++i)
      index = index * grid_->axis_size() + std::min(digits_[a][i], digits_[b][i]);
    return index;
  }

  std::size_t join_index(std::size_t a, std::size_t b) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < grid_->n(); ++i)
      index = index * grid_->axis_size() + std::max(digits_[a][i], digits_[b][i]);
    return index;
  }

  bool comonotonic(std::size_t a, std::size_t b) const {
    const auto& x = digits_[a];
    const auto& y = digits_[b];
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if ((x[i] < x[j] && y[j] < y[i]) || (x[j] < x[i] && y[i] < y[j])) return false;
    return true;
  }

 private:
  const Function<S>* f_;
  const Grid<S>* grid_;
  std::vector<std::vector<std::size_t>> digits_;
  std::vector<std::optional<S>> on_grid_;
  std::map<std::vector<S>, S> off_grid_;
};

}  // namespace comod

#endif  // COMOD_GRID_HPP
