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
 * \file comod/decompose.hpp
 *
 * \brief Canonical representations sampled from black-box functions.
 *
 * Every form is tabulated on a finite axis. Evaluating a form at a point with
 * a coordinate off that axis is an error (OffAxisPoint); nothing is
 * interpolated. Every fit that returns a representation has already
 * regenerated f from it on the whole grid and compared exactly.
 */

#ifndef COMOD_DECOMPOSE_HPP
#define COMOD_DECOMPOSE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <comod/axioms.hpp>
#include <comod/error.hpp>
#include <comod/grid.hpp>
#include <comod/integrals.hpp>
#include <comod/scalar.hpp>
#include <comod/set_function.hpp>
#include <comod/transform.hpp>
#include <comod/tuple.hpp>

namespace comod {

namespace detail {

template <Scalar S>
std::size_t axis_index(const std::vector<S>& axis, const S& value) {
  auto it = std::lower_bound(axis.begin(), axis.end(), value);
  if (it != axis.end() && near(*it, value)) return static_cast<std::size_t>(it - axis.begin());
  if (it != axis.begin() && near(*(it - 1), value)) return static_cast<std::size_t>(it - 1 - axis.begin());
  throw error(errc::off_axis_point, to_string(value) + " is not a sampled axis point");
}

template <Scalar S>
S sample(const Function<S>& f, span_of<S> x) {
  try {
    return f(x);
  } catch (const error& e) {
    throw error(errc::domain_gap, "f undefined at " + format_tuple<S>(x) + ": " + e.what());
  }
}

}  // namespace detail

/// f(0) plus g = f on I₊ⁿ and h = f on I₋ⁿ, sampled on every ray point
/// t·1_S (t on the axis, S any subset; chain subsets of all σ cover them all).
template <Scalar S>
struct SeparationForm {
  std::size_t n = 0;
  std::vector<S> axis;
  S f_zero{};
  std::map<std::pair<std::size_t, std::uint32_t>, S> g_table;  ///< (axis index, mask) for t >= 0
  std::map<std::pair<std::size_t, std::uint32_t>, S> h_table;  ///< (axis index, mask) for t <= 0

  const S& g(std::size_t t_index, Subset s) const { return g_table.at({t_index, s.mask()}); }
  const S& h(std::size_t t_index, Subset s) const { return h_table.at({t_index, s.mask()}); }
};

template <Scalar S>
SeparationForm<S> build_separation(const Function<S>& f, const Interval<S>& box, const std::vector<S>& axis) {
  const S zero(0);
  if (!box.contains(zero)) throw error(errc::domain_gap, "separation form needs 0 in the box " + box.str());
  SeparationForm<S> form;
  form.n = f.arity;
  form.axis = axis;
  std::sort(form.axis.begin(), form.axis.end());
  if (!std::binary_search(form.axis.begin(), form.axis.end(), zero)) {
    form.axis.push_back(zero);
    std::sort(form.axis.begin(), form.axis.end());
  }
  for (const S& t : form.axis)
    if (!box.contains(t)) throw error(errc::domain_gap, "axis point " + to_string(t) + " outside " + box.str());
  const std::size_t n = f.arity;
  form.f_zero = detail::sample<S>(f, constant_tuple<S>(n, zero));
  for (std::size_t k = 0; k < form.axis.size(); ++k) {
    const S& t = form.axis[k];
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      S value = detail::sample<S>(f, ray_point<S>(n, Subset(mask), t));
      if (t >= zero) form.g_table.emplace(std::make_pair(k, mask), value);
      if (t <= zero) form.h_table.emplace(std::make_pair(k, mask), value);
    }
  }
  return form;
}

template <Scalar S>
SeparationForm<S> build_separation(const Function<S>& f, const GridSpec<S>& grid) {
  return build_separation(f, grid.box, grid.axis());
}

/// f(0) + Σ_{i≤p} (h(x_σ(i)1_{S↓(i)}) − h(x_σ(i)1_{S↓(i−1)}))
///      + Σ_{i>p} (g(x_σ(i)1_{S↑(i)}) − g(x_σ(i)1_{S↑(i+1)})).
template <Scalar S>
S eval_separation(const SeparationForm<S>& form, span_of<S> x) {
  if (x.size() != form.n) throw error(errc::dimension_mismatch, "tuple length differs from the form's n");
  std::vector<std::size_t> idx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) idx[i] = detail::axis_index(form.axis, x[i]);
  const SortedView view = sorted_view<S>(x);
  S total = form.f_zero;
  for (std::size_t i = 1; i <= view.split; ++i) {
    const std::size_t k = idx[view.perm[i - 1]];
    total += form.h(k, view.descending_chain(i)) - form.h(k, view.descending_chain(i - 1));
  }
  for (std::size_t i = view.split + 1; i <= form.n; ++i) {
    const std::size_t k = idx[view.perm[i - 1]];
    total += form.g(k, view.ascending_chain(i)) - form.g(k, view.ascending_chain(i + 1));
  }
  return total;
}

enum class NormalMode { maxitive, minitive };

inline std::string_view normal_mode_name(NormalMode m) { return m == NormalMode::maxitive ? "maxitive" : "minitive"; }

/// φ_S(t) = f(e_S ∧ t) (maxitive) or f(e_{X∖S} ∨ t) (minitive), one table per S.
template <Scalar S>
struct NormalForm {
  NormalMode mode = NormalMode::maxitive;
  std::size_t n = 0;
  Interval<S> interval;
  std::vector<S> axis;
  std::vector<std::vector<S>> phi_tables;  ///< [mask][axis index]

  const S& phi(Subset s, std::size_t t_index) const { return phi_tables[s.mask()][t_index]; }
};

/// First adjacent grid step x ≤ x' with f(x) > f(x'), if any.
template <Scalar S>
std::optional<Witness<S>> nondecreasing_violation(const Function<S>& f, const Interval<S>& box,
                                                  const std::vector<S>& axis) {
  AxiomReport<S> r = check_on_axis(Axiom::nondecreasing, f, box, axis);
  if (r.passed()) return std::nullopt;
  return r.witness;
}

template <Scalar S>
NormalForm<S> build_normal_form(const Function<S>& f, const Interval<S>& interval, NormalMode mode,
                                std::vector<S> axis) {
  axis.push_back(interval.lo());
  axis.push_back(interval.hi());
  std::sort(axis.begin(), axis.end());
  axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  if (auto w = nondecreasing_violation(f, interval, axis))
    throw error(errc::not_nondecreasing, "f" + format_tuple<S>(*w->operands.x) + " = " + to_string(w->lhs) + " > f" +
                                             format_tuple<S>(*w->operands.y) + " = " + to_string(w->rhs));
  NormalForm<S> form{mode, f.arity, interval, axis, {}};
  const std::size_t n = f.arity;
  form.phi_tables.assign(std::size_t{1} << n, std::vector<S>(axis.size()));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    for (std::size_t k = 0; k < axis.size(); ++k) {
      // e_S ∧ t is t on S and a elsewhere; e_{X∖S} ∨ t is t on S and b elsewhere.
      const S& rest = mode == NormalMode::maxitive ? interval.lo() : interval.hi();
      form.phi_tables[mask][k] = detail::sample<S>(f, two_level<S>(n, Subset(mask), axis[k], rest));
    }
  }
  return form;
}

/// ⋁_S φ_S(⋀_{i∈S} x_i) (empty meet = b), or ⋀_S φ_S(⋁_{i∈S} x_i) (empty join = a).
template <Scalar S>
S eval_normal_form(const NormalForm<S>& form, span_of<S> x) {
  if (x.size() != form.n) throw error(errc::dimension_mismatch, "tuple length differs from the form's n");
  for (const S& v : x) detail::axis_index(form.axis, v);
  const bool maxitive = form.mode == NormalMode::maxitive;
  std::optional<S> result;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << form.n); ++mask) {
    S level = maxitive ? form.interval.hi() : form.interval.lo();
    for (std::size_t i = 0; i < form.n; ++i)
      if ((mask >> i) & 1u) level = maxitive ? std::min(level, x[i]) : std::max(level, x[i]);
    const S& term = form.phi(Subset(mask), detail::axis_index(form.axis, level));
    if (!result) {
      result = term;
    } else {
      result = maxitive ? std::max(*result, term) : std::min(*result, term);
    }
  }
  return *result;
}

/// Chain view on the region of x: ⋁_i φ_{S↑(i)}(x_σ(i)) (maxitive) or
/// ⋀_i φ_{S↓(i)}(x_σ(i)) (minitive).
template <Scalar S>
S eval_chain(const NormalForm<S>& form, span_of<S> x) {
  if (x.size() != form.n) throw error(errc::dimension_mismatch, "tuple length differs from the form's n");
  const SortedView view = sorted_view<S>(x);
  const bool maxitive = form.mode == NormalMode::maxitive;
  std::optional<S> result;
  for (std::size_t i = 1; i <= form.n; ++i) {
    const std::size_t k = detail::axis_index(form.axis, x[view.perm[i - 1]]);
    const Subset chain = maxitive ? view.ascending_chain(i) : view.descending_chain(i);
    const S& term = form.phi(chain, k);
    if (!result) {
      result = term;
    } else {
      result = maxitive ? std::max(*result, term) : std::min(*result, term);
    }
  }
  return *result;
}

/// Why a fit declined, with a witness that violates the cited condition.
template <Scalar S>
struct Refusal {
  std::string condition;
  std::optional<Axiom> axiom;
  std::optional<Witness<S>> witness;
  std::string detail;
};

template <typename T, Scalar S>
using FitResult = std::variant<T, Refusal<S>>;

template <typename T, Scalar S>
bool refused(const FitResult<T, S>& r) {
  return std::holds_alternative<Refusal<S>>(r);
}

namespace detail {

/// Checks one axiom; a failure becomes a refusal. Inapplicable axioms count
/// as refusals too, since the fit cannot vouch for them.
template <Scalar S>
std::optional<Refusal<S>> require_axiom(Axiom axiom, const Function<S>& f, const Interval<S>& box,
                                        const std::vector<S>& axis, const TransformFn<S>* phi = nullptr) {
  try {
    AxiomReport<S> r = check_on_axis(axiom, f, box, axis, phi);
    if (r.passed()) return std::nullopt;
    return Refusal<S>{std::string(axiom_name(axiom)), axiom, r.witness, std::string(axiom_identity(axiom))};
  } catch (const error& e) {
    if (e.code() != errc::empty_applicable_set) throw;
    return Refusal<S>{std::string(axiom_name(axiom)), axiom, std::nullopt, e.what()};
  }
}

/// Compares f with a candidate g at every grid point.
template <Scalar S, typename G>
std::optional<Refusal<S>> regenerate(const Function<S>& f, const std::vector<S>& axis, G&& g, std::string what) {
  Grid<S> grid(f.arity, axis);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::vector<S> x = grid.point(i);
    const S expected = f(x);
    const S got = g(std::span<const S>(x));
    if (!near(expected, got)) {
      Operands<S> op;
      op.x = x;
      return Refusal<S>{"regeneration", std::nullopt, Witness<S>{op, expected, got, Relation::equal},
                        "f differs from " + what + " at " + format_tuple<S>(x)};
    }
  }
  return std::nullopt;
}

template <Scalar S>
SetFunction<S> indicator_values(const Function<S>& f, const S& height) {
  const std::size_t n = f.arity;
  std::vector<S> values(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < values.size(); ++mask) values[mask] = f(ray_point<S>(n, Subset(mask), height));
  return SetFunction<S>(n, std::move(values));
}

template <Scalar S>
Refusal<S> domain_refusal(std::string detail) {
  return Refusal<S>{"domain", std::nullopt, std::nullopt, std::move(detail)};
}

}  // namespace detail

/// v(S) := f(1_S) after checking comonotonic modularity, f(0)=0, sign
/// homogeneity on rays and, when [−1,1] ⊆ I, the dual shift.
template <Scalar S>
FitResult<SetFunction<S>, S> fit_signed_choquet(const Function<S>& f, const GridSpec<S>& grid) {
  const S zero(0), one(1);
  if (!grid.box.contains(zero) || !grid.box.contains(one))
    return detail::domain_refusal<S>("indicator points 1_S need 0 and 1 inside " + grid.box.str());
  const std::vector<S> axis = grid.axis();
  std::vector<Axiom> conditions{Axiom::comono_modular, Axiom::zero_at_origin, Axiom::sign_homog_rays};
  if (grid.box.contains(Interval<S>(-one, one))) conditions.push_back(Axiom::dual_shift);
  for (Axiom a : conditions)
    if (auto r = detail::require_axiom(a, f, grid.box, axis)) return *r;
  SetFunction<S> v = detail::indicator_values(f, one);
  if (auto r = detail::regenerate(f, axis, [&](span_of<S> x) { return choquet<S>(v, x); }, "the signed Choquet integral"))
    return *r;
  return v;
}

/// v(S) := f(1_S) after checking comonotonic modularity and full homogeneity
/// on rays; the box must be centered at 0 and contain [−1,1].
template <Scalar S>
FitResult<SetFunction<S>, S> fit_symmetric_choquet(const Function<S>& f, const GridSpec<S>& grid) {
  const S one(1);
  if (!grid.box.centered() || !grid.box.contains(Interval<S>(-one, one)))
    return detail::domain_refusal<S>("box " + grid.box.str() + " must be centered at 0 and contain [-1,1]");
  const std::vector<S> axis = grid.axis();
  for (Axiom a : {Axiom::comono_modular, Axiom::full_homog_rays})
    if (auto r = detail::require_axiom(a, f, grid.box, axis)) return *r;
  SetFunction<S> v = detail::indicator_values(f, one);
  if (auto r = detail::regenerate(f, axis, [&](span_of<S> x) { return symmetric_choquet<S>(v, x, Checking::off); },
                                  "the symmetric signed Choquet integral"))
    return *r;
  return v;
}

enum class Side { pos, neg };

inline std::string_view side_name(Side s) { return s == Side::pos ? "pos" : "neg"; }

inline Side parse_side(std::string_view s) {
  if (s == "pos") return Side::pos;
  if (s == "neg") return Side::neg;
  throw error(errc::parse_error, "side must be pos or neg, got '" + std::string(s) + "'");
}

template <Scalar S>
struct QuasiChoquetFit {
  SetFunction<S> v;
  TransformFn<S> phi;
  Side side;
  Subset pivot;  ///< S₀, the smallest subset with f(±1_{S₀}) ≠ 0
};

/// Signed quasi-Choquet extraction on a one-signed box. φ is pinned so that
/// φ(±1) = ±1; (v, φ) is unique only up to reciprocal scaling, so the check
/// is on the regenerated f.
template <Scalar S>
FitResult<QuasiChoquetFit<S>, S> fit_quasi_choquet(const Function<S>& f, const GridSpec<S>& grid, Side side) {
  const S zero(0), one(1);
  const S unit = side == Side::pos ? one : -one;
  const Interval<S>& box = grid.box;
  const bool one_signed = side == Side::pos ? box.lo() >= zero : box.hi() <= zero;
  if (!one_signed || !box.contains(zero) || !box.contains(unit))
    return detail::domain_refusal<S>("box " + box.str() + " must contain " +
                                     (side == Side::pos ? "[0,1] and no negatives" : "[-1,0] and no positives"));
  const std::size_t n = f.arity;
  const std::vector<S> axis = grid.axis();

  if (auto r = detail::require_axiom(Axiom::zero_at_origin, f, box, axis)) return *r;
  const Axiom invariance = side == Side::pos ? Axiom::invar_horiz_min_diff : Axiom::invar_horiz_max_diff;
  if (auto r = detail::require_axiom(invariance, f, box, axis)) return *r;

  std::optional<Subset> pivot;
  S pivot_value(0);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n) && !pivot; ++mask) {
    S value = f(ray_point<S>(n, Subset(mask), unit));
    if (value != zero) {
      pivot = Subset(mask);
      pivot_value = value;
    }
  }
  if (!pivot)
    return Refusal<S>{"nonzero indicator", std::nullopt, std::nullopt,
                      std::string("no S with f(") + (side == Side::pos ? "" : "-") + "1_S) != 0"};

  // φ(t) = sign(t)·f(t·1_{S₀}) / f(sign(t)·1_{S₀}).
  std::vector<S> values;
  for (const S& t : axis) {
    S y = f(ray_point<S>(n, *pivot, t)) / pivot_value;
    values.push_back(side == Side::pos ? y : -y);
  }
  for (std::size_t k = 1; k < axis.size(); ++k) {
    if (values[k] < values[k - 1]) {
      Operands<S> op;
      op.t = axis[k - 1];
      op.c = axis[k];
      op.subset = *pivot;
      return Refusal<S>{"phi nondecreasing", std::nullopt, Witness<S>{op, values[k - 1], values[k], Relation::less_equal},
                        "extracted phi decreases between " + to_string(axis[k - 1]) + " and " + to_string(axis[k])};
    }
  }
  PropertySet props{TransformProperty::nondecreasing, TransformProperty::vanishes_at_zero};
  TransformFn<S> phi = axis.size() >= 2 ? sample_transform<S>(axis, values, props) : TransformFn<S>::identity();

  if (auto r = detail::require_axiom(Axiom::quasi_homog_rays, f, box, axis, &phi)) return *r;

  SetFunction<S> v = side == Side::pos
                         ? detail::indicator_values(f, one)
                         : dual(SetFunction<S>(n, [&] {
                             std::vector<S> vd(std::size_t{1} << n);
                             for (std::uint32_t mask = 0; mask < vd.size(); ++mask)
                               vd[mask] = -f(ray_point<S>(n, Subset(mask), -one));
                             return vd;
                           }()));
  if (auto r = detail::regenerate(f, axis, [&](span_of<S> x) { return choquet<S>(v, phi.apply(x)); },
                                  "the signed quasi-Choquet integral"))
    return *r;
  return QuasiChoquetFit<S>{std::move(v), std::move(phi), side, *pivot};
}

/// μ-table S ↦ f(e_S) and diagonal φ(t) = f(t,…,t).
template <Scalar S>
struct QuasiSugenoForm {
  std::size_t n = 0;
  Interval<S> domain;    ///< J
  Interval<S> codomain;  ///< I
  std::vector<S> axis;
  std::vector<S> mu_values;
  std::vector<S> phi_values;  ///< aligned with axis

  const S& phi(const S& t) const { return phi_values[detail::axis_index(axis, t)]; }
};

/// ⋁_S f(e_S) ∧ ⋀_{i∈S} φ(x_i); the S = ∅ term is f(e_∅).
template <Scalar S>
S eval_quasi_sugeno_form(const QuasiSugenoForm<S>& form, span_of<S> x) {
  if (x.size() != form.n) throw error(errc::dimension_mismatch, "tuple length differs from the form's n");
  std::vector<S> mapped(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) mapped[i] = form.phi(x[i]);
  S best = form.mu_values[0];
  for (std::uint32_t mask = 1; mask < form.mu_values.size(); ++mask) {
    S term = form.mu_values[mask];
    for (std::size_t i = 0; i < form.n; ++i)
      if ((mask >> i) & 1u) term = std::min(term, mapped[i]);
    best = std::max(best, term);
  }
  return best;
}

/// S* maximizes f(e_S) ∧ ⋀_{i∈S} φ(x_i) (first in mask order); T collects the
/// j with φ(x_j) at or below that maximum.
template <Scalar S>
struct FactorizationDiagnostics {
  Subset s_star;
  S value;
  Subset threshold_set;
};

template <Scalar S>
FactorizationDiagnostics<S> quasi_sugeno_diagnostics(const QuasiSugenoForm<S>& form, span_of<S> x) {
  std::vector<S> mapped(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) mapped[i] = form.phi(x[i]);
  std::uint32_t best_mask = 0;
  S best = form.mu_values[0];
  for (std::uint32_t mask = 1; mask < form.mu_values.size(); ++mask) {
    S term = form.mu_values[mask];
    for (std::size_t i = 0; i < form.n; ++i)
      if ((mask >> i) & 1u) term = std::min(term, mapped[i]);
    if (term > best) {
      best = term;
      best_mask = mask;
    }
  }
  std::uint32_t t_mask = 0;
  for (std::size_t j = 0; j < form.n; ++j)
    if (mapped[j] <= best) t_mask |= std::uint32_t{1} << j;
  return {Subset(best_mask), best, Subset(t_mask)};
}

/// Quasi-Sugeno factorization of f: Jⁿ → I after checking nondecreasing
/// monotonicity and both weak homogeneity conditions.
template <Scalar S>
FitResult<QuasiSugenoForm<S>, S> factorize_quasi_sugeno(const Function<S>& f, const GridSpec<S>& grid,
                                                        const Interval<S>& codomain) {
  const std::size_t n = f.arity;
  const std::vector<S> axis = grid.axis();
  for (Axiom a : {Axiom::nondecreasing, Axiom::weak_max_homog, Axiom::weak_min_homog})
    if (auto r = detail::require_axiom(a, f, grid.box, axis)) return *r;

  QuasiSugenoForm<S> form{n, grid.box, codomain, axis, {}, {}};
  form.mu_values.resize(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < form.mu_values.size(); ++mask)
    form.mu_values[mask] = f(two_level<S>(n, Subset(mask), grid.box.hi(), grid.box.lo()));
  for (const S& t : axis) form.phi_values.push_back(f(constant_tuple<S>(n, t)));

  Grid<S> points(n, axis);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::vector<S> x = points.point(i);
    const S value = f(x);
    if (!codomain.contains(value)) {
      Operands<S> op;
      op.x = x;
      return Refusal<S>{"codomain", std::nullopt, Witness<S>{op, value, value, Relation::equal},
                        "f" + format_tuple<S>(x) + " = " + to_string(value) + " lies outside " + codomain.str()};
    }
  }
  if (auto r = detail::regenerate(f, axis, [&](span_of<S> x) { return eval_quasi_sugeno_form(form, x); },
                                  "the max-min factorization"))
    return *r;
  return form;
}

}  // namespace comod

#endif  // COMOD_DECOMPOSE_HPP
