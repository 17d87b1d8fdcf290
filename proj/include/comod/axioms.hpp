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
 * \file comod/axioms.hpp
 *
 * \brief Black-box property auditor.
 *
 * `check` enumerates every operand combination an axiom quantifies over on a
 * finite grid Aⁿ ⊂ Iⁿ and reports the first violation in enumeration order,
 * which is lexicographic in the operands. Operands whose derived points fall
 * outside the box are skipped and counted, never clamped. A check with no
 * applicable combination raises EmptyApplicableSet instead of passing.
 *
 * A pass means "holds on this grid". It is a proof only where the function is
 * known to be affine on each permutation region and the identity is additive.
 */

#ifndef COMOD_AXIOMS_HPP
#define COMOD_AXIOMS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <comod/error.hpp>
#include <comod/grid.hpp>
#include <comod/scalar.hpp>
#include <comod/set_function.hpp>
#include <comod/transform.hpp>
#include <comod/tuple.hpp>

namespace comod {

enum class Axiom {
  modular,
  comono_modular,
  comono_additive,
  horiz_min_additive,
  horiz_max_additive,
  horiz_median_additive,
  invar_horiz_min_diff,
  invar_horiz_max_diff,
  maxitive,
  minitive,
  comono_maxitive,
  comono_minitive,
  pos_homog_rays,
  sign_homog_rays,
  full_homog_rays,
  dual_shift,
  quasi_homog_rays,
  quasi_full_homog_rays,
  quasi_max_homog,
  quasi_min_homog,
  weak_max_homog,
  weak_min_homog,
  nondecreasing,
  odd,
  idempotent,
  plus_split,
  zero_at_origin,
};

inline constexpr std::array all_axioms{
    Axiom::modular,          Axiom::comono_modular,        Axiom::comono_additive,      Axiom::horiz_min_additive,
    Axiom::horiz_max_additive, Axiom::horiz_median_additive, Axiom::invar_horiz_min_diff, Axiom::invar_horiz_max_diff,
    Axiom::maxitive,         Axiom::minitive,              Axiom::comono_maxitive,      Axiom::comono_minitive,
    Axiom::pos_homog_rays,   Axiom::sign_homog_rays,       Axiom::full_homog_rays,      Axiom::dual_shift,
    Axiom::quasi_homog_rays, Axiom::quasi_full_homog_rays, Axiom::quasi_max_homog,      Axiom::quasi_min_homog,
    Axiom::weak_max_homog,   Axiom::weak_min_homog,        Axiom::nondecreasing,        Axiom::odd,
    Axiom::idempotent,       Axiom::plus_split,            Axiom::zero_at_origin,
};

inline std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::modular: return "modular";
    case Axiom::comono_modular: return "comono_modular";
    case Axiom::comono_additive: return "comono_additive";
    case Axiom::horiz_min_additive: return "horiz_min_additive";
    case Axiom::horiz_max_additive: return "horiz_max_additive";
    case Axiom::horiz_median_additive: return "horiz_median_additive";
    case Axiom::invar_horiz_min_diff: return "invar_horiz_min_diff";
    case Axiom::invar_horiz_max_diff: return "invar_horiz_max_diff";
    case Axiom::maxitive: return "maxitive";
    case Axiom::minitive: return "minitive";
    case Axiom::comono_maxitive: return "comono_maxitive";
    case Axiom::comono_minitive: return "comono_minitive";
    case Axiom::pos_homog_rays: return "pos_homog_rays";
    case Axiom::sign_homog_rays: return "sign_homog_rays";
    case Axiom::full_homog_rays: return "full_homog_rays";
    case Axiom::dual_shift: return "dual_shift";
    case Axiom::quasi_homog_rays: return "quasi_homog_rays";
    case Axiom::quasi_full_homog_rays: return "quasi_full_homog_rays";
    case Axiom::quasi_max_homog: return "quasi_max_homog";
    case Axiom::quasi_min_homog: return "quasi_min_homog";
    case Axiom::weak_max_homog: return "weak_max_homog";
    case Axiom::weak_min_homog: return "weak_min_homog";
    case Axiom::nondecreasing: return "nondecreasing";
    case Axiom::odd: return "odd";
    case Axiom::idempotent: return "idempotent";
    case Axiom::plus_split: return "plus_split";
    case Axiom::zero_at_origin: return "zero_at_origin";
  }
  return "?";
}

inline Axiom parse_axiom(std::string_view name) {
  for (Axiom a : all_axioms)
    if (axiom_name(a) == name) return a;
  throw error(errc::parse_error, "unknown axiom '" + std::string(name) + "'");
}

/// The identity each axiom asserts, in the notation used by reports.
inline std::string_view axiom_identity(Axiom a) {
  switch (a) {
    case Axiom::modular: return "f(x)+f(x')=f(x∧x')+f(x∨x') for all x,x'";
    case Axiom::comono_modular: return "f(x)+f(x')=f(x∧x')+f(x∨x') for comonotonic x,x'";
    case Axiom::comono_additive: return "f(x+x')=f(x)+f(x') for comonotonic x,x' with x+x' in the box";
    case Axiom::horiz_min_additive: return "f(x)=f(x∧c)+f(x-x∧c)";
    case Axiom::horiz_max_additive: return "f(x)=f(x∨c)+f(x-x∨c)";
    case Axiom::horiz_median_additive: return "f(x)=f(med(-c,x,c))+f(x-x∧c)+f(x-x∨(-c)), c>=0";
    case Axiom::invar_horiz_min_diff: return "f(x)-f(x∧c)=f([x]_c)-f([x]_c∧c) on the nonnegative part";
    case Axiom::invar_horiz_max_diff: return "f(x)-f(x∨c)=f([x]^c)-f([x]^c∨c) on the nonpositive part";
    case Axiom::maxitive: return "f(x∨x')=f(x)∨f(x') for all x,x'";
    case Axiom::minitive: return "f(x∧x')=f(x)∧f(x') for all x,x'";
    case Axiom::comono_maxitive: return "f(x∨x')=f(x)∨f(x') for comonotonic x,x'";
    case Axiom::comono_minitive: return "f(x∧x')=f(x)∧f(x') for comonotonic x,x'";
    case Axiom::pos_homog_rays: return "f(c·t·1_S)=c·f(t·1_S) for c>0";
    case Axiom::sign_homog_rays: return "f(t·1_S)=sign(t)·t·f(sign(t)·1_S)";
    case Axiom::full_homog_rays: return "f(t·1_S)=t·f(1_S)";
    case Axiom::dual_shift: return "f(1_{X\\S})=f(1)+f(-1_S)";
    case Axiom::quasi_homog_rays: return "f(t·1_S)=sign(t)·φ(t)·f(sign(t)·1_S)";
    case Axiom::quasi_full_homog_rays: return "f(t·1_S)=φ(t)·f(1_S)";
    case Axiom::quasi_max_homog: return "f(r∨x)=φ(r)∨f(x)";
    case Axiom::quasi_min_homog: return "f(r∧x)=φ(r)∧f(x)";
    case Axiom::weak_max_homog: return "f(t∨e_S)=f(t,...,t)∨f(e_S)";
    case Axiom::weak_min_homog: return "f(t∧e_S)=f(t,...,t)∧f(e_S)";
    case Axiom::nondecreasing: return "x<=x' implies f(x)<=f(x')";
    case Axiom::odd: return "f(-x)=-f(x)";
    case Axiom::idempotent: return "f(t,...,t)=t";
    case Axiom::plus_split: return "f(x)+f(0)=f(x+)+f(-x-)";
    case Axiom::zero_at_origin: return "f(0)=0";
  }
  return "?";
}

constexpr bool requires_transform(Axiom a) {
  return a == Axiom::quasi_homog_rays || a == Axiom::quasi_full_homog_rays || a == Axiom::quasi_max_homog ||
         a == Axiom::quasi_min_homog;
}

/// Operands of one instance of an axiom's identity.
template <Scalar S>
struct Operands {
  std::optional<std::vector<S>> x;
  std::optional<std::vector<S>> y;  ///< x'
  std::optional<S> t;               ///< level, ray height or r
  std::optional<S> c;               ///< cut level or scale factor
  std::optional<Subset> subset;
};

enum class Relation { equal, less_equal };

template <Scalar S>
struct Witness {
  Operands<S> operands;
  S lhs;
  S rhs;
  Relation relation = Relation::equal;
};

enum class Verdict { pass, fail, inapplicable };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

template <Scalar S>
struct AxiomReport {
  Axiom axiom;
  Verdict verdict = Verdict::pass;
  std::optional<Witness<S>> witness;
  std::size_t tested = 0;
  std::size_t skipped = 0;

  bool passed() const noexcept { return verdict == Verdict::pass; }
};

/// Everything an identity needs besides f and its operands.
template <Scalar S>
struct AuditContext {
  std::size_t n;
  Interval<S> box;
  const TransformFn<S>* transform = nullptr;
  Tolerance tolerance{};
};

namespace detail {

/// Thrown by the box guard when an identity would evaluate f outside Iⁿ.
struct outside_box {};

template <Scalar S, typename Eval>
class Guarded {
 public:
  Guarded(Eval& f, const Interval<S>& box) : f_(f), box_(box) {}

  S operator()(span_of<S> x) {
    for (const S& v : x)
      if (!box_.contains(v)) throw outside_box{};
    return f_(x);
  }

 private:
  Eval& f_;
  const Interval<S>& box_;
};

template <Scalar S>
S sign_scalar(const S& t) {
  return S(static_cast<long>(sign_of(t)));
}

template <Scalar S>
S apply_transform(const AuditContext<S>& ctx, const S& t) {
  if (!ctx.transform) throw error(errc::missing_transform, "quasi- axioms need a transform");
  return (*ctx.transform)(t);
}

/// Both sides of one identity instance. Evaluations outside the box throw
/// `outside_box`.
template <Scalar S, typename Eval>
Witness<S> evaluate_identity(Axiom axiom, Eval& raw, const Operands<S>& op, const AuditContext<S>& ctx) {
  Guarded<S, Eval> f(raw, ctx.box);
  const std::size_t n = ctx.n;
  Witness<S> w{op, S(0), S(0), Relation::equal};
  auto sides = [&](S lhs, S rhs) {
    w.lhs = std::move(lhs);
    w.rhs = std::move(rhs);
  };
  const auto& x = op.x;
  const auto& y = op.y;
  switch (axiom) {
    case Axiom::modular:
    case Axiom::comono_modular:
      sides(f(*x) + f(*y), f(meet<S>(*x, *y)) + f(join<S>(*x, *y)));
      break;
    case Axiom::comono_additive:
      sides(f(add<S>(*x, *y)), f(*x) + f(*y));
      break;
    case Axiom::horiz_min_additive: {
      auto cut = meet_const<S>(*x, *op.c);
      sides(f(*x), f(cut) + f(subtract<S>(*x, cut)));
      break;
    }
    case Axiom::horiz_max_additive: {
      auto cut = join_const<S>(*x, *op.c);
      sides(f(*x), f(cut) + f(subtract<S>(*x, cut)));
      break;
    }
    case Axiom::horiz_median_additive: {
      const S& c = *op.c;
      sides(f(*x), f(median_clamp<S>(*x, c)) + f(subtract<S>(*x, meet_const<S>(*x, c))) +
                       f(subtract<S>(*x, join_const<S>(*x, -c))));
      break;
    }
    case Axiom::invar_horiz_min_diff: {
      const S& c = *op.c;
      auto br = bracket<S>(*x, c, BracketMode::low);
      sides(f(*x) - f(meet_const<S>(*x, c)), f(br) - f(meet_const<S>(br, c)));
      break;
    }
    case Axiom::invar_horiz_max_diff: {
      const S& c = *op.c;
      auto br = bracket<S>(*x, c, BracketMode::high);
      sides(f(*x) - f(join_const<S>(*x, c)), f(br) - f(join_const<S>(br, c)));
      break;
    }
    case Axiom::maxitive:
    case Axiom::comono_maxitive:
      sides(f(join<S>(*x, *y)), std::max(f(*x), f(*y)));
      break;
    case Axiom::minitive:
    case Axiom::comono_minitive:
      sides(f(meet<S>(*x, *y)), std::min(f(*x), f(*y)));
      break;
    case Axiom::pos_homog_rays: {
      const S& t = *op.t;
      const S& c = *op.c;
      sides(f(ray_point<S>(n, *op.subset, c * t)), c * f(ray_point<S>(n, *op.subset, t)));
      break;
    }
    case Axiom::sign_homog_rays: {
      const S& t = *op.t;
      const S sg = sign_scalar(t);
      sides(f(ray_point<S>(n, *op.subset, t)), sg * t * f(ray_point<S>(n, *op.subset, sg)));
      break;
    }
    case Axiom::full_homog_rays: {
      const S& t = *op.t;
      sides(f(ray_point<S>(n, *op.subset, t)), t * f(ray_point<S>(n, *op.subset, S(1))));
      break;
    }
    case Axiom::dual_shift: {
      const Subset s = *op.subset;
      sides(f(ray_point<S>(n, s.complement(n), S(1))),
            f(constant_tuple<S>(n, S(1))) + f(ray_point<S>(n, s, S(-1))));
      break;
    }
    case Axiom::quasi_homog_rays: {
      const S& t = *op.t;
      const S sg = sign_scalar(t);
      sides(f(ray_point<S>(n, *op.subset, t)), sg * apply_transform(ctx, t) * f(ray_point<S>(n, *op.subset, sg)));
      break;
    }
    case Axiom::quasi_full_homog_rays: {
      const S& t = *op.t;
      sides(f(ray_point<S>(n, *op.subset, t)), apply_transform(ctx, t) * f(ray_point<S>(n, *op.subset, S(1))));
      break;
    }
    case Axiom::quasi_max_homog:
      sides(f(join_const<S>(*x, *op.t)), std::max(apply_transform(ctx, *op.t), f(*x)));
      break;
    case Axiom::quasi_min_homog:
      sides(f(meet_const<S>(*x, *op.t)), std::min(apply_transform(ctx, *op.t), f(*x)));
      break;
    case Axiom::weak_max_homog: {
      const S& t = *op.t;
      auto e = two_level<S>(n, *op.subset, ctx.box.hi(), ctx.box.lo());
      sides(f(join_const<S>(e, t)), std::max(f(constant_tuple<S>(n, t)), f(e)));
      break;
    }
    case Axiom::weak_min_homog: {
      const S& t = *op.t;
      auto e = two_level<S>(n, *op.subset, ctx.box.hi(), ctx.box.lo());
      sides(f(meet_const<S>(e, t)), std::min(f(constant_tuple<S>(n, t)), f(e)));
      break;
    }
    case Axiom::nondecreasing:
      sides(f(*x), f(*y));
      w.relation = Relation::less_equal;
      break;
    case Axiom::odd:
      sides(f(negate<S>(*x)), -f(*x));
      break;
    case Axiom::idempotent:
      sides(f(constant_tuple<S>(n, *op.t)), *op.t);
      break;
    case Axiom::plus_split:
      sides(f(*x) + f(constant_tuple<S>(n, S(0))),
            f(positive_part<S>(*x)) + f(negate<S>(negative_part<S>(*x))));
      break;
    case Axiom::zero_at_origin:
      sides(f(constant_tuple<S>(n, S(0))), S(0));
      break;
  }
  return w;
}

template <Scalar S>
bool holds(const Witness<S>& w, Tolerance tol) {
  return w.relation == Relation::equal ? near(w.lhs, w.rhs, tol) : less_eq(w.lhs, w.rhs, tol);
}

template <Scalar S>
std::vector<Subset> all_subsets(std::size_t n) {
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) out.emplace_back(mask);
  return out;
}

/// Positive scale factors c with c·t landing on the axis (t ≠ 0), or the
/// positive magnitudes on the axis (t = 0).
template <Scalar S>
std::vector<S> scale_factors(const std::vector<S>& axis, const S& t) {
  std::set<S> out;
  const S zero(0);
  for (const S& a : axis) {
    if (a == zero) continue;
    if (t == zero) {
      out.insert(a < zero ? -a : a);
    } else {
      S c = a / t;
      if (c > zero) out.insert(c);
    }
  }
  return {out.begin(), out.end()};
}

template <Scalar S>
class Enumerator {
 public:
  Enumerator(Axiom axiom, CachedFunction<S>& f, const AuditContext<S>& ctx) : axiom_(axiom), f_(f), ctx_(ctx) {
    report_.axiom = axiom;
  }

  /// Evaluates one instance; returns false once a violation is recorded.
  bool consider(Operands<S> op) {
    try {
      Witness<S> w = evaluate_identity(axiom_, f_, op, ctx_);
      ++report_.tested;
      if (!holds(w, ctx_.tolerance)) {
        report_.verdict = Verdict::fail;
        report_.witness = std::move(w);
        return false;
      }
    } catch (const outside_box&) {
      ++report_.skipped;
    }
    return true;
  }

  AxiomReport<S> finish() {
    if (report_.tested == 0)
      throw error(errc::empty_applicable_set,
                  std::string(axiom_name(axiom_)) + ": no operand combination on this grid satisfies the side "
                  "conditions (" + std::to_string(report_.skipped) + " skipped)");
    return report_;
  }

  AxiomReport<S>& report() noexcept { return report_; }

 private:
  Axiom axiom_;
  CachedFunction<S>& f_;
  const AuditContext<S>& ctx_;
  AxiomReport<S> report_;
};

/// Pair identities on grid indices; meets and joins of grid points stay on
/// the grid, so the cached table answers every evaluation.
template <Scalar S>
AxiomReport<S> check_pairs(Axiom axiom, CachedFunction<S>& f, const AuditContext<S>& ctx) {
  const bool comonotonic_only =
      axiom == Axiom::comono_modular || axiom == Axiom::comono_maxitive || axiom == Axiom::comono_minitive;
  const std::size_t count = f.grid().size();
  Enumerator<S> e(axiom, f, ctx);
  auto& report = e.report();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (comonotonic_only && !f.comonotonic(i, j)) continue;
      const std::size_t lo = f.meet_index(i, j);
      const std::size_t hi = f.join_index(i, j);
      bool ok = true;
      switch (axiom) {
        case Axiom::modular:
        case Axiom::comono_modular:
          ok = near(f.at(i) + f.at(j), f.at(lo) + f.at(hi), ctx.tolerance);
          break;
        case Axiom::maxitive:
        case Axiom::comono_maxitive:
          ok = near(f.at(hi), std::max(f.at(i), f.at(j)), ctx.tolerance);
          break;
        default:
          ok = near(f.at(lo), std::min(f.at(i), f.at(j)), ctx.tolerance);
          break;
      }
      ++report.tested;
      if (!ok) {
        --report.tested;  // consider() recounts this instance
        e.consider(Operands<S>{f.grid().point(i), f.grid().point(j), {}, {}, {}});
        return e.finish();
      }
    }
  }
  return e.finish();
}

}  // namespace detail

/// Audits one axiom on the grid axisⁿ ⊂ boxⁿ.
template <Scalar S>
AxiomReport<S> check_on_axis(Axiom axiom, const Function<S>& fn, const Interval<S>& box, const std::vector<S>& axis,
                             const TransformFn<S>* transform = nullptr, Tolerance tol = {}) {
  if (requires_transform(axiom) && !transform)
    throw error(errc::missing_transform, std::string(axiom_name(axiom)) + " needs a transform φ");
  for (const S& a : axis)
    if (!box.contains(a)) throw error(errc::bad_grid, "axis point " + to_string(a) + " outside " + box.str());
  const std::size_t n = fn.arity;
  Grid<S> grid(n, axis);
  CachedFunction<S> f(fn, grid);
  AuditContext<S> ctx{n, box, transform, tol};

  switch (axiom) {
    case Axiom::modular:
    case Axiom::comono_modular:
    case Axiom::maxitive:
    case Axiom::minitive:
    case Axiom::comono_maxitive:
    case Axiom::comono_minitive:
      return detail::check_pairs(axiom, f, ctx);
    default:
      break;
  }

  detail::Enumerator<S> e(axiom, f, ctx);
  const S zero(0);
  const auto subsets = detail::all_subsets<S>(n);
  auto each_point = [&](auto&& body) {
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (!body(grid.point(i))) return;
  };

  switch (axiom) {
    case Axiom::comono_additive:
      for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i; j < grid.size(); ++j) {
          if (!f.comonotonic(i, j)) continue;
          if (!e.consider({grid.point(i), grid.point(j), {}, {}, {}})) return e.finish();
        }
      break;
    case Axiom::horiz_min_additive:
    case Axiom::horiz_max_additive:
      each_point([&](std::vector<S> x) {
        for (const S& c : axis)
          if (!e.consider({x, {}, {}, c, {}})) return false;
        return true;
      });
      break;
    case Axiom::horiz_median_additive:
      each_point([&](std::vector<S> x) {
        for (const S& c : axis)
          if (c >= zero && !e.consider({x, {}, {}, c, {}})) return false;
        return true;
      });
      break;
    case Axiom::invar_horiz_min_diff:
      each_point([&](std::vector<S> x) {
        if (std::any_of(x.begin(), x.end(), [&](const S& v) { return v < zero; })) return true;
        for (const S& c : axis)
          if (c >= zero && !e.consider({x, {}, {}, c, {}})) return false;
        return true;
      });
      break;
    case Axiom::invar_horiz_max_diff:
      each_point([&](std::vector<S> x) {
        if (std::any_of(x.begin(), x.end(), [&](const S& v) { return v > zero; })) return true;
        for (const S& c : axis)
          if (c <= zero && !e.consider({x, {}, {}, c, {}})) return false;
        return true;
      });
      break;
    case Axiom::pos_homog_rays:
      for (const S& t : axis)
        for (Subset s : subsets)
          for (const S& c : detail::scale_factors(axis, t))
            if (!e.consider({{}, {}, t, c, s})) return e.finish();
      break;
    case Axiom::sign_homog_rays:
    case Axiom::full_homog_rays:
    case Axiom::quasi_homog_rays:
    case Axiom::quasi_full_homog_rays:
    case Axiom::weak_max_homog:
    case Axiom::weak_min_homog:
      for (const S& t : axis)
        for (Subset s : subsets)
          if (!e.consider({{}, {}, t, {}, s})) return e.finish();
      break;
    case Axiom::dual_shift:
      for (Subset s : subsets)
        if (!e.consider({{}, {}, {}, {}, s})) return e.finish();
      break;
    case Axiom::quasi_max_homog:
    case Axiom::quasi_min_homog:
      each_point([&](std::vector<S> x) {
        for (const S& r : axis)
          if (!e.consider({x, {}, r, {}, {}})) return false;
        return true;
      });
      break;
    case Axiom::nondecreasing:
      for (std::size_t i = 0; i < grid.size(); ++i) {
        auto digits = grid.digits(i);
        for (std::size_t k = 0; k < n; ++k) {
          if (digits[k] + 1 >= grid.axis_size()) continue;
          auto up = digits;
          ++up[k];
          if (!e.consider({grid.point(i), grid.point(grid.index_of(up)), {}, {}, {}})) return e.finish();
        }
      }
      break;
    case Axiom::odd:
    case Axiom::plus_split:
      each_point([&](std::vector<S> x) { return e.consider({std::move(x), {}, {}, {}, {}}); });
      break;
    case Axiom::idempotent:
      for (const S& t : axis)
        if (!e.consider({{}, {}, t, {}, {}})) return e.finish();
      break;
    case Axiom::zero_at_origin:
      e.consider({});
      break;
    default:
      break;
  }
  return e.finish();
}

template <Scalar S>
AxiomReport<S> check(Axiom axiom, const Function<S>& f, const GridSpec<S>& grid, const TransformFn<S>* transform = nullptr,
                     Tolerance tol = {}) {
  return check_on_axis(axiom, f, grid.box, grid.axis(), transform, tol);
}

/// Re-evaluates a witness directly through f (no cache). Used to confirm that
/// a reported violation is genuine.
template <Scalar S>
Witness<S> replay(Axiom axiom, const Function<S>& f, const Operands<S>& operands, const Interval<S>& box,
                  const TransformFn<S>* transform = nullptr) {
  AuditContext<S> ctx{f.arity, box, transform, {}};
  auto direct = [&f](span_of<S> x) { return f(x); };
  try {
    return detail::evaluate_identity(axiom, direct, operands, ctx);
  } catch (const detail::outside_box&) {
    throw error(errc::out_of_box, "witness operands leave the box");
  }
}

template <Scalar S>
bool witness_violates(Axiom axiom, const Function<S>& f, const Witness<S>& w, const Interval<S>& box,
                      const TransformFn<S>* transform = nullptr, Tolerance tol = {}) {
  Witness<S> again = replay(axiom, f, w.operands, box, transform);
  return !detail::holds(again, tol) && near(again.lhs, w.lhs, tol) && near(again.rhs, w.rhs, tol);
}

/// Supplementary random search: draws `rounds` random axes of `points` seeded
/// rationals inside the box (plus the special points) and checks each.
template <Scalar S>
AxiomReport<S> check_random(Axiom axiom, const Function<S>& f, const Interval<S>& box, std::size_t points,
                            std::size_t rounds, std::uint64_t seed, const TransformFn<S>* transform = nullptr,
                            Tolerance tol = {}) {
  std::mt19937_64 rng(seed);
  AxiomReport<S> total;
  total.axiom = axiom;
  for (std::size_t r = 0; r < rounds; ++r) {
    GridSpec<S> spec(box, 2);
    std::vector<S> axis = spec.axis();
    for (std::size_t p = 0; p < points; ++p) {
      const long den = 1 + static_cast<long>(rng() % 16);
      const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(den + 1));
      axis.push_back(box.lo() + (box.hi() - box.lo()) * ratio<S>(num, den));
    }
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end(), [](const S& a, const S& b) { return near(a, b); }), axis.end());
    AxiomReport<S> one = check_on_axis(axiom, f, box, axis, transform, tol);
    total.tested += one.tested;
    total.skipped += one.skipped;
    if (!one.passed()) {
      total.verdict = one.verdict;
      total.witness = one.witness;
      return total;
    }
  }
  return total;
}

/// A characterization whose hypotheses an audit can satisfy or refute.
struct Classification {
  std::string label;
  std::string status;  ///< "satisfied", "refuted" or "undetermined"
  std::string note;
};

template <Scalar S>
struct AuditResult {
  std::vector<AxiomReport<S>> reports;
  std::vector<Classification> summary;

  const AxiomReport<S>* find(Axiom a) const {
    for (const auto& r : reports)
      if (r.axiom == a) return &r;
    return nullptr;
  }

  bool all_passed() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict != Verdict::fail; });
  }
};

namespace detail {

template <Scalar S>
Classification classify_conjunction(const AuditResult<S>& audit, std::string label,
                                    const std::vector<Axiom>& hypotheses, std::string note) {
  bool refuted = false, undetermined = false;
  for (Axiom a : hypotheses) {
    const auto* r = audit.find(a);
    if (!r || r->verdict == Verdict::inapplicable) {
      undetermined = true;
    } else if (r->verdict == Verdict::fail) {
      refuted = true;
    }
  }
  std::string status = refuted ? "refuted" : undetermined ? "undetermined" : "satisfied";
  return {std::move(label), std::move(status), std::move(note)};
}

template <Scalar S>
std::vector<Classification> classify(const AuditResult<S>& audit, const Interval<S>& box) {
  std::vector<Classification> out;
  const S one(1);
  const bool has_unit_box = box.contains(Interval<S>(-one, one));

  // Comonotonic modularity: direct evidence, or derived from maxitive/minitive.
  {
    const auto* mod = audit.find(Axiom::comono_modular);
    const auto* mx = audit.find(Axiom::comono_maxitive);
    const auto* mn = audit.find(Axiom::comono_minitive);
    auto verdict_of = [](const AxiomReport<S>* r) { return r ? r->verdict : Verdict::inapplicable; };
    std::string status = "undetermined";
    std::string note = "comonotonic modularity";
    if (verdict_of(mod) == Verdict::pass) {
      status = "satisfied";
    } else if (verdict_of(mod) == Verdict::fail) {
      status = "refuted";
    } else if ((verdict_of(mx) == Verdict::pass && verdict_of(mn) == Verdict::fail) ||
               (verdict_of(mx) == Verdict::fail && verdict_of(mn) == Verdict::pass)) {
      status = "refuted";
      note = "comonotonically maxitive xor minitive rules out comonotonic modularity";
    } else if (verdict_of(mx) == Verdict::pass && verdict_of(mn) == Verdict::pass) {
      status = "satisfied";
      note = "comonotonic maxitivity and minitivity imply comonotonic modularity";
    }
    out.push_back({status == "refuted" ? "outside comonotonically modular class" : "comonotonically modular", status, note});
  }

  std::vector<Axiom> signed_choquet{Axiom::comono_modular, Axiom::zero_at_origin, Axiom::sign_homog_rays};
  if (has_unit_box) signed_choquet.push_back(Axiom::dual_shift);
  out.push_back(classify_conjunction(audit, "signed Choquet-consistent", signed_choquet,
                                     "comonotonic modularity, f(0)=0, sign homogeneity on rays" +
                                         std::string(has_unit_box ? ", dual shift" : "")));
  out.push_back(classify_conjunction(audit, "signed Choquet-consistent (additive route)",
                                     {Axiom::comono_additive, Axiom::pos_homog_rays},
                                     "comonotonic additivity and positive homogeneity on rays"));
  out.push_back(classify_conjunction(audit, "symmetric signed Choquet-consistent",
                                     {Axiom::comono_modular, Axiom::full_homog_rays},
                                     "comonotonic modularity and full homogeneity on rays"));
  out.push_back(classify_conjunction(audit, "symmetric signed Choquet-consistent (median route)",
                                     {Axiom::horiz_median_additive, Axiom::full_homog_rays},
                                     "horizontal median-additivity and full homogeneity on rays"));
  out.push_back(classify_conjunction(audit, "signed quasi-Choquet-consistent",
                                     {Axiom::comono_modular, Axiom::zero_at_origin, Axiom::quasi_homog_rays},
                                     "comonotonic modularity, f(0)=0, quasi-homogeneity on rays"));
  out.push_back(classify_conjunction(audit, "symmetric signed quasi-Choquet-consistent",
                                     {Axiom::comono_modular, Axiom::zero_at_origin, Axiom::quasi_full_homog_rays},
                                     "comonotonic modularity, f(0)=0, odd quasi-homogeneity on rays"));
  auto quasi_sugeno = classify_conjunction(audit, "quasi-Sugeno-consistent",
                                           {Axiom::comono_maxitive, Axiom::comono_minitive},
                                           "comonotonic maxitivity and minitivity");
  auto quasi_sugeno_weak = classify_conjunction(audit, "quasi-Sugeno-consistent (weak homogeneity route)",
                                                {Axiom::nondecreasing, Axiom::weak_max_homog, Axiom::weak_min_homog},
                                                "nondecreasing with weak max- and min-homogeneity");
  out.push_back(quasi_sugeno);
  out.push_back(quasi_sugeno_weak);
  out.push_back(classify_conjunction(audit, "Sugeno-consistent",
                                     {Axiom::comono_maxitive, Axiom::comono_minitive, Axiom::idempotent},
                                     "quasi-Sugeno conditions plus idempotency"));
  return out;
}

}  // namespace detail

/// Runs a battery of axioms. Axioms with no applicable operand combination on
/// this grid are reported as `inapplicable`.
template <Scalar S>
AuditResult<S> audit(const Function<S>& f, const GridSpec<S>& grid, const std::vector<Axiom>& axioms,
                     const TransformFn<S>* transform = nullptr, Tolerance tol = {}) {
  AuditResult<S> result;
  const std::vector<S> axis = grid.axis();
  for (Axiom a : axioms) {
    try {
      result.reports.push_back(check_on_axis(a, f, grid.box, axis, transform, tol));
    } catch (const error& e) {
      if (e.code() != errc::empty_applicable_set) throw;
      AxiomReport<S> r;
      r.axiom = a;
      r.verdict = Verdict::inapplicable;
      result.reports.push_back(r);
    }
  }
  result.summary = detail::classify(result, grid.box);
  return result;
}

}  // namespace comod

#endif  // COMOD_AXIOMS_HPP
