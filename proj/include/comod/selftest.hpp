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
 * \file comod/selftest.hpp
 *
 * \brief The acceptance battery: seeded, exact, one result per criterion.
 *
 * Results carry wall-clock time separately from the verdict; the JSON form
 * omits timings so repeated runs are byte-identical.
 */

#ifndef COMOD_SELFTEST_HPP
#define COMOD_SELFTEST_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <comod/axioms.hpp>
#include <comod/decompose.hpp>
#include <comod/grid.hpp>
#include <comod/integrals.hpp>
#include <comod/json_io.hpp>
#include <comod/random.hpp>
#include <comod/rational.hpp>
#include <comod/set_function.hpp>

namespace comod {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;

  bool within_time() const noexcept { return seconds < limit_seconds; }
  bool passed() const noexcept { return correct && within_time(); }
};

namespace selftest {

using Q = Rational;

/// Seeds are fixed so every run builds the same tables.
inline constexpr std::uint64_t base_seed = 20260101;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

inline Interval<Q> unit_box() { return Interval<Q>(Q(0), Q(1)); }
inline Interval<Q> centered_box() { return Interval<Q>(Q(-1), Q(1)); }

inline Function<Q> choquet_fn(const SetFunction<Q>& v, std::string name = "choquet") {
  return make_function<Q>(v.n(), [v](std::span<const Q> x) { return choquet<Q>(v, x); }, std::move(name));
}

inline Function<Q> symmetric_fn(const SetFunction<Q>& v) {
  return make_function<Q>(v.n(), [v](std::span<const Q> x) { return symmetric_choquet<Q>(v, x, Checking::off); },
                          "symmetric");
}

inline Function<Q> sugeno_fn(const SetFunction<Q>& mu) {
  return make_function<Q>(mu.n(), [mu](std::span<const Q> x) { return sugeno<Q>(mu, x); }, "sugeno");
}

inline std::string name_of(const SetFunction<Q>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v.at(static_cast<std::uint32_t>(i)).str();
  return s + "]";
}

inline Outcome indicator_identity() {
  Outcome out;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 1 + i % 5;
    auto v = random_signed_capacity<Q>(base_seed + i, n);
    for (std::uint32_t mask = 0; mask < v.size(); ++mask)
      if (choquet<Q>(v, ray_point<Q>(n, Subset(mask), Q(1))) != v.at(mask))
        out.fail("C_v(1_S) != v(S) for v=" + name_of(v) + ", S=" + Subset(mask).str());
  }
  return out;
}

inline Outcome duality_identity() {
  Outcome out;
  const auto axis = GridSpec<Q>(centered_box(), 5).axis();
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::size_t n = 1 + i % 4;
    auto v = random_signed_capacity<Q>(base_seed + 100 + i, n);
    auto vd = dual(v);
    Grid<Q> grid(n, axis);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      auto x = grid.point(k);
      if (choquet<Q>(v, x) != choquet<Q>(v, positive_part<Q>(x)) - choquet<Q>(vd, negative_part<Q>(x)))
        out.fail("duality fails at " + format_tuple<Q>(x) + " for v=" + name_of(v));
    }
  }
  return out;
}

inline Outcome symmetric_cross_check() {
  Outcome out;
  const auto axis = GridSpec<Q>(centered_box(), 5).axis();
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::size_t n = 1 + i % 4;
    auto v = random_signed_capacity<Q>(base_seed + 100 + i, n);
    Grid<Q> grid(n, axis);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      auto x = grid.point(k);
      const Q split = choquet<Q>(v, positive_part<Q>(x)) - choquet<Q>(v, negative_part<Q>(x));
      const Q regions = symmetric_choquet_regions<Q>(v, x);
      if (split != regions) out.fail("region formula disagrees at " + format_tuple<Q>(x) + " for v=" + name_of(v));
      if (symmetric_choquet<Q>(v, negate<Q>(x), Checking::off) != -split)
        out.fail("not odd at " + format_tuple<Q>(x) + " for v=" + name_of(v));
    }
  }
  return out;
}

inline Outcome signed_choquet_necessity() {
  Outcome out;
  const GridSpec<Q> spec(centered_box(), 5);
  for (std::uint64_t i = 0; i < 12; ++i) {
    const std::size_t n = 1 + i % 3;
    auto v = random_signed_capacity<Q>(base_seed + 200 + i, n);
    auto f = choquet_fn(v);
    auto result = audit(f, spec, {Axiom::comono_modular, Axiom::sign_homog_rays, Axiom::dual_shift, Axiom::zero_at_origin});
    for (const auto& r : result.reports)
      if (!r.passed()) out.fail(std::string(axiom_name(r.axiom)) + " fails for C_v, v=" + name_of(v));
    auto fit = fit_signed_choquet(f, spec);
    if (refused(fit)) {
      out.fail("fit refused C_v for v=" + name_of(v) + ": " + std::get<Refusal<Q>>(fit).condition);
    } else if (std::get<SetFunction<Q>>(fit) != v) {
      out.fail("fit recovered a different v for " + name_of(v));
    }
  }
  return out;
}

inline Outcome dual_shift_control() {
  Outcome out;
  const GridSpec<Q> spec(centered_box(), 5);
  bool found = false;
  for (std::uint64_t i = 0; i < 10 && !found; ++i) {
    auto v = random_signed_capacity<Q>(base_seed + 300 + i, 2);
    if (v == dual(v)) continue;
    auto f = make_function<Q>(2, [v](std::span<const Q> x) { return choquet<Q>(v, positive_part<Q>(x)); }, "C_v(x+)");
    auto mod = check(Axiom::comono_modular, f, spec);
    auto homog = check(Axiom::sign_homog_rays, f, spec);
    auto shift = check(Axiom::dual_shift, f, spec);
    if (!mod.passed() || !homog.passed()) {
      out.fail("C_v(x+) should pass conditions (i) and (ii) for v=" + name_of(v));
      continue;
    }
    if (shift.passed()) continue;  // this v happens to satisfy the shift on the grid
    if (!witness_violates(Axiom::dual_shift, f, *shift.witness, spec.box)) {
      out.fail("dual_shift witness does not replay");
      continue;
    }
    auto fit = fit_signed_choquet(f, spec);
    if (!refused(fit) || std::get<Refusal<Q>>(fit).axiom != Axiom::dual_shift)
      out.fail("fit should refuse C_v(x+) citing dual_shift");
    found = true;
  }
  if (!found) out.fail("no seeded v produced a dual_shift violation");
  return out;
}

inline Outcome separation_round_trip() {
  Outcome out;
  const GridSpec<Q> spec(centered_box(), 5);
  const auto axis = spec.axis();
  for (std::uint64_t i = 0; i < 12; ++i) {
    const std::size_t n = 1 + i % 3;
    auto v = random_signed_capacity<Q>(base_seed + 400 + i, n);
    for (const auto& f : {choquet_fn(v), symmetric_fn(v)}) {
      auto form = build_separation(f, spec);
      Grid<Q> grid(n, axis);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        auto x = grid.point(k);
        if (eval_separation<Q>(form, x) != f(x))
          out.fail(f.name + " separation form differs at " + format_tuple<Q>(x) + " for v=" + name_of(v));
      }
    }
  }
  return out;
}

inline Outcome sugeno_equivalences() {
  Outcome out;
  const GridSpec<Q> spec(unit_box(), 5);
  const auto axis = spec.axis();
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::size_t n = 1 + i % 4;
    auto mu = random_ivalued_capacity<Q>(base_seed + 500 + i, n, unit_box());
    auto f = sugeno_fn(mu);
    Grid<Q> grid(n, axis);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      auto x = grid.point(k);
      if (sugeno<Q>(mu, x) != sugeno_normal_form<Q>(mu, x))
        out.fail("sorted and normal forms differ at " + format_tuple<Q>(x) + " for mu=" + name_of(mu));
    }
    auto result = audit(f, spec, {Axiom::comono_maxitive, Axiom::comono_minitive, Axiom::idempotent});
    for (const auto& r : result.reports)
      if (!r.passed()) out.fail(std::string(axiom_name(r.axiom)) + " fails for Sugeno, mu=" + name_of(mu));
    for (NormalMode mode : {NormalMode::maxitive, NormalMode::minitive}) {
      auto form = build_normal_form(f, unit_box(), mode, axis);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        auto x = grid.point(k);
        if (eval_normal_form<Q>(form, x) != f(x))
          out.fail(std::string(normal_mode_name(mode)) + " normal form differs at " + format_tuple<Q>(x));
        if (eval_chain<Q>(form, x) != f(x))
          out.fail(std::string(normal_mode_name(mode)) + " chain view differs at " + format_tuple<Q>(x));
      }
    }
  }
  return out;
}

inline Outcome implication_suite() {
  Outcome out;
  const GridSpec<Q> spec(unit_box(), 5);
  std::vector<Function<Q>> suite;
  const SetFunction<Q> fixed(2, {Q(0), Q(3, 10), Q(3, 5), Q(1)});
  suite.push_back(choquet_fn(fixed));
  suite.push_back(sugeno_fn(fixed.with_codomain(unit_box())));
  suite.push_back(make_function<Q>(2, [fixed](std::span<const Q> x) { return shilkret<Q>(fixed, x); }, "shilkret"));
  suite.push_back(make_function<Q>(2, [](std::span<const Q> x) { return arithmetic_mean<Q>(x); }, "mean"));
  for (std::uint64_t i = 0; i < 6; ++i) {
    const std::size_t n = 2 + i % 2;
    suite.push_back(choquet_fn(random_capacity<Q>(base_seed + 600 + i, n)));
    auto mu = random_ivalued_capacity<Q>(base_seed + 650 + i, n, unit_box());
    auto phi = random_transform<Q>(base_seed + 660 + i, unit_box(), unit_box());
    suite.push_back(make_function<Q>(n, [mu, phi](std::span<const Q> x) { return quasi_sugeno<Q>(mu, phi, x); },
                                     "quasi-sugeno"));
  }
  std::size_t premises = 0;
  for (const auto& f : suite) {
    auto a = audit(f, spec, {Axiom::comono_maxitive, Axiom::comono_minitive, Axiom::comono_modular, Axiom::nondecreasing});
    const bool mx = a.find(Axiom::comono_maxitive)->passed();
    const bool mn = a.find(Axiom::comono_minitive)->passed();
    if (mx && mn) {
      ++premises;
      if (!a.find(Axiom::comono_modular)->passed()) out.fail(f.name + ": maxitive and minitive but not modular");
    }
    if (mx && !a.find(Axiom::nondecreasing)->passed()) out.fail(f.name + ": comonotonically maxitive but decreasing");
  }
  if (premises == 0) out.fail("no function in the suite met the premises");
  auto mean = make_function<Q>(2, [](std::span<const Q> x) { return arithmetic_mean<Q>(x); }, "mean");
  if (!check(Axiom::comono_modular, mean, spec).passed()) out.fail("mean should be comonotonically modular");
  auto mx = check(Axiom::comono_maxitive, mean, spec);
  if (mx.passed() || !mx.witness) {
    out.fail("mean should fail comono_maxitive");
  } else if (!witness_violates(Axiom::comono_maxitive, mean, *mx.witness, spec.box) ||
             !is_comonotonic<Q>(*mx.witness->operands.x, *mx.witness->operands.y)) {
    out.fail("mean witness is not a comonotonic violation");
  }
  return out;
}

inline Outcome shilkret_control() {
  Outcome out;
  const GridSpec<Q> spec(unit_box(), 5);
  const SetFunction<Q> mu(2, {Q(0), Q(3, 10), Q(3, 5), Q(1)});
  auto f = make_function<Q>(2, [mu](std::span<const Q> x) { return shilkret<Q>(mu, x); }, "shilkret");
  if (!check(Axiom::comono_maxitive, f, spec).passed()) out.fail("Shilkret should be comonotonically maxitive");
  for (Axiom a : {Axiom::comono_minitive, Axiom::comono_modular}) {
    auto r = check(a, f, spec);
    if (r.passed() || !r.witness) {
      out.fail(std::string(axiom_name(a)) + " should fail for Shilkret");
    } else if (!witness_violates(a, f, *r.witness, spec.box) ||
               !is_comonotonic<Q>(*r.witness->operands.x, *r.witness->operands.y)) {
      out.fail(std::string(axiom_name(a)) + " witness does not replay");
    }
  }
  return out;
}

inline Outcome quasi_sugeno_factorization() {
  Outcome out;
  const GridSpec<Q> spec(unit_box(), 5);
  const auto axis = spec.axis();
  for (std::uint64_t i = 0; i < 10; ++i) {
    const std::size_t n = 1 + i % 3;
    auto mu = random_ivalued_capacity<Q>(base_seed + 700 + i, n, unit_box());
    auto phi = random_transform<Q>(base_seed + 750 + i, unit_box(), unit_box());
    auto f = make_function<Q>(n, [mu, phi](std::span<const Q> x) { return quasi_sugeno<Q>(mu, phi, x); }, "quasi-sugeno");
    auto fit = factorize_quasi_sugeno(f, spec, unit_box());
    if (refused(fit)) {
      out.fail("factorization refused for mu=" + name_of(mu) + ": " + std::get<Refusal<Q>>(fit).condition);
      continue;
    }
    const auto& form = std::get<QuasiSugenoForm<Q>>(fit);
    Grid<Q> grid(n, axis);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      auto x = grid.point(k);
      if (eval_quasi_sugeno_form<Q>(form, x) != quasi_sugeno<Q>(mu, phi, x))
        out.fail("factorization differs at " + format_tuple<Q>(x));
    }
  }
  const SetFunction<Q> v(2, {Q(0), Q(3, 10), Q(1, 2), Q(1)});
  auto fit = factorize_quasi_sugeno(choquet_fn(v), spec, unit_box());
  if (!refused(fit)) {
    out.fail("Choquet integral should be refused");
  } else {
    const auto& r = std::get<Refusal<Q>>(fit);
    if (r.axiom != Axiom::weak_max_homog || !r.witness ||
        !witness_violates(Axiom::weak_max_homog, choquet_fn(v), *r.witness, spec.box))
      out.fail("refusal should cite weak_max_homog with a replayable witness, got " + r.condition);
  }
  return out;
}

inline Outcome quasi_choquet_fit() {
  Outcome out;
  const GridSpec<Q> spec(unit_box(), 5);
  const auto axis = spec.axis();
  std::size_t fitted = 0;
  // Draws with f(1_S) = 0 for every S fall outside the hypothesis and are skipped.
  for (std::uint64_t i = 0; fitted < 10 && i < 100; ++i) {
    const std::size_t n = 1 + i % 3;
    auto v = random_signed_capacity<Q>(base_seed + 800 + i, n);
    auto phi = random_transform<Q>(base_seed + 850 + i, unit_box(), unit_box(), 2, true);
    const bool degenerate = phi(Q(1)) == Q(0) || std::all_of(v.values().begin(), v.values().end(),
                                                               [](const Q& value) { return value == Q(0); });
    if (degenerate) continue;
    auto f = make_function<Q>(n, [v, phi](std::span<const Q> x) { return quasi_choquet<Q>(v, phi, x); }, "quasi-choquet");
    auto fit = fit_quasi_choquet(f, spec, Side::pos);
    if (refused(fit)) {
      out.fail("fit refused for v=" + name_of(v) + " phi=" + phi.describe() + ": " + std::get<Refusal<Q>>(fit).condition +
               " " + std::get<Refusal<Q>>(fit).detail);
      continue;
    }
    const auto& q = std::get<QuasiChoquetFit<Q>>(fit);
    Grid<Q> grid(n, axis);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      auto x = grid.point(k);
      if (choquet<Q>(q.v, q.phi.apply(x)) != f(x)) out.fail("regenerated f differs at " + format_tuple<Q>(x));
    }
    ++fitted;
  }
  auto zero = make_function<Q>(2, [](std::span<const Q>) { return Q(0); }, "zero");
  auto fit = fit_quasi_choquet(zero, spec, Side::pos);
  if (!refused(fit) || std::get<Refusal<Q>>(fit).condition != "nonzero indicator")
    out.fail("the zero function should be refused for lack of S with f(1_S) != 0");
  if (fitted < 10) out.fail("only " + std::to_string(fitted) + " nondegenerate pairs fitted");
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "indicator identity", 1, indicator_identity},
      {2, "duality identity", 10, duality_identity},
      {3, "symmetric cross-check and oddness", 10, symmetric_cross_check},
      {4, "signed Choquet axioms and fit", 60, signed_choquet_necessity},
      {5, "dual shift negative control", 10, dual_shift_control},
      {6, "separation round trip", 30, separation_round_trip},
      {7, "Sugeno equivalences", 30, sugeno_equivalences},
      {8, "implication suite", 10, implication_suite},
      {9, "Shilkret negative control", 5, shilkret_control},
      {10, "quasi-Sugeno factorization", 30, quasi_sugeno_factorization},
      {11, "quasi-Choquet fit", 30, quasi_choquet_fit},
  };
  return list;
}

}  // namespace selftest

inline CriterionResult run_criterion(const selftest::Criterion& c) {
  CriterionResult r{c.id, c.name, false, "", 0, c.limit_seconds};
  const auto start = std::chrono::steady_clock::now();
  try {
    auto outcome = c.run();
    r.correct = outcome.ok;
    r.detail = outcome.detail;
  } catch (const std::exception& e) {
    r.correct = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Criteria 1–11. Criterion 12 (byte-identical reports) is checked by
/// comparing two serialized runs; see `determinism_result`.
inline std::vector<CriterionResult> run_selftest() {
  std::vector<CriterionResult> out;
  for (const auto& c : selftest::criteria()) out.push_back(run_criterion(c));
  return out;
}

inline json selftest_to_json(const std::vector<CriterionResult>& results) {
  json j;
  j["mode"] = "rational";
  j["criteria"] = json::array();
  for (const auto& r : results) {
    j["criteria"].push_back({{"id", r.id},
                             {"name", r.name},
                             {"verdict", r.correct ? "pass" : "fail"},
                             {"detail", r.detail}});
  }
  return j;
}

inline CriterionResult determinism_result(const std::string& first, const std::string& second, double seconds) {
  CriterionResult r{12, "deterministic reports", first == second, "", seconds, 1e9};
  if (!r.correct) r.detail = "two selftest runs produced different reports";
  return r;
}

}  // namespace comod

#endif  // COMOD_SELFTEST_HPP
