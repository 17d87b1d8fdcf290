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


#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using comod::Axiom;
using comod::Function;
using comod::GridSpec;
using comod::Interval;
using comod::Rational;
using comod::SetFunction;
using oracle::q;
using V = std::vector<Rational>;

template <typename F>
Function<Rational> fn(std::size_t n, F f, std::string name) {
  return comod::make_function<Rational>(n, std::move(f), std::move(name));
}

GridSpec<Rational> grid(long lo, long hi, std::size_t k = 5) {
  return GridSpec<Rational>(Interval<Rational>(lo, hi), k);
}

bool passes(Axiom a, const Function<Rational>& f, const GridSpec<Rational>& g) {
  return comod::check(a, f, g).passed();
}

std::vector<Function<Rational>> unit_suite() {
  std::vector<Function<Rational>> suite;
  suite.push_back(fn(2, [](std::span<const Rational> x) { return comod::arithmetic_mean<Rational>(x); }, "mean"));
  suite.push_back(fn(2, [](std::span<const Rational> x) { return x[0] * x[1]; }, "product"));
  suite.push_back(fn(2, [](std::span<const Rational> x) { return std::max(x[0], x[1]); }, "max"));
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const std::size_t n = 2 + seed % 2;
    auto mu = comod::random_ivalued_capacity<Rational>(seed, n, Interval<Rational>(0, 1));
    auto phi = comod::random_transform<Rational>(seed, Interval<Rational>(0, 1), Interval<Rational>(0, 1));
    auto w = comod::random_capacity<Rational>(seed, n);
    suite.push_back(fn(n, [mu](std::span<const Rational> x) { return comod::sugeno<Rational>(mu, x); }, "sugeno"));
    suite.push_back(fn(n, [mu](std::span<const Rational> x) { return comod::shilkret<Rational>(mu, x); }, "shilkret"));
    suite.push_back(fn(n, [mu, phi](std::span<const Rational> x) { return comod::quasi_sugeno<Rational>(mu, phi, x); },
                       "quasi-sugeno"));
    suite.push_back(fn(n, [w](std::span<const Rational> x) { return comod::choquet<Rational>(w, x); }, "choquet"));
  }
  return suite;
}

TEST(Implications, MaxitiveAndMinitiveGiveModular) {
  std::size_t premises = 0;
  for (const auto& f : unit_suite()) {
    if (passes(Axiom::comono_maxitive, f, grid(0, 1)) && passes(Axiom::comono_minitive, f, grid(0, 1))) {
      ++premises;
      EXPECT_TRUE(passes(Axiom::comono_modular, f, grid(0, 1))) << f.name;
    }
  }
  EXPECT_GT(premises, 0u);
}

TEST(Implications, MaxitiveGivesNondecreasing) {
  for (const auto& f : unit_suite())
    if (passes(Axiom::comono_maxitive, f, grid(0, 1))) {
      EXPECT_TRUE(passes(Axiom::nondecreasing, f, grid(0, 1))) << f.name;
    }
}

TEST(Implications, ModularGivesComonotonicallyModular) {
  std::size_t premises = 0;
  for (const auto& f : unit_suite()) {
    if (passes(Axiom::modular, f, grid(0, 1))) {
      ++premises;
      EXPECT_TRUE(passes(Axiom::comono_modular, f, grid(0, 1))) << f.name;
    }
  }
  EXPECT_GT(premises, 0u);
}

TEST(Implications, MedianAdditivityEquivalence) {
  std::vector<Function<Rational>> suite;
  suite.push_back(fn(2, [](std::span<const Rational> x) { return comod::arithmetic_mean<Rational>(x); }, "mean"));
  suite.push_back(fn(2, [](std::span<const Rational> x) { return x[0] * x[1]; }, "product"));
  suite.push_back(fn(2, [](std::span<const Rational> x) { return std::max(x[0], x[1]); }, "max"));
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto w = comod::random_signed_capacity<Rational>(seed, 2);
    suite.push_back(fn(2, [w](std::span<const Rational> x) { return comod::choquet<Rational>(w, x); }, "choquet"));
    suite.push_back(fn(2, [w](std::span<const Rational> x) { return comod::symmetric_choquet<Rational>(w, x); },
                       "symmetric"));
  }
  std::size_t both = 0, neither = 0;
  for (const auto& f : suite) {
    ASSERT_EQ(f(V{0, 0}), 0);
    const bool median = passes(Axiom::horiz_median_additive, f, grid(-1, 1));
    const bool halves = passes(Axiom::comono_additive, f, grid(0, 1)) && passes(Axiom::comono_additive, f, grid(-1, 0)) &&
                        passes(Axiom::plus_split, f, grid(-1, 1));
    EXPECT_EQ(median, halves) << f.name;
    (median ? both : neither) += 1;
  }
  EXPECT_GT(both, 0u);
  EXPECT_GT(neither, 0u);
}

TEST(Properties, DualIsAnInvolution) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto w = comod::random_signed_capacity<Rational>(seed, 1 + seed % 4);
    EXPECT_EQ(comod::dual(comod::dual(w)), w);
  }
}

TEST(Properties, WitnessesReplayExactly) {
  for (const auto& f : unit_suite()) {
    for (Axiom a : {Axiom::comono_maxitive, Axiom::comono_minitive, Axiom::comono_modular, Axiom::weak_max_homog,
                    Axiom::weak_min_homog, Axiom::horiz_min_additive, Axiom::idempotent}) {
      auto r = comod::check(a, f, grid(0, 1, 3));
      if (r.passed()) continue;
      ASSERT_TRUE(r.witness);
      auto again = comod::replay(a, f, r.witness->operands, Interval<Rational>(0, 1));
      EXPECT_EQ(again.lhs, r.witness->lhs);
      EXPECT_EQ(again.rhs, r.witness->rhs);
      EXPECT_TRUE(comod::witness_violates(a, f, *r.witness, Interval<Rational>(0, 1))) << f.name;
    }
  }
}

TEST(Properties, FailuresPersistUnderRefinement) {
  for (const auto& f : unit_suite()) {
    for (Axiom a : {Axiom::comono_maxitive, Axiom::comono_minitive, Axiom::comono_modular, Axiom::weak_max_homog}) {
      auto coarse = comod::check(a, f, grid(0, 1, 3));
      if (coarse.passed()) continue;
      // the k=5 axis contains the k=3 axis, so the old witness is still on the grid
      auto fine = comod::check(a, f, grid(0, 1, 5));
      EXPECT_FALSE(fine.passed()) << f.name << " " << comod::axiom_name(a);
      EXPECT_TRUE(comod::witness_violates(a, f, *coarse.witness, Interval<Rational>(0, 1)));
    }
  }
}

TEST(Properties, SeparableWhenComonotonicallyModular) {
  for (const auto& f : unit_suite()) {
    if (f.arity > 2 || !passes(Axiom::comono_modular, f, grid(0, 1))) continue;
    auto spec = grid(0, 1);
    auto form = comod::build_separation(f, spec);
    comod::Grid<Rational> g(f.arity, spec.axis());
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto x = g.point(i);
      ASSERT_EQ(comod::eval_separation<Rational>(form, x), f(x)) << f.name;
    }
  }
}

TEST(Properties, SugenoFormsAgree) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 1 + seed % 4;
    auto mu = comod::random_ivalued_capacity<Rational>(seed, n, Interval<Rational>(q("-1/2"), 2));
    comod::Grid<Rational> g(n, GridSpec<Rational>(Interval<Rational>(q("-1/2"), 2), 4).axis());
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto x = g.point(i);
      ASSERT_EQ(comod::sugeno<Rational>(mu, x), comod::sugeno_normal_form<Rational>(mu, x));
      ASSERT_EQ(comod::sugeno<Rational>(mu, x), oracle::sugeno(mu, x));
    }
  }
}

TEST(Properties, ChoquetOfNegationUsesDual) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 1 + seed % 3;
    auto w = comod::random_signed_capacity<Rational>(seed, n);
    comod::Grid<Rational> g(n, grid(-1, 1, 4).axis());
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto x = g.point(i);
      ASSERT_EQ(comod::choquet<Rational>(w, comod::negate<Rational>(x)), -comod::choquet<Rational>(comod::dual(w), x));
    }
  }
}

TEST(Properties, GeneratorsAreDeterministic) {
  for (std::uint64_t seed : {0u, 1u, 77u}) {
    EXPECT_EQ(comod::random_capacity<Rational>(seed, 3), comod::random_capacity<Rational>(seed, 3));
    EXPECT_TRUE(comod::validate(comod::random_capacity<Rational>(seed, 3), comod::Role::capacity).pass);
    auto iv = comod::random_ivalued_capacity<Rational>(seed, 3, Interval<Rational>(-1, 2));
    EXPECT_TRUE(comod::validate(iv, comod::Role::ivalued, Interval<Rational>(-1, 2)).pass);
  }
}

}  // namespace
