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

using comod::Checking;
using comod::errc;
using comod::error;
using comod::Interval;
using comod::Rational;
using comod::SetFunction;
using comod::Subset;
using comod::TransformFn;
using comod::TransformProperty;
using oracle::q;
using oracle::tuple;
using V = std::vector<Rational>;

const SetFunction<Rational> v(2, {0, q("3/10"), q("1/2"), 1});
const SetFunction<Rational> mu = SetFunction<Rational>(2, {0, q("3/10"), q("3/5"), 1}).with_codomain({0, 1});

TEST(Choquet, Examples) {
  EXPECT_EQ(comod::choquet<Rational>(v, tuple({"1", "0"})), q("3/10"));
  EXPECT_EQ(comod::choquet<Rational>(v, tuple({"1/5", "7/10"})), q("9/20"));
  EXPECT_EQ(comod::choquet<Rational>(v, tuple({"0", "0"})), 0);
}

TEST(Choquet, MatchesLevelSetOracle) {
  const V axis{q("-1"), q("-1/3"), q("0"), q("1/2"), q("1")};
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const std::size_t n = 1 + seed % 3;
    auto w = comod::random_signed_capacity<Rational>(seed, n);
    comod::Grid<Rational> grid(n, axis);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      auto x = grid.point(i);
      ASSERT_EQ(comod::choquet<Rational>(w, x), oracle::choquet(w, x)) << comod::format_tuple<Rational>(x);
    }
  }
}

TEST(Choquet, TiesDoNotMatter) {
  auto w = comod::random_signed_capacity<Rational>(7, 3);
  auto x = tuple({"1/2", "1/2", "-1"});
  for (const auto& perm : comod::admissible_permutations<Rational>(x))
    EXPECT_EQ(comod::choquet_with_permutation<Rational>(w, x, perm), comod::choquet<Rational>(w, x));
}

TEST(Choquet, Errors) {
  EXPECT_THROW(comod::choquet<Rational>(v, tuple({"1"})), error);
  SetFunction<Rational> bad(1, {1, 2});
  try {
    comod::choquet<Rational>(bad, tuple({"1"}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_signed_capacity);
  }
}

TEST(SymmetricChoquet, Examples) {
  EXPECT_EQ(comod::symmetric_choquet<Rational>(v, tuple({"-1/2", "7/10"}), Checking::on), q("1/5"));
  EXPECT_EQ(comod::symmetric_choquet<Rational>(v, tuple({"1/2", "-7/10"}), Checking::on), q("-1/5"));
  EXPECT_EQ(comod::symmetric_choquet<Rational>(v, tuple({"0", "0"}), Checking::on), 0);
  EXPECT_EQ(comod::symmetric_choquet_regions<Rational>(v, tuple({"-1/2", "7/10"})), q("1/5"));
}

TEST(ChoquetViaDual, Examples) {
  EXPECT_EQ(comod::choquet_via_dual<Rational>(v, tuple({"-1/2", "7/10"})), q("1/10"));
  EXPECT_EQ(comod::choquet<Rational>(v, tuple({"-1/2", "7/10"})), q("1/10"));
  EXPECT_EQ(comod::choquet_via_dual<Rational>(v, tuple({"1/5", "7/10"})), q("9/20"));
  EXPECT_EQ(comod::choquet_via_dual<Rational>(v, tuple({"0", "0"})), 0);
}

TEST(Sugeno, Examples) {
  EXPECT_EQ(comod::sugeno<Rational>(mu, tuple({"1/5", "4/5"})), q("3/5"));
  EXPECT_EQ(comod::sugeno<Rational>(mu, tuple({"2/5", "2/5"})), q("2/5"));
  EXPECT_EQ(comod::sugeno<Rational>(mu, tuple({"0", "1"})), q("3/5"));
  EXPECT_EQ(comod::sugeno<Rational>(mu, tuple({"0", "0"})), 0);
  EXPECT_EQ(comod::sugeno_normal_form<Rational>(mu, tuple({"1/5", "4/5"})), q("3/5"));
  EXPECT_EQ(comod::sugeno_normal_form<Rational>(mu, tuple({"1", "1"})), 1);
  EXPECT_EQ(comod::sugeno_normal_form<Rational>(mu, tuple({"0", "0"})), 0);
}

TEST(Sugeno, MatchesThresholdOracle) {
  const Interval<Rational> unit(0, 1);
  const V axis{q("0"), q("1/4"), q("1/3"), q("3/4"), q("1")};
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const std::size_t n = 1 + seed % 3;
    auto m = comod::random_ivalued_capacity<Rational>(seed, n, unit);
    comod::Grid<Rational> grid(n, axis);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      auto x = grid.point(i);
      ASSERT_EQ(comod::sugeno<Rational>(m, x), oracle::sugeno(m, x));
    }
  }
}

TEST(Sugeno, NonUnitInterval) {
  auto m = SetFunction<Rational>(1, {-2, 3}).with_codomain({-2, 3});
  EXPECT_EQ(comod::sugeno<Rational>(m, tuple({"1"})), 1);
  EXPECT_EQ(comod::sugeno_normal_form<Rational>(m, tuple({"1"})), 1);
}

TEST(Sugeno, Errors) {
  try {
    comod::sugeno<Rational>(v, tuple({"1/2", "1/2"}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::bad_role);
  }
  try {
    comod::sugeno<Rational>(mu, tuple({"2", "1/2"}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::tuple_outside_interval);
  }
}

TEST(QuasiChoquet, Examples) {
  auto phi = TransformFn<Rational>::piecewise_linear({{q("0"), q("0")}, {q("1/2"), q("1")}, {q("1"), q("1")}});
  EXPECT_EQ(comod::quasi_choquet<Rational>(v, phi, tuple({"1/5", "7/10"})), q("7/10"));
  EXPECT_EQ(comod::quasi_choquet<Rational>(v, phi, tuple({"0", "0"})), 0);
  auto id = TransformFn<Rational>::identity();
  EXPECT_EQ(comod::quasi_choquet<Rational>(v, id, tuple({"1/5", "7/10"})), q("9/20"));
}

TEST(QuasiChoquet, RequiresProperties) {
  auto shifted = TransformFn<Rational>::piecewise_linear({{q("0"), q("1/2")}, {q("1"), q("1")}});
  try {
    comod::quasi_choquet<Rational>(v, shifted, tuple({"1/5", "7/10"}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::phi_missing_property);
  }
}

TEST(SymmetricQuasiChoquet, OddAndIdentity) {
  auto cube = TransformFn<Rational>::cube();
  auto x = tuple({"-1/2", "7/10"});
  EXPECT_EQ(comod::symmetric_quasi_choquet<Rational>(v, cube, comod::negate<Rational>(x)),
            -comod::symmetric_quasi_choquet<Rational>(v, cube, x));
  EXPECT_EQ(comod::symmetric_quasi_choquet<Rational>(v, TransformFn<Rational>::identity(), x), q("1/5"));
  EXPECT_EQ(comod::symmetric_quasi_choquet<Rational>(v, cube, tuple({"0", "0"})), 0);
  auto notodd = TransformFn<Rational>::piecewise_linear({{q("-1"), q("-1/2")}, {q("1"), q("1")}});
  EXPECT_THROW(comod::symmetric_quasi_choquet<Rational>(v, notodd, x), error);
}

TEST(QuasiSugeno, Examples) {
  auto phi = TransformFn<Rational>::piecewise_linear({{q("0"), q("0")}, {q("1"), q("1/2")}});
  EXPECT_EQ(comod::quasi_sugeno<Rational>(mu, phi, tuple({"1/5", "4/5"})), q("2/5"));
  auto id = TransformFn<Rational>::identity();
  EXPECT_EQ(comod::quasi_sugeno<Rational>(mu, id, tuple({"1/5", "4/5"})), q("3/5"));
  auto c = TransformFn<Rational>::constant(q("1/3"));
  EXPECT_EQ(comod::quasi_sugeno<Rational>(mu, c, tuple({"1/5", "4/5"})), q("1/3"));
  EXPECT_EQ(comod::quasi_sugeno<Rational>(mu, c, tuple({"1", "0"})), q("1/3"));
}

TEST(QuasiSugeno, RangeOutsideInterval) {
  auto phi = TransformFn<Rational>::piecewise_linear({{q("0"), q("0")}, {q("1"), q("2")}});
  try {
    comod::quasi_sugeno<Rational>(mu, phi, tuple({"1/5", "4/5"}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::phi_range_outside_interval);
  }
}

TEST(Shilkret, Examples) {
  EXPECT_EQ(comod::shilkret<Rational>(mu, tuple({"1/5", "4/5"})), q("12/25"));
  EXPECT_EQ(comod::shilkret<Rational>(mu, tuple({"1", "1"})), 1);
  EXPECT_EQ(comod::shilkret<Rational>(mu, tuple({"0", "0"})), 0);
  try {
    comod::shilkret<Rational>(mu, tuple({"-1", "0"}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::negative_input);
  }
}

TEST(Transform, PiecewiseLinear) {
  auto phi = TransformFn<Rational>::piecewise_linear({{q("0"), q("0")}, {q("1/2"), q("1")}, {q("1"), q("1")}});
  EXPECT_EQ(phi(q("1/4")), q("1/2"));
  EXPECT_EQ(phi(q("3/4")), 1);
  EXPECT_TRUE(phi.has(TransformProperty::nondecreasing));
  EXPECT_TRUE(phi.has(TransformProperty::vanishes_at_zero));
  EXPECT_FALSE(phi.has(TransformProperty::odd));
  try {
    phi(q("2"));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::extrapolation);
  }
}

TEST(Transform, DeclaredPropertiesAreVerified) {
  using P = comod::PropertySet;
  try {
    TransformFn<Rational>::piecewise_linear({{q("0"), q("1")}, {q("1"), q("0")}}, P{TransformProperty::nondecreasing});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_transform);
  }
  EXPECT_THROW(TransformFn<Rational>::piecewise_linear({{q("0"), q("0")}}), error);
  EXPECT_THROW(TransformFn<Rational>::piecewise_linear({{q("1"), q("0")}, {q("0"), q("0")}}), error);
  auto odd = TransformFn<Rational>::piecewise_linear({{q("-1"), q("-2")}, {q("0"), q("0")}, {q("1"), q("2")}},
                                                     P{TransformProperty::odd, TransformProperty::nondecreasing});
  EXPECT_EQ(odd(q("-1/2")), -1);
}

TEST(FloatMode, AgreesWithinTolerance) {
  SetFunction<double> w(2, {0, 0.3, 0.5, 1});
  EXPECT_NEAR(comod::choquet<double>(w, std::vector<double>{0.2, 0.7}), 0.45, 1e-12);
  EXPECT_NEAR(comod::symmetric_choquet<double>(w, std::vector<double>{-0.5, 0.7}, Checking::on), 0.2, 1e-12);
}

}  // namespace
