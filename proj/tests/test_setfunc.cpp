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

using comod::errc;
using comod::error;
using comod::Interval;
using comod::Rational;
using comod::Role;
using comod::SetFunction;
using comod::Subset;
using oracle::q;

SetFunction<Rational> table(std::initializer_list<const char*> values) {
  std::vector<Rational> v;
  for (auto* s : values) v.push_back(q(s));
  const std::size_t n = static_cast<std::size_t>(std::countr_zero(v.size()));
  return SetFunction<Rational>(n, v);
}

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(q("3/10"), Rational(3, 10));
  EXPECT_EQ(q("0.3"), Rational(3, 10));
  EXPECT_EQ(q("-6/4"), Rational(-3, 2));
  EXPECT_EQ(q("2.5e-1"), Rational(1, 4));
  EXPECT_EQ(q("7"), Rational(7));
  EXPECT_EQ(Rational(-3, 2).str(), "-3/2");
  EXPECT_THROW(q("abc"), error);
  EXPECT_THROW(q("1/0"), error);
}

TEST(Rational, ToDoubleRounds) {
  EXPECT_EQ(Rational(1, 5).to_double(), 0.2);
  EXPECT_EQ(Rational(7, 10).to_double(), 0.7);
}

TEST(NewSetFunction, DefaultsUnassignedToZero) {
  auto v = SetFunction<Rational>::from_assignments(
      2, {{Subset::of({1}), q("3/10")}, {Subset::of({2}), q("1/2")}, {Subset::of({1, 2}), q("1")}});
  EXPECT_EQ(v.values(), (std::vector<Rational>{0, q("3/10"), q("1/2"), 1}));
  EXPECT_TRUE(v.is_capacity());
  EXPECT_TRUE(v.is_signed_capacity());
}

TEST(NewSetFunction, EmptyAssignmentIsZeroFunction) {
  auto v = SetFunction<Rational>::from_assignments(1, {});
  EXPECT_EQ(v.values(), (std::vector<Rational>{0, 0}));
  EXPECT_TRUE(v.is_signed_capacity());
}

TEST(NewSetFunction, SignedButNotCapacity) {
  auto v = SetFunction<Rational>::from_assignments(2, {{Subset::of({1}), q("1/2")}, {Subset::of({1, 2}), q("-1")}});
  EXPECT_TRUE(v.is_signed_capacity());
  EXPECT_FALSE(v.is_capacity());
}

TEST(NewSetFunction, Errors) {
  try {
    SetFunction<Rational>::from_assignments(2, {{Subset::of({1}), 1}, {Subset::of({1}), 2}});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::duplicate_subset);
  }
  try {
    SetFunction<Rational>::from_assignments(2, {{Subset::of({3}), 1}});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::subset_out_of_range);
  }
  try {
    SetFunction<Rational>::from_assignments(21, {});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::n_exceeds_limit);
  }
}

TEST(NewSetFunction, ReadsBackAssignments) {
  std::vector<std::pair<Subset, Rational>> a{{Subset::of({1, 3}), q("2/7")}, {Subset::of({2}), q("-5")}};
  auto v = SetFunction<Rational>::from_assignments(3, a);
  for (const auto& [s, value] : a) EXPECT_EQ(v(s), value);
}

TEST(Validate, CapacityPasses) {
  EXPECT_TRUE(validate(table({"0", "3/10", "1/2", "1"}), Role::capacity).pass);
}

TEST(Validate, CapacityFailureCarriesPair) {
  auto verdict = validate(table({"0", "1/2", "1/4", "-1"}), Role::capacity);
  ASSERT_FALSE(verdict.pass);
  ASSERT_TRUE(verdict.violating_pair);
  EXPECT_EQ(verdict.violating_pair->first, Subset::of({1}));
  EXPECT_EQ(verdict.violating_pair->second, Subset::of({1, 2}));
}

TEST(Validate, IntervalValued) {
  Interval<Rational> unit(0, 1);
  EXPECT_TRUE(validate(table({"0", "1/4", "1/2", "1"}), Role::ivalued, unit).pass);
  auto bad = validate(table({"0", "1/4", "1/2", "3/4"}), Role::ivalued, unit);
  EXPECT_FALSE(bad.pass);
  EXPECT_TRUE(bad.violating_endpoint);
}

TEST(Dual, MatchesDefinition) {
  EXPECT_EQ(dual(table({"0", "3/10", "1/2", "1"})).values(), table({"0", "1/2", "7/10", "1"}).values());
  EXPECT_EQ(dual(table({"0", "0", "0", "0"})).values(), table({"0", "0", "0", "0"}).values());
}

TEST(Dual, IsAnInvolution) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto v = comod::random_signed_capacity<Rational>(seed, 1 + seed % 6);
    EXPECT_EQ(dual(dual(v)), v);
  }
}

TEST(Dual, OfCapacityIsCapacity) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto v = comod::random_capacity<Rational>(seed, 1 + seed % 6);
    EXPECT_TRUE(validate(dual(v), Role::capacity).pass);
  }
}

TEST(Dual, RejectsNonzeroAtEmpty) {
  try {
    dual(table({"1", "1", "1", "1"}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_signed_capacity);
  }
}

TEST(Interval, RejectsDegenerate) {
  EXPECT_THROW(Interval<Rational>(1, 1), error);
  EXPECT_THROW(Interval<Rational>(2, 1), error);
}

TEST(Generate, RolesAreValid) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 1 + seed % 8;
    EXPECT_TRUE(validate(comod::random_capacity<Rational>(seed, n), Role::capacity).pass);
    auto mu = comod::random_ivalued_capacity<Rational>(seed, n, Interval<Rational>(0, 1));
    EXPECT_EQ(mu.values().front(), 0);
    EXPECT_EQ(mu.values().back(), 1);
    EXPECT_TRUE(validate(mu, Role::ivalued, Interval<Rational>(0, 1)).pass);
    EXPECT_TRUE(comod::random_signed_capacity<Rational>(seed, n).is_signed_capacity());
  }
}

TEST(Generate, Deterministic) {
  EXPECT_EQ(comod::random_signed_capacity<Rational>(1, 2), comod::random_signed_capacity<Rational>(1, 2));
  EXPECT_THROW(comod::random_capacity<Rational>(1, 9), error);
}

}  // namespace
