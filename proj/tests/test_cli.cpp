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


#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

using comod::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = comod::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) {
  const char* dir = std::getenv("COMOD_SAMPLES");
  return std::string(dir ? dir : "samples") + "/" + name;
}

TEST(Cli, EvalChoquet) {
  auto r = run({"eval", "--integral", "choquet", "--capacity", sample("v.json"), "--x", "[1/5,7/10]"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "9/20\n");
}

TEST(Cli, EvalJson) {
  auto r = run({"eval", "--integral", "sugeno", "--capacity", sample("mu.json"), "--x", "[1/5,7/10]", "--format",
                "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["value"], "3/5");
  EXPECT_EQ(j["mode"], "rational");
}

TEST(Cli, EvalQuasiSugeno) {
  auto r = run({"eval", "--integral", "quasi-sugeno", "--capacity", sample("mu.json"), "--phi", sample("phi.json"),
                "--x", "[1,4/5]"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2/5\n");
}

TEST(Cli, FloatModeLabelsItself) {
  auto r = run({"eval", "--integral", "choquet", "--capacity", sample("v.json"), "--x", "[1/5,7/10]", "--mode", "float"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# mode: float"), std::string::npos);
  const auto value = std::stod(r.out.substr(r.out.find('\n') + 1));
  EXPECT_NEAR(value, 0.45, 1e-9);
}

TEST(Cli, AuditPasses) {
  auto r = run({"audit", "--fn", "choquet", "--capacity", sample("v.json"), "--box", "[-1,1]", "--axioms",
                "comono_modular,sign_homog_rays,dual_shift", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j["reports"].size(), 3u);
  for (const auto& rep : j["reports"]) EXPECT_EQ(rep["verdict"], "pass");
}

TEST(Cli, AuditFailureExitsOne) {
  auto r = run({"audit", "--fn", "shilkret", "--capacity", sample("mu.json"), "--box", "[0,1]", "--axioms",
                "comono_minitive"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Cli, FitRefusalExitsOne) {
  auto r = run({"fit", "--fit", "quasi-sugeno", "--fn", "choquet", "--capacity", sample("v.json"), "--box", "[0,1]",
                "--format", "json"});
  EXPECT_EQ(r.code, 1) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["refused"], true);
  EXPECT_EQ(j["condition"], "weak_max_homog");
  EXPECT_FALSE(j["witness"].is_null());
}

TEST(Cli, FitSignedChoquet) {
  auto r = run({"fit", "--fit", "signed-choquet", "--fn", "choquet", "--capacity", sample("v.json"), "--box", "[-1,1]",
                "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["capacity"]["values"][1]["value"], "3/10");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"eval", "--integral", "choquet"}).code, 2);
  EXPECT_EQ(run({"audit", "--fn", "mean"}).code, 2);
  EXPECT_EQ(run({"eval", "--integral", "nope", "--x", "[0]", "--capacity", sample("v.json")}).code, 2);
  auto r = run({"eval", "--integral", "choquet", "--capacity", sample("v.json"), "--x", "[1/5]"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, GenIsDeterministicAndValid) {
  auto a = run({"gen", "--seed", "7", "--n", "3", "--role", "ivalued", "--interval", "[0,1]"});
  auto b = run({"gen", "--seed", "7", "--n", "3", "--role", "ivalued", "--interval", "[0,1]"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto file = comod::capacity_from_json<comod::Rational>(json::parse(a.out));
  EXPECT_EQ(file.role, comod::Role::ivalued);
  EXPECT_EQ(file.function.n(), 3u);
  EXPECT_NE(run({"gen", "--seed", "8", "--n", "3", "--role", "ivalued"}).out, a.out);
  EXPECT_EQ(run({"gen", "--n", "9"}).code, 2);
}

TEST(Cli, ParseEps) {
  EXPECT_DOUBLE_EQ(comod::cli::parse_eps("1/10^9"), 1e-9);
  EXPECT_DOUBLE_EQ(comod::cli::parse_eps("1/1000"), 1e-3);
}

}  // namespace
