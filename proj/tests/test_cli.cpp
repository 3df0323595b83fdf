// Copyright 2026 The ffl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <string>

#include "ffl/cli.hpp"

namespace ffl::cli {
namespace {

JobSpec make(const std::string& command) {
  JobSpec j;
  j.command = command;
  return j;
}

const Check* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

TEST(RunJob, VerifyInverse) {
  auto j = make("verify-inverse");
  j.family = "generic";
  j.m = 2;
  j.sizes = {3};
  j.trials = 3;
  j.seed = 7;
  auto r = run_job(j);
  EXPECT_TRUE(r.pass()) << r.summary();
  const Check* h = find(r, "inverse_heights");
  ASSERT_NE(h, nullptr);
  EXPECT_EQ(h->details["expected"], 2);

  j.m = 1;
  r = run_job(j);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(find(r, "inverse_heights")->details["inverse"], "inv(x11)");

  for (const char* fam : {"conj_z", "group_comm", "cohn_w", "lie_bracket"}) {
    j.family = fam;
    j.m = 2;
    j.field = "q";
    j.sizes = {3};
    EXPECT_TRUE(run_job(j).pass()) << fam;
  }
  // Commutators of 2x2 matrices are too degenerate for this family.
  j.sizes = {2};
  auto small = run_job(j);
  EXPECT_FALSE(small.pass());
  EXPECT_FALSE(find(small, "invertible@N=2")->pass);
}

TEST(RunJob, EmbedChecks) {
  auto j = make("embed-checks");
  j.kind = "cohn";
  j.n = 2;
  j.imax = 10;
  auto r = run_job(j);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checks.size(), 10u);
  EXPECT_NE(find(r, "cohn[n=2,i=9]"), nullptr);

  j.kind = "jategaonkar";
  j.s = 2;
  j.r = 2;
  j.degree = 4;
  r = run_job(j);
  EXPECT_TRUE(r.pass()) << r.summary();
  // 1 + 3 + 9 + 27 + 81 words.
  EXPECT_EQ(find(r, "jategaonkar_distinct")->details["words"], 121);

  j.kind = "gamma_eps";
  j.s = 1;
  j.imax = 4;
  r = run_job(j);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checks.size(), 5u);

  j.kind = "nope";
  r = run_job(j);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.checks.back().details["kind"], "UnsupportedKind");
}

TEST(RunJob, MnInverse) {
  auto j = make("mn-inverse");
  j.exprs = {"1 - x"};
  j.max_power = 3;
  auto r = run_job(j);
  EXPECT_TRUE(r.pass()) << r.summary();
  EXPECT_EQ(r.checks.size(), 2u);
}

TEST(RunJob, LyndonAndPbw) {
  auto j = make("lyndon");
  j.n = 2;
  j.degree = 6;
  auto r = run_job(j);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checks[0].details["counts"], Json::array({2, 1, 2, 3, 6, 9}));

  j = make("pbw");
  j.n = 2;
  j.degree = 4;
  r = run_job(j);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checks[0].details["rank"], 31);
}

TEST(RunJob, SeriesInv) {
  auto j = make("series-inv");
  j.context = "ddt";
  j.trunc = 6;
  j.count = 5;
  auto r = run_job(j);
  EXPECT_TRUE(r.pass()) << r.summary();
  EXPECT_EQ(r.checks[0].details["passed"], 5);

  j.context = "bogus";
  r = run_job(j);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.checks.back().details["kind"], "InvalidContext");
}

TEST(RunJob, IdtestExpectations) {
  auto j = make("idtest");
  j.variables = {{"x", false}, {"y", false}};
  j.exprs = {"x*y", "y*x"};
  j.sizes = {2};
  j.trials = 5;
  j.expect = "distinct";
  auto r = run_job(j);
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(r.checks[0].details.contains("witness"));

  j.expect = "equal";
  EXPECT_FALSE(run_job(j).pass());

  j.exprs = {"inv(x - x)", "1"};
  j.expect = "undefined";
  EXPECT_TRUE(run_job(j).pass());

  j.expect = "maybe";
  r = run_job(j);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.checks.back().name, "error");
}

TEST(RunJob, HeightAndOrderCheck) {
  auto j = make("height");
  j.variables = {{"x", false}, {"y", false}};
  j.exprs = {"inv(x + inv(y))", "x*y"};
  j.expect_height = 2;
  auto r = run_job(j);
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_TRUE(r.checks[0].pass);
  EXPECT_FALSE(r.checks[1].pass);
  EXPECT_FALSE(r.pass());

  j = make("order-check");
  j.count = 100;
  r = run_job(j);
  EXPECT_TRUE(r.pass()) << r.summary();
  EXPECT_EQ(r.checks.size(), 4u);
}

TEST(RunJob, ErrorsBecomeFailedChecks) {
  auto r = run_job(make("frobnicate"));
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].name, "error");
  EXPECT_EQ(r.checks[0].details["kind"], "UnsupportedKind");
  EXPECT_FALSE(r.pass());

  auto j = make("height");
  j.exprs = {"x +"};
  j.variables = {{"x", false}};
  r = run_job(j);
  EXPECT_EQ(r.checks.back().details["kind"], "SyntaxError");

  j.exprs = {"q"};
  r = run_job(j);
  EXPECT_EQ(r.checks.back().details["kind"], "UnknownVariable");
}

TEST(Report, PassSemantics) {
  Report r;
  EXPECT_FALSE(r.pass());
  r.add("a", true);
  EXPECT_TRUE(r.pass());
  r.add("b", false);
  EXPECT_FALSE(r.pass());
  EXPECT_NE(r.summary().find("FAIL b"), std::string::npos);
  EXPECT_NE(r.summary().find("1/2 checks passed"), std::string::npos);
}

TEST(Report, JsonSchema) {
  auto j = make("lyndon");
  j.n = 2;
  j.degree = 4;
  Json out = run_job(j).to_json();
  EXPECT_EQ(out["schema"], "ffl-report/1");
  EXPECT_EQ(out["tool_version"], kToolVersion);
  for (const char* key : {"job", "checks", "elapsed_ms", "pass"}) EXPECT_TRUE(out.contains(key)) << key;
  EXPECT_EQ(out["job"]["command"], "lyndon");
  for (const auto& c : out["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c["pass"].is_boolean());
    EXPECT_TRUE(c["details"].is_object());
  }
}

TEST(Report, DeterministicModuloElapsed) {
  auto j = make("idtest");
  j.variables = {{"x", false}, {"y", false}};
  j.exprs = {"x - inv(inv(x) + inv(inv(y) - x))", "x*y*x"};
  j.sizes = {2, 3};
  j.seed = 5;
  auto strip = [](Json v) {
    v.erase("elapsed_ms");
    for (auto& c : v["checks"]) c["details"].erase("elapsed_ms");
    return v;
  };
  EXPECT_EQ(strip(run_job(j).to_json()), strip(run_job(j).to_json()));

  auto s = make("series-inv");
  s.trunc = 5;
  s.count = 4;
  s.seed = 3;
  EXPECT_EQ(strip(run_job(s).to_json()), strip(run_job(s).to_json()));
}

TEST(JobJson, RoundTrip) {
  JobSpec j = make("idtest");
  j.variables = {{"x", false}, {"g", true}};
  j.exprs = {"x*g", "g*x"};
  j.sizes = {2, 5};
  j.seed = 123;
  j.field = "q";
  j.expect = "distinct";
  JobSpec back = job_from_json(to_json(j));
  EXPECT_EQ(to_json(back), to_json(j));
  EXPECT_TRUE(back.variables[1].group);
}

TEST(JobJson, Defaults) {
  JobSpec j = job_from_json(Json::parse(R"({"command": "lyndon", "variables": ["a", {"name": "b", "group": true}]})"));
  EXPECT_EQ(j.command, "lyndon");
  EXPECT_EQ(j.variables.size(), 2u);
  EXPECT_FALSE(j.variables[0].group);
  EXPECT_TRUE(j.variables[1].group);
  EXPECT_EQ(j.field, "fp");
  EXPECT_EQ(j.prime, kMersenne61);
}

TEST(JobJson, Rejects) {
  auto kind_of = [](const char* text) {
    try {
      (void)job_from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of(R"({"command": "lyndon", "degre": 3})"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"m": "two"})"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"([1, 2])"), ErrorKind::ParseError);
}

TEST(Commands, NamesAreDispatched) {
  for (const auto& name : command_names()) {
    auto j = make(name);
    j.count = 3;
    j.trunc = 4;
    auto r = run_job(j);
    // Default jobs may fail validation but must never be "unknown command".
    for (const auto& c : r.checks)
      if (c.name == "error") {
        EXPECT_NE(c.details["kind"], "UnsupportedKind") << name;
      }
  }
}

}  // namespace
}  // namespace ffl::cli
