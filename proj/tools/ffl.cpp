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

// ffl: command-line driver for the verification batteries.
//
//   ffl verify-inverse --family generic --m 3 --sizes 6 --trials 5
//   ffl mn-inverse --expr "1 - x" --M 3
//   ffl idtest --var x --var y --expr "x*y" --expr "y*x" --expect distinct
//   ffl --job job.json
//
// The JSON report goes to stdout (or --out); a short summary goes to stderr.
// Exit status is 0 iff every check passed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffl/cli.hpp"

namespace {

using ffl::cli::JobSpec;

struct Flags {
  std::string job_file;
  std::vector<std::string> vars;
  std::vector<std::string> group_vars;
  JobSpec spec;
};

void add_common(CLI::App* sub, Flags& fl) {
  JobSpec& j = fl.spec;
  sub->add_option("--seed", j.seed, "base RNG seed");
  sub->add_option("--prime", j.prime, "prime modulus for --field fp");
  sub->add_option("--field", j.field, "evaluation field")->check(CLI::IsMember({"q", "fp"}));
  sub->add_option("--trunc,-D", j.trunc, "series truncation degree D");
  sub->add_option("--sizes", j.sizes, "matrix sizes")->delimiter(',');
  sub->add_option("--trials", j.trials, "trials per size");
  sub->add_option("--resample", j.resample, "resamples per trial on singular draws");
  sub->add_option("--out,-o", j.out, "write the JSON report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact noncommutative algebra verification tool"};
  app.require_subcommand(0, 1);
  Flags fl;
  JobSpec& j = fl.spec;
  app.add_option("--job", fl.job_file, "JSON job file (flags given on the command line are ignored)");
  app.add_flag_callback("--version", [] {
    std::cout << ffl::cli::kToolVersion << '\n';
    std::exit(0);
  });

  auto* vi = app.add_subcommand("verify-inverse", "quasideterminant inverse of a witness family");
  vi->add_option("--family", j.family, "generic|cohn_w|conj_z|group_comm|lie_bracket");
  vi->add_option("--m", j.m, "matrix dimension (1..4)");

  auto* ec = app.add_subcommand("embed-checks", "Cohn, Jategaonkar and Gamma/epsilon identity batteries");
  ec->add_option("kind", j.kind, "cohn|jategaonkar|gamma_eps")->required();
  ec->add_option("--n", j.n, "number of y letters (cohn)");
  ec->add_option("--imax", j.imax, "index bound");
  ec->add_option("--s", j.s, "alpha_s parameter");
  ec->add_option("--r", j.r, "largest letter index X_r (jategaonkar)");
  ec->add_option("--deg", j.degree, "word length bound (jategaonkar)");

  auto* mn = app.add_subcommand("mn-inverse", "Malcev-Neumann partial inverse in Q[F]");
  mn->add_option("--expr,-e", j.exprs, "group algebra element, e.g. \"1 - x\"");
  mn->add_option("--M", j.max_power, "number of series terms beyond the first");
  mn->add_option("--alphabet", j.alphabet, "comma-separated generators in order");

  auto* ly = app.add_subcommand("lyndon", "Lyndon word enumeration against brute force");
  ly->add_option("--n", j.n, "letters");
  ly->add_option("--deg", j.degree, "maximum length");

  auto* pb = app.add_subcommand("pbw", "rank of PBW standard monomials");
  pb->add_option("--n", j.n, "letters");
  pb->add_option("--deg", j.degree, "maximum degree");

  auto* si = app.add_subcommand("series-inv", "random two-sided skew series inversion");
  si->add_option("--context", j.context, "q|id|ddt|alpha");
  si->add_option("--s", j.s, "alpha_s parameter for --context alpha");
  si->add_option("--count", j.count, "number of random series");

  auto* it = app.add_subcommand("idtest", "randomized rational identity test");
  it->add_option("--var", fl.vars, "declare a variable");
  it->add_option("--group-var", fl.group_vars, "declare a group-invertible variable");
  it->add_option("--expr,-e", j.exprs, "lhs then rhs");
  it->add_option("--expect", j.expect, "equal|distinct|undefined");

  auto* ht = app.add_subcommand("height", "syntactic inversion height");
  ht->add_option("--var", fl.vars, "declare a variable");
  ht->add_option("--group-var", fl.group_vars, "declare a group-invertible variable");
  ht->add_option("--expr,-e", j.exprs, "expressions");
  ht->add_option("--expect-height", j.expect_height, "fail unless every height equals this");

  auto* oc = app.add_subcommand("order-check", "Magnus order axioms on random words");
  oc->add_option("--count", j.count, "number of random words");
  oc->add_option("--alphabet", j.alphabet, "comma-separated generators in order");

  for (auto* sub : {vi, ec, mn, ly, pb, si, it, ht, oc}) add_common(sub, fl);

  CLI11_PARSE(app, argc, argv);

  JobSpec job;
  try {
    if (!fl.job_file.empty()) {
      std::ifstream in(fl.job_file);
      if (!in) {
        std::cerr << "cannot read " << fl.job_file << '\n';
        return 2;
      }
      job = ffl::cli::job_from_json(ffl::cli::Json::parse(in));
    } else {
      if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 2;
      }
      job = j;
      job.command = app.get_subcommands().front()->get_name();
      for (const auto& v : fl.vars) job.variables.push_back({v, false});
      for (const auto& v : fl.group_vars) job.variables.push_back({v, true});
    }
  } catch (const std::exception& e) {
    std::cerr << "bad job: " << e.what() << '\n';
    return 2;
  }

  const auto report = ffl::cli::run_job(job);
  const std::string text = report.to_json().dump(2) + "\n";
  if (job.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(job.out);
    out << text;
    if (!out) {
      std::cerr << "cannot write " << job.out << '\n';
      return 2;
    }
  }
  std::cerr << report.summary();
  return report.pass() ? 0 : 1;
}
