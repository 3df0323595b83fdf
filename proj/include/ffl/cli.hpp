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

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ffl/error.hpp"
#include "ffl/field.hpp"
#include "ffl/freealg.hpp"
#include "ffl/freegroup.hpp"
#include "ffl/gen.hpp"
#include "ffl/lyndon.hpp"
#include "ffl/matval.hpp"
#include "ffl/ratexpr.hpp"
#include "ffl/skewpoly.hpp"

// Job description, report format and the command implementations behind
// the `ffl` tool. Kept in a header so the tests can drive commands directly.
namespace ffl::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchema = "ffl-report/1";

struct VariableDecl {
  std::string name;
  bool group = false;
};

struct JobSpec {
  std::string command;
  std::vector<VariableDecl> variables;
  std::vector<std::string> exprs;
  std::string family = "generic";  // verify-inverse
  std::string kind = "cohn";       // embed-checks
  std::string context = "ddt";     // series-inv: q | id | ddt | alpha
  std::string alphabet = "x,y";    // mn-inverse, order-check
  std::string expect;              // idtest: equal | distinct | undefined
  std::string field = "fp";
  long m = 2;
  long n = 2;
  long s = 1;
  long r = 1;
  long degree = 3;
  long imax = 10;
  long trunc = kDefaultTruncation;
  long max_power = 3;
  long count = 50;
  long expect_height = -1;
  std::vector<std::size_t> sizes{4};
  std::size_t trials = 3;
  std::size_t resample = 8;
  std::uint64_t seed = 0;
  std::uint64_t prime = kMersenne61;
  std::string out;
};

inline Json to_json(const JobSpec& j) {
  Json vars = Json::array();
  for (const auto& v : j.variables) vars.push_back({{"name", v.name}, {"group", v.group}});
  return Json{{"command", j.command}, {"variables", vars},   {"exprs", j.exprs},      {"family", j.family},
              {"kind", j.kind},       {"context", j.context}, {"alphabet", j.alphabet}, {"expect", j.expect},
              {"field", j.field},     {"m", j.m},             {"n", j.n},              {"s", j.s},
              {"r", j.r},             {"degree", j.degree},   {"imax", j.imax},        {"trunc", j.trunc},
              {"max_power", j.max_power}, {"count", j.count}, {"expect_height", j.expect_height},
              {"sizes", j.sizes},     {"trials", j.trials},   {"resample", j.resample}, {"seed", j.seed},
              {"prime", j.prime}};
}

// Missing keys keep their defaults; unknown keys are rejected so typos surface.
inline JobSpec job_from_json(const Json& in) {
  static const std::set<std::string> known{"command", "variables", "exprs", "family", "kind", "context",
                                           "alphabet", "expect", "field", "m", "n", "s", "r", "degree",
                                           "imax", "trunc", "max_power", "count", "expect_height", "sizes",
                                           "trials", "resample", "seed", "prime", "out"};
  if (!in.is_object()) fail(ErrorKind::ParseError, "job must be a JSON object");
  for (auto it = in.begin(); it != in.end(); ++it)
    if (!known.count(it.key())) fail(ErrorKind::ParseError, "unknown job key '" + it.key() + "'");
  JobSpec j;
  auto get = [&](const char* key, auto& dst) {
    if (in.contains(key)) in.at(key).get_to(dst);
  };
  try {
    get("command", j.command);
    if (in.contains("variables")) {
      for (const auto& v : in.at("variables")) {
        if (v.is_string()) {
          j.variables.push_back({v.get<std::string>(), false});
        } else {
          j.variables.push_back({v.at("name").get<std::string>(), v.value("group", false)});
        }
      }
    }
    get("exprs", j.exprs);
    get("family", j.family);
    get("kind", j.kind);
    get("context", j.context);
    get("alphabet", j.alphabet);
    get("expect", j.expect);
    get("field", j.field);
    get("m", j.m);
    get("n", j.n);
    get("s", j.s);
    get("r", j.r);
    get("degree", j.degree);
    get("imax", j.imax);
    get("trunc", j.trunc);
    get("max_power", j.max_power);
    get("count", j.count);
    get("expect_height", j.expect_height);
    get("sizes", j.sizes);
    get("trials", j.trials);
    get("resample", j.resample);
    get("seed", j.seed);
    get("prime", j.prime);
    get("out", j.out);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad job field: ") + e.what());
  }
  return j;
}

struct Check {
  std::string name;
  bool pass = false;
  Json details = Json::object();
};

struct Report {
  JobSpec job;
  std::vector<Check> checks;
  double elapsed_ms = 0;

  bool pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  void add(std::string name, bool ok, Json details = Json::object()) {
    checks.push_back({std::move(name), ok, std::move(details)});
  }

  Json to_json() const {
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    return Json{{"schema", kSchema}, {"tool_version", kToolVersion}, {"job", cli::to_json(job)},
                {"checks", cs},      {"elapsed_ms", elapsed_ms},     {"pass", pass()}};
  }

  std::string summary() const {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& c : checks) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
      passed += c.pass ? 1 : 0;
    }
    os << job.command << ": " << passed << "/" << checks.size() << " checks passed\n";
    return os.str();
  }
};

inline Json verdict_to_json(const Verdict& v) {
  Json j{{"outcome", std::string(to_string(v.outcome))}};
  if (v.witness) {
    j["witness"] = {{"seed", v.witness->seed}, {"size", v.witness->size}, {"row", v.witness->row},
                    {"col", v.witness->col},   {"lhs", v.witness->lhs},   {"rhs", v.witness->rhs}};
  }
  j["trials"] = v.trials;
  j["singular_trials"] = v.singular_trials;
  j["failure_bound"] = v.failure_bound;
  j["elapsed_ms"] = v.elapsed_ms;
  return j;
}

namespace detail {

inline std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty()) fail(ErrorKind::InvalidArgument, "empty alphabet");
  return out;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InvalidArgument, what);
}

template <class Fn>
auto with_field(const JobSpec& job, Fn&& fn) {
  if (job.field == "q") return fn(RationalField{});
  if (job.field == "fp") return fn(PrimeField(job.prime));
  fail(ErrorKind::InvalidArgument, "field must be 'q' or 'fp'");
}

// Per-trial outcome of verify-inverse.
struct InverseTrial {
  bool defined = false;
  std::uint64_t seed = 0;
  bool ab = false;
  bool ba = false;
  bool numeric = false;
};

template <class Field>
void verify_inverse_sizes(const JobSpec& job, const Field& f, const ExprPool& pool, const ExprMatrix& a,
                          const ExprMatrix& b, Report& rep) {
  using Mat = Matrix<typename Field::value_type>;
  const std::size_t m = a.rows();
  for (std::size_t n : job.sizes) {
    require(n >= 1, "sizes must be >= 1");
    std::vector<InverseTrial> res(job.trials);
    parallel_for(job.trials, thread_budget(0), [&](std::size_t t) {
      for (std::size_t k = 0; k < std::max<std::size_t>(job.resample, 1); ++k) {
        const std::uint64_t s = derive_seed(derive_seed(job.seed, n, t), k);
        auto asg = random_assignment(pool, f, n, s);
        Evaluator<Field> ev(asg);
        try {
          const Mat ea = eval_matrix(a, ev, f, n);
          const Mat eb = eval_matrix(b, ev, f, n);
          const Mat id = Mat::identity(f, m * n);
          auto direct = try_inverse(f, ea);
          res[t] = {true, s, ea * eb == id, eb * ea == id, direct && *direct == eb};
          return;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SingularInversion) throw;
        }
      }
    });
    std::size_t defined = 0;
    bool all_ok = true;
    Json trials = Json::array();
    for (const auto& r : res) {
      if (!r.defined) {
        trials.push_back({{"defined", false}});
        continue;
      }
      ++defined;
      all_ok = all_ok && r.ab && r.ba && r.numeric;
      trials.push_back({{"defined", true}, {"seed", r.seed}, {"AB=I", r.ab}, {"BA=I", r.ba},
                        {"matches_numeric_inverse", r.numeric}});
    }
    const std::string at = "@N=" + std::to_string(n);
    rep.add("invertible" + at, defined * 5 >= job.trials * 4 && defined > 0,
            {{"defined_trials", defined}, {"trials", job.trials}});
    rep.add("inverse_identities" + at, defined > 0 && all_ok, {{"trials", trials}});
  }
}

inline Json heights_json(const ExprMatrix& b) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(b(i, j)->height);
    rows.push_back(row);
  }
  return rows;
}

inline bool is_lyndon_by_rotation(const FreeWord& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    FreeWord rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    if (!(w < rot)) return false;
  }
  return !w.empty();
}

inline std::vector<FreeWord> all_words(std::uint32_t letters, std::size_t len) {
  std::vector<FreeWord> out{FreeWord{}};
  for (std::size_t d = 0; d < len; ++d) {
    std::vector<FreeWord> next;
    for (const auto& w : out)
      for (std::uint32_t c = 0; c < letters; ++c) {
        FreeWord v = w;
        v.push_back(c);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands.

inline void cmd_verify_inverse(const JobSpec& job, Report& rep) {
  detail::require(job.m >= 1 && job.m <= 4, "m must be in 1..4");
  const FamilyKind kind = family_from_string(job.family);
  ExprPool pool;
  const ExprMatrix a = build_family(pool, kind, static_cast<std::size_t>(job.m));
  const ExprMatrix b = matrix_inverse_expr(pool, a);
  const std::size_t want = a.max_height() + static_cast<std::size_t>(job.m);
  bool heights_ok = true;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) heights_ok = heights_ok && b(i, j)->height == want;
  Json d{{"heights", detail::heights_json(b)}, {"expected", want}, {"dag_nodes", pool.size()}};
  if (job.m == 1) d["inverse"] = print(b(0, 0));
  rep.add("inverse_heights", heights_ok, d);
  detail::with_field(job, [&](const auto& f) { detail::verify_inverse_sizes(job, f, pool, a, b, rep); });
}

inline void cmd_embed_checks(const JobSpec& job, Report& rep) {
  if (job.kind == "cohn") {
    detail::require(job.n >= 1 && job.n <= 3, "n must be in 1..3");
    detail::require(job.imax >= 1 && job.imax <= 13, "imax must be in 1..13");
    const auto n = static_cast<std::size_t>(job.n);
    const auto alpha = cohn_alphabet(n);
    const auto x = QFreePoly::letter(alpha, "x");
    for (std::size_t i = 0; i < static_cast<std::size_t>(job.imax); ++i) {
      const auto lhs = bracket(x, cohn_embed(i, n, alpha));
      const auto rhs = cohn_embed(i + n, n, alpha);
      rep.add("cohn[n=" + std::to_string(n) + ",i=" + std::to_string(i) + "]", lhs == rhs,
              {{"terms", rhs.terms().size()}});
    }
  } else if (job.kind == "jategaonkar") {
    detail::require(job.s >= 1 && job.s <= 3, "s must be in 1..3");
    detail::require(job.r >= 0 && job.r <= job.s, "r must be in 0..s");
    detail::require(job.degree >= 0 && job.degree <= 4, "degree must be in 0..4");
    std::map<std::pair<long, long>, std::vector<std::uint32_t>> seen;
    std::size_t words = 0;
    bool monomial = true;
    std::string clash;
    for (long len = 0; len <= job.degree; ++len) {
      for (const auto& w : detail::all_words(static_cast<std::uint32_t>(job.r + 1), static_cast<std::size_t>(len))) {
        ++words;
        const auto ek = monomial_exponents(jategaonkar_image(w, job.s, job.r));
        if (ek.first < 0) monomial = false;
        auto [it, fresh] = seen.emplace(ek, w);
        if (!fresh && clash.empty()) clash = "(" + std::to_string(ek.first) + "," + std::to_string(ek.second) + ")";
      }
    }
    rep.add("jategaonkar_monomial", monomial, {{"words", words}});
    Json d{{"words", words}, {"distinct_images", seen.size()}};
    if (!clash.empty()) d["first_clash"] = clash;
    rep.add("jategaonkar_distinct", seen.size() == words, d);
  } else if (job.kind == "gamma_eps") {
    detail::require(job.s >= 1 && job.s <= 3, "s must be in 1..3");
    detail::require(job.imax >= 0 && job.imax <= 6, "imax must be in 0..6");
    const auto base = static_cast<std::size_t>(job.s + 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(job.imax); ++i) {
      rep.add("gamma_eps[s=" + std::to_string(job.s) + ",i=" + std::to_string(i) + "]", gamma_eps_check(i, job.s),
              {{"lhs_exp", upow(base, i)}, {"rhs_exp", upow(base, i + 1)}});
    }
  } else {
    fail(ErrorKind::UnsupportedKind, "embed kind must be cohn, jategaonkar or gamma_eps");
  }
}

inline void cmd_mn_inverse(const JobSpec& job, Report& rep) {
  detail::require(job.exprs.size() == 1, "mn-inverse takes exactly one expression");
  detail::require(job.max_power >= 0 && job.max_power <= 12, "M must be in 0..12");
  const auto alpha = Alphabet::make(detail::split_names(job.alphabet));
  const MagnusOrderContext ctx(alpha);
  const GroupAlgElt f = parse_group_alg(job.exprs[0], *alpha);
  const auto [c, r] = mn_partial_inverse(ctx, f, static_cast<std::size_t>(job.max_power));
  const bool exact = f * c == GroupAlgElt::one() - r;
  bool above = true;
  for (const auto& [w, coef] : r.terms()) above = above && ctx.sign(w) > 0;
  rep.add("exact_identity", exact, {{"f", f.str(*alpha)}, {"c", c.str(*alpha)}, {"r", r.str(*alpha)}});
  rep.add("remainder_above_identity", above, {{"remainder_terms", r.terms().size()}});
}

inline void cmd_lyndon(const JobSpec& job, Report& rep) {
  detail::require(job.n >= 1 && job.n <= 4, "n must be in 1..4");
  detail::require(job.degree >= 1 && job.degree <= 10, "degree must be in 1..10");
  const auto n = static_cast<std::size_t>(job.n);
  const auto d = static_cast<std::size_t>(job.degree);
  const auto elems = lyndon_words(n, d);
  std::vector<std::size_t> counts(d + 1, 0), brute(d + 1, 0);
  std::set<FreeWord> got;
  for (const auto& e : elems) {
    ++counts[e.degree];
    got.insert(e.word);
  }
  std::set<FreeWord> want;
  for (std::size_t len = 1; len <= d; ++len)
    for (const auto& w : detail::all_words(static_cast<std::uint32_t>(n), len))
      if (detail::is_lyndon_by_rotation(w)) {
        ++brute[len];
        want.insert(w);
      }
  counts.erase(counts.begin());
  brute.erase(brute.begin());
  rep.add("lyndon_counts", counts == brute && got == want, {{"counts", counts}, {"brute_force", brute}});
}

inline void cmd_pbw(const JobSpec& job, Report& rep) {
  detail::require(job.n >= 1 && job.n <= 3, "n must be in 1..3");
  detail::require(job.degree >= 0 && job.degree <= 6, "degree must be in 0..6");
  const auto r = pbw_independence_check(static_cast<std::size_t>(job.n), static_cast<std::size_t>(job.degree));
  rep.add("pbw_full_rank", r.independent() && r.rank == r.word_monomials,
          {{"standard_monomials", r.standard_monomials}, {"word_monomials", r.word_monomials}, {"rank", r.rank},
           {"monomials_per_degree", r.monomials_per_degree}, {"words_per_degree", r.words_per_degree}});
}

inline SkewContext context_from_string(const std::string& name, long s) {
  if (name == "q") return SkewContext::rational();
  if (name == "id") return SkewContext::identity();
  if (name == "ddt") return SkewContext::differential();
  if (name == "alpha") return SkewContext::endomorphism(s);
  fail(ErrorKind::InvalidContext, "context must be q, id, ddt or alpha");
}

inline void cmd_series_inv(const JobSpec& job, Report& rep) {
  detail::require(job.trunc >= 0 && job.trunc <= 24, "trunc must be in 0..24");
  detail::require(job.count >= 1, "count must be >= 1");
  const SkewContext ctx = context_from_string(job.context, job.s);
  const auto one = SkewSeries::one(ctx, job.trunc);
  const auto count = static_cast<std::size_t>(job.count);
  std::vector<std::pair<bool, bool>> ok(count);
  std::vector<std::string> shown(count);
  parallel_for(count, thread_budget(0), [&](std::size_t k) {
    Rng rng = Rng::derive(job.seed, 0x5e12, k);
    const auto f = gen::series(rng, ctx, job.trunc, 0, 4);
    const auto g = series_inv(f);
    ok[k] = {f * g == one, g * f == one};
    if (!ok[k].first || !ok[k].second) shown[k] = f.str();
  });
  std::size_t right = 0, left = 0;
  Json failures = Json::array();
  for (std::size_t k = 0; k < count; ++k) {
    right += ok[k].first ? 1 : 0;
    left += ok[k].second ? 1 : 0;
    if (!shown[k].empty() && failures.size() < 3) failures.push_back(shown[k]);
  }
  rep.add("series_inverse_right", right == static_cast<std::size_t>(job.count),
          {{"passed", right}, {"count", job.count}, {"context", ctx.str()}, {"failures", failures}});
  rep.add("series_inverse_left", left == static_cast<std::size_t>(job.count), {{"passed", left}, {"count", job.count}});
}

inline void declare_all(ExprPool& pool, const JobSpec& job) {
  for (const auto& v : job.variables) pool.declare(v.name, v.group);
}

inline void cmd_idtest(const JobSpec& job, Report& rep) {
  detail::require(job.exprs.size() == 2, "idtest takes exactly two expressions");
  ExprPool pool;
  declare_all(pool, job);
  const Expr lhs = parse(pool, job.exprs[0]);
  const Expr rhs = parse(pool, job.exprs[1]);
  IdentityTestOptions opt;
  opt.sizes = job.sizes;
  opt.trials = job.trials;
  opt.seed = job.seed;
  opt.resample_budget = job.resample;
  const Verdict v = detail::with_field(job, [&](const auto& f) { return identity_test(pool, lhs, rhs, f, opt); });
  const std::string expect = job.expect.empty() ? "equal" : job.expect;
  Outcome want;
  if (expect == "equal") {
    want = Outcome::EqualProbably;
  } else if (expect == "distinct") {
    want = Outcome::Distinct;
  } else if (expect == "undefined") {
    want = Outcome::Undefined;
  } else {
    fail(ErrorKind::InvalidArgument, "expect must be equal, distinct or undefined");
  }
  Json d = verdict_to_json(v);
  d["expected"] = std::string(to_string(want));
  rep.add("verdict", v.outcome == want, d);
}

inline void cmd_height(const JobSpec& job, Report& rep) {
  detail::require(!job.exprs.empty(), "height needs at least one expression");
  ExprPool pool;
  declare_all(pool, job);
  for (std::size_t k = 0; k < job.exprs.size(); ++k) {
    const Expr e = parse(pool, job.exprs[k]);
    const bool ok = job.expect_height < 0 || e->height == static_cast<std::size_t>(job.expect_height);
    rep.add("height[" + std::to_string(k) + "]", ok,
            {{"expr", print(e)}, {"height", e->height}, {"dag_nodes", dag_size(e)}});
  }
}

inline void cmd_order_check(const JobSpec& job, Report& rep) {
  detail::require(job.count >= 3, "count must be >= 3");
  const auto alpha = Alphabet::make(detail::split_names(job.alphabet));
  const auto gens = static_cast<std::uint32_t>(alpha->size());
  const MagnusOrderContext ctx(alpha);
  Rng rng = Rng::derive(job.seed, 0x0bde);
  std::vector<GroupWord> ws;
  for (long k = 0; k < job.count; ++k) ws.push_back(gen::group_word(rng, gens, 5));
  auto flip = [](Ordering o) {
    return o == Ordering::Less ? Ordering::Greater : o == Ordering::Greater ? Ordering::Less : Ordering::Equal;
  };
  std::size_t total_bad = 0, trans_bad = 0, inv_bad = 0, trans_checked = 0;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    const auto& g = ws[k];
    const auto& h = ws[(k * 7 + 1) % ws.size()];
    const auto& u = ws[(k * 13 + 5) % ws.size()];
    const Ordering gh = ctx.compare(g, h);
    if (gh != flip(ctx.compare(h, g)) || ((gh == Ordering::Equal) != (g == h))) ++total_bad;
    const Ordering hu = ctx.compare(h, u);
    if (gh != Ordering::Greater && hu != Ordering::Greater) {
      ++trans_checked;
      if (ctx.compare(g, u) == Ordering::Greater) ++trans_bad;
    }
    if (ctx.compare(u * g, u * h) != gh || ctx.compare(g * u, h * u) != gh) ++inv_bad;
  }
  rep.add("totality_antisymmetry", total_bad == 0, {{"words", ws.size()}, {"violations", total_bad}});
  rep.add("transitivity", trans_bad == 0, {{"triples", trans_checked}, {"violations", trans_bad}});
  rep.add("bi_invariance", inv_bad == 0, {{"violations", inv_bad}});

  std::size_t lt_bad = 0;
  const long pairs = std::max<long>(job.count / 5, 1);
  for (long k = 0; k < pairs; ++k) {
    const auto f = gen::group_alg(rng, gens, 4, 3);
    const auto g = gen::group_alg(rng, gens, 4, 3);
    const auto [cf, wf] = least_term(ctx, f);
    const auto [cg, wg] = least_term(ctx, g);
    const auto [cfg, wfg] = least_term(ctx, f * g);
    if (!(wfg == wf * wg) || !(cfg == cf * cg)) ++lt_bad;
  }
  rep.add("least_term_multiplicative", lt_bad == 0, {{"pairs", pairs}, {"violations", lt_bad}});
}

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify-inverse", "embed-checks", "mn-inverse", "lyndon", "pbw",
                                              "series-inv",     "idtest",       "height",     "order-check"};
  return names;
}

// Runs the job; library errors become a failed "error" check rather than
// escaping, so every run yields a report.
inline Report run_job(const JobSpec& job) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.job = job;
  try {
    if (job.command == "verify-inverse") {
      cmd_verify_inverse(job, rep);
    } else if (job.command == "embed-checks") {
      cmd_embed_checks(job, rep);
    } else if (job.command == "mn-inverse") {
      cmd_mn_inverse(job, rep);
    } else if (job.command == "lyndon") {
      cmd_lyndon(job, rep);
    } else if (job.command == "pbw") {
      cmd_pbw(job, rep);
    } else if (job.command == "series-inv") {
      cmd_series_inv(job, rep);
    } else if (job.command == "idtest") {
      cmd_idtest(job, rep);
    } else if (job.command == "height") {
      cmd_height(job, rep);
    } else if (job.command == "order-check") {
      cmd_order_check(job, rep);
    } else {
      fail(ErrorKind::UnsupportedKind, "unknown command '" + job.command + "'");
    }
  } catch (const Error& e) {
    rep.add("error", false, {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}});
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace ffl::cli
