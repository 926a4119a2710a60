// Copyright 2026 The pyrclip Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks AC1..AC6. Prints one PASS/FAIL line per criterion,
// preceded by indented detail lines, and exits non-zero if any fails.
//
//   pyrclip_acceptance --cli path/to/pyrclip [--only AC1,AC4]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "pyrclip/baseline_clippers.hpp"
#include "pyrclip/corpus.hpp"
#include "pyrclip/harness.hpp"
#include "pyrclip/oracle.hpp"
#include "pyrclip/pc_clipper.hpp"
#include "pyrclip/segment_csv.hpp"

namespace {

using namespace pyrclip;
namespace fs = std::filesystem;

constexpr std::uint64_t kSeed = 20260101;
constexpr std::size_t kCorpusPerCase = 100000;
constexpr std::size_t kPropertyTrials = 100000;
constexpr std::size_t kBenchPerCase = 1000000;
constexpr int kBenchReps = 5;

struct Result {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(std::string const& why) {
    pass = false;
    if (notes.size() < 20) notes.push_back("FAILURE " + why);
  }
  void note(std::string const& s) { notes.push_back(s); }
};

std::string describe(Segment3 const& s) { return "(" + format_segment(s) + ")"; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// The AC1 corpus, shared with AC2 and AC3.
std::vector<std::vector<Segment3>> const& corpus() {
  static std::vector<std::vector<Segment3>> const c = [] {
    std::vector<std::vector<Segment3>> out;
    for (auto const& spec : all_cases()) {
      out.push_back(generate_case(spec, kSeed, kCorpusPerCase));
    }
    return out;
  }();
  return c;
}

Result oracle_equivalence() {
  Result r;
  std::map<Algorithm, std::size_t> verdicts, params;
  std::size_t total = 0;
  for (auto const& segments : corpus()) {
    for (auto const& s : segments) {
      ++total;
      ExactOutcome const exact = clip_exact(s);
      for (Algorithm a : kAllAlgorithms) {
        VerificationVerdict const v = verify(exact, clip_with(a, s), 1e-12);
        if (v.ok()) continue;
        ++(v.kind == VerdictKind::kVerdictMismatch ? verdicts : params)[a];
        r.fail(std::string(to_string(a)) + " " + describe(s) + ": " + v.detail);
      }
    }
  }
  for (Algorithm a : kAllAlgorithms) {
    r.note(std::string(to_string(a)) + ": " + std::to_string(total) +
           " segments, verdict mismatches " + std::to_string(verdicts[a]) +
           ", parameter mismatches " + std::to_string(params[a]));
  }
  return r;
}

// One pass of the counting flavour serves both AC2 and AC3.
struct CountingPass {
  std::size_t max_divisions = 0;
  std::size_t visible_with_division = 0;
  std::size_t visible_inputs = 0;
  std::size_t degenerate_denominators = 0;
  std::vector<std::string> failures;
  PcBranchCounts branches{};
};

CountingPass const& counting_pass() {
  static CountingPass const p = [] {
    CountingPass out;
    counting::reset_pc_branches();
    for (auto const& segments : corpus()) {
      for (auto const& s : segments) {
        counting::Scope const scope;
        try {
          clip_pc_counting(s);
        } catch (DegenerateDenominator const&) {
          ++out.degenerate_denominators;
          out.failures.push_back("division by zero on " + describe(s));
          continue;
        }
        std::size_t const div = scope.elapsed().divisions;
        out.max_divisions = std::max(out.max_divisions, div);
        if (div > 2) out.failures.push_back(std::to_string(div) +
                                            " divisions on " + describe(s));
        if (classify_region(s.a).inside() && classify_region(s.b).inside()) {
          ++out.visible_inputs;
          if (div != 0) {
            ++out.visible_with_division;
            out.failures.push_back("fully visible input divided: " +
                                   describe(s));
          }
        }
      }
    }
    out.branches = counting::pc_branches();
    return out;
  }();
  return p;
}

Result division_budget() {
  Result r;
  CountingPass const& p = counting_pass();
  for (std::size_t i = 0; i < std::min<std::size_t>(p.failures.size(), 20); ++i) {
    r.fail(p.failures[i]);
  }
  r.pass = p.failures.empty();
  r.note("max divisions per call " + std::to_string(p.max_divisions));
  r.note("fully visible inputs " + std::to_string(p.visible_inputs) +
         ", with a division " + std::to_string(p.visible_with_division));
  r.note("division-by-zero events " + std::to_string(p.degenerate_denominators));
  return r;
}

Result branch_coverage() {
  Result r;
  CountingPass const& p = counting_pass();
  std::size_t covered = 0;
  for (std::size_t i = 0; i < kPcBranchCount; ++i) {
    std::string const name(to_string(static_cast<PcBranch>(i)));
    if (p.branches[i] == 0) {
      r.fail("branch never taken: " + name);
    } else {
      ++covered;
    }
  }
  r.note(std::to_string(covered) + " of " + std::to_string(kPcBranchCount) +
         " branches taken");
  return r;
}

// Trial i draws from case 1 + i mod 21.
std::vector<Segment3> property_inputs() {
  std::size_t const per_case =
      (kPropertyTrials + all_cases().size() - 1) / all_cases().size();
  std::vector<std::vector<Segment3>> pools;
  for (auto const& spec : all_cases()) {
    pools.push_back(generate_case(spec, kSeed + 1, per_case));
  }
  std::vector<Segment3> out;
  out.reserve(kPropertyTrials);
  for (std::size_t i = 0; i < kPropertyTrials; ++i) {
    out.push_back(pools[i % pools.size()][i / pools.size()]);
  }
  return out;
}

bool same_interval(ClipOutcome const& x, ClipOutcome const& y, double tol) {
  if (x.kind != y.kind) return false;
  if (!x.accepted()) return true;
  return std::abs(x.t_enter - y.t_enter) <= tol &&
         std::abs(x.t_exit - y.t_exit) <= tol;
}

Result properties() {
  Result r;
  auto const inputs = property_inputs();
  std::mt19937_64 eng(kSeed + 2);
  std::uniform_real_distribution<double> log_lambda(-3, 3);
  std::size_t fails[5] = {};
  char const* names[5] = {"rotation", "scale", "reversal", "idempotence",
                          "degenerate"};

  for (auto const& s : inputs) {
    ClipOutcome const o = clip_pc(s);

    for (int k = 1; k < 4; ++k) {
      if (!same_interval(o, clip_pc(rotate_quarter(s, k)), 1e-12)) {
        ++fails[0];
        r.fail("rotation k=" + std::to_string(k) + " " + describe(s));
      }
    }

    double const lambda = std::pow(10.0, log_lambda(eng));
    Segment3 const scaled{{lambda * s.a.x, lambda * s.a.y, lambda * s.a.z},
                          {lambda * s.b.x, lambda * s.b.y, lambda * s.b.z}};
    if (!same_interval(o, clip_pc(scaled), 1e-12)) {
      ++fails[1];
      r.fail("scale lambda=" + format_double(lambda) + " " + describe(s));
    }

    ClipOutcome const rev = clip_pc({s.b, s.a});
    bool rev_ok = rev.kind == o.kind;
    if (rev_ok && o.accepted() && !(s.a == s.b)) {
      rev_ok = std::abs(rev.t_enter - (1 - o.t_exit)) <= 1e-12 &&
               std::abs(rev.t_exit - (1 - o.t_enter)) <= 1e-12;
    }
    if (!rev_ok) {
      ++fails[2];
      r.fail("reversal " + describe(s));
    }

    if (o.accepted()) {
      Segment3 const out{o.p_enter, o.p_exit};
      ClipOutcome const again = clip_pc(out);
      double const expected_exit = out.a == out.b ? 0.0 : 1.0;
      if (!again.accepted() || std::abs(again.t_enter) > 1e-9 ||
          std::abs(again.t_exit - expected_exit) > 1e-9) {
        ++fails[3];
        r.fail("idempotence " + describe(s));
      }
    }

    for (Point3 const& p : {s.a, s.b}) {
      Segment3 const point{p, p};
      bool const inside = classify_region(p).inside();
      for (Algorithm a : kAllAlgorithms) {
        ClipOutcome const d = clip_with(a, point);
        bool const ok = inside ? (d.accepted() && d.t_enter == 0 && d.t_exit == 0)
                               : !d.accepted();
        if (!ok || clip_exact(point).accepted() != inside) {
          ++fails[4];
          r.fail(std::string("degenerate ") + std::string(to_string(a)) + " " +
                 describe(point));
        }
      }
    }
  }
  for (int i = 0; i < 5; ++i) {
    r.note(std::string(names[i]) + ": " + std::to_string(inputs.size()) +
           " trials, " + std::to_string(fails[i]) + " failures");
  }
  return r;
}

Result benchmark_trend() {
  Result r;
  BenchConfig config;
  config.cases = parse_case_list("all");
  config.n = kBenchPerCase;
  config.seed = kSeed;
  config.reps = kBenchReps;
  BenchReport const report = run_benchmark(config);

  std::vector<double> trend_v1;
  for (auto const& c : report.coefficients) {
    CaseSpec const& spec = case_by_id(c.case_id);
    double const pc_div = report.row(c.case_id, Algorithm::kPc).ops.divisions;
    double const lb_div = report.row(c.case_id, Algorithm::kLb).ops.divisions;
    double const cb_div = report.row(c.case_id, Algorithm::kCb).ops.divisions;
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << "case " << c.case_id << " " << spec.name << ": v1 "
       << c.v1 << " v2 " << c.v2 << " v3 " << c.v3 << ", div pc " << pc_div
       << " lb " << lb_div << " cb " << cb_div;
    r.note(os.str());
    if (pc_div > lb_div || pc_div > cb_div) {
      r.fail("case " + std::to_string(c.case_id) +
             ": PC divides more than a parametric baseline");
    }
    if (spec.expected == OutcomeClass::kVisible && c.v1 < 0.95) {
      r.fail("fully visible case " + std::to_string(c.case_id) + " v1 " +
             format_double(c.v1) + " < 0.95");
    }
    if (spec.expected == OutcomeClass::kPartiallyVisible ||
        spec.expected == OutcomeClass::kRejected) {
      trend_v1.push_back(c.v1);
    }
  }
  std::sort(trend_v1.begin(), trend_v1.end());
  std::size_t const m = trend_v1.size();
  double const median =
      m % 2 ? trend_v1[m / 2] : 0.5 * (trend_v1[m / 2 - 1] + trend_v1[m / 2]);
  r.note("median v1 over " + std::to_string(m) +
         " partially visible and rejected cases: " + format_double(median));
  if (median < 1.05) r.fail("median v1 " + format_double(median) + " < 1.05");
  return r;
}

std::string slurp(fs::path const& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(std::string const& command) { return std::system(command.c_str()); }

std::string shell_quote(fs::path const& p) { return "'" + p.string() + "'"; }

Result cli_round_trip(std::string const& cli) {
  Result r;
  if (cli.empty()) {
    r.fail("no --cli binary given");
    return r;
  }
  fs::path const dir = fs::temp_directory_path() /
                       ("pyrclip_ac6_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::path const in = dir / "in.csv";
  {
    std::ofstream os(in, std::ios::binary);
    for (auto const& spec : all_cases()) {
      for (auto const& s : generate_case(spec, kSeed + 3, 500)) {
        os << format_segment(s) << '\n';
      }
    }
  }
  for (char const* algo : {"pc", "cs", "lb", "cb"}) {
    fs::path const out1 = dir / (std::string(algo) + "_1.csv");
    fs::path const out2 = dir / (std::string(algo) + "_2.csv");
    fs::path const back = dir / (std::string(algo) + "_back.csv");
    std::string const base = shell_quote(cli) + " clip --algo " + algo + " --in ";
    if (run(base + shell_quote(in) + " --out " + shell_quote(out1)) != 0 ||
        run(base + shell_quote(in) + " --out " + shell_quote(out2)) != 0 ||
        run(base + shell_quote(out1) + " --out " + shell_quote(back)) != 0) {
      r.fail(std::string(algo) + ": clip command failed");
      continue;
    }
    if (slurp(out1) != slurp(out2)) {
      r.fail(std::string(algo) + ": output differs between identical runs");
    }
    std::ifstream back_in(back, std::ios::binary);
    std::size_t rows = 0, bad = 0;
    for (std::string line; std::getline(back_in, line);) {
      ++rows;
      std::vector<std::string> f;
      std::stringstream ss(line);
      for (std::string field; std::getline(ss, field, ',');) f.push_back(field);
      bool ok = f.size() >= 9 && f[6] == "Accepted";
      if (ok) {
        bool const point = f[0] == f[3] && f[1] == f[4] && f[2] == f[5];
        double const t0 = parse_double(f[7]);
        double const t1 = parse_double(f[8]);
        ok = std::abs(t0) <= 1e-9 && std::abs(t1 - (point ? 0.0 : 1.0)) <= 1e-9;
      }
      if (!ok) {
        ++bad;
        r.fail(std::string(algo) + ": re-clip row " + line);
      }
    }
    std::ifstream first(out1, std::ios::binary);
    auto const accepted = read_segments(first).size();
    if (rows != accepted) {
      r.fail(std::string(algo) + ": " + std::to_string(accepted) +
             " accepted outputs but " + std::to_string(rows) + " re-clip rows");
    }
    r.note(std::string(algo) + ": " + std::to_string(rows) +
           " output segments re-clipped, " + std::to_string(bad) +
           " not Accepted [0,1]; repeated runs byte-identical");
  }
  fs::remove_all(dir);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pyrclip acceptance checks"};
  std::string cli;
  std::string only;
  app.add_option("--cli", cli, "Path to the pyrclip command-line tool");
  app.add_option("--only", only, "Comma list of criteria, e.g. AC1,AC6");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    char const* id;
    char const* title;
    std::function<Result()> check;
  };
  std::vector<Criterion> const criteria = {
      {"AC1", "oracle equivalence, 21 cases x 1e5, tol 1e-12", oracle_equivalence},
      {"AC2", "pc division budget <= 2, 0 when fully visible", division_budget},
      {"AC3", "pc branch coverage over the corpus", branch_coverage},
      {"AC4", "property suites, 1e5 trials each", properties},
      {"AC5", "benchmark trend, 1e6 segments per case", benchmark_trend},
      {"AC6", "cli clip round trip and byte stability",
       [&] { return cli_round_trip(cli); }},
  };

  std::set<std::string> selected;
  std::stringstream ss(only);
  for (std::string id; std::getline(ss, id, ',');) selected.insert(id);

  bool all_pass = true;
  for (auto const& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    auto const start = std::chrono::steady_clock::now();
    Result const r = c.check();
    double const elapsed = seconds_since(start);
    for (auto const& n : r.notes) std::cout << "    " << n << '\n';
    std::ostringstream time;
    time.precision(1);
    time << std::fixed << elapsed;
    std::cout << c.id << ' ' << (r.pass ? "PASS" : "FAIL") << ": " << c.title
              << " (" << time.str() << " s)" << std::endl;
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
