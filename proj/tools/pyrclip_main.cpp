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

// pyrclip: clip segment files, check the clippers against the exact
// reference on the generated cases, and run the timing benchmark.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error,
// 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pyrclip/corpus.hpp"
#include "pyrclip/harness.hpp"
#include "pyrclip/oracle.hpp"
#include "pyrclip/segment_csv.hpp"

namespace {

using namespace pyrclip;

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kIo = 3,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "-" means the standard stream.
class Output {
 public:
  explicit Output(std::string path) : path_(std::move(path)) {
    if (path_ != "-") {
      file_ = std::make_unique<std::ofstream>(path_, std::ios::binary);
      if (!*file_) throw IoError("cannot open '" + path_ + "' for writing");
    }
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void close() {
    stream().flush();
    if (!stream()) throw IoError("write to '" + path_ + "' failed");
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
};

std::vector<Segment3> load_segments(std::string const& path) {
  if (path == "-") return read_segments(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  try {
    return read_segments(in);
  } catch (CsvError const& e) {
    throw CsvError(e.line(), path + ": " + e.what());
  }
}

struct ClipArgs {
  std::string in;
  std::string out;
  std::string mode = "strict";
  std::string algo = "pc";
};

int run_clip(ClipArgs const& args) {
  ClipMode const mode =
      args.mode == "preclip" ? ClipMode::kPreClipZ : ClipMode::kStrict;
  Algorithm const algo = parse_algorithm(args.algo);
  auto const segments = load_segments(args.in);
  Output out(args.out);
  std::size_t row = 0;
  for (auto const& s : segments) {
    ++row;
    try {
      out.stream() << format_clip_row(s, clip_with(algo, s, mode)) << '\n';
    } catch (DomainError const& e) {
      throw DomainError("segment " + std::to_string(row) + ": " + e.what());
    }
  }
  out.close();
  return kOk;
}

struct VerifyArgs {
  std::string cases = "all";
  std::size_t n = 100000;
  std::uint64_t seed = 1;
  double tol = 1e-12;
};

// Mismatching segments are printed as plain input rows, so the output can
// be fed to `clip` to reproduce them. Everything else is a '#' comment.
int run_verify(VerifyArgs const& args) {
  auto const ids = parse_case_list(args.cases);
  std::size_t total_mismatches = 0;
  for (int id : ids) {
    auto const segments = generate_case(case_by_id(id), args.seed, args.n);
    std::map<Algorithm, std::size_t> verdict_mismatch, parameter_mismatch;
    for (auto const& s : segments) {
      ExactOutcome const exact = clip_exact(s);
      for (Algorithm a : kAllAlgorithms) {
        VerificationVerdict const v = verify(exact, clip_with(a, s), args.tol);
        if (v.ok()) continue;
        (v.kind == VerdictKind::kVerdictMismatch ? verdict_mismatch
                                                 : parameter_mismatch)[a]++;
        std::cout << "# case " << id << ' ' << to_string(a) << ' '
                  << to_string(v.kind) << ": " << v.detail << '\n'
                  << format_segment(s) << '\n';
      }
    }
    for (Algorithm a : kAllAlgorithms) {
      std::size_t const vm = verdict_mismatch[a];
      std::size_t const pm = parameter_mismatch[a];
      total_mismatches += vm + pm;
      std::cout << "# case " << id << ' ' << to_string(a)
                << " segments=" << segments.size() << " verdict_mismatch=" << vm
                << " parameter_mismatch=" << pm << '\n';
    }
  }
  std::cout << "# total_mismatches=" << total_mismatches << '\n';
  return total_mismatches == 0 ? kOk : kVerifyFailed;
}

struct BenchArgs {
  std::string cases = "all";
  std::size_t n = 100000;
  std::uint64_t seed = 1;
  int reps = 5;
  std::string format = "csv";
  std::string out = "-";
};

int run_bench(BenchArgs const& args) {
  BenchConfig config;
  config.cases = parse_case_list(args.cases);
  config.n = args.n;
  config.seed = args.seed;
  config.reps = args.reps;
  ReportFormat const format =
      args.format == "json" ? ReportFormat::kJson : ReportFormat::kCsv;
  Output out(args.out);
  out.stream() << emit_report(run_benchmark(config), format);
  out.close();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-segment clipping against the unit pyramid"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  ClipArgs clip_args;
  auto* clip = app.add_subcommand("clip", "Clip every segment in a CSV file");
  clip->add_option("--in", clip_args.in, "Input CSV, '-' for stdin")
      ->required();
  clip->add_option("--out", clip_args.out, "Output CSV, '-' for stdout")
      ->required();
  clip->add_option("--mode", clip_args.mode, "Handling of z < 0")
      ->check(CLI::IsMember({"strict", "preclip"}));
  clip->add_option("--algo", clip_args.algo, "Clipping algorithm")
      ->check(CLI::IsMember({"pc", "cs", "lb", "cb"}));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Compare all four clippers with the exact reference");
  verify_cmd->add_option("--cases", verify_args.cases, "'all' or e.g. 1,3,5-9");
  verify_cmd->add_option("--n", verify_args.n, "Segments per case")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_args.seed, "Corpus seed");
  verify_cmd->add_option("--tol", verify_args.tol, "Parameter tolerance")
      ->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time and count the four clippers");
  bench->add_option("--cases", bench_args.cases, "'all' or e.g. 1,3,5-9");
  bench->add_option("--n", bench_args.n, "Segments per case")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed, "Corpus seed");
  bench->add_option("--reps", bench_args.reps, "Timed repetitions")
      ->check(CLI::PositiveNumber);
  bench->add_option("--format", bench_args.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--out", bench_args.out, "Report file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*clip) return run_clip(clip_args);
    if (*verify_cmd) return run_verify(verify_args);
    return run_bench(bench_args);
  } catch (IoError const& e) {
    std::cerr << "pyrclip: " << e.what() << '\n';
    return kIo;
  } catch (std::exception const& e) {
    std::cerr << "pyrclip: " << e.what() << '\n';
    return kUsage;
  }
}
