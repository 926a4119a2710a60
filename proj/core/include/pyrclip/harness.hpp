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

// Timing and op-count harness for the four clippers.
//
// Timings use the plain-double kernels on a pregenerated, already validated
// array: one warm-up pass, then `reps` passes on std::chrono::steady_clock,
// and the fastest pass is reported. A checksum of every outcome is kept so
// the work cannot be optimised away. Timed regions are single-threaded.
//
// Op counts come from the CountedReal instantiation and never share a run
// with timing.

#ifndef PYRCLIP_HARNESS_HPP_
#define PYRCLIP_HARNESS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pyrclip/clip_outcome.hpp"
#include "pyrclip/counted_real.hpp"
#include "pyrclip/geometry.hpp"
#include "pyrclip/oracle.hpp"

namespace pyrclip {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Algorithm { kPc, kCs, kLb, kCb };

inline constexpr std::array<Algorithm, 4> kAllAlgorithms = {
    Algorithm::kPc, Algorithm::kCs, Algorithm::kLb, Algorithm::kCb};

std::string_view to_string(Algorithm a);
// "pc", "cs", "lb", "cb"; throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view name);

// Validated double-precision clip through the named algorithm.
ClipOutcome clip_with(Algorithm a, Segment3 const& s,
                      ClipMode mode = ClipMode::kStrict);

// Counting-flavour clip (Strict); returns the outcome lowered to double and
// adds the operations performed to *counts.
ClipOutcome clip_counted(Algorithm a, Segment3 const& s, OpCounts* counts);

struct TimingResult {
  double wall_seconds = 0;         // fastest repetition
  std::vector<double> rep_seconds;  // every repetition, in order
  double checksum = 0;
  bool empty = false;               // no segments: no work was timed
};

// segments must satisfy the Strict preconditions (finite, z >= 0); the
// timed kernels do not re-check them.
TimingResult time_algorithm(Algorithm a, std::span<Segment3 const> segments,
                            int reps);

// Total over all segments.
OpCounts count_ops(Algorithm a, std::span<Segment3 const> segments);

struct MeanOpCounts {
  double comparisons = 0;
  double additions = 0;
  double multiplications = 0;
  double divisions = 0;
};

MeanOpCounts mean_per_segment(OpCounts const& total, std::size_t n);

struct BenchConfig {
  std::vector<int> cases;
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  int reps = 5;
};

struct BenchRow {
  int case_id = 0;
  Algorithm algorithm = Algorithm::kPc;
  TimingResult timing;
  double segments_per_second = 0;
  MeanOpCounts ops;
};

// v1 = T_CS / T_PC, v2 = T_LB / T_PC, v3 = T_CB / T_PC.
struct CoefficientRow {
  int case_id = 0;
  double v1 = 0;
  double v2 = 0;
  double v3 = 0;
};

struct BenchReport {
  std::string tool_version{kToolVersion};
  std::string prng{};
  std::uint64_t seed = 0;
  std::size_t n = 0;
  int reps = 0;
  std::vector<BenchRow> rows;  // case-major, algorithms in kAllAlgorithms order
  std::vector<CoefficientRow> coefficients;

  BenchRow const& row(int case_id, Algorithm a) const;
};

CoefficientRow coefficients_from(int case_id, double t_pc, double t_cs,
                                 double t_lb, double t_cb);

BenchReport run_benchmark(BenchConfig const& config);

enum class ReportFormat { kCsv, kJson };

std::string emit_report(BenchReport const& report, ReportFormat format);

// Shortest representation that parses back to the same double.
std::string format_double(double v);

}  // namespace pyrclip

#endif  // PYRCLIP_HARNESS_HPP_
