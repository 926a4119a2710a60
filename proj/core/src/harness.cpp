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

#include "pyrclip/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pyrclip/baseline_clippers.hpp"
#include "pyrclip/corpus.hpp"
#include "pyrclip/detail/traits.hpp"
#include "pyrclip/pc_clipper.hpp"

namespace pyrclip {
namespace {

using Kernel = ClipOutcome (*)(Point3 const&, Point3 const&);

Kernel kernel_for(Algorithm a) {
  switch (a) {
    case Algorithm::kPc:
      return &detail::clip_pc_kernel;
    case Algorithm::kCs:
      return &detail::clip_cs_kernel;
    case Algorithm::kLb:
      return &detail::clip_lb_kernel;
    case Algorithm::kCb:
      break;
  }
  return &detail::clip_cb_kernel;
}

double one_pass(Kernel kernel, std::span<Segment3 const> segments) {
  double sum = 0;
  for (auto const& s : segments) {
    ClipOutcome const o = kernel(s.a, s.b);
    if (o.accepted()) sum += 1.0 + o.t_enter + o.t_exit;
  }
  return sum;
}

ClipOutcome lower(BasicClipOutcome<CountedReal> const& o) {
  ClipOutcome out;
  out.kind = o.kind;
  out.t_enter = o.t_enter.value();
  out.t_exit = o.t_exit.value();
  out.p_enter = detail::lower(o.p_enter);
  out.p_exit = detail::lower(o.p_exit);
  return out;
}

}  // namespace

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kPc:
      return "pc";
    case Algorithm::kCs:
      return "cs";
    case Algorithm::kLb:
      return "lb";
    case Algorithm::kCb:
      break;
  }
  return "cb";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

ClipOutcome clip_with(Algorithm a, Segment3 const& s, ClipMode mode) {
  switch (a) {
    case Algorithm::kPc:
      return clip_pc(s, mode);
    case Algorithm::kCs:
      return clip_cs(s, mode);
    case Algorithm::kLb:
      return clip_lb(s, mode);
    case Algorithm::kCb:
      break;
  }
  return clip_cb(s, mode);
}

ClipOutcome clip_counted(Algorithm a, Segment3 const& s, OpCounts* counts) {
  counting::Scope const scope;
  BasicClipOutcome<CountedReal> o;
  switch (a) {
    case Algorithm::kPc:
      o = clip_pc_counting(s);
      break;
    case Algorithm::kCs:
      o = clip_cs_counting(s);
      break;
    case Algorithm::kLb:
      o = clip_lb_counting(s);
      break;
    case Algorithm::kCb:
      o = clip_cb_counting(s);
      break;
  }
  if (counts) *counts += scope.elapsed();
  return lower(o);
}

TimingResult time_algorithm(Algorithm a, std::span<Segment3 const> segments,
                            int reps) {
  TimingResult r;
  if (segments.empty()) {
    r.empty = true;
    return r;
  }
  Kernel const kernel = kernel_for(a);
  r.checksum = one_pass(kernel, segments);  // warm-up
  reps = std::max(reps, 1);
  r.rep_seconds.reserve(static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i) {
    auto const start = std::chrono::steady_clock::now();
    double const sum = one_pass(kernel, segments);
    auto const stop = std::chrono::steady_clock::now();
    r.rep_seconds.push_back(std::chrono::duration<double>(stop - start).count());
    r.checksum = sum;
  }
  r.wall_seconds = *std::min_element(r.rep_seconds.begin(), r.rep_seconds.end());
  return r;
}

OpCounts count_ops(Algorithm a, std::span<Segment3 const> segments) {
  OpCounts total;
  for (auto const& s : segments) clip_counted(a, s, &total);
  return total;
}

MeanOpCounts mean_per_segment(OpCounts const& total, std::size_t n) {
  if (n == 0) return {};
  double const d = static_cast<double>(n);
  return {static_cast<double>(total.comparisons) / d,
          static_cast<double>(total.additions) / d,
          static_cast<double>(total.multiplications) / d,
          static_cast<double>(total.divisions) / d};
}

BenchRow const& BenchReport::row(int case_id, Algorithm a) const {
  for (auto const& r : rows) {
    if (r.case_id == case_id && r.algorithm == a) return r;
  }
  throw std::out_of_range("no bench row for case " + std::to_string(case_id));
}

CoefficientRow coefficients_from(int case_id, double t_pc, double t_cs,
                                 double t_lb, double t_cb) {
  return {case_id, t_cs / t_pc, t_lb / t_pc, t_cb / t_pc};
}

BenchReport run_benchmark(BenchConfig const& config) {
  BenchReport report;
  report.prng = std::string(kPrngName);
  report.seed = config.seed;
  report.n = config.n;
  report.reps = config.reps;
  for (int id : config.cases) {
    auto const segments = generate_case(case_by_id(id), config.seed, config.n);
    double t[4] = {};
    for (std::size_t i = 0; i < kAllAlgorithms.size(); ++i) {
      Algorithm const a = kAllAlgorithms[i];
      BenchRow row;
      row.case_id = id;
      row.algorithm = a;
      row.timing = time_algorithm(a, segments, config.reps);
      if (row.timing.wall_seconds > 0) {
        row.segments_per_second =
            static_cast<double>(segments.size()) / row.timing.wall_seconds;
      }
      row.ops = mean_per_segment(count_ops(a, segments), segments.size());
      t[i] = row.timing.wall_seconds;
      report.rows.push_back(std::move(row));
    }
    report.coefficients.push_back(coefficients_from(id, t[0], t[1], t[2], t[3]));
  }
  return report;
}

std::string format_double(double v) {
  char buf[64];
  auto const [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, end);
}

namespace {

std::string emit_csv(BenchReport const& r) {
  std::ostringstream os;
  os << "# tool=pyrclip version=" << r.tool_version << '\n'
     << "# prng=" << r.prng << " seed=" << r.seed << '\n'
     << "# n=" << r.n << " reps=" << r.reps << '\n'
     << "# build_flavor wall_seconds,segs_per_sec,checksum=timed "
        "cmp,add,mul,div=counting\n";
  for (auto const& row : r.rows) {
    if (row.timing.empty) {
      os << "# case " << row.case_id << ' ' << to_string(row.algorithm)
         << ": empty segment array, nothing timed\n";
    }
  }
  os << "case_id,algorithm,wall_seconds,segs_per_sec,cmp,add,mul,div,v1,v2,v3,"
        "checksum\n";
  auto coeff = [&](int id) -> CoefficientRow const* {
    for (auto const& c : r.coefficients) {
      if (c.case_id == id) return &c;
    }
    return nullptr;
  };
  int last = -1;
  auto flush_coeff = [&](int id) {
    if (auto const* c = coeff(id)) {
      os << id << ",coef,,,,,,," << format_double(c->v1) << ','
         << format_double(c->v2) << ',' << format_double(c->v3) << ",\n";
    }
  };
  for (auto const& row : r.rows) {
    if (last != -1 && row.case_id != last) flush_coeff(last);
    last = row.case_id;
    os << row.case_id << ',' << to_string(row.algorithm) << ','
       << format_double(row.timing.wall_seconds) << ','
       << format_double(row.segments_per_second) << ','
       << format_double(row.ops.comparisons) << ','
       << format_double(row.ops.additions) << ','
       << format_double(row.ops.multiplications) << ','
       << format_double(row.ops.divisions) << ",,,,"
       << format_double(row.timing.checksum) << '\n';
  }
  if (last != -1) flush_coeff(last);
  return os.str();
}

std::string emit_json(BenchReport const& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["header"] = {{"tool", "pyrclip"},
                 {"version", r.tool_version},
                 {"prng", r.prng},
                 {"seed", r.seed},
                 {"n", r.n},
                 {"reps", r.reps},
                 {"build_flavor",
                  {{"wall_seconds", "timed"}, {"op_counts", "counting"}}}};
  ordered_json rows = ordered_json::array();
  for (auto const& row : r.rows) {
    rows.push_back({{"case_id", row.case_id},
                    {"algorithm", to_string(row.algorithm)},
                    {"wall_seconds", row.timing.wall_seconds},
                    {"rep_seconds", row.timing.rep_seconds},
                    {"segs_per_sec", row.segments_per_second},
                    {"cmp", row.ops.comparisons},
                    {"add", row.ops.additions},
                    {"mul", row.ops.multiplications},
                    {"div", row.ops.divisions},
                    {"checksum", row.timing.checksum},
                    {"empty", row.timing.empty}});
  }
  j["rows"] = std::move(rows);
  ordered_json coeffs = ordered_json::array();
  for (auto const& c : r.coefficients) {
    coeffs.push_back(
        {{"case_id", c.case_id}, {"v1", c.v1}, {"v2", c.v2}, {"v3", c.v3}});
  }
  j["coefficients"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

}  // namespace

std::string emit_report(BenchReport const& report, ReportFormat format) {
  return format == ReportFormat::kCsv ? emit_csv(report) : emit_json(report);
}

}  // namespace pyrclip
