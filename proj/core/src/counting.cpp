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

// Counting flavour: the same kernels instantiated over CountedReal. Kept in
// its own translation unit so nothing here can leak into the timed code.

#include "pyrclip/baseline_clippers.hpp"
#include "pyrclip/counted_real.hpp"
#include "pyrclip/detail/baseline_kernels.hpp"
#include "pyrclip/detail/pc_kernel.hpp"
#include "pyrclip/detail/traits.hpp"
#include "pyrclip/pc_clipper.hpp"

namespace pyrclip {

namespace counting {

OpCounts& tally() {
  thread_local OpCounts counts;
  return counts;
}

PcBranchCounts& pc_branches() {
  thread_local PcBranchCounts counts{};
  return counts;
}

void reset_pc_branches() { pc_branches().fill(0); }

}  // namespace counting

namespace {

using Counted = detail::CountingTraits;
using CPoint = BasicPoint3<CountedReal>;

template <class Kernel>
BasicClipOutcome<CountedReal> run_counting(Segment3 const& s, ClipMode mode,
                                           Kernel kernel) {
  detail::validate(s, mode);
  CPoint const a = detail::lift<CountedReal>(s.a);
  CPoint const b = detail::lift<CountedReal>(s.b);
  if (mode == ClipMode::kStrict) return detail::finish(a, b, kernel(a, b));
  return detail::finish(a, b, detail::clip_above_apex_plane(a, b, kernel));
}

}  // namespace

BasicClipOutcome<CountedReal> clip_pc_counting(Segment3 const& s,
                                               ClipMode mode) {
  return run_counting(s, mode, [](CPoint const& a, CPoint const& b) {
    return detail::PyramidalKernel<Counted>::clip(a, b);
  });
}

BasicClipOutcome<CountedReal> clip_cs_counting(Segment3 const& s) {
  return run_counting(s, ClipMode::kStrict, [](CPoint const& a, CPoint const& b) {
    return detail::cohen_sutherland<Counted>(a, b);
  });
}

BasicClipOutcome<CountedReal> clip_lb_counting(Segment3 const& s) {
  return run_counting(s, ClipMode::kStrict, [](CPoint const& a, CPoint const& b) {
    return detail::liang_barsky<Counted>(a, b);
  });
}

BasicClipOutcome<CountedReal> clip_cb_counting(Segment3 const& s) {
  return run_counting(s, ClipMode::kStrict, [](CPoint const& a, CPoint const& b) {
    return detail::cyrus_beck<Counted>(a, b);
  });
}

int cs_clip_steps(Segment3 const& s) {
  detail::validate(s, ClipMode::kStrict);
  int steps = 0;
  detail::cohen_sutherland<detail::TimedTraits>(s.a, s.b, &steps);
  return steps;
}

std::string_view to_string(PcBranch b) {
  static constexpr std::string_view kNames[kPcBranchCount] = {
      "I:reject-both-right",
      "I_1:reject-both-top",
      "I_1_a:reject-rho1",
      "I_1_a:left-edge",
      "I_1_a:reject-rho3",
      "I_1_a:rho4-left",
      "I_1_a:rho4-bottom",
      "I_1_a:rho2-top",
      "I_1_a:rho2-right",
      "I_1_b:reject-rho3",
      "I_1_b:bottom-edge",
      "I_1_b:inside",
      "I_1_b:rho2-top",
      "I_1_b:rho2-right",
      "I_2_a:reject-rho3",
      "I_2_a:rho4-left",
      "I_2_a:rho4-bottom",
      "I_2_a:bottom-edge",
      "I_2_b:left-edge",
      "I_2_b:inside",
      "I_2_c",
      "I_3",
      "II_1",
      "II_2",
      "III",
      "II_3_a",
      "II_3_b",
      "II_3_c",
      "II_3_d",
      "II_3_e",
      "II_3_f",
      "II_3_g",
      "II_3_h",
      "II_3_i",
      "II_3:corner-top",
      "II_3:corner-right",
      "degenerate",
  };
  auto const i = static_cast<std::size_t>(b);
  return i < kPcBranchCount ? kNames[i] : "?";
}

}  // namespace pyrclip
