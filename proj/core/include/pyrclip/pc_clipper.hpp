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

// Pyramidal clipping: locate A among the nine regions, locate B among the
// sub-regions that A induces, then compute only the intersection parameters
// that end up as endpoints of the output. At most two divisions per call.

#ifndef PYRCLIP_PC_CLIPPER_HPP_
#define PYRCLIP_PC_CLIPPER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "pyrclip/clip_outcome.hpp"
#include "pyrclip/counted_real.hpp"
#include "pyrclip/geometry.hpp"

namespace pyrclip {

// Throws DomainError on non-finite input and, in kStrict mode, on an
// endpoint with z < 0.
ClipOutcome clip_pc(Segment3 const& s, ClipMode mode = ClipMode::kStrict);

// Every decision point of the case tree. Names follow the case labels:
//   I    A beyond the right face        II  A between right and left
//   III  A beyond the left face
// with sub-cases by A's and then B's region. The kRho* entries record which
// side of an edge plane B fell on.
enum class PcBranch : std::uint8_t {
  kCaseIRejectBothRight,    // I: B also beyond right
  kCaseI1RejectBothTop,     // I_1: B also beyond top
  kCaseI1aRejectRho1,       // I_1_a: B on the far side of rho_1
  kCaseI1aLeftEdge,         // I_1_a: B in the left edge region
  kCaseI1aRejectRho3,       // I_1_a: B bottom-left corner, rejected by rho_3
  kCaseI1aRho4Left,         // I_1_a: exit through left face
  kCaseI1aRho4Bottom,       // I_1_a: exit through bottom face
  kCaseI1aRho2Top,          // I_1_a: entry through top face
  kCaseI1aRho2Right,        // I_1_a: entry through right face
  kCaseI1bRejectRho3,       // I_1_b: B bottom edge, rejected by rho_3
  kCaseI1bBottomEdge,       // I_1_b: B bottom edge, exit through bottom
  kCaseI1bInside,           // I_1_b: B inside
  kCaseI1bRho2Top,          // I_1_b: entry through top face
  kCaseI1bRho2Right,        // I_1_b: entry through right face
  kCaseI2aRejectRho3,       // I_2_a: rejected by rho_3
  kCaseI2aRho4Left,         // I_2_a: B bottom-left corner, exit left
  kCaseI2aRho4Bottom,       // I_2_a: B bottom-left corner, exit bottom
  kCaseI2aBottomEdge,       // I_2_a: B bottom edge
  kCaseI2bLeftEdge,         // I_2_b: B left edge
  kCaseI2bInside,           // I_2_b: B inside
  kCaseI2c,                 // I_2_c: reflected onto I_2_a
  kCaseI3,                  // I_3: reflected onto I_1
  kCaseII1,                 // II_1: A top edge, rotated onto I_2
  kCaseII2,                 // II_2: A bottom edge, rotated onto I_2
  kCaseIII,                 // III: rotated onto I
  kCaseII3a,                // II_3_a: B top-right corner
  kCaseII3b,                // II_3_b: B right edge
  kCaseII3c,                // II_3_c: B bottom-right corner
  kCaseII3d,                // II_3_d: B top-left corner
  kCaseII3e,                // II_3_e: B bottom-left corner
  kCaseII3f,                // II_3_f: B left edge
  kCaseII3g,                // II_3_g: B top edge
  kCaseII3h,                // II_3_h: B bottom edge
  kCaseII3i,                // II_3_i: B inside, fully visible
  kCaseII3CornerTop,        // corner exit picked by rho_2: top face
  kCaseII3CornerRight,      // corner exit picked by rho_2: right face
  kDegenerate,              // A == B inside the pyramid
  kCount
};

inline constexpr std::size_t kPcBranchCount =
    static_cast<std::size_t>(PcBranch::kCount);

std::string_view to_string(PcBranch b);

using PcBranchCounts = std::array<std::uint64_t, kPcBranchCount>;

namespace counting {

// Per-thread branch histogram, only updated by the counting flavour.
PcBranchCounts& pc_branches();
void reset_pc_branches();

}  // namespace counting

// Counting flavour: same case tree, CountedReal arithmetic, branch hits
// recorded, and a DegenerateDenominator thrown if a division by zero is ever
// reached. Slow; for verification and op counting only.
BasicClipOutcome<CountedReal> clip_pc_counting(Segment3 const& s,
                                               ClipMode mode = ClipMode::kStrict);

namespace detail {

// Unchecked timed kernel (Strict semantics, inputs already validated).
ClipOutcome clip_pc_kernel(Point3 const& a, Point3 const& b);

}  // namespace detail
}  // namespace pyrclip

#endif  // PYRCLIP_PC_CLIPPER_HPP_
