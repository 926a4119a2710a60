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

// Textbook clippers specialised to the pyramid's four faces: Cohen-Sutherland
// with 3D outcodes, Liang-Barsky and Cyrus-Beck. Same contract and error
// behaviour as clip_pc().

#ifndef PYRCLIP_BASELINE_CLIPPERS_HPP_
#define PYRCLIP_BASELINE_CLIPPERS_HPP_

#include <cstdint>

#include "pyrclip/clip_outcome.hpp"
#include "pyrclip/counted_real.hpp"
#include "pyrclip/geometry.hpp"

namespace pyrclip {

// Bit per violated face, strict like classify_region(). For z >= 0 the
// right/left pair and the bottom/top pair are mutually exclusive.
enum OutcodeBit : std::uint8_t {
  kOutRight = 1u << 0,
  kOutLeft = 1u << 1,
  kOutBottom = 1u << 2,
  kOutTop = 1u << 3,
};

using Outcode = std::uint8_t;

Outcode outcode(Point3 const& p);

ClipOutcome clip_cs(Segment3 const& s, ClipMode mode = ClipMode::kStrict);
ClipOutcome clip_lb(Segment3 const& s, ClipMode mode = ClipMode::kStrict);
ClipOutcome clip_cb(Segment3 const& s, ClipMode mode = ClipMode::kStrict);

// Number of face clips Cohen-Sutherland performed on s (Strict mode).
int cs_clip_steps(Segment3 const& s);

BasicClipOutcome<CountedReal> clip_cs_counting(Segment3 const& s);
BasicClipOutcome<CountedReal> clip_lb_counting(Segment3 const& s);
BasicClipOutcome<CountedReal> clip_cb_counting(Segment3 const& s);

namespace detail {

ClipOutcome clip_cs_kernel(Point3 const& a, Point3 const& b);
ClipOutcome clip_lb_kernel(Point3 const& a, Point3 const& b);
ClipOutcome clip_cb_kernel(Point3 const& a, Point3 const& b);

}  // namespace detail
}  // namespace pyrclip

#endif  // PYRCLIP_BASELINE_CLIPPERS_HPP_
