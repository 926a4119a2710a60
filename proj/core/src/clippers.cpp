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

// Timed (plain double) instantiations of all clipping kernels and the
// validated public entry points.

#include <sstream>

#include "pyrclip/baseline_clippers.hpp"
#include "pyrclip/clip_outcome.hpp"
#include "pyrclip/detail/baseline_kernels.hpp"
#include "pyrclip/detail/pc_kernel.hpp"
#include "pyrclip/detail/traits.hpp"
#include "pyrclip/pc_clipper.hpp"

namespace pyrclip {

std::string_view to_string(ClipMode m) {
  return m == ClipMode::kStrict ? "strict" : "preclip";
}

namespace detail {

void validate(Segment3 const& s, ClipMode mode) {
  if (!is_finite(s)) throw DomainError("clip: non-finite segment endpoint");
  if (mode == ClipMode::kStrict && (s.a.z < 0 || s.b.z < 0)) {
    std::ostringstream os;
    os.precision(17);
    os << "clip: endpoint below the apex plane in strict mode (z_A = "
       << s.a.z << ", z_B = " << s.b.z << ")";
    throw DomainError(os.str());
  }
}

namespace {

using Timed = TimedTraits;

template <class Kernel>
ClipOutcome run(Segment3 const& s, ClipMode mode, Kernel kernel) {
  validate(s, mode);
  if (mode == ClipMode::kStrict) return finish(s.a, s.b, kernel(s.a, s.b));
  return finish(s.a, s.b, clip_above_apex_plane(s.a, s.b, kernel));
}

Interval<double> pc(Point3 const& a, Point3 const& b) {
  return PyramidalKernel<Timed>::clip(a, b);
}
Interval<double> cs(Point3 const& a, Point3 const& b) {
  return cohen_sutherland<Timed>(a, b);
}
Interval<double> lb(Point3 const& a, Point3 const& b) {
  return liang_barsky<Timed>(a, b);
}
Interval<double> cb(Point3 const& a, Point3 const& b) {
  return cyrus_beck<Timed>(a, b);
}

}  // namespace

ClipOutcome clip_pc_kernel(Point3 const& a, Point3 const& b) {
  return finish(a, b, pc(a, b));
}
ClipOutcome clip_cs_kernel(Point3 const& a, Point3 const& b) {
  return finish(a, b, cs(a, b));
}
ClipOutcome clip_lb_kernel(Point3 const& a, Point3 const& b) {
  return finish(a, b, lb(a, b));
}
ClipOutcome clip_cb_kernel(Point3 const& a, Point3 const& b) {
  return finish(a, b, cb(a, b));
}

}  // namespace detail

ClipOutcome clip_pc(Segment3 const& s, ClipMode mode) {
  return detail::run(s, mode, detail::pc);
}

ClipOutcome clip_cs(Segment3 const& s, ClipMode mode) {
  return detail::run(s, mode, detail::cs);
}

ClipOutcome clip_lb(Segment3 const& s, ClipMode mode) {
  return detail::run(s, mode, detail::lb);
}

ClipOutcome clip_cb(Segment3 const& s, ClipMode mode) {
  return detail::run(s, mode, detail::cb);
}

Outcode outcode(Point3 const& p) { return detail::outcode_of(p); }

}  // namespace pyrclip
