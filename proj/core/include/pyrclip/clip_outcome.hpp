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

#ifndef PYRCLIP_CLIP_OUTCOME_HPP_
#define PYRCLIP_CLIP_OUTCOME_HPP_

#include <cstdint>
#include <string_view>

#include "pyrclip/geometry.hpp"

namespace pyrclip {

enum class ClipKind : std::uint8_t { kRejected, kAccepted };

// How endpoints below the apex plane are treated.
//   kStrict    z < 0 on either endpoint is a DomainError.
//   kPreClipZ  the segment is first cut to z >= 0, then clipped.
enum class ClipMode : std::uint8_t { kStrict, kPreClipZ };

std::string_view to_string(ClipMode m);

// Result of clipping P(t) = a + t * (b - a), t in [0, 1].
//
// For accepted segments 0 <= t_enter <= t_exit <= 1 and the endpoints are
// eval_segment(s, t_enter) and eval_segment(s, t_exit). The t and point
// fields of a rejected outcome are zero and carry no meaning.
template <class Real>
struct BasicClipOutcome {
  ClipKind kind = ClipKind::kRejected;
  Real t_enter{};
  Real t_exit{};
  BasicPoint3<Real> p_enter{};
  BasicPoint3<Real> p_exit{};

  bool accepted() const { return kind == ClipKind::kAccepted; }
};

using ClipOutcome = BasicClipOutcome<double>;

namespace detail {

// Parametric result of a kernel before endpoint evaluation.
template <class Real>
struct Interval {
  bool accepted = false;
  Real t_enter{};
  Real t_exit{};

  static Interval rejected() { return {}; }
  static Interval of(Real lo, Real hi) { return {true, lo, hi}; }
};

template <class Real>
BasicClipOutcome<Real> finish(BasicPoint3<Real> const& a,
                              BasicPoint3<Real> const& b,
                              Interval<Real> const& iv) {
  BasicClipOutcome<Real> out;
  if (!iv.accepted) return out;
  auto const d = delta(a, b);
  out.kind = ClipKind::kAccepted;
  out.t_enter = iv.t_enter;
  out.t_exit = iv.t_exit;
  out.p_enter = eval_segment(a, d, iv.t_enter);
  out.p_exit = eval_segment(a, d, iv.t_exit);
  return out;
}

// Runs `kernel` (a callable on two points returning Interval) on the part of
// [a, b] with z >= 0 and maps the parameters back onto [a, b].
template <class Real, class Kernel>
Interval<Real> clip_above_apex_plane(BasicPoint3<Real> const& a,
                                     BasicPoint3<Real> const& b,
                                     Kernel&& kernel) {
  bool const a_below = a.z < 0;
  bool const b_below = b.z < 0;
  if (!a_below && !b_below) return kernel(a, b);
  if (a_below && b_below) return Interval<Real>::rejected();

  auto const d = delta(a, b);
  Real const t0 = -a.z / d.dz;
  BasicPoint3<Real> cut = eval_segment(a, d, t0);
  cut.z = Real(0);

  Real lo{0}, hi{1};
  BasicPoint3<Real> sub_a = a, sub_b = b;
  if (a_below) {
    lo = t0;
    sub_a = t0 == Real(1) ? b : cut;
  } else {
    hi = t0;
    sub_b = t0 == Real(0) ? a : cut;
  }
  auto iv = kernel(sub_a, sub_b);
  if (!iv.accepted) return iv;
  Real const span = hi - lo;
  return Interval<Real>::of(lo + span * iv.t_enter, lo + span * iv.t_exit);
}

// Shared argument validation for the public double-precision entry points.
void validate(Segment3 const& s, ClipMode mode);

}  // namespace detail
}  // namespace pyrclip

#endif  // PYRCLIP_CLIP_OUTCOME_HPP_
