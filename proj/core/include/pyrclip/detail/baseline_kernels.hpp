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

#ifndef PYRCLIP_DETAIL_BASELINE_KERNELS_HPP_
#define PYRCLIP_DETAIL_BASELINE_KERNELS_HPP_

#include "pyrclip/baseline_clippers.hpp"
#include "pyrclip/clip_outcome.hpp"
#include "pyrclip/geometry.hpp"

namespace pyrclip::detail {

//---------------------------------------------------------------------------//
// Cohen-Sutherland
//---------------------------------------------------------------------------//

template <class Real>
Outcode outcode_of(BasicPoint3<Real> const& p) {
  Outcode c = 0;
  if (beyond<Boundary::kRight>(p)) c |= kOutRight;
  if (beyond<Boundary::kLeft>(p)) c |= kOutLeft;
  if (beyond<Boundary::kBottom>(p)) c |= kOutBottom;
  if (beyond<Boundary::kTop>(p)) c |= kOutTop;
  return c;
}

// Point of the ray through a + t * d, t = -f(a) / f(d), in unnormalised
// form: f(d) * (a + t * d) = f(d) * a - f(a) * d, flipped to a positive
// multiple. Every outcode test is homogeneous, so this point has the same
// outcode as the clipped point, and on inputs whose products are exact it
// is computed without rounding.
template <Boundary B, class Real>
BasicPoint3<Real> clipped_point(BasicPoint3<Real> const& a,
                                BasicDelta3<Real> const& d, Real const& fa,
                                Real const& fd) {
  BasicPoint3<Real> p{a.x * fd - fa * d.dx, a.y * fd - fa * d.dy,
                      a.z * fd - fa * d.dz};
  if (fd < Real(0)) p = {-p.x, -p.y, -p.z};
  if constexpr (B == Boundary::kRight) {
    p.x = -p.z;
  } else if constexpr (B == Boundary::kLeft) {
    p.x = p.z;
  } else if constexpr (B == Boundary::kBottom) {
    p.y = -p.z;
  } else {
    p.y = p.z;
  }
  return p;
}

// The classic loop: trivially accept when both outcodes are clear, trivially
// reject when they share a bit, otherwise move an outside endpoint onto the
// first violated face in the order Right, Left, Bottom, Top and recompute its
// outcode from the new coordinates.
//
// The intersection parameter is always measured on the original segment,
// so t_enter / t_exit come out directly. The clipped coordinates are kept in
// the unnormalised form of clipped_point() and snapped onto the face, and
// faces an endpoint has already been clipped against are masked out of its
// outcode. Every face is clipped at most once, so the loop runs at most four
// clip steps.
template <class Traits>
Interval<typename Traits::Real> cohen_sutherland(
    BasicPoint3<typename Traits::Real> const& a,
    BasicPoint3<typename Traits::Real> const& b, int* steps = nullptr) {
  using Real = typename Traits::Real;
  using Point = BasicPoint3<Real>;

  Outcode code0 = outcode_of(a);
  Outcode code1 = outcode_of(b);
  if ((code0 | code1) == 0) {
    if (a == b) return Interval<Real>::of(Real(0), Real(0));
    return Interval<Real>::of(Real(0), Real(1));
  }

  auto const d = delta(a, b);
  Real t0{0}, t1{1};
  Outcode done0 = 0, done1 = 0;
  int n = 0;
  for (;;) {
    if (code0 & code1) {
      if (steps) *steps = n;
      return Interval<Real>::rejected();
    }
    if ((code0 | code1) == 0) break;

    bool const first = code0 != 0;
    Outcode const code = first ? code0 : code1;
    Real t;
    Point p;
    Outcode bit;
    if (code & kOutRight) {
      bit = kOutRight;
      Real const fa = functional<Boundary::kRight>(a);
      Real const fd = functional<Boundary::kRight>(d);
      t = Traits::divide(-fa, fd);
      p = clipped_point<Boundary::kRight>(a, d, fa, fd);
    } else if (code & kOutLeft) {
      bit = kOutLeft;
      Real const fa = functional<Boundary::kLeft>(a);
      Real const fd = functional<Boundary::kLeft>(d);
      t = Traits::divide(-fa, fd);
      p = clipped_point<Boundary::kLeft>(a, d, fa, fd);
    } else if (code & kOutBottom) {
      bit = kOutBottom;
      Real const fa = functional<Boundary::kBottom>(a);
      Real const fd = functional<Boundary::kBottom>(d);
      t = Traits::divide(-fa, fd);
      p = clipped_point<Boundary::kBottom>(a, d, fa, fd);
    } else {
      bit = kOutTop;
      Real const fa = functional<Boundary::kTop>(a);
      Real const fd = functional<Boundary::kTop>(d);
      t = Traits::divide(-fa, fd);
      p = clipped_point<Boundary::kTop>(a, d, fa, fd);
    }
    ++n;
    if (first) {
      t0 = t;
      done0 |= bit;
      code0 = outcode_of(p) & static_cast<Outcode>(~done0);
    } else {
      t1 = t;
      done1 |= bit;
      code1 = outcode_of(p) & static_cast<Outcode>(~done1);
    }
  }
  if (steps) *steps = n;
  if (t1 < t0) return Interval<Real>::of(t1, t0);
  return Interval<Real>::of(t0, t1);
}

//---------------------------------------------------------------------------//
// Liang-Barsky
//---------------------------------------------------------------------------//

// One constraint p * t <= q of the Liang-Barsky formulation, narrowing
// [t0, t1]. Returns false once the interval is empty.
template <class Traits>
bool clip_t(typename Traits::Real p, typename Traits::Real q,
            typename Traits::Real& t0, typename Traits::Real& t1) {
  using Real = typename Traits::Real;
  if (p < Real(0)) {
    Real const r = Traits::divide(q, p);
    if (r > t1) return false;
    if (r > t0) t0 = r;
  } else if (p > Real(0)) {
    Real const r = Traits::divide(q, p);
    if (r < t0) return false;
    if (r < t1) t1 = r;
  } else if (q < Real(0)) {
    return false;
  }
  return true;
}

// Face f gives f(A) + t f(D) >= 0, i.e. p = -f(D), q = f(A).
template <class Traits>
Interval<typename Traits::Real> liang_barsky(
    BasicPoint3<typename Traits::Real> const& a,
    BasicPoint3<typename Traits::Real> const& b) {
  using Real = typename Traits::Real;
  auto const d = delta(a, b);
  Real t0{0}, t1{1};
  if (clip_t<Traits>(-functional<Boundary::kRight>(d),
                     functional<Boundary::kRight>(a), t0, t1) &&
      clip_t<Traits>(-functional<Boundary::kLeft>(d),
                     functional<Boundary::kLeft>(a), t0, t1) &&
      clip_t<Traits>(-functional<Boundary::kBottom>(d),
                     functional<Boundary::kBottom>(a), t0, t1) &&
      clip_t<Traits>(-functional<Boundary::kTop>(d),
                     functional<Boundary::kTop>(a), t0, t1)) {
    if (t0 == Real(0) && t1 == Real(1) && a == b) {
      return Interval<Real>::of(Real(0), Real(0));
    }
    return Interval<Real>::of(t0, t1);
  }
  return Interval<Real>::rejected();
}

//---------------------------------------------------------------------------//
// Cyrus-Beck
//---------------------------------------------------------------------------//

template <class Real>
struct Vec3 {
  Real x, y, z;
};

template <class Real>
Real dot(Vec3<Real> const& n, Vec3<Real> const& v) {
  return n.x * v.x + n.y * v.y + n.z * v.z;
}

// Inward normals of the four faces. Every face passes through the apex, so
// the apex serves as the reference point of each plane.
template <class Real>
struct CyrusBeckPlanes {
  Vec3<Real> normal[4] = {{Real(1), Real(0), Real(1)},
                          {Real(-1), Real(0), Real(1)},
                          {Real(0), Real(1), Real(1)},
                          {Real(0), Real(-1), Real(1)}};
  Vec3<Real> point[4] = {{Real(0), Real(0), Real(0)},
                         {Real(0), Real(0), Real(0)},
                         {Real(0), Real(0), Real(0)},
                         {Real(0), Real(0), Real(0)}};
};

template <class Traits>
Interval<typename Traits::Real> cyrus_beck(
    BasicPoint3<typename Traits::Real> const& a,
    BasicPoint3<typename Traits::Real> const& b) {
  using Real = typename Traits::Real;
  static CyrusBeckPlanes<Real> const planes;

  Vec3<Real> const dir{b.x - a.x, b.y - a.y, b.z - a.z};
  Real t_enter{0}, t_leave{1};
  for (int i = 0; i < 4; ++i) {
    Vec3<Real> const& n = planes.normal[i];
    Vec3<Real> const& p0 = planes.point[i];
    Vec3<Real> const w{a.x - p0.x, a.y - p0.y, a.z - p0.z};
    Real const num = dot(n, w);
    Real const den = dot(n, dir);
    if (den == Real(0)) {
      if (num < Real(0)) return Interval<Real>::rejected();
      continue;
    }
    Real const t = Traits::divide(-num, den);
    if (den > Real(0)) {
      if (t > t_enter) t_enter = t;
    } else {
      if (t < t_leave) t_leave = t;
    }
    if (t_enter > t_leave) return Interval<Real>::rejected();
  }
  if (t_enter == Real(0) && t_leave == Real(1) && a == b) {
    return Interval<Real>::of(Real(0), Real(0));
  }
  return Interval<Real>::of(t_enter, t_leave);
}

}  // namespace pyrclip::detail

#endif  // PYRCLIP_DETAIL_BASELINE_KERNELS_HPP_
