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

// Geometry of the unit clipping pyramid
//
//   P = { (x, y, z) : -z <= x <= z, -z <= y <= z, z >= 0 }.
//
// Every face of P is the zero set of a linear "boundary functional" that is
// non-negative on the inside:
//
//   Right  (x = -z):  x + z        Left (x = z):  z - x
//   Bottom (y = -z):  y + z        Top  (y = z):  z - y
//
// Because the functionals are linear, the same expressions apply to points
// and to difference vectors, and along P(t) = A + t * D each one is
// f(A) + t * f(D). All clippers in this library are written against these
// functionals.
//
// Inputs are restricted to |coordinate| <= 1e6. Under that bound the 2x2
// determinants in edge_plane_side() cannot overflow, so it is not checked
// per call.

#ifndef PYRCLIP_GEOMETRY_HPP_
#define PYRCLIP_GEOMETRY_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pyrclip {

// Raised for inputs outside an operation's domain: non-finite coordinates,
// or z < 0 where the positive half-space is required.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by boundary_parameter() when the segment is parallel to the face.
class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class Real>
struct BasicPoint3 {
  Real x{};
  Real y{};
  Real z{};

  friend bool operator==(BasicPoint3 const&, BasicPoint3 const&) = default;
};

template <class Real>
struct BasicDelta3 {
  Real dx{};
  Real dy{};
  Real dz{};

  friend bool operator==(BasicDelta3 const&, BasicDelta3 const&) = default;
};

template <class Real>
struct BasicSegment3 {
  BasicPoint3<Real> a;
  BasicPoint3<Real> b;

  friend bool operator==(BasicSegment3 const&, BasicSegment3 const&) = default;
};

using Point3 = BasicPoint3<double>;
using Delta3 = BasicDelta3<double>;
using Segment3 = BasicSegment3<double>;

template <class Real>
constexpr BasicDelta3<Real> delta(BasicPoint3<Real> const& a,
                                  BasicPoint3<Real> const& b) {
  return {b.x - a.x, b.y - a.y, b.z - a.z};
}

template <class Real>
constexpr BasicDelta3<Real> delta(BasicSegment3<Real> const& s) {
  return delta(s.a, s.b);
}

enum class Boundary : std::uint8_t { kRight, kLeft, kBottom, kTop };

inline constexpr Boundary kAllBoundaries[] = {
    Boundary::kRight, Boundary::kLeft, Boundary::kBottom, Boundary::kTop};

// The four lateral edges of the pyramid, listed clockwise starting at the
// top-left one. Each is the line through the apex where two faces meet:
//
//   kTopLeft     Left  & Top     direction ( 1,  1, 1)
//   kTopRight    Right & Top     direction (-1,  1, 1)
//   kBottomRight Right & Bottom  direction (-1, -1, 1)
//   kBottomLeft  Left  & Bottom  direction ( 1, -1, 1)
enum class PyramidEdge : std::uint8_t {
  kTopLeft,
  kTopRight,
  kBottomRight,
  kBottomLeft
};

inline constexpr PyramidEdge kAllEdges[] = {
    PyramidEdge::kTopLeft, PyramidEdge::kTopRight, PyramidEdge::kBottomRight,
    PyramidEdge::kBottomLeft};

// (f, g) functional pair whose common zero set is the edge. Order matters:
// it fixes the sign convention of edge_plane_side().
struct EdgeFaces {
  Boundary first;
  Boundary second;
};

constexpr EdgeFaces faces_of(PyramidEdge e) {
  switch (e) {
    case PyramidEdge::kTopLeft:
      return {Boundary::kLeft, Boundary::kTop};
    case PyramidEdge::kTopRight:
      return {Boundary::kRight, Boundary::kTop};
    case PyramidEdge::kBottomRight:
      return {Boundary::kRight, Boundary::kBottom};
    case PyramidEdge::kBottomLeft:
      break;
  }
  return {Boundary::kLeft, Boundary::kBottom};
}

enum class XClass : std::uint8_t { kBeyondRight, kBetween, kBeyondLeft };
enum class YClass : std::uint8_t { kBeyondTop, kBetween, kBeyondBottom };

// One of the nine regions the four faces cut the half-space z >= 0 into.
// "Beyond" is strict, so points on a face belong to the neighbouring
// in-between class and the nine regions partition the half-space.
struct Region {
  XClass x = XClass::kBetween;
  YClass y = YClass::kBetween;

  constexpr bool inside() const {
    return x == XClass::kBetween && y == YClass::kBetween;
  }
  constexpr bool edge() const {
    return (x == XClass::kBetween) != (y == YClass::kBetween);
  }
  constexpr bool corner() const {
    return x != XClass::kBetween && y != YClass::kBetween;
  }

  // Dense index 0..8, row-major over (YClass, XClass).
  constexpr int index() const {
    return 3 * static_cast<int>(y) + static_cast<int>(x);
  }
  static constexpr Region from_index(int i) {
    return {static_cast<XClass>(i % 3), static_cast<YClass>(i / 3)};
  }

  friend bool operator==(Region const&, Region const&) = default;
};

inline constexpr Region kInside{XClass::kBetween, YClass::kBetween};
inline constexpr Region kRightEdge{XClass::kBeyondRight, YClass::kBetween};
inline constexpr Region kLeftEdge{XClass::kBeyondLeft, YClass::kBetween};
inline constexpr Region kTopEdge{XClass::kBetween, YClass::kBeyondTop};
inline constexpr Region kBottomEdge{XClass::kBetween, YClass::kBeyondBottom};
inline constexpr Region kTopRightCorner{XClass::kBeyondRight,
                                        YClass::kBeyondTop};
inline constexpr Region kTopLeftCorner{XClass::kBeyondLeft, YClass::kBeyondTop};
inline constexpr Region kBottomRightCorner{XClass::kBeyondRight,
                                           YClass::kBeyondBottom};
inline constexpr Region kBottomLeftCorner{XClass::kBeyondLeft,
                                          YClass::kBeyondBottom};

std::string to_string(Region r);
std::string to_string(Boundary b);

enum class Sign : int { kNegative = -1, kZero = 0, kPositive = 1 };

//---------------------------------------------------------------------------//
// Compile-time forms used by the clipping kernels.
//---------------------------------------------------------------------------//

template <Boundary B, class Real>
constexpr Real functional(BasicPoint3<Real> const& p) {
  if constexpr (B == Boundary::kRight) {
    return p.x + p.z;
  } else if constexpr (B == Boundary::kLeft) {
    return p.z - p.x;
  } else if constexpr (B == Boundary::kBottom) {
    return p.y + p.z;
  } else {
    return p.z - p.y;
  }
}

template <Boundary B, class Real>
constexpr Real functional(BasicDelta3<Real> const& d) {
  return functional<B>(BasicPoint3<Real>{d.dx, d.dy, d.dz});
}

// Strict "outside of face B" test, written as a comparison so no addition
// is spent on it. Same truth value as functional<B>(p) < 0.
template <Boundary B, class Real>
constexpr bool beyond(BasicPoint3<Real> const& p) {
  if constexpr (B == Boundary::kRight) {
    return p.x < -p.z;
  } else if constexpr (B == Boundary::kLeft) {
    return p.x > p.z;
  } else if constexpr (B == Boundary::kBottom) {
    return p.y < -p.z;
  } else {
    return p.y > p.z;
  }
}

// Quarter turn about z applied k times: k = 1 maps (x, y, z) to (-y, x, z).
template <int K, class Real>
constexpr BasicPoint3<Real> rotate(BasicPoint3<Real> const& p) {
  constexpr int k = ((K % 4) + 4) % 4;
  if constexpr (k == 0) {
    return p;
  } else if constexpr (k == 1) {
    return {-p.y, p.x, p.z};
  } else if constexpr (k == 2) {
    return {-p.x, -p.y, p.z};
  } else {
    return {p.y, -p.x, p.z};
  }
}

// (x, y, z) -> (x, -y, z). Swaps Top and Bottom.
template <class Real>
constexpr BasicPoint3<Real> reflect_y(BasicPoint3<Real> const& p) {
  return {p.x, -p.y, p.z};
}

template <class Real>
constexpr BasicPoint3<Real> eval_segment(BasicPoint3<Real> const& a,
                                         BasicDelta3<Real> const& d, Real t) {
  return {t * d.dx + a.x, t * d.dy + a.y, t * d.dz + a.z};
}

//---------------------------------------------------------------------------//
// Runtime API.
//---------------------------------------------------------------------------//

double boundary_functional(Point3 const& p, Boundary b);
double boundary_functional(Delta3 const& d, Boundary b);

bool is_finite(Point3 const& p);
bool is_finite(Segment3 const& s);

// Throws DomainError for non-finite input or p.z < 0.
Region classify_region(Point3 const& p);

// Sign of f(a) * g(d) - g(a) * f(d) for the ordered face pair (f, g) of
// edge e. The determinant vanishes exactly when the line a + t * d meets the
// edge line, i.e. when d lies in the plane through a and the edge; its sign
// tells on which side of that plane the direction points.
Sign edge_plane_side(Point3 const& a, Delta3 const& d, PyramidEdge e);

// t with f_b(a + t * d) = 0, i.e. -f_b(a) / f_b(d). Throws
// DegenerateDenominator when f_b(d) == 0.
double boundary_parameter(Point3 const& a, Delta3 const& d, Boundary b);

Point3 eval_segment(Segment3 const& s, double t);

// k is taken modulo 4 (negative k turns clockwise).
Point3 rotate_quarter(Point3 const& p, int k);
Segment3 rotate_quarter(Segment3 const& s, int k);
Segment3 reflect_y(Segment3 const& s);

// Face that a quarter turn (k = 1) carries b onto:
// Right -> Bottom -> Left -> Top -> Right.
Boundary rotated_boundary(Boundary b, int k);

}  // namespace pyrclip

#endif  // PYRCLIP_GEOMETRY_HPP_
