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

#include "pyrclip/geometry.hpp"

#include <cmath>
#include <sstream>

namespace pyrclip {
namespace {

template <class P>
double functional_of(P const& p, Boundary b) {
  switch (b) {
    case Boundary::kRight:
      return functional<Boundary::kRight>(p);
    case Boundary::kLeft:
      return functional<Boundary::kLeft>(p);
    case Boundary::kBottom:
      return functional<Boundary::kBottom>(p);
    case Boundary::kTop:
      break;
  }
  return functional<Boundary::kTop>(p);
}

std::string describe(Point3 const& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << p.x << ", " << p.y << ", " << p.z << ')';
  return os.str();
}

}  // namespace

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::kRight:
      return "right";
    case Boundary::kLeft:
      return "left";
    case Boundary::kBottom:
      return "bottom";
    case Boundary::kTop:
      break;
  }
  return "top";
}

std::string to_string(Region r) {
  static char const* const kNames[9] = {
      "top-right corner",    "top edge",    "top-left corner",
      "right edge",          "inside",      "left edge",
      "bottom-right corner", "bottom edge", "bottom-left corner"};
  return kNames[r.index()];
}

double boundary_functional(Point3 const& p, Boundary b) {
  return functional_of(p, b);
}

double boundary_functional(Delta3 const& d, Boundary b) {
  return functional_of(d, b);
}

bool is_finite(Point3 const& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

bool is_finite(Segment3 const& s) { return is_finite(s.a) && is_finite(s.b); }

Region classify_region(Point3 const& p) {
  if (!is_finite(p)) {
    throw DomainError("classify_region: non-finite point " + describe(p));
  }
  if (p.z < 0) {
    throw DomainError("classify_region: point below the apex plane " +
                      describe(p));
  }
  Region r;
  if (beyond<Boundary::kRight>(p)) {
    r.x = XClass::kBeyondRight;
  } else if (beyond<Boundary::kLeft>(p)) {
    r.x = XClass::kBeyondLeft;
  }
  if (beyond<Boundary::kTop>(p)) {
    r.y = YClass::kBeyondTop;
  } else if (beyond<Boundary::kBottom>(p)) {
    r.y = YClass::kBeyondBottom;
  }
  return r;
}

Sign edge_plane_side(Point3 const& a, Delta3 const& d, PyramidEdge e) {
  auto const [f, g] = faces_of(e);
  double const det = boundary_functional(a, f) * boundary_functional(d, g) -
                     boundary_functional(a, g) * boundary_functional(d, f);
  if (det > 0) return Sign::kPositive;
  if (det < 0) return Sign::kNegative;
  return Sign::kZero;
}

double boundary_parameter(Point3 const& a, Delta3 const& d, Boundary b) {
  double const fd = boundary_functional(d, b);
  if (fd == 0) {
    throw DegenerateDenominator("boundary_parameter: segment parallel to the " +
                                to_string(b) + " face");
  }
  return -boundary_functional(a, b) / fd;
}

Point3 eval_segment(Segment3 const& s, double t) {
  return eval_segment(s.a, delta(s), t);
}

Point3 rotate_quarter(Point3 const& p, int k) {
  switch (((k % 4) + 4) % 4) {
    case 1:
      return rotate<1>(p);
    case 2:
      return rotate<2>(p);
    case 3:
      return rotate<3>(p);
    default:
      return p;
  }
}

Segment3 rotate_quarter(Segment3 const& s, int k) {
  return {rotate_quarter(s.a, k), rotate_quarter(s.b, k)};
}

Segment3 reflect_y(Segment3 const& s) {
  return {reflect_y(s.a), reflect_y(s.b)};
}

Boundary rotated_boundary(Boundary b, int k) {
  // Cycle order under one quarter turn.
  static constexpr Boundary kCycle[4] = {Boundary::kRight, Boundary::kBottom,
                                         Boundary::kLeft, Boundary::kTop};
  int pos = 0;
  while (kCycle[pos] != b) ++pos;
  return kCycle[(pos + ((k % 4) + 4) % 4) % 4];
}

}  // namespace pyrclip
