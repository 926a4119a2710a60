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

// The pyramidal case tree, templated on a traits type that supplies the
// scalar, the division and a branch hook:
//
//   struct Traits {
//     using Real = ...;
//     static void hit(PcBranch);
//     static Real divide(Real num, Real den);
//   };
//
// Notation. With r, l, b, t the Right, Left, Bottom and Top functionals
// (see geometry.hpp) and D = B - A, the parameter where the segment crosses
// face f is s_f = -f(A) / f(D).
//
// Edge planes. rho_1..rho_4 are the planes through A and the TopLeft,
// TopRight, BottomRight and BottomLeft edge. For an edge with face pair
// (f, g) the side of B is the sign of
//
//   det(f, g) = f(A) g(D) - g(A) f(D),
//
// which is edge_plane_side(). Each test below is one literal inequality on
// the four functional values; the comment next to it gives the equivalent
// determinant sign and what it decides. Products are compared directly
// (no subtraction) which has the same truth value in floating point since
// the sign of a rounded difference is exact.
//
// Reductions. Only the geometrically distinct leaves are written out. The
// remaining cases are mapped onto them with a quarter turn about z or the
// reflection y -> -y. Both maps preserve the pyramid and the parameter t, so
// the returned interval needs no transformation back.

#ifndef PYRCLIP_DETAIL_PC_KERNEL_HPP_
#define PYRCLIP_DETAIL_PC_KERNEL_HPP_

#include "pyrclip/clip_outcome.hpp"
#include "pyrclip/geometry.hpp"
#include "pyrclip/pc_clipper.hpp"

namespace pyrclip::detail {

template <class Traits>
class PyramidalKernel {
 public:
  using Real = typename Traits::Real;
  using Point = BasicPoint3<Real>;
  using Result = Interval<Real>;

  static Result clip(Point const& a, Point const& b) {
    if (a.x < -a.z) return beyond_right(a, b);
    if (a.x <= a.z) return between_right_and_left(a, b);
    Traits::hit(PcBranch::kCaseIII);
    return beyond_right(rotate<2>(a), rotate<2>(b));
  }

 private:
  static Result reject(PcBranch why) {
    Traits::hit(why);
    return Result::rejected();
  }

  // s_f = -f(A) / f(D).
  static Real crossing(Real fa, Real fd) { return Traits::divide(-fa, fd); }

  static Result ordered(Real t1, Real t2) {
    if (t2 > t1) return Result::of(t1, t2);
    return Result::of(t2, t1);
  }

  // Entry parameter when A is above top and beyond right and the segment
  // enters through one of those two faces.
  //
  //   rho_2: (x_A + z_A)(dz - dy) > (z_A - y_A)(dz + dx)
  //      <=> r(A) t(D) > t(A) r(D)  <=>  det(Right, Top) > 0
  //
  // With r(D) > 0 and t(D) > 0 this is s_T > s_R, so the later crossing,
  // which is the entry, is on the top face.
  static Real entry_top_or_right(Real ra, Real ta, Real rd, Real td,
                                 PcBranch top, PcBranch right) {
    if (ra * td > ta * rd) {
      Traits::hit(top);
      return crossing(ta, td);
    }
    Traits::hit(right);
    return crossing(ra, rd);
  }

  //---- I: A beyond right ------------------------------------------------//

  static Result beyond_right(Point const& a, Point const& b) {
    if (b.x < -b.z) return reject(PcBranch::kCaseIRejectBothRight);
    if (a.y > a.z) return top_right_corner(a, b);
    if (a.y >= -a.z) return right_edge(a, b);
    Traits::hit(PcBranch::kCaseI3);
    return top_right_corner(reflect_y(a), reflect_y(b));
  }

  //---- I_1: A in the top-right corner, B not beyond right ---------------//

  static Result top_right_corner(Point const& a, Point const& b) {
    if (b.y > b.z) return reject(PcBranch::kCaseI1RejectBothTop);
    if (b.x > b.z) return corner_to_left(a, b);
    return corner_to_middle(a, b);
  }

  // I_1_a: B in the left edge or bottom-left corner region.
  static Result corner_to_left(Point const& a, Point const& b) {
    auto const d = delta(a, b);
    Real const la = functional<Boundary::kLeft>(a);
    Real const ta = functional<Boundary::kTop>(a);
    Real const ld = functional<Boundary::kLeft>(d);
    Real const td = functional<Boundary::kTop>(d);

    // rho_1: (x_A - z_A)(dz - dy) > (y_A - z_A)(dz - dx)
    //    <=> l(A) t(D) < t(A) l(D)  <=>  det(Left, Top) < 0
    // i.e. the segment leaves through the left face before it has come
    // down through the top face: it passes above the top-left edge.
    if (la * td < ta * ld) return reject(PcBranch::kCaseI1aRejectRho1);

    Real const ra = functional<Boundary::kRight>(a);
    Real const rd = functional<Boundary::kRight>(d);

    Real t_exit;
    if (b.y > -b.z) {
      Traits::hit(PcBranch::kCaseI1aLeftEdge);
      t_exit = crossing(la, ld);
    } else {
      Real const ba = functional<Boundary::kBottom>(a);
      Real const bd = functional<Boundary::kBottom>(d);
      // rho_3: (x_A + z_A)(dz + dy) > (y_A + z_A)(dz + dx)
      //    <=> r(A) b(D) > b(A) r(D)  <=>  det(Right, Bottom) > 0
      // i.e. s_R > s_B: the segment is below the bottom face by the time
      // it gets past the right face.
      if (ra * bd > ba * rd) return reject(PcBranch::kCaseI1aRejectRho3);
      // rho_4: (z_A - x_A)(dy + dz) > (z_A + y_A)(dz - dx)
      //    <=> l(A) b(D) > b(A) l(D)  <=>  det(Left, Bottom) > 0
      // With l(D) < 0 and b(D) < 0 this is s_L < s_B: exit on the left.
      if (la * bd > ba * ld) {
        Traits::hit(PcBranch::kCaseI1aRho4Left);
        t_exit = crossing(la, ld);
      } else {
        Traits::hit(PcBranch::kCaseI1aRho4Bottom);
        t_exit = crossing(ba, bd);
      }
    }
    Real const t_entry = entry_top_or_right(
        ra, ta, rd, td, PcBranch::kCaseI1aRho2Top, PcBranch::kCaseI1aRho2Right);
    return ordered(t_entry, t_exit);
  }

  // I_1_b: B inside or in the bottom edge region.
  static Result corner_to_middle(Point const& a, Point const& b) {
    auto const d = delta(a, b);
    Real const ra = functional<Boundary::kRight>(a);
    Real const rd = functional<Boundary::kRight>(d);

    Real t_exit;
    if (b.y < -b.z) {
      Real const ba = functional<Boundary::kBottom>(a);
      Real const bd = functional<Boundary::kBottom>(d);
      // rho_3, as in corner_to_left().
      if (ra * bd > ba * rd) return reject(PcBranch::kCaseI1bRejectRho3);
      Traits::hit(PcBranch::kCaseI1bBottomEdge);
      t_exit = crossing(ba, bd);
    } else {
      Traits::hit(PcBranch::kCaseI1bInside);
      t_exit = Real(1);
    }
    Real const ta = functional<Boundary::kTop>(a);
    Real const td = functional<Boundary::kTop>(d);
    Real const t_entry = entry_top_or_right(
        ra, ta, rd, td, PcBranch::kCaseI1bRho2Top, PcBranch::kCaseI1bRho2Right);
    return ordered(t_entry, t_exit);
  }

  //---- I_2: A in the right edge region, B not beyond right --------------//

  static Result right_edge(Point const& a, Point const& b) {
    if (b.y < -b.z) return edge_to_below(a, b);
    if (b.y <= b.z) return edge_to_middle(a, b);
    Traits::hit(PcBranch::kCaseI2c);
    return edge_to_below(reflect_y(a), reflect_y(b));
  }

  // I_2_a: B in the bottom edge or bottom-left corner region.
  static Result edge_to_below(Point const& a, Point const& b) {
    auto const d = delta(a, b);
    Real const ra = functional<Boundary::kRight>(a);
    Real const ba = functional<Boundary::kBottom>(a);
    Real const rd = functional<Boundary::kRight>(d);
    Real const bd = functional<Boundary::kBottom>(d);
    // rho_3: det(Right, Bottom) > 0 rejects, as in corner_to_left().
    if (ra * bd > ba * rd) return reject(PcBranch::kCaseI2aRejectRho3);

    Real t_exit;
    if (b.x > b.z) {
      Real const la = functional<Boundary::kLeft>(a);
      Real const ld = functional<Boundary::kLeft>(d);
      // rho_4: det(Left, Bottom) > 0 selects the left face.
      if (la * bd > ba * ld) {
        Traits::hit(PcBranch::kCaseI2aRho4Left);
        t_exit = crossing(la, ld);
      } else {
        Traits::hit(PcBranch::kCaseI2aRho4Bottom);
        t_exit = crossing(ba, bd);
      }
    } else {
      Traits::hit(PcBranch::kCaseI2aBottomEdge);
      t_exit = crossing(ba, bd);
    }
    return ordered(crossing(ra, rd), t_exit);
  }

  // I_2_b: B inside or in the left edge region. Entry is always through
  // the right face; r(A) < 0 <= r(B) makes r(D) > 0.
  static Result edge_to_middle(Point const& a, Point const& b) {
    auto const d = delta(a, b);
    Real const t_entry = crossing(functional<Boundary::kRight>(a),
                                  functional<Boundary::kRight>(d));
    if (b.x > b.z) {
      Traits::hit(PcBranch::kCaseI2bLeftEdge);
      return ordered(t_entry, crossing(functional<Boundary::kLeft>(a),
                                       functional<Boundary::kLeft>(d)));
    }
    Traits::hit(PcBranch::kCaseI2bInside);
    return Result::of(t_entry, Real(1));
  }

  //---- II: A between the right and left faces ---------------------------//

  static Result between_right_and_left(Point const& a, Point const& b) {
    if (a.y > a.z) {
      Traits::hit(PcBranch::kCaseII1);
      return beyond_right(rotate<1>(a), rotate<1>(b));
    }
    if (a.y < -a.z) {
      Traits::hit(PcBranch::kCaseII2);
      return beyond_right(rotate<3>(a), rotate<3>(b));
    }
    return inside(a, b);
  }

  // II_3: A inside. Edge regions of B name the exit face directly; corner
  // regions are turned onto the top-right corner and resolved by rho_2.
  static Result inside(Point const& a, Point const& b) {
    if (b.x < -b.z) {
      if (b.y > b.z) {
        Traits::hit(PcBranch::kCaseII3a);
        return inside_to_corner(a, b);
      }
      if (b.y >= -b.z) {
        Traits::hit(PcBranch::kCaseII3b);
        return inside_to_edge(a, b);
      }
      Traits::hit(PcBranch::kCaseII3c);
      return inside_to_corner(rotate<3>(a), rotate<3>(b));
    }
    if (b.x > b.z) {
      if (b.y > b.z) {
        Traits::hit(PcBranch::kCaseII3d);
        return inside_to_corner(rotate<1>(a), rotate<1>(b));
      }
      if (b.y < -b.z) {
        Traits::hit(PcBranch::kCaseII3e);
        return inside_to_corner(rotate<2>(a), rotate<2>(b));
      }
      Traits::hit(PcBranch::kCaseII3f);
      return inside_to_edge(rotate<2>(a), rotate<2>(b));
    }
    if (b.y > b.z) {
      Traits::hit(PcBranch::kCaseII3g);
      return inside_to_edge(rotate<1>(a), rotate<1>(b));
    }
    if (b.y < -b.z) {
      Traits::hit(PcBranch::kCaseII3h);
      return inside_to_edge(rotate<3>(a), rotate<3>(b));
    }
    if (a == b) {
      Traits::hit(PcBranch::kDegenerate);
      return Result::of(Real(0), Real(0));
    }
    Traits::hit(PcBranch::kCaseII3i);
    return Result::of(Real(0), Real(1));
  }

  // II_3_b: B in the right edge region; exit through the right face.
  static Result inside_to_edge(Point const& a, Point const& b) {
    auto const d = delta(a, b);
    return Result::of(Real(0), crossing(functional<Boundary::kRight>(a),
                                        functional<Boundary::kRight>(d)));
  }

  // II_3_a: B in the top-right corner; exit through top or right face.
  //
  // Here r(D) < 0 and t(D) < 0 and the exit is the *earlier* crossing, so
  // the top face is taken when s_T < s_R, i.e.
  //
  //   r(A) t(D) < t(A) r(D)  <=>  det(Right, Top) < 0.
  //
  // This is the mirror of entry_top_or_right(). On equality both faces give
  // the same point (the top-right edge) and the right face is used.
  static Result inside_to_corner(Point const& a, Point const& b) {
    auto const d = delta(a, b);
    Real const ra = functional<Boundary::kRight>(a);
    Real const ta = functional<Boundary::kTop>(a);
    Real const rd = functional<Boundary::kRight>(d);
    Real const td = functional<Boundary::kTop>(d);
    if (ra * td < ta * rd) {
      Traits::hit(PcBranch::kCaseII3CornerTop);
      return Result::of(Real(0), crossing(ta, td));
    }
    Traits::hit(PcBranch::kCaseII3CornerRight);
    return Result::of(Real(0), crossing(ra, rd));
  }
};

}  // namespace pyrclip::detail

#endif  // PYRCLIP_DETAIL_PC_KERNEL_HPP_
