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

#include "pyrclip/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <sstream>

namespace pyrclip {

//---------------------------------------------------------------------------//
// Rational
//---------------------------------------------------------------------------//

Rational::Rational(long num, unsigned long den) : q_(num, den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("Rational: non-finite value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), v);  // exact, already canonical
  return Rational(std::move(q));
}

double Rational::to_double() const {
  // mpq_get_d truncates toward zero; the nearest double is either that or
  // its neighbour away from zero.
  double const toward_zero = q_.get_d();
  if (sgn(q_) == 0) return 0.0;
  double const away = std::nextafter(
      toward_zero, sgn(q_) > 0 ? HUGE_VAL : -HUGE_VAL);
  mpq_class lo, hi;
  mpq_set_d(lo.get_mpq_t(), toward_zero);
  mpq_set_d(hi.get_mpq_t(), away);
  mpq_class const d_lo = abs(q_ - lo);
  mpq_class const d_hi = abs(hi - q_);
  int const c = cmp(d_lo, d_hi);
  if (c < 0) return toward_zero;
  if (c > 0) return away;
  std::uint64_t bits;
  std::memcpy(&bits, &toward_zero, sizeof bits);
  return (bits & 1u) == 0 ? toward_zero : away;
}

std::string Rational::str() const { return q_.get_str(); }

Rational operator+(Rational const& a, Rational const& b) {
  return Rational(mpq_class(a.q_ + b.q_));
}
Rational operator-(Rational const& a, Rational const& b) {
  return Rational(mpq_class(a.q_ - b.q_));
}
Rational operator*(Rational const& a, Rational const& b) {
  return Rational(mpq_class(a.q_ * b.q_));
}
Rational operator/(Rational const& a, Rational const& b) {
  if (sgn(b.q_) == 0) throw DomainError("Rational: division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}
Rational operator-(Rational const& a) { return Rational(mpq_class(-a.q_)); }

bool operator==(Rational const& a, Rational const& b) { return a.q_ == b.q_; }

std::strong_ordering operator<=>(Rational const& a, Rational const& b) {
  int const c = cmp(a.q_, b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

//---------------------------------------------------------------------------//
// clip_exact
//---------------------------------------------------------------------------//

namespace {

struct ExactPoint {
  Rational x, y, z;
};

ExactPoint exact(Point3 const& p) {
  return {Rational::from_double(p.x), Rational::from_double(p.y),
          Rational::from_double(p.z)};
}

// Value of the linear constraint at a point or direction: the constraint
// g(P) = c_x x + c_y y + c_z z >= 0 with small integer coefficients.
struct Constraint {
  int cx, cy, cz;

  Rational at(ExactPoint const& p) const {
    Rational v;
    if (cx) v = v + Rational(cx) * p.x;
    if (cy) v = v + Rational(cy) * p.y;
    if (cz) v = v + Rational(cz) * p.z;
    return v;
  }
};

// -z <= x, x <= z, -z <= y, y <= z, straight from the definition.
constexpr Constraint kPyramid[4] = {
    {1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
constexpr Constraint kHalfSpace{0, 0, 1};

}  // namespace

ExactOutcome clip_exact(Segment3 const& s, ClipMode mode) {
  if (!is_finite(s)) throw DomainError("clip_exact: non-finite input");
  if (mode == ClipMode::kStrict && (s.a.z < 0 || s.b.z < 0)) {
    throw DomainError("clip_exact: endpoint below the apex plane");
  }
  ExactPoint const a = exact(s.a);
  ExactPoint const b = exact(s.b);
  ExactPoint const d{b.x - a.x, b.y - a.y, b.z - a.z};

  ExactOutcome out;
  Rational lo(0), hi(1);
  auto narrow = [&](Constraint const& c) {
    Rational const ca = c.at(a);
    Rational const cd = c.at(d);
    if (cd.sign() == 0) return ca.sign() >= 0;
    Rational const t = -ca / cd;
    if (cd.sign() > 0) {
      if (t > lo) lo = t;
    } else {
      if (t < hi) hi = t;
    }
    return lo <= hi;
  };

  bool feasible = true;
  for (auto const& c : kPyramid) feasible = feasible && narrow(c);
  if (mode == ClipMode::kPreClipZ) feasible = feasible && narrow(kHalfSpace);
  if (!feasible) return out;

  out.kind = ClipKind::kAccepted;
  if (s.a == s.b) {
    out.t_enter = Rational(0);
    out.t_exit = Rational(0);
  } else {
    out.t_enter = lo;
    out.t_exit = hi;
  }
  return out;
}

//---------------------------------------------------------------------------//
// verify
//---------------------------------------------------------------------------//

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::kMatch:
      return "Match";
    case VerdictKind::kVerdictMismatch:
      return "VerdictMismatch";
    case VerdictKind::kParameterMismatch:
      break;
  }
  return "ParameterMismatch";
}

VerificationVerdict verify(ExactOutcome const& exact, ClipOutcome const& approx,
                           double tol) {
  VerificationVerdict v;
  if (exact.accepted() != approx.accepted()) {
    v.kind = VerdictKind::kVerdictMismatch;
    v.detail = exact.accepted() ? "exact accepts, approximation rejects"
                                : "exact rejects, approximation accepts";
    return v;
  }
  if (!exact.accepted()) return v;

  double const e0 = exact.t_enter.to_double();
  double const e1 = exact.t_exit.to_double();
  double const err0 = std::abs(approx.t_enter - e0);
  double const err1 = std::abs(approx.t_exit - e1);
  if (!(err0 <= tol) || !(err1 <= tol)) {
    std::ostringstream os;
    os.precision(17);
    os << "t_enter " << approx.t_enter << " vs " << e0 << " (err " << err0
       << "), t_exit " << approx.t_exit << " vs " << e1 << " (err " << err1
       << "), tol " << tol;
    v.kind = VerdictKind::kParameterMismatch;
    v.detail = os.str();
  }
  return v;
}

VerificationVerdict verify(Segment3 const& s, ClipOutcome const& approx,
                           double tol, ClipMode mode) {
  return verify(clip_exact(s, mode), approx, tol);
}

}  // namespace pyrclip
