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

// Exact reference clipper. Every finite double is a dyadic rational, so the
// segment's coordinates convert to rationals without error and the clip
// interval
//
//   [0, 1]  intersected with  { t : f(A) + t f(D) >= 0 }  for each face f
//
// can be computed with no rounding at all. Nothing here shares code with the
// clippers under test beyond the definition of the pyramid itself.

#ifndef PYRCLIP_ORACLE_HPP_
#define PYRCLIP_ORACLE_HPP_

#include <gmpxx.h>

#include <compare>
#include <string>

#include "pyrclip/clip_outcome.hpp"
#include "pyrclip/geometry.hpp"

namespace pyrclip {

// Canonical arbitrary-precision rational (gcd 1, positive denominator).
class Rational {
 public:
  Rational() = default;
  Rational(long num, unsigned long den = 1);

  // Exact. Throws DomainError for NaN or infinity.
  static Rational from_double(double v);

  // Nearest double, ties to even.
  double to_double() const;
  std::string str() const;

  friend Rational operator+(Rational const& a, Rational const& b);
  friend Rational operator-(Rational const& a, Rational const& b);
  friend Rational operator*(Rational const& a, Rational const& b);
  friend Rational operator/(Rational const& a, Rational const& b);
  friend Rational operator-(Rational const& a);

  friend bool operator==(Rational const& a, Rational const& b);
  friend std::strong_ordering operator<=>(Rational const& a,
                                          Rational const& b);

  int sign() const { return sgn(q_); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

struct ExactOutcome {
  ClipKind kind = ClipKind::kRejected;
  Rational t_enter;
  Rational t_exit;

  bool accepted() const { return kind == ClipKind::kAccepted; }
};

// Throws DomainError for non-finite input, and in kStrict mode for an
// endpoint with z < 0. kPreClipZ adds z >= 0 as a fifth constraint.
// A degenerate segment (a == b) is accepted as [0, 0] iff a is in the
// pyramid.
ExactOutcome clip_exact(Segment3 const& s, ClipMode mode = ClipMode::kStrict);

enum class VerdictKind { kMatch, kVerdictMismatch, kParameterMismatch };

struct VerificationVerdict {
  VerdictKind kind = VerdictKind::kMatch;
  std::string detail;

  bool ok() const { return kind == VerdictKind::kMatch; }
};

std::string_view to_string(VerdictKind k);

// Compares an approximate outcome against the exact one. Parameters are
// compared after rounding the exact value to the nearest double. tol > 0.
VerificationVerdict verify(ExactOutcome const& exact, ClipOutcome const& approx,
                           double tol);
VerificationVerdict verify(Segment3 const& s, ClipOutcome const& approx,
                           double tol, ClipMode mode = ClipMode::kStrict);

}  // namespace pyrclip

#endif  // PYRCLIP_ORACLE_HPP_
