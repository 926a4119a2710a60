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

// Shared random inputs for the unit tests.

#ifndef PYRCLIP_TESTS_TEST_SUPPORT_HPP_
#define PYRCLIP_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "pyrclip/clip_outcome.hpp"
#include "pyrclip/geometry.hpp"
#include "pyrclip/oracle.hpp"

namespace pyrclip::testing {

// Small integer coordinates hit faces, edges and the apex constantly, which
// is where tie handling goes wrong.
inline Segment3 small_integer_segment(std::mt19937_64& eng) {
  std::uniform_int_distribution<int> xy(-4, 4), z(0, 4);
  auto p = [&] { return Point3{double(xy(eng)), double(xy(eng)), double(z(eng))}; };
  return {p(), p()};
}

// Dyadic coordinates on a 2^-16 grid in [-8, 8], z >= 0.
inline Segment3 dyadic_segment(std::mt19937_64& eng) {
  std::uniform_int_distribution<std::int64_t> xy(-(8 << 16), 8 << 16),
      z(0, 8 << 16);
  auto c = [](std::int64_t v) { return double(v) / 65536.0; };
  auto p = [&] { return Point3{c(xy(eng)), c(xy(eng)), c(z(eng))}; };
  return {p(), p()};
}

inline std::string describe(Segment3 const& s) {
  std::ostringstream os;
  os.precision(17);
  os << "((" << s.a.x << ", " << s.a.y << ", " << s.a.z << "), (" << s.b.x
     << ", " << s.b.y << ", " << s.b.z << "))";
  return os.str();
}

// The cut at z = 0 is rounded unless -z_A / dz is a dyadic fraction, so a
// segment that only touches the pyramid in a single point may lose that
// contact. Everything else must match the exact clip.
inline bool preclip_agrees(Segment3 const& s, ClipOutcome const& o,
                           std::string* detail) {
  ExactOutcome const exact = clip_exact(s, ClipMode::kPreClipZ);
  if (exact.accepted() && exact.t_enter == exact.t_exit) return true;
  VerificationVerdict const v = verify(exact, o, 1e-9);
  *detail = v.detail;
  return v.ok();
}

}  // namespace pyrclip::testing

#endif  // PYRCLIP_TESTS_TEST_SUPPORT_HPP_
