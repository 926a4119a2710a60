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

#include "pyrclip/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>


namespace pyrclip {
namespace {

constexpr std::int64_t kUnits = 65536;  // grid points per unit length
constexpr std::int64_t kMax = 8 * kUnits;
constexpr int kMaxAttempts = 1'000'000;

double to_coord(std::int64_t i) { return static_cast<double>(i) * kGridStep; }

constexpr RegionSet kBelowBottom = RegionSet(kBottomEdge) |
                                   RegionSet(kBottomLeftCorner);
constexpr RegionSet kAboveTop = RegionSet(kTopEdge) | RegionSet(kTopLeftCorner);
constexpr RegionSet kMiddle = RegionSet(kInside) | RegionSet(kLeftEdge);

// ids are positions + 1.
constexpr CaseSpec kCases[] = {
    {1, "inside-inside", "II_3_i", kInside, kInside, OutcomeClass::kVisible},
    {2, "right-edge-same-side", "I reject", kRightEdge, kRightEdge,
     OutcomeClass::kRejected},
    {3, "top-corners-same-side", "I_1 reject", kTopRightCorner, kTopLeftCorner,
     OutcomeClass::kRejected},
    {4, "inside-right-edge", "II_3_b", kInside, kRightEdge,
     OutcomeClass::kPartiallyVisible},
    {5, "inside-left-edge", "II_3_f", kInside, kLeftEdge,
     OutcomeClass::kPartiallyVisible},
    {6, "inside-bottom-edge", "II_3_h", kInside, kBottomEdge,
     OutcomeClass::kPartiallyVisible},
    {7, "inside-top-edge", "II_3_g", kInside, kTopEdge,
     OutcomeClass::kPartiallyVisible},
    {8, "inside-top-right-corner", "II_3_a", kInside, kTopRightCorner,
     OutcomeClass::kPartiallyVisible},
    {9, "inside-top-left-corner", "II_3_d", kInside, kTopLeftCorner,
     OutcomeClass::kPartiallyVisible},
    {10, "inside-bottom-right-corner", "II_3_c", kInside, kBottomRightCorner,
     OutcomeClass::kPartiallyVisible},
    {11, "inside-bottom-left-corner", "II_3_e", kInside, kBottomLeftCorner,
     OutcomeClass::kPartiallyVisible},
    {12, "right-edge-below-bottom", "I_2_a", kRightEdge, kBelowBottom,
     OutcomeClass::kMixed},
    {13, "right-edge-middle", "I_2_b", kRightEdge, kMiddle,
     OutcomeClass::kPartiallyVisible},
    {14, "right-edge-above-top", "I_2_c", kRightEdge, kAboveTop,
     OutcomeClass::kMixed},
    {15, "corner-left-edge-rejected", "I_1_a rho_1", kTopRightCorner,
     kLeftEdge, OutcomeClass::kRejected, OutcomeFilter::kRejected},
    {16, "corner-left-edge-accepted", "I_1_a", kTopRightCorner, kLeftEdge,
     OutcomeClass::kPartiallyVisible, OutcomeFilter::kAccepted},
    {17, "corner-bottom-edge", "I_1_b", kTopRightCorner, kBottomEdge,
     OutcomeClass::kMixed},
    {18, "corner-inside", "I_1_b", kTopRightCorner, kInside,
     OutcomeClass::kPartiallyVisible},
    {19, "corner-opposite-corner", "I_1_a", kTopRightCorner,
     kBottomLeftCorner, OutcomeClass::kMixed},
    {20, "outside-crossing", "I/II/III", RegionSet::outside(),
     RegionSet::outside(), OutcomeClass::kPartiallyVisible,
     OutcomeFilter::kAccepted},
    {21, "on-face-near-boundary", "mixed", kInside, RegionSet::all(),
     OutcomeClass::kPartiallyVisible, OutcomeFilter::kNone, Placement::kOnFace},
};

Point3 from_units(std::int64_t x, std::int64_t y, std::int64_t z) {
  return {to_coord(x), to_coord(y), to_coord(z)};
}

// Closed integer interval of admissible grid values for one axis class.
struct Range {
  std::int64_t lo, hi;
};

Range x_range(XClass c, std::int64_t z) {
  switch (c) {
    case XClass::kBeyondRight:
      return {-kMax, -z - 1};
    case XClass::kBetween:
      return {-z, z};
    case XClass::kBeyondLeft:
      break;
  }
  return {z + 1, kMax};
}

Range y_range(YClass c, std::int64_t z) {
  switch (c) {
    case YClass::kBeyondTop:
      return {z + 1, kMax};
    case YClass::kBetween:
      return {-z, z};
    case YClass::kBeyondBottom:
      break;
  }
  return {-kMax, -z - 1};
}

Point3 sample_on_face(std::mt19937_64& eng) {
  auto const face = static_cast<Boundary>(uniform_int(eng, 0, 3));
  std::int64_t const z = uniform_int(eng, 1, kMax);
  std::int64_t const u = uniform_int(eng, -z, z);
  switch (face) {
    case Boundary::kRight:
      return from_units(-z, u, z);
    case Boundary::kLeft:
      return from_units(z, u, z);
    case Boundary::kBottom:
      return from_units(u, -z, z);
    case Boundary::kTop:
      break;
  }
  return from_units(u, z, z);
}

Segment3 draw(CaseSpec const& spec, std::mt19937_64& eng) {
  auto pick = [&](RegionSet set) {
    return set.nth(static_cast<int>(uniform_int(eng, 0, set.size() - 1)));
  };
  if (spec.placement == Placement::kOnFace) {
    Point3 const a = sample_on_face(eng);
    switch (uniform_int(eng, 0, 7)) {
      case 0:
        return {a, a};
      case 1:
      case 2:
      case 3:
        return {a, sample_on_face(eng)};
      default:
        return {a, sample_point(eng, pick(spec.region_b))};
    }
  }
  Point3 const a = sample_point(eng, pick(spec.region_a));
  Point3 const b = sample_point(eng, pick(spec.region_b));
  return {a, b};
}

bool passes(CaseSpec const& spec, Segment3 const& s) {
  if (spec.filter == OutcomeFilter::kNone) return true;
  return accepted_on_grid(s) == (spec.filter == OutcomeFilter::kAccepted);
}

bool on_grid(double v) {
  double const scaled = v / kGridStep;
  return std::abs(v) <= kCoordinateBound && scaled == std::floor(scaled);
}

bool on_grid(Point3 const& p) {
  return on_grid(p.x) && on_grid(p.y) && on_grid(p.z) && p.z > 0;
}

// p / q with q > 0.
struct Fraction {
  std::int64_t p, q;
};

// Grid units are bounded by 2^19, functionals of points and differences by
// 2^21, so these products stay below 2^42.
bool less_equal(Fraction a, Fraction b) { return a.p * b.q <= b.p * a.q; }

std::int64_t to_units(double v) {
  return static_cast<std::int64_t>(v * static_cast<double>(kUnits));
}

}  // namespace

bool accepted_on_grid(Segment3 const& s) {
  std::int64_t const ax = to_units(s.a.x), ay = to_units(s.a.y),
                     az = to_units(s.a.z);
  std::int64_t const dx = to_units(s.b.x) - ax, dy = to_units(s.b.y) - ay,
                     dz = to_units(s.b.z) - az;
  std::int64_t const fa[4] = {ax + az, az - ax, ay + az, az - ay};
  std::int64_t const fd[4] = {dx + dz, dz - dx, dy + dz, dz - dy};
  Fraction lo{0, 1}, hi{1, 1};
  for (int i = 0; i < 4; ++i) {
    if (fd[i] == 0) {
      if (fa[i] < 0) return false;
    } else if (fd[i] > 0) {
      Fraction const t{-fa[i], fd[i]};
      if (less_equal(lo, t)) lo = t;
    } else {
      Fraction const t{fa[i], -fd[i]};
      if (less_equal(t, hi)) hi = t;
    }
  }
  return less_equal(lo, hi);
}

Region RegionSet::nth(int n) const {
  for (int i = 0; i < 9; ++i) {
    if ((bits_ >> i) & 1u) {
      if (n-- == 0) return Region::from_index(i);
    }
  }
  throw std::out_of_range("RegionSet::nth");
}

std::string_view to_string(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::kVisible:
      return "visible";
    case OutcomeClass::kRejected:
      return "rejected";
    case OutcomeClass::kPartiallyVisible:
      return "partially-visible";
    case OutcomeClass::kMixed:
      break;
  }
  return "mixed";
}

std::span<CaseSpec const> all_cases() { return kCases; }

CaseSpec const& case_by_id(int id) {
  if (id < 1 || id > static_cast<int>(std::size(kCases))) {
    throw std::out_of_range("no case with id " + std::to_string(id));
  }
  return kCases[id - 1];
}

std::vector<int> parse_case_list(std::string_view text) {
  std::vector<int> ids;
  if (text == "all") {
    for (auto const& c : kCases) ids.push_back(c.case_id);
    return ids;
  }
  auto number = [](std::string_view s) {
    int v = 0;
    auto const [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw std::invalid_argument("bad case id '" + std::string(s) + "'");
    }
    case_by_id(v);
    return v;
  };
  while (!text.empty()) {
    auto const comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    if (item.empty()) throw std::invalid_argument("empty case id");
    auto const dash = item.find('-');
    if (dash == std::string_view::npos) {
      ids.push_back(number(item));
      continue;
    }
    int const lo = number(item.substr(0, dash));
    int const hi = number(item.substr(dash + 1));
    if (hi < lo) throw std::invalid_argument("bad case range");
    for (int i = lo; i <= hi; ++i) ids.push_back(i);
  }
  return ids;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t block_seed(std::uint64_t seed, int case_id, std::uint64_t block) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(case_id));
  return splitmix64(h ^ block);
}

std::int64_t uniform_int(std::mt19937_64& eng, std::int64_t lo,
                         std::int64_t hi) {
  auto const span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::int64_t>(eng());
  std::uint64_t const limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = eng();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

Point3 sample_point(std::mt19937_64& eng, Region r) {
  bool const needs_room =
      r.x != XClass::kBetween || r.y != YClass::kBetween;
  std::int64_t const z = uniform_int(eng, 1, needs_room ? kMax - 1 : kMax);
  Range const xr = x_range(r.x, z);
  Range const yr = y_range(r.y, z);
  return from_units(uniform_int(eng, xr.lo, xr.hi),
                    uniform_int(eng, yr.lo, yr.hi), z);
}

std::vector<Segment3> generate_case(CaseSpec const& spec, std::uint64_t seed,
                                    std::size_t n) {
  std::vector<Segment3> out;
  out.reserve(n);
  for (std::uint64_t block = 0; out.size() < n; ++block) {
    std::mt19937_64 eng(block_seed(seed, spec.case_id, block));
    std::size_t const end = std::min(n, out.size() + kBlockSize);
    while (out.size() < end) {
      int attempts = 0;
      Segment3 s = draw(spec, eng);
      while (!passes(spec, s)) {
        if (++attempts == kMaxAttempts) {
          throw std::runtime_error("case " + std::to_string(spec.case_id) +
                                   ": outcome filter unsatisfiable");
        }
        s = draw(spec, eng);
      }
      out.push_back(s);
    }
  }
  return out;
}

bool satisfies(CaseSpec const& spec, Segment3 const& s) {
  if (!on_grid(s.a) || !on_grid(s.b)) return false;
  if (!spec.region_a.contains(classify_region(s.a))) return false;
  if (!spec.region_b.contains(classify_region(s.b))) return false;
  if (spec.placement == Placement::kOnFace) {
    bool on_face = false;
    for (Boundary f : kAllBoundaries) {
      on_face = on_face || boundary_functional(s.a, f) == 0;
    }
    if (!on_face) return false;
  }
  return true;
}

}  // namespace pyrclip
