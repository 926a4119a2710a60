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

// Seeded generators for the 21 benchmark cases.
//
// Coordinates are multiples of 2^-16 in [-8, 8], with z in (0, 8]. On that
// grid every boundary functional, difference and edge-plane determinant the
// clippers compute is exact in double, so branch decisions cannot be
// perturbed by rounding and the only error left in a clip parameter is the
// final division.
//
// Sampling. For each endpoint a region is drawn uniformly from the case's
// region set, then z uniformly on the grid, then x and y uniformly on the
// grid interval that region admits at that z. Outside regions draw z below
// 8 so that interval is never empty. Cases with an outcome filter resample whole segments
// until the exact verdict matches.
//
// Reproducibility. Segment i of case c lives in block i / kBlockSize. Each
// block has its own std::mt19937_64, seeded by mixing (seed, c, block) with
// SplitMix64, and integers are drawn by rejection so no implementation-
// defined distribution is involved. Any block can be regenerated alone.

#ifndef PYRCLIP_CORPUS_HPP_
#define PYRCLIP_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pyrclip/geometry.hpp"

namespace pyrclip {

inline constexpr std::string_view kPrngName =
    "mt19937_64/splitmix64-block-split";
inline constexpr std::size_t kBlockSize = 4096;
inline constexpr double kGridStep = 1.0 / 65536.0;
inline constexpr double kCoordinateBound = 8.0;

// Bitmask over Region::index().
class RegionSet {
 public:
  constexpr RegionSet() = default;
  constexpr RegionSet(Region r) : bits_(1u << r.index()) {}  // NOLINT

  static constexpr RegionSet all() { return RegionSet(0x1ffu); }
  static constexpr RegionSet outside() { return RegionSet(0x1ffu & ~(1u << 4)); }

  constexpr bool contains(Region r) const {
    return (bits_ >> r.index()) & 1u;
  }
  constexpr int size() const { return __builtin_popcount(bits_); }
  constexpr std::uint16_t bits() const { return bits_; }
  // n-th member in index order, 0 <= n < size().
  Region nth(int n) const;

  friend constexpr RegionSet operator|(RegionSet a, RegionSet b) {
    return RegionSet(static_cast<unsigned>(a.bits_ | b.bits_));
  }

 private:
  constexpr explicit RegionSet(unsigned bits)
      : bits_(static_cast<std::uint16_t>(bits)) {}
  std::uint16_t bits_ = 0;
};

enum class OutcomeClass { kVisible, kRejected, kPartiallyVisible, kMixed };
enum class OutcomeFilter { kNone, kAccepted, kRejected };

// kOnFace: endpoint A is put exactly on a face, inside the pyramid, and B is
// either A itself, exactly on a face, or free.
enum class Placement { kFree, kOnFace };

std::string_view to_string(OutcomeClass c);

struct CaseSpec {
  int case_id = 0;
  std::string_view name;
  std::string_view tree_label;  // label in the case tree this exercises
  RegionSet region_a;
  RegionSet region_b;
  OutcomeClass expected = OutcomeClass::kMixed;
  OutcomeFilter filter = OutcomeFilter::kNone;
  Placement placement = Placement::kFree;
};

// The shipped cases, ids 1..21.
std::span<CaseSpec const> all_cases();
CaseSpec const& case_by_id(int id);

// Parses "all" or a comma list of ids and ranges ("1,3,5-9").
std::vector<int> parse_case_list(std::string_view text);

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t block_seed(std::uint64_t seed, int case_id, std::uint64_t block);

// Uniform integer in [lo, hi] by rejection.
std::int64_t uniform_int(std::mt19937_64& eng, std::int64_t lo,
                         std::int64_t hi);

// Draws one point in region r on the grid.
Point3 sample_point(std::mt19937_64& eng, Region r);

// Deterministic in (spec, seed, n). Throws std::runtime_error if a filter
// cannot be met in a large number of attempts.
std::vector<Segment3> generate_case(CaseSpec const& spec, std::uint64_t seed,
                                    std::size_t n);

// Exact accept/reject verdict for a segment whose coordinates lie on the
// generator grid, in 64-bit integer arithmetic. Used by the outcome
// filters; agrees with clip_exact() on every grid segment.
bool accepted_on_grid(Segment3 const& s);

// Whether s satisfies the region constraints of spec.
bool satisfies(CaseSpec const& spec, Segment3 const& s);

}  // namespace pyrclip

#endif  // PYRCLIP_CORPUS_HPP_
