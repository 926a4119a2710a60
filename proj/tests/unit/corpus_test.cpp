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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "pyrclip/oracle.hpp"
#include "pyrclip/pc_clipper.hpp"

namespace pyrclip {
namespace {

TEST(Cases, TwentyOneWithSequentialIds) {
  auto const cases = all_cases();
  ASSERT_EQ(cases.size(), 21u);
  std::set<std::string_view> names;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    EXPECT_EQ(cases[i].case_id, static_cast<int>(i) + 1);
    EXPECT_EQ(&case_by_id(cases[i].case_id), &cases[i]);
    names.insert(cases[i].name);
  }
  EXPECT_EQ(names.size(), 21u);
  EXPECT_THROW(case_by_id(0), std::out_of_range);
  EXPECT_THROW(case_by_id(22), std::out_of_range);
}

TEST(Cases, ParseList) {
  EXPECT_EQ(parse_case_list("all").size(), 21u);
  EXPECT_EQ(parse_case_list("3"), std::vector<int>{3});
  EXPECT_EQ(parse_case_list("1,3,5-7"), (std::vector<int>{1, 3, 5, 6, 7}));
  EXPECT_THROW(parse_case_list("0"), std::out_of_range);
  EXPECT_THROW(parse_case_list("x"), std::invalid_argument);
  EXPECT_THROW(parse_case_list("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_case_list("5-3"), std::invalid_argument);
}

TEST(RegionSets, Membership) {
  RegionSet const s = RegionSet(kInside) | RegionSet(kLeftEdge);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(kInside));
  EXPECT_TRUE(s.contains(kLeftEdge));
  EXPECT_FALSE(s.contains(kRightEdge));
  EXPECT_EQ(RegionSet::all().size(), 9);
  EXPECT_EQ(RegionSet::outside().size(), 8);
  EXPECT_FALSE(RegionSet::outside().contains(kInside));
  EXPECT_EQ(s.nth(0), kInside);
  EXPECT_EQ(s.nth(1), kLeftEdge);
}

TEST(Generator, Deterministic) {
  for (auto const& spec : all_cases()) {
    auto const a = generate_case(spec, 42, 300);
    auto const b = generate_case(spec, 42, 300);
    EXPECT_EQ(a, b) << spec.name;
    EXPECT_NE(a, generate_case(spec, 43, 300)) << spec.name;
  }
}

TEST(Generator, PrefixStableAcrossBlocks) {
  CaseSpec const& spec = case_by_id(4);
  auto const small = generate_case(spec, 5, 100);
  auto const large = generate_case(spec, 5, kBlockSize + 100);
  ASSERT_EQ(large.size(), kBlockSize + 100);
  EXPECT_TRUE(std::equal(small.begin(), small.end(), large.begin()));
}

TEST(Generator, EverySegmentSatisfiesItsCase) {
  for (auto const& spec : all_cases()) {
    auto const segments = generate_case(spec, 7, 2000);
    ASSERT_EQ(segments.size(), 2000u);
    for (auto const& s : segments) {
      ASSERT_TRUE(satisfies(spec, s)) << spec.name;
    }
  }
}

TEST(Generator, ExpectedOutcomes) {
  for (auto const& spec : all_cases()) {
    auto const segments = generate_case(spec, 8, 2000);
    for (auto const& s : segments) {
      bool const accepted = clip_exact(s).accepted();
      switch (spec.expected) {
        case OutcomeClass::kVisible: {
          ExactOutcome const o = clip_exact(s);
          ASSERT_TRUE(accepted);
          EXPECT_EQ(o.t_enter, Rational(0));
          EXPECT_EQ(o.t_exit, Rational(1));
          break;
        }
        case OutcomeClass::kRejected:
          ASSERT_FALSE(accepted) << spec.name;
          break;
        case OutcomeClass::kPartiallyVisible:
          ASSERT_TRUE(accepted) << spec.name;
          break;
        case OutcomeClass::kMixed:
          break;
      }
    }
  }
}

TEST(Generator, MixedCasesProduceBoth) {
  for (auto const& spec : all_cases()) {
    if (spec.expected != OutcomeClass::kMixed) continue;
    int accepted = 0;
    auto const segments = generate_case(spec, 9, 2000);
    for (auto const& s : segments) accepted += clip_exact(s).accepted();
    EXPECT_GT(accepted, 0) << spec.name;
    EXPECT_LT(accepted, 2000) << spec.name;
  }
}

TEST(Generator, GridAndBounds) {
  for (auto const& spec : all_cases()) {
    for (auto const& s : generate_case(spec, 10, 500)) {
      for (double v : {s.a.x, s.a.y, s.a.z, s.b.x, s.b.y, s.b.z}) {
        EXPECT_LE(std::abs(v), kCoordinateBound);
        EXPECT_EQ(v / kGridStep, std::floor(v / kGridStep));
      }
      EXPECT_GT(s.a.z, 0);
      EXPECT_GT(s.b.z, 0);
    }
  }
}

TEST(Generator, OnFaceCaseCoversItsThreeShapes) {
  auto const segments = generate_case(case_by_id(21), 11, 4000);
  int degenerate = 0, both_on_face = 0;
  for (auto const& s : segments) {
    if (s.a == s.b) {
      ++degenerate;
      continue;
    }
    bool b_on_face = false;
    for (Boundary f : kAllBoundaries) {
      b_on_face = b_on_face || boundary_functional(s.b, f) == 0;
    }
    both_on_face += b_on_face;
  }
  EXPECT_GT(degenerate, 300);
  EXPECT_GT(both_on_face, 1000);
}

TEST(Sampling, UniformIntRange) {
  std::mt19937_64 eng(12);
  for (int i = 0; i < 10000; ++i) {
    std::int64_t const v = uniform_int(eng, -3, 5);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 5);
  }
  EXPECT_EQ(uniform_int(eng, 7, 7), 7);
}

TEST(Sampling, SplitmixKnownValue) {
  // First output of SplitMix64 seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafull);
  EXPECT_NE(block_seed(1, 1, 0), block_seed(1, 1, 1));
  EXPECT_NE(block_seed(1, 1, 0), block_seed(1, 2, 0));
}

TEST(Sampling, PointsLandInRequestedRegion) {
  std::mt19937_64 eng(13);
  for (int r = 0; r < 9; ++r) {
    Region const region = Region::from_index(r);
    for (int i = 0; i < 2000; ++i) {
      EXPECT_EQ(classify_region(sample_point(eng, region)), region);
    }
  }
}

TEST(GridVerdict, AgreesWithExactOracle) {
  std::mt19937_64 eng(14);
  std::uniform_int_distribution<std::int64_t> xy(-(8 << 16), 8 << 16),
      z(1, 8 << 16), small(-4, 4), small_z(1, 4);
  auto c = [](std::int64_t v) { return double(v) * kGridStep; };
  for (int i = 0; i < 100000; ++i) {
    Segment3 s;
    if (i % 2) {
      s = {{c(xy(eng)), c(xy(eng)), c(z(eng))}, {c(xy(eng)), c(xy(eng)), c(z(eng))}};
    } else {
      s = {{double(small(eng)), double(small(eng)), double(small_z(eng))},
           {double(small(eng)), double(small(eng)), double(small_z(eng))}};
    }
    ASSERT_EQ(accepted_on_grid(s), clip_exact(s).accepted());
  }
}

}  // namespace
}  // namespace pyrclip
