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

#ifndef PYRCLIP_DETAIL_TRAITS_HPP_
#define PYRCLIP_DETAIL_TRAITS_HPP_

#include "pyrclip/counted_real.hpp"
#include "pyrclip/geometry.hpp"
#include "pyrclip/pc_clipper.hpp"

namespace pyrclip::detail {

struct TimedTraits {
  using Real = double;
  static void hit(PcBranch) {}
  static double divide(double num, double den) { return num / den; }
};

struct CountingTraits {
  using Real = CountedReal;
  static void hit(PcBranch b) {
    ++counting::pc_branches()[static_cast<std::size_t>(b)];
  }
  static CountedReal divide(CountedReal num, CountedReal den) {
    if (den.value() == 0.0) {
      throw DegenerateDenominator("division by zero inside a clipping kernel");
    }
    return num / den;
  }
};

template <class Real>
BasicPoint3<Real> lift(Point3 const& p) {
  return {Real(p.x), Real(p.y), Real(p.z)};
}

inline Point3 lower(BasicPoint3<CountedReal> const& p) {
  return {p.x.value(), p.y.value(), p.z.value()};
}

}  // namespace pyrclip::detail

#endif  // PYRCLIP_DETAIL_TRAITS_HPP_
