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

// A double wrapper that tallies every arithmetic operation and comparison
// into a thread-local OpCounts. The clipping kernels are templates over
// their scalar type; instantiating them with CountedReal yields the
// "counting" flavour, while the timed flavour uses plain double and carries
// no instrumentation at all.
//
// Negation is a sign flip and is not counted. Subtraction counts as an
// addition.

#ifndef PYRCLIP_COUNTED_REAL_HPP_
#define PYRCLIP_COUNTED_REAL_HPP_

#include <cstdint>

namespace pyrclip {

struct OpCounts {
  std::uint64_t comparisons = 0;
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t divisions = 0;

  OpCounts& operator+=(OpCounts const& o) {
    comparisons += o.comparisons;
    additions += o.additions;
    multiplications += o.multiplications;
    divisions += o.divisions;
    return *this;
  }
  friend OpCounts operator-(OpCounts a, OpCounts const& b) {
    a.comparisons -= b.comparisons;
    a.additions -= b.additions;
    a.multiplications -= b.multiplications;
    a.divisions -= b.divisions;
    return a;
  }
  friend bool operator==(OpCounts const&, OpCounts const&) = default;
};

namespace counting {

// The calling thread's running tally.
OpCounts& tally();

// Snapshot-and-diff helper: counts accumulated during its lifetime.
class Scope {
 public:
  Scope() : start_(tally()) {}
  OpCounts elapsed() const { return tally() - start_; }

 private:
  OpCounts start_;
};

}  // namespace counting

class CountedReal {
 public:
  constexpr CountedReal() = default;
  constexpr CountedReal(double v) : v_(v) {}  // NOLINT: implicit by design

  constexpr double value() const { return v_; }

  friend CountedReal operator-(CountedReal a) { return CountedReal(-a.v_); }

  friend CountedReal operator+(CountedReal a, CountedReal b) {
    ++counting::tally().additions;
    return CountedReal(a.v_ + b.v_);
  }
  friend CountedReal operator-(CountedReal a, CountedReal b) {
    ++counting::tally().additions;
    return CountedReal(a.v_ - b.v_);
  }
  friend CountedReal operator*(CountedReal a, CountedReal b) {
    ++counting::tally().multiplications;
    return CountedReal(a.v_ * b.v_);
  }
  friend CountedReal operator/(CountedReal a, CountedReal b) {
    ++counting::tally().divisions;
    return CountedReal(a.v_ / b.v_);
  }

  CountedReal& operator+=(CountedReal o) { return *this = *this + o; }
  CountedReal& operator-=(CountedReal o) { return *this = *this - o; }
  CountedReal& operator*=(CountedReal o) { return *this = *this * o; }
  CountedReal& operator/=(CountedReal o) { return *this = *this / o; }

  friend bool operator<(CountedReal a, CountedReal b) {
    ++counting::tally().comparisons;
    return a.v_ < b.v_;
  }
  friend bool operator>(CountedReal a, CountedReal b) {
    ++counting::tally().comparisons;
    return a.v_ > b.v_;
  }
  friend bool operator<=(CountedReal a, CountedReal b) {
    ++counting::tally().comparisons;
    return a.v_ <= b.v_;
  }
  friend bool operator>=(CountedReal a, CountedReal b) {
    ++counting::tally().comparisons;
    return a.v_ >= b.v_;
  }
  friend bool operator==(CountedReal a, CountedReal b) {
    ++counting::tally().comparisons;
    return a.v_ == b.v_;
  }
  friend bool operator!=(CountedReal a, CountedReal b) { return !(a == b); }

 private:
  double v_ = 0.0;
};

inline double to_double(double v) { return v; }
inline double to_double(CountedReal v) { return v.value(); }

}  // namespace pyrclip

#endif  // PYRCLIP_COUNTED_REAL_HPP_
