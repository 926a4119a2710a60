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

// Per-segment throughput of the four timed kernels on each generated case.
// Arguments are (case id, algorithm index into kAllAlgorithms).

#include <map>
#include <vector>

#include <benchmark/benchmark.h>

#include "pyrclip/baseline_clippers.hpp"
#include "pyrclip/corpus.hpp"
#include "pyrclip/harness.hpp"
#include "pyrclip/pc_clipper.hpp"

namespace {

using namespace pyrclip;

constexpr std::size_t kSegments = 1 << 16;

std::vector<Segment3> const& segments_for(int case_id) {
  static std::map<int, std::vector<Segment3>> cache;
  auto it = cache.find(case_id);
  if (it == cache.end()) {
    it = cache.emplace(case_id, generate_case(case_by_id(case_id), 1, kSegments))
             .first;
  }
  return it->second;
}

using Kernel = ClipOutcome (*)(Point3 const&, Point3 const&);
Kernel const kKernels[] = {&detail::clip_pc_kernel, &detail::clip_cs_kernel,
                           &detail::clip_lb_kernel, &detail::clip_cb_kernel};

void BM_Clip(benchmark::State& state) {
  auto const& segments = segments_for(static_cast<int>(state.range(0)));
  Kernel const kernel = kKernels[state.range(1)];
  state.SetLabel(std::string(case_by_id(static_cast<int>(state.range(0))).name) +
                 "/" + std::string(to_string(kAllAlgorithms[state.range(1)])));
  for (auto _ : state) {
    for (auto const& s : segments) {
      ClipOutcome o = kernel(s.a, s.b);
      benchmark::DoNotOptimize(o);
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(segments.size()));
}

void all_cases_and_algorithms(benchmark::internal::Benchmark* b) {
  for (auto const& spec : all_cases()) {
    for (int a = 0; a < 4; ++a) b->Args({spec.case_id, a});
  }
}

BENCHMARK(BM_Clip)->Apply(all_cases_and_algorithms);

}  // namespace

BENCHMARK_MAIN();
