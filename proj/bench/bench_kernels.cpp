/* Copyright 2026 The oligo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference against the OpenMP kernels on catalogue models.

#include <benchmark/benchmark.h>

#include "oligo/catalogue.hpp"
#include "oligo/kernels.hpp"

namespace {

using namespace oligo;

// Arguments: sampler size, subset size.
template <bool Parallel>
void age_local_order(benchmark::State& state) {
  const DenseModel model(sample_model(local_order(), static_cast<std::size_t>(state.range(0))));
  const AllSubsets subsets{model.size(), static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) {
    CodeSet codes = Parallel ? age_codes_parallel(model, subsets) : age_codes_serial(model, subsets);
    benchmark::DoNotOptimize(codes);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(subset_count(subsets)));
}

template <bool Parallel>
void age_separation(benchmark::State& state) {
  const DenseModel model(sample_model(separation(), static_cast<std::size_t>(state.range(0))));
  const AllSubsets subsets{model.size(), static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) {
    CodeSet codes = Parallel ? age_codes_parallel(model, subsets) : age_codes_serial(model, subsets);
    benchmark::DoNotOptimize(codes);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(subset_count(subsets)));
}

template <bool Parallel>
void canonical_batch(benchmark::State& state) {
  const FiniteStructure model = sample_model(circular(), 15);
  std::vector<FiniteStructure> items;
  std::vector<Element> subset = colex_unrank(0, static_cast<std::size_t>(state.range(0)));
  do {
    items.push_back(induced_substructure(model, subset));
  } while (colex_next(subset, model.size()) && items.size() < 2000);
  for (auto _ : state) {
    auto codes = Parallel ? canonical_codes_parallel(items) : canonical_codes_serial(items);
    benchmark::DoNotOptimize(codes);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(items.size()));
}

}  // namespace

BENCHMARK(age_local_order<false>)->Name("age/local_order/serial")->Args({17, 7})->Args({19, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(age_local_order<true>)->Name("age/local_order/parallel")->Args({17, 7})->Args({19, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(age_separation<false>)->Name("age/separation/serial")->Args({15, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(age_separation<true>)->Name("age/separation/parallel")->Args({15, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(canonical_batch<false>)->Name("canonical/serial")->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(canonical_batch<true>)->Name("canonical/parallel")->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
