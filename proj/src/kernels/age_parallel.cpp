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

#include <omp.h>

#include <algorithm>
#include <unordered_set>

#include "oligo/error.hpp"
#include "oligo/kernels.hpp"

namespace oligo {

namespace {

using LiteralSet = std::unordered_set<Literal, LiteralHash>;

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

constexpr std::uint64_t kChunk = 4096;

}  // namespace

CodeSet age_codes_parallel(const DenseModel& model, const SubsetSource& source, int jobs) {
  const int threads = thread_count(jobs);
  std::vector<LiteralSet> local(static_cast<std::size_t>(threads));
  std::size_t m = 0;

  if (const auto* all = std::get_if<AllSubsets>(&source)) {
    m = all->k;
    const std::uint64_t total = binomial(all->universe, all->k);
    if (total == UINT64_MAX) throw ResourceError("subset count overflows 64 bits");
    const std::int64_t chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t c = 0; c < chunks; ++c) {
      auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      std::vector<Element> subset = colex_unrank(begin, all->k);
      Literal lit;
      for (std::uint64_t rank = begin; rank < end; ++rank) {
        model.literal(subset, lit);
        mine.insert(lit);
        colex_next(subset, all->universe);
      }
    }
  } else {
    const auto subsets = std::get<ExplicitSubsets>(source).subsets;
    if (!subsets.empty()) m = subsets.front().size();
    const std::int64_t count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel num_threads(threads)
    {
      auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
      Literal lit;
#pragma omp for schedule(dynamic, 256)
      for (std::int64_t i = 0; i < count; ++i) {
        model.literal(subsets[static_cast<std::size_t>(i)], lit);
        mine.insert(lit);
      }
    }
  }

  LiteralSet merged = std::move(local.front());
  for (std::size_t t = 1; t < local.size(); ++t) merged.merge(local[t]);
  const std::vector<Literal> distinct(merged.begin(), merged.end());

  std::vector<CanonicalCode> codes(distinct.size());
  const std::int64_t count = static_cast<std::int64_t>(distinct.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    codes[idx] = canonical_form(model.structure_from_literal(distinct[idx], m));
  }
  return CodeSet(codes.begin(), codes.end());
}

}  // namespace oligo
