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

#include "oligo/kernels.hpp"

namespace oligo {

std::vector<CanonicalCode> canonical_codes_parallel(std::span<const FiniteStructure> items,
                                                    int jobs) {
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::vector<CanonicalCode> out(items.size());
  const std::int64_t count = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = canonical_form(items[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace oligo
