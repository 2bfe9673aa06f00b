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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "oligo/bigint.hpp"
#include "oligo/catalogue.hpp"

namespace oligo {

struct ProfileSequence {
  std::string entry_id;
  /// values[i] is f_{i+1}.
  std::vector<std::uint64_t> values;
  /// Sampler size whose count was accepted for f_{i+1}.
  std::vector<std::size_t> saturated_at;
};

struct ProfileOptions {
  /// Total subsets the whole profile may visit; exceeding it is a ResourceError.
  std::uint64_t budget = 2'000'000'000;
  /// Use the OpenMP kernel; false runs the serial reference.
  bool parallel = true;
  int jobs = 0;
};

/// Number of isomorphism classes among the n-element induced substructures
/// of the entry's model of the given size.
std::uint64_t count_classes(const CatalogueEntry& entry, std::size_t size, std::size_t n,
                            const ProfileOptions& options = {});

/// f_1..f_{n_max}, each counted at the saturation base and verify sizes.
/// Disagreement triggers one count at the retry size; a verify/retry
/// mismatch raises SaturationError.
ProfileSequence profile(const CatalogueEntry& entry, std::size_t n_max,
                        const ProfileOptions& options = {});

bool is_non_decreasing(const ProfileSequence& seq);

/// Ordered sequences over {1..max_part} summing to n.
BigInt compositions_count(std::size_t n, std::size_t max_part);

/// The compositions themselves, in lexicographic order.
std::vector<std::vector<std::size_t>> compositions(std::size_t n, std::size_t max_part);

}  // namespace oligo
