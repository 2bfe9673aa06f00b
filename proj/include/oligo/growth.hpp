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
#include <span>
#include <string>
#include <vector>

#include "oligo/bigint.hpp"

namespace oligo {

/// Unordered rooted binary trees with n leaves.
BigInt tree_count(std::size_t n);

/// t_1..t_n.
std::vector<BigInt> tree_counts(std::size_t n);

/// F_1 = F_2 = 1.
BigInt fibonacci(std::size_t n);

std::vector<BigInt> fibonacci_prefix(std::size_t n);

struct GrowthReport {
  std::vector<double> nth_roots;
  /// ratios[i] = f_{i+2} / f_{i+1}.
  std::vector<double> ratios;
  double last_ratio = 0.0;
  /// Ratio limit after removing a 1/n correction term from the last two
  /// ratios: n r_n - (n-1) r_{n-1}.
  double limit_estimate = 0.0;
  bool monotone = true;
};

/// Throws DomainError on fewer than 3 values or a non-positive value.
GrowthReport growth_estimate(std::span<const BigInt> values);

/// True when one K on the grid 1, 10, ..., 10^6 gives
/// f_n >= c^n / (K n^degree + K) for every supplied n.
bool lower_bound_check(std::span<const BigInt> values, double c, unsigned degree);

struct GrowthConstant {
  std::string symbol;
  double value = 0.0;
  std::string meaning;
};

std::vector<GrowthConstant> growth_constants();

}  // namespace oligo
