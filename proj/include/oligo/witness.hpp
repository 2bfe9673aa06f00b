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

// Families of pairwise non-isomorphic n-element structures that realize a
// lower bound on f_n, each with a decoder that reads the index back from the
// isomorphism type.

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "oligo/structure.hpp"

namespace oligo {

using WitnessIndex = std::vector<std::size_t>;

struct WitnessFamily {
  std::string construction_id;
  std::size_t n = 0;
  std::vector<FiniteStructure> members;
  /// indices[i] is the index object that produced members[i].
  std::vector<WitnessIndex> indices;
  /// Reads the index from any structure isomorphic to a member. Uses only
  /// isomorphism-invariant statistics.
  std::function<WitnessIndex(const FiniteStructure&)> index_decoder;
  /// Model the members are induced from, and where each member sits in it.
  FiniteStructure scaffold;
  std::vector<std::vector<Element>> placements;
};

/// One member per composition of n into parts <= max_part, taken from a
/// fibered_order:max_part model with n blocks. Index: the composition.
WitnessFamily composition_witness(std::size_t n, std::size_t max_part);

/// One member per sigma in {0,1}^n on a 2n-point chain whose even points
/// carry X. Index: sigma, with 0 meaning an X point.
WitnessFamily binary_pattern_witness(std::size_t n);

/// One member per composition (m_0..m_{k-1}) of n inside n antichains
/// C_0..C_{n-1} of width n, where a_i in C_i lies below all of C_j, j > i.
/// Index: the composition; m_i counts the points with a longest chain of i
/// elements strictly below.
WitnessFamily antichain_witness(std::size_t n);

using CollisionReport = std::vector<std::pair<std::size_t, std::size_t>>;

/// Every pair i < j of members with equal canonical codes.
CollisionReport verify_pairwise_nonisomorphic(const WitnessFamily& family, int jobs = 0);

/// Members whose isomorphism type is missing from the n-element age of the
/// scaffold, by exhaustive subset search.
std::vector<std::size_t> members_missing_from_scaffold(const WitnessFamily& family, int jobs = 0);

}  // namespace oligo
