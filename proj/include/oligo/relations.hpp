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

// The order reducts evaluated on positions along a line. A position vector
// maps each element to its place on the line (or around the circle).

#pragma once

#include <cstddef>
#include <span>

#include "oligo/structure.hpp"

namespace oligo::rel {

inline bool between(std::size_t x, std::size_t y, std::size_t z) {
  return (x <= y && y <= z) || (z <= y && y <= x);
}

inline bool cyclic(std::size_t x, std::size_t y, std::size_t z) {
  return (x <= y && y <= z) || (z <= x && x <= y) || (y <= z && z <= x);
}

inline bool separates(std::size_t x, std::size_t y, std::size_t z, std::size_t t) {
  return (cyclic(x, y, z) && cyclic(y, z, t) && cyclic(z, t, x) && cyclic(t, x, y)) ||
         (cyclic(t, z, y) && cyclic(z, y, x) && cyclic(y, x, t) && cyclic(x, t, z));
}

enum class Reduct { kPureSet, kLinear, kBetweenness, kCircular, kSeparation };

RelationalSignature reduct_signature(Reduct which);

/// Structure on {0..position.size()-1} where element v sits at position[v].
FiniteStructure reduct_structure(Reduct which, std::span<const std::size_t> position);

/// Same, with element v at position v.
FiniteStructure reduct_structure(Reduct which, std::size_t size);

}  // namespace oligo::rel
