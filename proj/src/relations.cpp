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

#include "oligo/relations.hpp"

#include <vector>

namespace oligo::rel {

RelationalSignature reduct_signature(Reduct which) {
  switch (which) {
    case Reduct::kPureSet:
      return RelationalSignature();
    case Reduct::kLinear:
      return RelationalSignature({{"leq", 2}});
    case Reduct::kBetweenness:
      return RelationalSignature({{"B", 3}});
    case Reduct::kCircular:
      return RelationalSignature({{"C", 3}});
    case Reduct::kSeparation:
      return RelationalSignature({{"S", 4}});
  }
  return RelationalSignature();
}

FiniteStructure reduct_structure(Reduct which, std::span<const std::size_t> position) {
  const auto pos = [&](Element e) { return position[e]; };
  return FiniteStructure::from_predicate(
      reduct_signature(which), position.size(),
      [&](std::size_t, std::span<const Element> t) {
        switch (which) {
          case Reduct::kPureSet:
            return false;
          case Reduct::kLinear:
            return pos(t[0]) <= pos(t[1]);
          case Reduct::kBetweenness:
            return between(pos(t[0]), pos(t[1]), pos(t[2]));
          case Reduct::kCircular:
            return cyclic(pos(t[0]), pos(t[1]), pos(t[2]));
          case Reduct::kSeparation:
            return separates(pos(t[0]), pos(t[1]), pos(t[2]), pos(t[3]));
        }
        return false;
      });
}

FiniteStructure reduct_structure(Reduct which, std::size_t size) {
  std::vector<std::size_t> identity(size);
  for (std::size_t i = 0; i < size; ++i) identity[i] = i;
  return reduct_structure(which, identity);
}

}  // namespace oligo::rel
