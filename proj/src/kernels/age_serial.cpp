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

#include <unordered_set>

#include "oligo/kernels.hpp"

namespace oligo {

CodeSet age_codes_serial(const DenseModel& model, const SubsetSource& source) {
  std::unordered_set<Literal, LiteralHash> literals;
  std::size_t m = 0;
  Literal lit;
  if (const auto* all = std::get_if<AllSubsets>(&source)) {
    m = all->k;
    if (all->k <= all->universe) {
      std::vector<Element> subset = colex_unrank(0, all->k);
      do {
        model.literal(subset, lit);
        literals.insert(lit);
      } while (colex_next(subset, all->universe));
    }
  } else {
    for (const auto& subset : std::get<ExplicitSubsets>(source).subsets) {
      m = subset.size();
      model.literal(subset, lit);
      literals.insert(lit);
    }
  }

  CodeSet codes;
  for (const auto& l : literals) codes.insert(canonical_form(model.structure_from_literal(l, m)));
  return codes;
}

std::vector<CanonicalCode> canonical_codes_serial(std::span<const FiniteStructure> items) {
  std::vector<CanonicalCode> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(canonical_form(s));
  return out;
}

}  // namespace oligo
