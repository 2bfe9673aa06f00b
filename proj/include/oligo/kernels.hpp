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

// Hot loops of the enumeration lab. Every kernel exists twice: a serial
// reference and an OpenMP version; tests hold them equal.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <variant>
#include <vector>

#include "oligo/canonical.hpp"
#include "oligo/structure.hpp"

namespace oligo {

/// Induced substructure on a sorted subset, as m^k membership bits per
/// relation in lexicographic tuple order. Equal literals mean identical
/// reindexed substructures.
using Literal = std::vector<std::uint64_t>;

struct LiteralHash {
  std::size_t operator()(const Literal& lit) const noexcept;
};

/// Bit-matrix view of a model used for fast subset restriction.
class DenseModel {
 public:
  static constexpr std::uint64_t kMaxBits = std::uint64_t{1} << 31;

  /// Throws ResourceError when some relation needs more than kMaxBits.
  explicit DenseModel(const FiniteStructure& model);

  std::size_t size() const { return size_; }
  const RelationalSignature& signature() const { return signature_; }

  /// Writes the literal of `subset` (strictly increasing elements) to `out`.
  void literal(std::span<const Element> subset, Literal& out) const;

  /// Rebuilds the m-element structure a literal describes.
  FiniteStructure structure_from_literal(const Literal& lit, std::size_t m) const;

 private:
  RelationalSignature signature_;
  std::size_t size_ = 0;
  std::vector<std::vector<std::uint64_t>> bits_;
};

/// All k-subsets of {0..universe-1}, visited in colex order.
struct AllSubsets {
  std::size_t universe = 0;
  std::size_t k = 0;
};

/// A precomputed list of subsets, e.g. orbit representatives.
struct ExplicitSubsets {
  std::span<const std::vector<Element>> subsets;
};

using SubsetSource = std::variant<AllSubsets, ExplicitSubsets>;

using CodeSet = std::unordered_set<CanonicalCode, CanonicalCodeHash>;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

std::uint64_t subset_count(const SubsetSource& source);

/// k-subset of colex rank `rank` in {0..universe-1}.
std::vector<Element> colex_unrank(std::uint64_t rank, std::size_t k);

/// Advances to the colex successor; false after the last subset.
bool colex_next(std::vector<Element>& subset, std::size_t universe);

/// Distinct canonical codes of the substructures induced on the subsets.
/// Literal repeats are canonicalized once.
CodeSet age_codes_serial(const DenseModel& model, const SubsetSource& source);

/// Same result as age_codes_serial. `jobs` <= 0 uses the OpenMP default.
CodeSet age_codes_parallel(const DenseModel& model, const SubsetSource& source,
                           int jobs = 0);

std::vector<CanonicalCode> canonical_codes_serial(std::span<const FiniteStructure> items);
std::vector<CanonicalCode> canonical_codes_parallel(std::span<const FiniteStructure> items,
                                                    int jobs = 0);

}  // namespace oligo
