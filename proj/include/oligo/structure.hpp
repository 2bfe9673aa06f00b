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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oligo {

using Element = std::uint32_t;

struct RelationSymbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

/// Ordered list of relation symbols. The order is part of the signature's
/// identity: canonical codes serialize relations in this order.
class RelationalSignature {
 public:
  RelationalSignature() = default;
  explicit RelationalSignature(std::vector<RelationSymbol> relations);

  std::size_t size() const { return relations_.size(); }
  bool empty() const { return relations_.empty(); }
  const RelationSymbol& operator[](std::size_t i) const { return relations_[i]; }
  auto begin() const { return relations_.begin(); }
  auto end() const { return relations_.end(); }

  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const RelationalSignature&,
                         const RelationalSignature&) = default;

 private:
  std::vector<RelationSymbol> relations_;
};

/// A finite relational structure on {0..size-1}, stored extensionally.
///
/// Each relation is a duplicate-free set of tuples kept as one flat array,
/// `arity` entries per tuple, sorted lexicographically. Instances are
/// immutable once built and can be shared freely between threads.
class FiniteStructure {
 public:
  FiniteStructure() = default;

  /// `tuples[r]` is the flat tuple list of relation r in any order, possibly
  /// with repeats. Throws ParameterError on arity or range violations.
  FiniteStructure(RelationalSignature signature, std::size_t size,
                  std::vector<std::vector<Element>> tuples);

  /// Evaluates `pred(r, tuple)` on every tuple of every relation.
  template <class Pred>
  static FiniteStructure from_predicate(RelationalSignature signature,
                                        std::size_t size, Pred&& pred);

  const RelationalSignature& signature() const { return signature_; }
  std::size_t size() const { return size_; }
  std::size_t relation_count() const { return tuples_.size(); }
  std::size_t arity(std::size_t r) const { return signature_[r].arity; }
  std::size_t tuple_count(std::size_t r) const {
    return tuples_[r].size() / signature_[r].arity;
  }
  std::span<const Element> flat_tuples(std::size_t r) const { return tuples_[r]; }
  std::span<const Element> tuple(std::size_t r, std::size_t i) const {
    const std::size_t k = signature_[r].arity;
    return std::span<const Element>(tuples_[r]).subspan(i * k, k);
  }

  /// Membership by binary search.
  bool holds(std::size_t r, std::span<const Element> t) const;
  bool holds(std::size_t r, std::initializer_list<Element> t) const {
    return holds(r, std::span<const Element>(t.begin(), t.size()));
  }

  friend bool operator==(const FiniteStructure&, const FiniteStructure&) = default;

 private:
  RelationalSignature signature_;
  std::size_t size_ = 0;
  std::vector<std::vector<Element>> tuples_;
};

/// Restriction to `subset`, reindexed so that subset[i] becomes element i.
/// Throws InvalidSubsetError on out-of-range or repeated elements.
FiniteStructure induced_substructure(const FiniteStructure& model,
                                     std::span<const Element> subset);

/// Image of `s` under the bijection v -> perm[v].
FiniteStructure relabel(const FiniteStructure& s, std::span<const Element> perm);

template <class Pred>
FiniteStructure FiniteStructure::from_predicate(RelationalSignature signature,
                                                std::size_t size, Pred&& pred) {
  std::vector<std::vector<Element>> tuples(signature.size());
  for (std::size_t r = 0; r < signature.size(); ++r) {
    const std::size_t k = signature[r].arity;
    if (size == 0) continue;
    std::vector<Element> t(k, 0);
    for (;;) {
      if (pred(r, std::span<const Element>(t))) {
        tuples[r].insert(tuples[r].end(), t.begin(), t.end());
      }
      std::size_t i = k;
      while (i > 0 && t[i - 1] + 1 == size) t[--i] = 0;
      if (i == 0) break;
      ++t[i - 1];
    }
  }
  // Odometer order is already lexicographic and repeat-free.
  return FiniteStructure(std::move(signature), size, std::move(tuples));
}

}  // namespace oligo
