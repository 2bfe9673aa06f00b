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
#include <random>
#include <utility>
#include <vector>

#include "oligo/structure.hpp"

namespace oligo {

/// Dense boolean relation on {0..size-1}.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t size) : size_(size), bits_(size * size, 0) {}

  std::size_t size() const { return size_; }
  bool operator()(std::size_t a, std::size_t b) const { return bits_[a * size_ + b] != 0; }
  void set(std::size_t a, std::size_t b, bool value = true) { bits_[a * size_ + b] = value; }

  std::vector<std::pair<Element, Element>> pairs() const;
  bool is_transitive() const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> bits_;
};

class FinitePoset {
 public:
  /// Adds the reflexive pairs, then checks antisymmetry and transitivity.
  /// Throws ParameterError on a violation or an out-of-range element.
  FinitePoset(std::size_t size, const std::vector<std::pair<Element, Element>>& leq);

  /// Same checks on a full relation.
  explicit FinitePoset(BinaryRelation leq);

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_(a, b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq_(a, b) || leq_(b, a); }
  const BinaryRelation& relation() const { return leq_; }

 private:
  void validate();

  BinaryRelation leq_;
};

/// Transitive closure of `pairs` plus the diagonal; throws ParameterError
/// when the result is not antisymmetric.
FinitePoset poset_closure(std::size_t size, const std::vector<std::pair<Element, Element>>& pairs);

/// Largest antichain, via a minimum chain cover from bipartite matching.
std::size_t antichain_width(const FinitePoset& p);

/// Largest number of elements incomparable to a single element.
std::size_t max_incomparability(const FinitePoset& p);

/// Largest number of elements incomparable to a single element under a
/// quasi-order.
std::size_t max_incomparability(const BinaryRelation& q);

/// a ⊴ b iff a <= b, or b is a maximal element of the set of elements
/// incomparable to a. Throws InvariantError if the result is not transitive.
BinaryRelation triangle_step(const FinitePoset& p);

struct LinearizationRound {
  std::size_t elements = 0;
  /// The ⊴ relation on this round's elements.
  std::vector<std::pair<Element, Element>> triangle;
  /// Groups of this round's elements merged by ⊴ in both directions.
  std::vector<std::vector<Element>> merged;
  std::size_t max_incomparable_before = 0;
  std::size_t max_incomparable_after = 0;
  std::size_t quotient_width = 0;
};

struct LinearizationResult {
  /// Least class first; each class sorted.
  std::vector<std::vector<Element>> classes;
  std::vector<LinearizationRound> trace;
};

/// Applies triangle_step and quotients until the quotient is a chain.
/// Throws InvariantError if the quotient is ill-defined or the number of
/// rounds exceeds the size.
LinearizationResult linearize(const FinitePoset& p);

/// Random layout-DAG poset: a random linear layout, each forward pair kept
/// with probability q ~ U(0,1), transitively closed. Sizes are uniform in
/// [1, max_size]; posets wider than max_width are redrawn.
FinitePoset random_poset(std::mt19937_64& rng, std::size_t max_size, std::size_t max_width);

}  // namespace oligo
