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

#include "oligo/structure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "oligo/error.hpp"

namespace oligo {

namespace {

bool tuple_less(const Element* a, const Element* b, std::size_t k) {
  return std::lexicographical_compare(a, a + k, b, b + k);
}

// Sorts the strided tuples of `flat` lexicographically and drops repeats.
// Tuples over a domain small enough for size^k to fit 64 bits are packed
// into one mixed-radix word, whose numeric order is the tuple order.
void normalize_tuples(std::vector<Element>& flat, std::size_t k, std::size_t size) {
  const std::size_t count = flat.size() / k;
  bool sorted = true;
  for (std::size_t i = 1; i < count && sorted; ++i) {
    sorted = tuple_less(&flat[(i - 1) * k], &flat[i * k], k);
  }
  if (sorted) return;

  bool packable = size > 0;
  std::uint64_t span = 1;
  for (std::size_t j = 0; j < k && packable; ++j) {
    if (span > std::numeric_limits<std::uint64_t>::max() / size) packable = false;
    span *= size;
  }
  if (packable) {
    std::vector<std::uint64_t> keys(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < k; ++j) key = key * size + flat[i * k + j];
      keys[i] = key;
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    flat.resize(keys.size() * k);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::uint64_t key = keys[i];
      for (std::size_t j = k; j-- > 0;) {
        flat[i * k + j] = static_cast<Element>(key % size);
        key /= size;
      }
    }
    return;
  }

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return tuple_less(&flat[a * k], &flat[b * k], k);
  });
  std::vector<Element> out;
  out.reserve(flat.size());
  for (std::size_t idx : order) {
    const Element* t = &flat[idx * k];
    if (!out.empty() &&
        std::equal(t, t + k, out.end() - static_cast<std::ptrdiff_t>(k))) {
      continue;
    }
    out.insert(out.end(), t, t + k);
  }
  flat = std::move(out);
}

}  // namespace

RelationalSignature::RelationalSignature(std::vector<RelationSymbol> relations)
    : relations_(std::move(relations)) {
  std::set<std::string_view> names;
  for (const auto& rel : relations_) {
    if (rel.arity == 0) {
      throw ParameterError("relation '" + rel.name + "' has arity 0");
    }
    if (!names.insert(rel.name).second) {
      throw ParameterError("duplicate relation name '" + rel.name + "'");
    }
  }
}

std::optional<std::size_t> RelationalSignature::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].name == name) return i;
  }
  return std::nullopt;
}

FiniteStructure::FiniteStructure(RelationalSignature signature, std::size_t size,
                                 std::vector<std::vector<Element>> tuples)
    : signature_(std::move(signature)), size_(size), tuples_(std::move(tuples)) {
  if (tuples_.size() != signature_.size()) {
    throw ParameterError("tuple lists do not match the signature: expected " +
                         std::to_string(signature_.size()) + " relations, got " +
                         std::to_string(tuples_.size()));
  }
  for (std::size_t r = 0; r < tuples_.size(); ++r) {
    const std::size_t k = signature_[r].arity;
    if (tuples_[r].size() % k != 0) {
      throw ParameterError("relation '" + signature_[r].name +
                           "' has a tuple whose length differs from its arity");
    }
    for (Element e : tuples_[r]) {
      if (e >= size_) {
        throw ParameterError("relation '" + signature_[r].name + "' mentions element " +
                             std::to_string(e) + " outside a domain of size " +
                             std::to_string(size_));
      }
    }
    normalize_tuples(tuples_[r], k, size_);
  }
}

bool FiniteStructure::holds(std::size_t r, std::span<const Element> t) const {
  const std::size_t k = signature_[r].arity;
  if (t.size() != k) return false;
  const auto& flat = tuples_[r];
  std::size_t lo = 0;
  std::size_t hi = flat.size() / k;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const Element* m = &flat[mid * k];
    if (tuple_less(m, t.data(), k)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < flat.size() / k && std::equal(t.begin(), t.end(), &flat[lo * k]);
}

FiniteStructure induced_substructure(const FiniteStructure& model,
                                     std::span<const Element> subset) {
  constexpr Element kAbsent = ~Element{0};
  std::vector<Element> position(model.size(), kAbsent);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const Element e = subset[i];
    if (e >= model.size()) {
      throw InvalidSubsetError("subset element " + std::to_string(e) +
                               " is outside a domain of size " +
                               std::to_string(model.size()));
    }
    if (position[e] != kAbsent) {
      throw InvalidSubsetError("subset repeats element " + std::to_string(e));
    }
    position[e] = static_cast<Element>(i);
  }

  std::vector<std::vector<Element>> tuples(model.relation_count());
  for (std::size_t r = 0; r < model.relation_count(); ++r) {
    const std::size_t k = model.arity(r);
    auto flat = model.flat_tuples(r);
    for (std::size_t off = 0; off < flat.size(); off += k) {
      bool inside = true;
      for (std::size_t j = 0; j < k && inside; ++j) inside = position[flat[off + j]] != kAbsent;
      if (!inside) continue;
      for (std::size_t j = 0; j < k; ++j) tuples[r].push_back(position[flat[off + j]]);
    }
  }
  return FiniteStructure(model.signature(), subset.size(), std::move(tuples));
}

FiniteStructure relabel(const FiniteStructure& s, std::span<const Element> perm) {
  if (perm.size() != s.size()) {
    throw InvalidSubsetError("relabeling has length " + std::to_string(perm.size()) +
                             " for a structure of size " + std::to_string(s.size()));
  }
  std::vector<bool> seen(perm.size(), false);
  for (Element e : perm) {
    if (e >= perm.size() || seen[e]) {
      throw InvalidSubsetError("relabeling is not a permutation");
    }
    seen[e] = true;
  }
  std::vector<std::vector<Element>> tuples(s.relation_count());
  for (std::size_t r = 0; r < s.relation_count(); ++r) {
    auto flat = s.flat_tuples(r);
    tuples[r].reserve(flat.size());
    for (Element e : flat) tuples[r].push_back(perm[e]);
  }
  return FiniteStructure(s.signature(), s.size(), std::move(tuples));
}

}  // namespace oligo
