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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "oligo/structure.hpp"

namespace oligo {

/// Byte string identifying an isomorphism class within one signature.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  /// Code of every zero-element structure, whatever the signature.
  static CanonicalCode empty_sentinel() { return CanonicalCode(std::vector<std::uint8_t>(4, 0)); }

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string hex() const;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& code) const noexcept;
};

/// Literal serialization: little-endian u32 size, relation count, then per
/// relation its arity, tuple count and the sorted tuples.
CanonicalCode encode(const FiniteStructure& s);

struct CanonicalLabeling {
  /// labels[v] is the position of v in the canonical relabeling.
  std::vector<Element> labels;
  CanonicalCode code;
  std::size_t leaves_visited = 0;
};

/// Individualization/refinement search; the code is the encoding of the
/// least leaf relabeling.
CanonicalLabeling canonical_labeling(const FiniteStructure& s);

CanonicalCode canonical_form(const FiniteStructure& s);

/// Throws SignatureError when the signatures differ.
bool is_isomorphic(const FiniteStructure& a, const FiniteStructure& b);

}  // namespace oligo
