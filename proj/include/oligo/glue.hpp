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

// Assembly of overlapping linear fragments of one hidden line or circle.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oligo/structure.hpp"

namespace oligo {

using GroundId = std::int64_t;

struct OrderFragment {
  std::string id;
  /// Least first; distinct, at least two elements.
  std::vector<GroundId> elements;
};

enum class OverlapTag { kDisjoint, kHeadTail, kAlignedReversed, kDoubleWrap, kDoubleWrapReversed };

std::string_view to_string(OverlapTag tag);

struct OverlapCase {
  OverlapTag tag = OverlapTag::kDisjoint;
  /// Maximal common runs, each listed in f1's order.
  std::vector<std::vector<GroundId>> segments;
};

/// Throws ParameterError on a malformed fragment.
void validate_fragment(const OrderFragment& f);

/// Tags whose defining clause holds for the pair. A pair from one ambient
/// line or circle matches exactly one.
std::vector<OverlapTag> matching_cases(const OrderFragment& f1, const OrderFragment& f2);

/// The unique matching case. Throws InvalidFragmentPairError when none
/// matches.
OverlapCase classify_overlap(const OrderFragment& f1, const OrderFragment& f2);

enum class ComponentKind { kLinear, kCircular };

std::string_view to_string(ComponentKind kind);

struct GlueComponent {
  ComponentKind kind = ComponentKind::kLinear;
  /// Linear: starts with the smaller endpoint. Circular: starts at the
  /// least element and continues toward its smaller neighbour.
  std::vector<GroundId> arrangement;
  /// Fragment ids in input order.
  std::vector<std::string> members;
};

/// Components of the overlap graph, ordered by their first member.
/// Throws InvalidFragmentPairError for unclassifiable pairs and
/// InconsistentFragmentsError when orientations or successors conflict.
std::vector<GlueComponent> glue(const std::vector<OrderFragment>& fragments);

/// Rotation and reversal normal form used by GlueComponent.
std::vector<GroundId> normalize_arrangement(ComponentKind kind, std::vector<GroundId> arrangement);

/// Betweenness (linear) or separation (circular) structure of the
/// arrangement, with element ids replaced by their rank among the sorted ids.
FiniteStructure emit_invariant_relation(const GlueComponent& component);

}  // namespace oligo
