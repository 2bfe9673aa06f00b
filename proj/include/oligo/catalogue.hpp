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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oligo/bigint.hpp"
#include "oligo/structure.hpp"

namespace oligo {

/// Sampler sizes used by the profile engine for one n: counts are taken at
/// `base` and `verify`; `retry` is consulted only when those disagree.
struct SaturationPlan {
  std::size_t base = 0;
  std::size_t verify = 0;
  std::size_t retry = 0;
};

/// A named homogeneous structure, realized through finite models.
///
/// For most entries the sampler size is the number of points. tree_c reads
/// it as the tree depth; fibered_order:k requires a multiple of k.
struct CatalogueEntry {
  std::string id;
  RelationalSignature signature;
  std::function<FiniteStructure(std::size_t size)> sampler;
  /// Empty when no closed form is known.
  std::function<BigInt(std::size_t n)> predictor;
  std::function<SaturationPlan(std::size_t n)> saturation_rule;
  /// Optional: n-subsets of the size-`size` model that meet every orbit.
  /// When empty, the profile engine walks all n-subsets.
  std::function<std::vector<std::vector<Element>>(std::size_t size, std::size_t n)> orbit_subsets;
};

CatalogueEntry pure_set();
CatalogueEntry dlo();
CatalogueEntry betweenness();
CatalogueEntry circular();
CatalogueEntry separation();
CatalogueEntry local_order();
CatalogueEntry fibered_order(std::size_t k);
CatalogueEntry tree_c();

/// Accepts the stable ids listed by catalogue_ids(); fibered_order takes
/// its block size as "fibered_order:k". Throws ParameterError otherwise.
CatalogueEntry lookup_entry(std::string_view id);

std::vector<std::string> catalogue_ids();

/// Entries swept by the whole-catalogue checks, with fibered_order:2 and :3.
std::vector<CatalogueEntry> standard_catalogue();

/// Throws ParameterError when `size` is outside the entry's domain.
FiniteStructure sample_model(const CatalogueEntry& entry, std::size_t size);

std::optional<BigInt> age_predictor(const CatalogueEntry& entry, std::size_t n);

/// Leaf count of the tree_c model of the given depth.
std::size_t tree_leaves(std::size_t depth);

/// Orbit representatives of k-subsets of the leaves of the complete binary
/// tree of the given depth, under the tree's automorphism group.
std::vector<std::vector<Element>> tree_subset_orbits(std::size_t depth, std::size_t k);

}  // namespace oligo
