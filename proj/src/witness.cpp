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

#include "oligo/witness.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "oligo/canonical.hpp"
#include "oligo/catalogue.hpp"
#include "oligo/error.hpp"
#include "oligo/kernels.hpp"
#include "oligo/profile.hpp"

namespace oligo {

namespace {

std::size_t relation(const FiniteStructure& s, std::string_view name, std::size_t arity) {
  auto idx = s.signature().index_of(name);
  if (!idx || s.arity(*idx) != arity) {
    throw SignatureError("structure has no relation " + std::string(name) + "/" +
                         std::to_string(arity));
  }
  return *idx;
}

// Elements sorted by how many elements lie at or below them.
std::vector<Element> by_rank(const FiniteStructure& s, std::size_t leq) {
  std::vector<std::size_t> below(s.size(), 0);
  for (std::size_t i = 0; i < s.tuple_count(leq); ++i) ++below[s.tuple(leq, i)[1]];
  std::vector<Element> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return below[a] < below[b]; });
  return order;
}

void fill_members(WitnessFamily& family) {
  for (const auto& placement : family.placements) {
    family.members.push_back(induced_substructure(family.scaffold, placement));
  }
}

}  // namespace

WitnessFamily composition_witness(std::size_t n, std::size_t max_part) {
  if (n == 0 || max_part == 0) throw ParameterError("composition_witness needs n, max_part >= 1");
  WitnessFamily family;
  family.construction_id = "composition";
  family.n = n;
  family.scaffold = sample_model(fibered_order(max_part), n * max_part);
  for (auto& parts : compositions(n, max_part)) {
    std::vector<Element> placement;
    for (std::size_t block = 0; block < parts.size(); ++block) {
      for (std::size_t j = 0; j < parts[block]; ++j) {
        placement.push_back(static_cast<Element>(block * max_part + j));
      }
    }
    family.placements.push_back(std::move(placement));
    family.indices.push_back(std::move(parts));
  }
  fill_members(family);
  family.index_decoder = [](const FiniteStructure& s) {
    const std::size_t r = relation(s, "preceq", 2);
    // Block of x = elements y with x preceq y and y preceq x; blocks are read
    // in order of how many elements precede them.
    WitnessIndex parts;
    std::size_t last_rank = 0;
    std::vector<std::size_t> below(s.size(), 0);
    for (std::size_t i = 0; i < s.tuple_count(r); ++i) ++below[s.tuple(r, i)[1]];
    for (Element v : by_rank(s, r)) {
      if (parts.empty() || below[v] != last_rank) {
        parts.push_back(0);
        last_rank = below[v];
      }
      ++parts.back();
    }
    return parts;
  };
  return family;
}

WitnessFamily binary_pattern_witness(std::size_t n) {
  if (n == 0) throw ParameterError("binary_pattern_witness needs n >= 1");
  if (n > 24) throw ResourceError("binary_pattern_witness is limited to n <= 24");
  WitnessFamily family;
  family.construction_id = "binary_pattern";
  family.n = n;
  const std::size_t points = 2 * n;
  const RelationalSignature sig({{"leq", 2}, {"X", 1}});
  family.scaffold = FiniteStructure::from_predicate(sig, points, [](std::size_t r, std::span<const Element> t) {
    return r == 0 ? t[0] <= t[1] : t[0] % 2 == 0;
  });
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    WitnessIndex sigma(n);
    std::vector<Element> placement(n);
    for (std::size_t i = 0; i < n; ++i) {
      sigma[i] = (mask >> (n - 1 - i)) & 1U;
      placement[i] = static_cast<Element>(2 * i + sigma[i]);
    }
    family.placements.push_back(std::move(placement));
    family.indices.push_back(std::move(sigma));
  }
  fill_members(family);
  family.index_decoder = [](const FiniteStructure& s) {
    const std::size_t leq = relation(s, "leq", 2);
    const std::size_t x = relation(s, "X", 1);
    WitnessIndex sigma;
    for (Element v : by_rank(s, leq)) sigma.push_back(s.holds(x, {v}) ? 0 : 1);
    return sigma;
  };
  return family;
}

WitnessFamily antichain_witness(std::size_t n) {
  if (n == 0) throw ParameterError("antichain_witness needs n >= 1");
  WitnessFamily family;
  family.construction_id = "antichain";
  family.n = n;
  const RelationalSignature sig({{"leq", 2}});
  // Element i*n + j is the j-th point of C_i; a_i is j = 0.
  family.scaffold = FiniteStructure::from_predicate(sig, n * n, [n](std::size_t, std::span<const Element> t) {
    if (t[0] == t[1]) return true;
    return t[0] % n == 0 && t[0] / n < t[1] / n;
  });
  for (auto& parts : compositions(n, n)) {
    std::vector<Element> placement;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts[i]; ++j) placement.push_back(static_cast<Element>(i * n + j));
    }
    family.placements.push_back(std::move(placement));
    family.indices.push_back(std::move(parts));
  }
  fill_members(family);
  family.index_decoder = [](const FiniteStructure& s) {
    const std::size_t leq = relation(s, "leq", 2);
    // chain[v]: elements in a longest chain strictly below v. Processing in
    // rank order visits every strict predecessor first.
    std::vector<std::size_t> chain(s.size(), 0);
    for (Element v : by_rank(s, leq)) {
      for (std::size_t i = 0; i < s.tuple_count(leq); ++i) {
        auto t = s.tuple(leq, i);
        if (t[1] == v && t[0] != v) chain[v] = std::max(chain[v], chain[t[0]] + 1);
      }
    }
    WitnessIndex counts;
    for (std::size_t c : chain) {
      if (counts.size() <= c) counts.resize(c + 1, 0);
      ++counts[c];
    }
    return counts;
  };
  return family;
}

CollisionReport verify_pairwise_nonisomorphic(const WitnessFamily& family, int jobs) {
  const auto codes = canonical_codes_parallel(family.members, jobs);
  std::map<CanonicalCode, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < codes.size(); ++i) groups[codes[i]].push_back(i);
  CollisionReport report;
  for (const auto& [code, idx] : groups) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) report.emplace_back(idx[a], idx[b]);
    }
  }
  std::sort(report.begin(), report.end());
  return report;
}

std::vector<std::size_t> members_missing_from_scaffold(const WitnessFamily& family, int jobs) {
  const DenseModel dense(family.scaffold);
  const CodeSet age = age_codes_parallel(dense, AllSubsets{family.scaffold.size(), family.n}, jobs);
  const auto codes = canonical_codes_parallel(family.members, jobs);
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (!age.contains(codes[i])) missing.push_back(i);
  }
  return missing;
}

}  // namespace oligo
