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

#include "oligo/catalogue.hpp"

#include <bit>
#include <charconv>
#include <map>

#include "oligo/error.hpp"
#include "oligo/growth.hpp"
#include "oligo/profile.hpp"
#include "oligo/relations.hpp"

namespace oligo {

namespace {

constexpr std::size_t kMaxTreeDepth = 9;
constexpr std::uint64_t kMaxSamplerCells = std::uint64_t{1} << 28;

void check_cells(const std::string& id, std::size_t points, std::size_t arity) {
  std::uint64_t cells = 1;
  for (std::size_t j = 0; j < arity; ++j) {
    cells *= points;
    if (cells > kMaxSamplerCells) {
      throw ResourceError(id + " model on " + std::to_string(points) +
                          " points is too large to store extensionally");
    }
  }
}

SaturationPlan points_plan(std::size_t n) { return {2 * n + 3, 2 * n + 5, 2 * n + 7}; }

CatalogueEntry reduct_entry(std::string id, rel::Reduct which) {
  CatalogueEntry e;
  e.id = id;
  e.signature = rel::reduct_signature(which);
  e.sampler = [id, which](std::size_t size) {
    std::size_t arity = 0;
    for (const auto& r : rel::reduct_signature(which)) arity = std::max(arity, r.arity);
    check_cells(id, size, arity);
    return rel::reduct_structure(which, size);
  };
  e.predictor = [](std::size_t) { return BigInt(1); };
  e.saturation_rule = points_plan;
  return e;
}

// Common-prefix length of two depth-bit leaf labels, i.e. the depth of
// their meet.
std::size_t meet_depth(Element a, Element b, std::size_t depth) {
  if (a == b) return depth;
  return depth - static_cast<std::size_t>(std::bit_width(a ^ b));
}

}  // namespace

CatalogueEntry pure_set() { return reduct_entry("pure_set", rel::Reduct::kPureSet); }
CatalogueEntry dlo() { return reduct_entry("dlo", rel::Reduct::kLinear); }
CatalogueEntry betweenness() { return reduct_entry("betweenness", rel::Reduct::kBetweenness); }
CatalogueEntry circular() { return reduct_entry("circular", rel::Reduct::kCircular); }
CatalogueEntry separation() { return reduct_entry("separation", rel::Reduct::kSeparation); }

CatalogueEntry local_order() {
  CatalogueEntry e;
  e.id = "local_order";
  e.signature = RelationalSignature({{"R", 2}});
  e.sampler = [sig = e.signature](std::size_t size) {
    if (size < 3 || size % 2 == 0) {
      throw ParameterError("local_order needs an odd size of at least 3, got " +
                           std::to_string(size));
    }
    check_cells("local_order", size, 2);
    const std::size_t half = (size - 1) / 2;
    return FiniteStructure::from_predicate(sig, size, [&](std::size_t, std::span<const Element> t) {
      const std::size_t d = (t[1] + size - t[0]) % size;
      return d >= 1 && d <= half;
    });
  };
  e.saturation_rule = points_plan;
  return e;
}

CatalogueEntry fibered_order(std::size_t k) {
  if (k == 0) throw ParameterError("fibered_order needs a block size of at least 1");
  CatalogueEntry e;
  e.id = "fibered_order:" + std::to_string(k);
  e.signature = RelationalSignature({{"preceq", 2}});
  e.sampler = [sig = e.signature, k, id = e.id](std::size_t size) {
    if (size == 0 || size % k != 0) {
      throw ParameterError(id + " needs a positive multiple of " + std::to_string(k) +
                           " points, got " + std::to_string(size));
    }
    check_cells(id, size, 2);
    return FiniteStructure::from_predicate(sig, size, [k](std::size_t, std::span<const Element> t) {
      return t[0] / k <= t[1] / k;
    });
  };
  e.predictor = [k](std::size_t n) { return compositions_count(n, k); };
  e.saturation_rule = [k](std::size_t n) { return SaturationPlan{n * k, (n + 1) * k, (n + 2) * k}; };
  return e;
}

std::size_t tree_leaves(std::size_t depth) {
  if (depth > kMaxTreeDepth) {
    throw ParameterError("tree_c depth " + std::to_string(depth) + " exceeds the limit of " +
                         std::to_string(kMaxTreeDepth));
  }
  return std::size_t{1} << depth;
}

CatalogueEntry tree_c() {
  CatalogueEntry e;
  e.id = "tree_c";
  e.signature = RelationalSignature({{"C", 3}});
  e.sampler = [sig = e.signature](std::size_t depth) {
    const std::size_t leaves = tree_leaves(depth);
    return FiniteStructure::from_predicate(sig, leaves, [depth](std::size_t, std::span<const Element> t) {
      const std::size_t xy = meet_depth(t[0], t[1], depth);
      return meet_depth(t[1], t[2], depth) > xy && xy == meet_depth(t[0], t[2], depth);
    });
  };
  e.predictor = [](std::size_t n) { return tree_count(n); };
  // A caterpillar on n leaves needs depth n-1.
  e.saturation_rule = [](std::size_t n) {
    const std::size_t base = n > 1 ? n - 1 : 1;
    return SaturationPlan{base, base + 1, base + 2};
  };
  e.orbit_subsets = [](std::size_t depth, std::size_t n) { return tree_subset_orbits(depth, n); };
  return e;
}

std::vector<std::vector<Element>> tree_subset_orbits(std::size_t depth, std::size_t k) {
  tree_leaves(depth);
  using Reps = std::vector<std::vector<Element>>;
  std::map<std::pair<std::size_t, std::size_t>, Reps> memo;
  std::function<const Reps&(std::size_t, std::size_t)> reps = [&](std::size_t h,
                                                                 std::size_t m) -> const Reps& {
    auto key = std::make_pair(h, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Reps out;
    if (m == 0) {
      out.emplace_back();
    } else if (h == 0) {
      if (m == 1) out.push_back({0});
    } else if (m <= (std::size_t{1} << h)) {
      const Element offset = Element{1} << (h - 1);
      // Swapping the two subtrees is an automorphism, so keep only pairs
      // with (left size, left rep) <= (right size, right rep).
      for (std::size_t left = 0; left * 2 <= m; ++left) {
        const Reps& lr = reps(h - 1, left);
        const Reps& rr = reps(h - 1, m - left);
        for (std::size_t i = 0; i < lr.size(); ++i) {
          for (std::size_t j = (left * 2 == m ? i : 0); j < rr.size(); ++j) {
            std::vector<Element> subset = lr[i];
            for (Element v : rr[j]) subset.push_back(v + offset);
            out.push_back(std::move(subset));
          }
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  return reps(depth, k);
}

CatalogueEntry lookup_entry(std::string_view id) {
  if (id == "pure_set") return pure_set();
  if (id == "dlo") return dlo();
  if (id == "betweenness") return betweenness();
  if (id == "circular") return circular();
  if (id == "separation") return separation();
  if (id == "local_order") return local_order();
  if (id == "tree_c") return tree_c();
  constexpr std::string_view kFibered = "fibered_order:";
  if (id.starts_with(kFibered)) {
    const std::string_view digits = id.substr(kFibered.size());
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k > 0) {
      return fibered_order(k);
    }
  }
  throw ParameterError("unknown catalogue entry '" + std::string(id) + "'");
}

std::vector<std::string> catalogue_ids() {
  return {"pure_set",    "dlo",           "betweenness", "circular",
          "separation",  "local_order",   "fibered_order:k", "tree_c"};
}

std::vector<CatalogueEntry> standard_catalogue() {
  return {pure_set(),    dlo(),         betweenness(),    circular(), separation(),
          local_order(), fibered_order(2), fibered_order(3), tree_c()};
}

FiniteStructure sample_model(const CatalogueEntry& entry, std::size_t size) {
  if (size == 0) throw ParameterError(entry.id + " needs a positive sampler size");
  return entry.sampler(size);
}

std::optional<BigInt> age_predictor(const CatalogueEntry& entry, std::size_t n) {
  if (!entry.predictor) return std::nullopt;
  return entry.predictor(n);
}

}  // namespace oligo
