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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

#include "oligo/error.hpp"

namespace oligo::testing {

CanonicalCode brute_canonical(const FiniteStructure& s) {
  if (s.size() == 0) return CanonicalCode::empty_sentinel();
  std::vector<Element> perm(s.size());
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalCode best = encode(relabel(s, perm));
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, encode(relabel(s, perm)));
  }
  return best;
}

bool brute_isomorphic(const FiniteStructure& a, const FiniteStructure& b) {
  if (a.size() != b.size() || !(a.signature() == b.signature())) return false;
  std::vector<Element> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

FiniteStructure random_structure(std::mt19937_64& rng, const RelationalSignature& sig,
                                 std::size_t size, double density) {
  std::bernoulli_distribution coin(density);
  return FiniteStructure::from_predicate(sig, size,
                                         [&](std::size_t, std::span<const Element>) { return coin(rng); });
}

std::vector<Element> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::vector<std::string> binary_tree_shapes(std::size_t n) {
  std::vector<std::set<std::string>> shapes(n + 1);
  if (n >= 1) shapes[1].insert("o");
  for (std::size_t m = 2; m <= n; ++m) {
    for (std::size_t left = 1; left < m; ++left) {
      for (const auto& a : shapes[left]) {
        for (const auto& b : shapes[m - left]) {
          shapes[m].insert("(" + std::min(a, b) + std::max(a, b) + ")");
        }
      }
    }
  }
  return {shapes[n].begin(), shapes[n].end()};
}

std::uint64_t local_order_reference(std::size_t n) {
  std::uint64_t sum = 0;
  for (std::size_t d = 1; d <= n; d += 2) {
    if (n % d != 0) continue;
    std::uint64_t phi = 0;
    for (std::size_t i = 1; i <= d; ++i) phi += std::gcd(i, d) == 1;
    sum += phi * (std::uint64_t{1} << (n / d));
  }
  return sum / (2 * n);
}

std::vector<FinitePoset> all_posets(std::size_t n) {
  std::vector<std::pair<Element, Element>> slots;
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  // Every poset has a linear extension, so forward pairs of the identity
  // layout reach every isomorphism class.
  std::set<CanonicalCode> seen;
  std::vector<FinitePoset> out;
  const RelationalSignature sig({{"leq", 2}});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<Element, Element>> pairs;
    for (std::size_t t = 0; t < slots.size(); ++t) {
      if ((mask >> t) & 1U) pairs.push_back(slots[t]);
    }
    FinitePoset p = poset_closure(n, pairs);
    std::vector<std::vector<Element>> flat(1);
    for (auto [a, b] : p.relation().pairs()) flat[0].insert(flat[0].end(), {a, b});
    if (seen.insert(brute_canonical(FiniteStructure(sig, n, std::move(flat)))).second) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::size_t brute_width(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool antichain = true;
    for (std::size_t a = 0; a < n && antichain; ++a) {
      if (!((mask >> a) & 1U)) continue;
      for (std::size_t b = a + 1; b < n && antichain; ++b) {
        if (((mask >> b) & 1U) && p.comparable(a, b)) antichain = false;
      }
    }
    if (antichain) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

namespace {

struct Window {
  std::size_t start;
  std::size_t end;  // inclusive; may exceed size-1 on a circle
};

std::set<std::size_t> cells(const Window& w, std::size_t size) {
  std::set<std::size_t> out;
  for (std::size_t i = w.start; i <= w.end; ++i) out.insert(i % size);
  return out;
}

std::size_t overlap(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  std::size_t count = 0;
  for (auto x : a) count += b.contains(x);
  return count;
}

bool valid_layout(const std::vector<Window>& ws, std::size_t size, bool circular) {
  const std::size_t k = ws.size();
  if (circular && k < 2) return false;
  std::vector<std::set<std::size_t>> sets;
  std::set<std::size_t> cover;
  for (const auto& w : ws) {
    const std::size_t len = w.end - w.start + 1;
    if (len < 3 || len > (circular ? size - 1 : size)) return false;
    sets.push_back(cells(w, size));
    cover.insert(sets.back().begin(), sets.back().end());
  }
  if (cover.size() != size) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (circular && i == 0 && j == k - 1);
      const std::size_t shared = overlap(sets[i], sets[j]);
      if (shared == std::min(sets[i].size(), sets[j].size())) return false;  // containment
      if (consecutive ? shared < 2 : shared != 0) return false;
    }
  }
  return true;
}

}  // namespace

HiddenOrder sample_hidden_order(std::mt19937_64& rng, ComponentKind kind, std::size_t size) {
  const bool circular = kind == ComponentKind::kCircular;
  if (size < (circular ? 4 : 3)) throw ParameterError("hidden order too small");
  HiddenOrder hidden;
  hidden.kind = kind;
  std::set<GroundId> ids;
  std::uniform_int_distribution<GroundId> id_dist(-1'000'000, 1'000'000);
  while (ids.size() < size) ids.insert(id_dist(rng));
  hidden.order.assign(ids.begin(), ids.end());
  std::shuffle(hidden.order.begin(), hidden.order.end(), rng);

  // Layout as alternating slots: private runs p_i >= 0 and overlaps o_i >= 2
  // shared by consecutive windows. Lines: p_0 o_0 p_1 ... o_{k-2} p_{k-1}
  // with both ends at least 1. Circles: o_{k-1} p_0 o_0 ... o_{k-2} p_{k-1},
  // the first overlap shared by the last and first window; two windows on a
  // circle need private runs so neither is the whole circle.
  const std::size_t k_min = circular ? (size >= 6 ? 2 : 3) : 1;
  const std::size_t k_max = std::max(k_min, size / 2);
  if (circular && size < 6) throw ParameterError("hidden circle needs at least 6 points");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double span = std::log(static_cast<double>(k_max) / static_cast<double>(k_min));
  const std::size_t k = std::min(k_max, static_cast<std::size_t>(std::lround(k_min * std::exp(unit(rng) * span))));

  std::vector<Window> ws;
  if (!circular && k == 1) {
    ws.push_back({0, size - 1});
  } else {
    // slot 2i+1 is an overlap in both layouts.
    std::vector<std::size_t> slot(2 * k - (circular ? 0 : 1), 0);
    for (std::size_t i = 0; i < slot.size(); ++i) {
      const bool is_overlap = circular ? i % 2 == 0 : i % 2 == 1;
      slot[i] = is_overlap ? 2 : 0;
    }
    if (circular && k == 2) {
      slot[1] = 1;
      slot[3] = 1;
    }
    if (!circular) {
      slot.front() = 1;
      slot.back() = 1;
    }
    std::size_t used = 0;
    for (auto v : slot) used += v;
    std::uniform_int_distribution<std::size_t> pick(0, slot.size() - 1);
    for (; used < size; ++used) ++slot[pick(rng)];

    std::vector<std::size_t> offset(slot.size() + 1, 0);
    for (std::size_t i = 0; i < slot.size(); ++i) offset[i + 1] = offset[i] + slot[i];
    if (circular) {
      // Overlap o_i sits at slot 2i+2 for i < k-1; o_{k-1} at slot 0.
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t start = offset[2 * i];
        const std::size_t end = i + 1 < k ? offset[2 * i + 3] - 1 : size + slot[0] - 1;
        ws.push_back({start, end});
      }
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t start = i == 0 ? 0 : offset[2 * i - 1];
        const std::size_t end = i + 1 < k ? offset[2 * i + 2] - 1 : size - 1;
        ws.push_back({start, end});
      }
    }
  }
  if (!valid_layout(ws, size, circular)) throw InvariantError("hidden order layout is malformed");

  std::bernoulli_distribution flip(0.5);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    OrderFragment f;
    f.id = "w" + std::to_string(i);
    for (std::size_t p = ws[i].start; p <= ws[i].end; ++p) f.elements.push_back(hidden.order[p % size]);
    if (flip(rng)) std::reverse(f.elements.begin(), f.elements.end());
    hidden.fragments.push_back(std::move(f));
  }
  std::shuffle(hidden.fragments.begin(), hidden.fragments.end(), rng);
  return hidden;
}

}  // namespace oligo::testing
