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

#include "oligo/glue.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "oligo/error.hpp"
#include "oligo/relations.hpp"

namespace oligo {

namespace {

struct Run {
  std::vector<GroundId> elements;
  std::size_t first1 = 0;  // f1 positions
  std::size_t last1 = 0;
  std::size_t first2 = 0;  // f2 positions of elements.front() / back()
  std::size_t last2 = 0;
  int direction = 0;       // +1, -1, or 0 for a single point
};

// Common elements of f1, cut into maximal runs that are contiguous in both
// fragments with a constant direction.
std::vector<Run> common_runs(const OrderFragment& f1, const OrderFragment& f2) {
  std::unordered_map<GroundId, std::size_t> pos2;
  for (std::size_t i = 0; i < f2.elements.size(); ++i) pos2[f2.elements[i]] = i;
  std::vector<Run> runs;
  bool open = false;
  for (std::size_t i = 0; i < f1.elements.size(); ++i) {
    auto it = pos2.find(f1.elements[i]);
    if (it == pos2.end()) {
      open = false;
      continue;
    }
    const std::size_t p = it->second;
    if (open) {
      Run& run = runs.back();
      const long step = static_cast<long>(p) - static_cast<long>(run.last2);
      if ((step == 1 || step == -1) && (run.direction == 0 || run.direction == step)) {
        run.direction = static_cast<int>(step);
        run.elements.push_back(f1.elements[i]);
        run.last1 = i;
        run.last2 = p;
        continue;
      }
    }
    runs.push_back(Run{{f1.elements[i]}, i, i, p, p, 0});
    open = true;
  }
  return runs;
}

// Run lies at the start (or end) of f1.
bool at_head1(const Run& r) { return r.first1 == 0; }
bool at_tail1(const Run& r, std::size_t n1) { return r.last1 + 1 == n1; }

bool forward_ok(const Run& r) { return r.direction >= 0; }
bool backward_ok(const Run& r) { return r.direction <= 0; }

}  // namespace

std::string_view to_string(OverlapTag tag) {
  switch (tag) {
    case OverlapTag::kDisjoint:
      return "disjoint";
    case OverlapTag::kHeadTail:
      return "head-tail";
    case OverlapTag::kAlignedReversed:
      return "aligned-reversed";
    case OverlapTag::kDoubleWrap:
      return "double-wrap";
    case OverlapTag::kDoubleWrapReversed:
      return "double-wrap-reversed";
  }
  return "?";
}

std::string_view to_string(ComponentKind kind) {
  return kind == ComponentKind::kLinear ? "linear" : "circular";
}

void validate_fragment(const OrderFragment& f) {
  if (f.elements.size() < 2) {
    throw ParameterError("fragment '" + f.id + "' needs at least two elements");
  }
  std::set<GroundId> seen(f.elements.begin(), f.elements.end());
  if (seen.size() != f.elements.size()) {
    throw ParameterError("fragment '" + f.id + "' repeats an element");
  }
}

std::vector<OverlapTag> matching_cases(const OrderFragment& f1, const OrderFragment& f2) {
  validate_fragment(f1);
  validate_fragment(f2);
  const std::size_t n1 = f1.elements.size();
  const std::size_t n2 = f2.elements.size();
  const auto runs = common_runs(f1, f2);
  std::vector<OverlapTag> tags;
  if (runs.empty()) {
    tags.push_back(OverlapTag::kDisjoint);
    return tags;
  }
  if (runs.size() == 1) {
    const Run& r = runs.front();
    // Forward run: its f2 start is r.first2, its f2 end r.last2.
    const bool head_tail =
        forward_ok(r) && ((at_tail1(r, n1) && r.first2 == 0) || (at_head1(r) && r.last2 + 1 == n2));
    // Backward run: reversed, it is a prefix or suffix of f2.
    const bool aligned_reversed =
        backward_ok(r) && ((at_head1(r) && r.last2 == 0) || (at_tail1(r, n1) && r.first2 + 1 == n2));
    if (head_tail) tags.push_back(OverlapTag::kHeadTail);
    if (aligned_reversed) tags.push_back(OverlapTag::kAlignedReversed);
    return tags;
  }
  if (runs.size() == 2) {
    const Run& a = runs[0];  // nearer f1's head
    const Run& b = runs[1];
    const bool ends1 = at_head1(a) && at_tail1(b, n1);
    // Same orientation: f2 = b ... a.
    const bool wrap = ends1 && forward_ok(a) && forward_ok(b) && b.first2 == 0 &&
                      a.last2 + 1 == n2;
    // Opposite orientation: f2 = reverse(a) ... reverse(b).
    const bool wrap_reversed = ends1 && backward_ok(a) && backward_ok(b) && a.last2 == 0 &&
                               b.first2 + 1 == n2;
    if (wrap) tags.push_back(OverlapTag::kDoubleWrap);
    if (wrap_reversed) tags.push_back(OverlapTag::kDoubleWrapReversed);
  }
  return tags;
}

OverlapCase classify_overlap(const OrderFragment& f1, const OrderFragment& f2) {
  const auto tags = matching_cases(f1, f2);
  if (tags.size() != 1) {
    throw InvalidFragmentPairError("fragments '" + f1.id + "' and '" + f2.id +
                                   "' intersect in a pattern matching " +
                                   std::to_string(tags.size()) + " overlap cases");
  }
  OverlapCase out;
  out.tag = tags.front();
  for (auto& run : common_runs(f1, f2)) out.segments.push_back(std::move(run.elements));
  return out;
}

std::vector<GroundId> normalize_arrangement(ComponentKind kind, std::vector<GroundId> arr) {
  if (arr.size() < 2) return arr;
  if (kind == ComponentKind::kLinear) {
    if (arr.front() > arr.back()) std::reverse(arr.begin(), arr.end());
    return arr;
  }
  std::rotate(arr.begin(), std::min_element(arr.begin(), arr.end()), arr.end());
  if (arr.size() > 2 && arr[1] > arr.back()) std::reverse(arr.begin() + 1, arr.end());
  return arr;
}

std::vector<GlueComponent> glue(const std::vector<OrderFragment>& fragments) {
  const std::size_t m = fragments.size();
  std::set<std::string> ids;
  for (const auto& f : fragments) {
    validate_fragment(f);
    if (!ids.insert(f.id).second) throw ParameterError("duplicate fragment id '" + f.id + "'");
  }

  // Overlap graph; parity 1 means the pair's orders are opposite.
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(m);
  std::map<GroundId, std::vector<std::size_t>> holders;
  for (std::size_t i = 0; i < m; ++i) {
    for (GroundId e : fragments[i].elements) holders[e].push_back(i);
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [e, list] : holders) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) pairs.emplace(list[a], list[b]);
    }
  }
  for (auto [i, j] : pairs) {
    // A one-point segment is accepted: classification already pins it to
    // the fragments' ends, which fixes the relative orientation.
    const OverlapCase c = classify_overlap(fragments[i], fragments[j]);
    const int parity = (c.tag == OverlapTag::kAlignedReversed ||
                        c.tag == OverlapTag::kDoubleWrapReversed) ? 1 : 0;
    adj[i].emplace_back(j, parity);
    adj[j].emplace_back(i, parity);
  }

  std::vector<int> flip(m, -1);
  std::vector<GlueComponent> out;
  for (std::size_t start = 0; start < m; ++start) {
    if (flip[start] != -1) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> todo;
    flip[start] = 0;
    todo.push(start);
    while (!todo.empty()) {
      const std::size_t u = todo.front();
      todo.pop();
      comp.push_back(u);
      for (auto [v, parity] : adj[u]) {
        const int want = flip[u] ^ parity;
        if (flip[v] == -1) {
          flip[v] = want;
          todo.push(v);
        } else if (flip[v] != want) {
          throw InconsistentFragmentsError("fragment '" + fragments[v].id +
                                           "' gets both orientations around a cycle of overlaps");
        }
      }
    }
    std::sort(comp.begin(), comp.end());

    std::map<GroundId, GroundId> succ;
    std::map<GroundId, GroundId> pred;
    std::set<GroundId> elements;
    for (std::size_t f : comp) {
      std::vector<GroundId> seq = fragments[f].elements;
      if (flip[f]) std::reverse(seq.begin(), seq.end());
      elements.insert(seq.begin(), seq.end());
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        auto [s, fresh_s] = succ.emplace(seq[i], seq[i + 1]);
        auto [p, fresh_p] = pred.emplace(seq[i + 1], seq[i]);
        if (s->second != seq[i + 1] || p->second != seq[i]) {
          throw InconsistentFragmentsError("fragment '" + fragments[f].id +
                                           "' disagrees with its neighbours about adjacency");
        }
      }
    }

    GlueComponent component;
    std::vector<GroundId> walk;
    GroundId head = *elements.begin();
    const bool cyclic = succ.size() == elements.size();
    component.kind = cyclic ? ComponentKind::kCircular : ComponentKind::kLinear;
    if (!cyclic) {
      std::vector<GroundId> heads;
      for (GroundId e : elements) {
        if (!pred.contains(e)) heads.push_back(e);
      }
      if (heads.size() != 1) {
        throw InconsistentFragmentsError("overlapping fragments do not assemble into one line");
      }
      head = heads.front();
    }
    GroundId cur = head;
    for (;;) {
      walk.push_back(cur);
      auto it = succ.find(cur);
      if (it == succ.end() || it->second == head || walk.size() > elements.size()) break;
      cur = it->second;
    }
    if (walk.size() != elements.size()) {
      throw InconsistentFragmentsError("overlapping fragments do not assemble into one " +
                                       std::string(cyclic ? "circle" : "line"));
    }
    component.arrangement = normalize_arrangement(component.kind, std::move(walk));
    for (std::size_t f : comp) component.members.push_back(fragments[f].id);
    out.push_back(std::move(component));
  }
  return out;
}

FiniteStructure emit_invariant_relation(const GlueComponent& component) {
  std::vector<GroundId> sorted = component.arrangement;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> position(sorted.size());
  for (std::size_t i = 0; i < component.arrangement.size(); ++i) {
    const auto rank = std::lower_bound(sorted.begin(), sorted.end(), component.arrangement[i]) -
                      sorted.begin();
    position[static_cast<std::size_t>(rank)] = i;
  }
  return rel::reduct_structure(component.kind == ComponentKind::kLinear ? rel::Reduct::kBetweenness
                                                                        : rel::Reduct::kSeparation,
                               position);
}

}  // namespace oligo
