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

#include "oligo/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "oligo/error.hpp"

namespace oligo {

std::vector<std::pair<Element, Element>> BinaryRelation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if ((*this)(a, b)) out.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
    }
  }
  return out;
}

bool BinaryRelation::is_transitive() const {
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (!(*this)(a, b)) continue;
      for (std::size_t c = 0; c < size_; ++c) {
        if ((*this)(b, c) && !(*this)(a, c)) return false;
      }
    }
  }
  return true;
}

FinitePoset::FinitePoset(std::size_t size, const std::vector<std::pair<Element, Element>>& leq)
    : leq_(size) {
  for (auto [a, b] : leq) {
    if (a >= size || b >= size) {
      throw ParameterError("poset pair (" + std::to_string(a) + "," + std::to_string(b) +
                           ") is outside a domain of size " + std::to_string(size));
    }
    leq_.set(a, b);
  }
  validate();
}

FinitePoset::FinitePoset(BinaryRelation leq) : leq_(std::move(leq)) { validate(); }

void FinitePoset::validate() {
  const std::size_t n = leq_.size();
  for (std::size_t a = 0; a < n; ++a) leq_.set(a, a);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq_(a, b) && leq_(b, a)) {
        throw ParameterError("poset is not antisymmetric: " + std::to_string(a) + " and " +
                             std::to_string(b) + " are below each other");
      }
    }
  }
  if (!leq_.is_transitive()) throw ParameterError("poset relation is not transitive");
}

FinitePoset poset_closure(std::size_t size, const std::vector<std::pair<Element, Element>>& pairs) {
  BinaryRelation r(size);
  for (std::size_t a = 0; a < size; ++a) r.set(a, a);
  for (auto [a, b] : pairs) {
    if (a >= size || b >= size) throw ParameterError("poset pair outside the domain");
    r.set(a, b);
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (!r(i, k)) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (r(k, j)) r.set(i, j);
      }
    }
  }
  return FinitePoset(std::move(r));
}

std::size_t antichain_width(const FinitePoset& p) {
  const std::size_t n = p.size();
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match(n, kFree);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!p.less(u, v) || seen[v]) continue;
      seen[v] = 1;
      if (match[v] == kFree || augment(match[v])) {
        match[v] = u;
        return true;
      }
    }
    return false;
  };
  std::size_t matched = 0;
  for (std::size_t u = 0; u < n; ++u) {
    seen.assign(n, 0);
    if (augment(u)) ++matched;
  }
  return n - matched;
}

std::size_t max_incomparability(const BinaryRelation& q) {
  std::size_t best = 0;
  for (std::size_t a = 0; a < q.size(); ++a) {
    std::size_t count = 0;
    for (std::size_t b = 0; b < q.size(); ++b) count += !q(a, b) && !q(b, a);
    best = std::max(best, count);
  }
  return best;
}

std::size_t max_incomparability(const FinitePoset& p) { return max_incomparability(p.relation()); }

BinaryRelation triangle_step(const FinitePoset& p) {
  const std::size_t n = p.size();
  BinaryRelation t = p.relation();
  std::vector<std::size_t> v;
  for (std::size_t a = 0; a < n; ++a) {
    v.clear();
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.comparable(a, b)) v.push_back(b);
    }
    for (std::size_t b : v) {
      const bool maximal = std::none_of(v.begin(), v.end(), [&](std::size_t c) { return p.less(b, c); });
      if (maximal) t.set(a, b);
    }
  }
  if (!t.is_transitive()) {
    throw InvariantError("triangle relation is not transitive on a poset of size " +
                         std::to_string(n));
  }
  return t;
}

LinearizationResult linearize(const FinitePoset& p) {
  LinearizationResult result;
  // members[i]: original elements folded into element i of the current poset.
  std::vector<std::vector<Element>> members(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) members[i] = {static_cast<Element>(i)};
  FinitePoset current = p;

  while (antichain_width(current) > 1) {
    if (result.trace.size() >= p.size()) {
      throw InvariantError("linearization did not finish within " + std::to_string(p.size()) +
                           " rounds");
    }
    const std::size_t n = current.size();
    const BinaryRelation t = triangle_step(current);

    std::vector<std::size_t> cls(n, n);
    std::vector<std::vector<Element>> groups;
    for (std::size_t a = 0; a < n; ++a) {
      if (cls[a] != n) continue;
      cls[a] = groups.size();
      groups.push_back({static_cast<Element>(a)});
      for (std::size_t b = a + 1; b < n; ++b) {
        if (cls[b] == n && t(a, b) && t(b, a)) {
          cls[b] = cls[a];
          groups.back().push_back(static_cast<Element>(b));
        }
      }
    }

    const std::size_t m = groups.size();
    BinaryRelation q(m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        const bool rep = t(groups[x][0], groups[y][0]);
        for (Element a : groups[x]) {
          for (Element b : groups[y]) {
            if (t(a, b) != rep) {
              throw InvariantError("triangle relation does not respect its own classes");
            }
          }
        }
        q.set(x, y, rep);
      }
    }

    LinearizationRound round;
    round.elements = n;
    round.triangle = t.pairs();
    round.merged = groups;
    round.max_incomparable_before = max_incomparability(current);
    FinitePoset next(std::move(q));
    round.max_incomparable_after = max_incomparability(next);
    round.quotient_width = antichain_width(next);
    result.trace.push_back(std::move(round));

    std::vector<std::vector<Element>> folded(m);
    for (std::size_t x = 0; x < m; ++x) {
      for (Element a : groups[x]) {
        folded[x].insert(folded[x].end(), members[a].begin(), members[a].end());
      }
    }
    members = std::move(folded);
    current = std::move(next);
  }

  std::vector<std::size_t> order(current.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(current.size(), 0);
  for (std::size_t a = 0; a < current.size(); ++a) {
    for (std::size_t b = 0; b < current.size(); ++b) below[a] += current.leq(b, a);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  for (std::size_t x : order) {
    auto cls = members[x];
    std::sort(cls.begin(), cls.end());
    result.classes.push_back(std::move(cls));
  }
  return result;
}

FinitePoset random_poset(std::mt19937_64& rng, std::size_t max_size, std::size_t max_width) {
  if (max_size == 0 || max_width == 0) throw ParameterError("random_poset needs positive bounds");
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const std::size_t n = size_dist(rng);
    const double q = unit(rng);
    std::vector<Element> layout(n);
    std::iota(layout.begin(), layout.end(), 0);
    std::shuffle(layout.begin(), layout.end(), rng);
    std::vector<std::pair<Element, Element>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (unit(rng) < q) pairs.emplace_back(layout[i], layout[j]);
      }
    }
    FinitePoset p = poset_closure(n, pairs);
    if (antichain_width(p) <= max_width) return p;
  }
}

}  // namespace oligo
