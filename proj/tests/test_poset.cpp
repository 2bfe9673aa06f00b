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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "oligo/error.hpp"
#include "oligo/poset.hpp"
#include "oracles.hpp"

using namespace oligo;

namespace {

FinitePoset chain(std::size_t n) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return poset_closure(n, pairs);
}

FinitePoset antichain(std::size_t n) { return FinitePoset(n, {}); }

// a=0, b=1, c=2, d=3 with a<c, b<c, b<d.
FinitePoset n_poset() { return FinitePoset(4, {{0, 2}, {1, 2}, {1, 3}}); }

bool has(const std::vector<std::pair<Element, Element>>& pairs, Element a, Element b) {
  return std::find(pairs.begin(), pairs.end(), std::pair<Element, Element>{a, b}) != pairs.end();
}

// Classes are antichains, every element appears once, and class order
// extends the poset order.
void check_result(const FinitePoset& p, const LinearizationResult& r) {
  std::vector<std::size_t> cls(p.size(), p.size());
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    for (Element v : r.classes[c]) {
      REQUIRE(cls[v] == p.size());
      cls[v] = c;
    }
    for (Element a : r.classes[c]) {
      for (Element b : r.classes[c]) CHECK((a == b || !p.comparable(a, b)));
    }
  }
  for (std::size_t a = 0; a < p.size(); ++a) {
    REQUIRE(cls[a] < p.size());
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.less(a, b)) CHECK(cls[a] < cls[b]);
    }
  }
}

}  // namespace

TEST_CASE("poset validation") {
  CHECK_THROWS_AS(FinitePoset(2, {{0, 1}, {1, 0}}), ParameterError);
  CHECK_THROWS_AS(FinitePoset(3, {{0, 1}, {1, 2}}), ParameterError);
  CHECK_THROWS_AS(FinitePoset(2, {{0, 5}}), ParameterError);
  CHECK_THROWS_AS(poset_closure(3, {{0, 1}, {1, 2}, {2, 0}}), ParameterError);
  CHECK(poset_closure(3, {{0, 1}, {1, 2}}).leq(0, 2));
}

TEST_CASE("antichain width examples") {
  CHECK(antichain_width(chain(5)) == 1);
  CHECK(antichain_width(antichain(4)) == 4);
  CHECK(antichain_width(n_poset()) == 2);
}

TEST_CASE("width agrees with exhaustive search") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : testing::all_posets(n)) CHECK(antichain_width(p) == testing::brute_width(p));
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const FinitePoset p = random_poset(rng, 14, 6);
    CHECK(antichain_width(p) == testing::brute_width(p));
  }
}

TEST_CASE("poset classes up to isomorphism") {
  const std::vector<std::size_t> expected{1, 2, 5, 16, 63};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(testing::all_posets(n).size() == expected[n - 1]);
}

TEST_CASE("triangle step examples") {
  const FinitePoset c = chain(4);
  CHECK(triangle_step(c) == c.relation());

  const BinaryRelation two = triangle_step(antichain(2));
  CHECK(two(0, 1));
  CHECK(two(1, 0));

  const auto tri = triangle_step(n_poset()).pairs();
  CHECK(has(tri, 0, 3));
  CHECK(has(tri, 1, 0));
  CHECK(has(tri, 2, 3));
  CHECK(has(tri, 3, 2));
  CHECK_FALSE(has(tri, 0, 1));
}

TEST_CASE("linearize examples") {
  const LinearizationResult c = linearize(chain(5));
  CHECK(c.classes == std::vector<std::vector<Element>>{{0}, {1}, {2}, {3}, {4}});
  CHECK(c.trace.empty());

  const LinearizationResult two = linearize(antichain(2));
  CHECK(two.classes == std::vector<std::vector<Element>>{{0, 1}});

  const LinearizationResult n = linearize(n_poset());
  CHECK(n.classes == std::vector<std::vector<Element>>{{1}, {0}, {2, 3}});
  REQUIRE(n.trace.size() == 1);
  CHECK(n.trace[0].elements == 4);
  CHECK(n.trace[0].quotient_width == 1);
}

TEST_CASE("linearization properties on every small poset") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : testing::all_posets(n)) {
      CHECK(triangle_step(p).is_transitive());
      const LinearizationResult r = linearize(p);
      check_result(p, r);
      CHECK(r.trace.size() <= max_incomparability(p) + 1);
    }
  }
}

TEST_CASE("linearization properties on random posets") {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 200; ++i) {
    const FinitePoset p = random_poset(rng, 40, 6);
    CHECK(antichain_width(p) <= 6);
    const LinearizationResult r = linearize(p);
    check_result(p, r);
    for (const auto& round : r.trace) {
      CHECK(round.max_incomparable_after <= round.max_incomparable_before);
    }
  }
}

TEST_CASE("parallel chains need as many rounds as their length") {
  // Two incomparable k-chains: width 2, yet every round merges one level.
  const std::size_t k = 6;
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i + 1 < k; ++i) {
    pairs.emplace_back(i, i + 1);
    pairs.emplace_back(k + i, k + i + 1);
  }
  const FinitePoset p = poset_closure(2 * k, pairs);
  CHECK(antichain_width(p) == 2);
  const LinearizationResult r = linearize(p);
  check_result(p, r);
  CHECK(r.trace.size() > antichain_width(p));
}

TEST_CASE("random poset bounds") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const FinitePoset p = random_poset(rng, 12, 3);
    CHECK(p.size() >= 1);
    CHECK(p.size() <= 12);
    CHECK(antichain_width(p) <= 3);
  }
  CHECK_THROWS_AS(random_poset(rng, 0, 3), ParameterError);
}
