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

#include "oligo/canonical.hpp"
#include "oligo/error.hpp"
#include "oligo/glue.hpp"
#include "oracles.hpp"

using namespace oligo;

namespace {

using Ids = std::vector<GroundId>;

OrderFragment frag(std::string id, Ids elements) { return {std::move(id), std::move(elements)}; }

OverlapTag tag_of(const Ids& a, const Ids& b) { return classify_overlap(frag("a", a), frag("b", b)).tag; }

bool intersects(const OrderFragment& a, const OrderFragment& b) {
  return std::any_of(a.elements.begin(), a.elements.end(), [&](GroundId x) {
    return std::find(b.elements.begin(), b.elements.end(), x) != b.elements.end();
  });
}

}  // namespace

TEST_CASE("fragment validation") {
  CHECK_THROWS_AS(validate_fragment(frag("x", {1})), ParameterError);
  CHECK_THROWS_AS(validate_fragment(frag("x", {1, 2, 1})), ParameterError);
  CHECK_NOTHROW(validate_fragment(frag("x", {4, -2})));
  CHECK_THROWS_AS(glue({frag("x", {1, 2}), frag("x", {5, 6})}), ParameterError);
}

TEST_CASE("the five overlap cases") {
  CHECK(tag_of({1, 2, 3}, {7, 8, 9}) == OverlapTag::kDisjoint);

  const OverlapCase ht = classify_overlap(frag("a", {1, 2, 3, 4}), frag("b", {3, 4, 5, 6}));
  CHECK(ht.tag == OverlapTag::kHeadTail);
  CHECK(ht.segments == std::vector<Ids>{{3, 4}});
  CHECK(tag_of({3, 4, 5, 6}, {1, 2, 3, 4}) == OverlapTag::kHeadTail);

  const OverlapCase ar = classify_overlap(frag("a", {1, 2, 3, 4}), frag("b", {2, 1, 9, 8}));
  CHECK(ar.tag == OverlapTag::kAlignedReversed);
  CHECK(ar.segments == std::vector<Ids>{{1, 2}});
  CHECK(tag_of({1, 2, 3, 4}, {8, 9, 4, 3}) == OverlapTag::kAlignedReversed);

  const OverlapCase dw = classify_overlap(frag("a", {1, 2, 3, 4, 5}), frag("b", {4, 5, 6, 1, 2}));
  CHECK(dw.tag == OverlapTag::kDoubleWrap);
  CHECK(dw.segments.size() == 2);
  CHECK(tag_of({1, 2, 3, 4, 5}, {2, 1, 6, 5, 4}) == OverlapTag::kDoubleWrapReversed);

  CHECK(to_string(OverlapTag::kHeadTail) == "head-tail");
}

TEST_CASE("an overlap in the middle of a fragment is unclassifiable") {
  CHECK(matching_cases(frag("a", {1, 2, 3, 4}), frag("b", {2, 3, 9})).empty());
  CHECK_THROWS_AS(tag_of({1, 2, 3, 4}, {2, 3, 9}), InvalidFragmentPairError);
  CHECK_THROWS_AS(glue({frag("a", {1, 2, 3, 4}), frag("b", {2, 3, 9})}), InvalidFragmentPairError);
}

TEST_CASE("glue examples") {
  const auto single = glue({frag("f", {1, 2, 3})});
  REQUIRE(single.size() == 1);
  CHECK(single[0].kind == ComponentKind::kLinear);
  CHECK(single[0].arrangement == Ids{1, 2, 3});

  const auto line = glue({frag("f1", {1, 2, 3}), frag("f2", {3, 4, 5})});
  REQUIRE(line.size() == 1);
  CHECK(line[0].kind == ComponentKind::kLinear);
  CHECK(line[0].arrangement == Ids{1, 2, 3, 4, 5});

  const auto circle = glue({frag("f1", {1, 2, 3}), frag("f2", {3, 4, 5}), frag("f3", {5, 6, 1})});
  REQUIRE(circle.size() == 1);
  CHECK(circle[0].kind == ComponentKind::kCircular);
  CHECK(circle[0].arrangement == Ids{1, 2, 3, 4, 5, 6});
  CHECK(circle[0].members == std::vector<std::string>{"f1", "f2", "f3"});

  const auto two = glue({frag("p", {9, 8, 7}), frag("q", {1, 2})});
  REQUIRE(two.size() == 2);
  CHECK(two[0].arrangement == Ids{7, 8, 9});
  CHECK(two[1].members == std::vector<std::string>{"q"});
}

TEST_CASE("reversed input fragments glue to the same component") {
  const auto a = glue({frag("f1", {1, 2, 3}), frag("f2", {5, 4, 3}), frag("f3", {5, 6, 1})});
  REQUIRE(a.size() == 1);
  CHECK(a[0].kind == ComponentKind::kCircular);
  CHECK(a[0].arrangement == Ids{1, 2, 3, 4, 5, 6});
}

TEST_CASE("orientation conflicts are reported") {
  // f1-f2 and f1-f3 agree, f2-f3 are reversed: no consistent orientation.
  CHECK_THROWS_AS(glue({frag("f1", {1, 2, 3}), frag("f2", {3, 4, 5}), frag("f3", {3, 9, 8})}),
                  InconsistentFragmentsError);
}

TEST_CASE("normal form") {
  CHECK(normalize_arrangement(ComponentKind::kLinear, {5, 4, 3}) == Ids{3, 4, 5});
  CHECK(normalize_arrangement(ComponentKind::kCircular, {4, 3, 2, 1}) == Ids{1, 2, 3, 4});
  CHECK(normalize_arrangement(ComponentKind::kCircular, {3, 1, 4, 2}) == Ids{1, 3, 2, 4});
}

TEST_CASE("emitted relations") {
  GlueComponent line{ComponentKind::kLinear, {5, 7, 9}, {"f"}};
  const FiniteStructure b = emit_invariant_relation(line);
  CHECK(b.signature()[0].name == "B");
  CHECK(b.holds(0, {0, 1, 2}));
  CHECK(b.holds(0, {2, 1, 0}));
  CHECK_FALSE(b.holds(0, {1, 0, 2}));

  GlueComponent circle{ComponentKind::kCircular, {1, 2, 3, 4}, {"f"}};
  const FiniteStructure s = emit_invariant_relation(circle);
  CHECK(s.signature()[0].name == "S");
  CHECK(s.holds(0, {0, 1, 2, 3}));
  CHECK_FALSE(s.holds(0, {0, 2, 1, 3}));

  // Reversal does not change either relation.
  GlueComponent back = line;
  std::reverse(back.arrangement.begin(), back.arrangement.end());
  CHECK(emit_invariant_relation(back) == b);
  GlueComponent turned{ComponentKind::kCircular, {3, 2, 1, 4}, {"f"}};
  CHECK(emit_invariant_relation(turned) == s);
}

TEST_CASE("hidden orders are recovered") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    const ComponentKind kind = trial % 2 ? ComponentKind::kCircular : ComponentKind::kLinear;
    const std::size_t size = kind == ComponentKind::kLinear ? 3 + rng() % 60 : 6 + rng() % 20;
    const testing::HiddenOrder hidden = testing::sample_hidden_order(rng, kind, size);
    for (std::size_t i = 0; i < hidden.fragments.size(); ++i) {
      for (std::size_t j = i + 1; j < hidden.fragments.size(); ++j) {
        if (!intersects(hidden.fragments[i], hidden.fragments[j])) continue;
        CHECK(matching_cases(hidden.fragments[i], hidden.fragments[j]).size() == 1);
      }
    }
    const auto components = glue(hidden.fragments);
    REQUIRE(components.size() == 1);
    CHECK(components[0].kind == kind);
    CHECK(components[0].arrangement == normalize_arrangement(kind, hidden.order));

    // Gluing the result again changes nothing.
    const auto again = glue({frag("all", components[0].arrangement)});
    if (kind == ComponentKind::kLinear) CHECK(again[0].arrangement == components[0].arrangement);
  }
}
