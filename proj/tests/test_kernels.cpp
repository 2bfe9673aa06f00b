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

#include <random>
#include <set>

#include "oligo/catalogue.hpp"
#include "oligo/error.hpp"
#include "oligo/kernels.hpp"
#include "oracles.hpp"

using namespace oligo;

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(19, 8) == 75582);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("colex successor and unrank agree") {
  for (std::size_t universe : {1, 5, 9}) {
    for (std::size_t k = 0; k <= universe; ++k) {
      std::vector<Element> subset = colex_unrank(0, k);
      std::set<std::vector<Element>> seen;
      std::uint64_t rank = 0;
      do {
        REQUIRE(subset == colex_unrank(rank, k));
        REQUIRE(std::is_sorted(subset.begin(), subset.end()));
        seen.insert(subset);
        ++rank;
      } while (colex_next(subset, universe));
      CHECK(rank == binomial(universe, k));
      CHECK(seen.size() == rank);
    }
  }
}

TEST_CASE("literal decodes to the induced substructure") {
  std::mt19937_64 rng(8);
  const RelationalSignature sig({{"R", 2}, {"U", 1}, {"T", 3}});
  const FiniteStructure model = testing::random_structure(rng, sig, 10, 0.4);
  const DenseModel dense(model);
  Literal lit;
  for (int i = 0; i < 100; ++i) {
    auto subset = testing::random_permutation(rng, 10);
    subset.resize(1 + i % 6);
    std::sort(subset.begin(), subset.end());
    dense.literal(subset, lit);
    CHECK(dense.structure_from_literal(lit, subset.size()) == induced_substructure(model, subset));
  }
}

TEST_CASE("serial and parallel age kernels agree") {
  std::mt19937_64 rng(21);
  const RelationalSignature sig({{"R", 2}});
  const FiniteStructure model = testing::random_structure(rng, sig, 12, 0.5);
  const DenseModel dense(model);
  for (std::size_t k = 0; k <= 6; ++k) {
    const AllSubsets all{12, k};
    const CodeSet serial = age_codes_serial(dense, all);
    for (int jobs : {1, 2, 4}) CHECK(age_codes_parallel(dense, all, jobs) == serial);
  }
  const FiniteStructure tree = sample_model(tree_c(), 5);
  const auto reps = tree_subset_orbits(5, 5);
  const DenseModel tree_dense(tree);
  CHECK(age_codes_parallel(tree_dense, ExplicitSubsets{reps}, 3) ==
        age_codes_serial(tree_dense, ExplicitSubsets{reps}));
}

TEST_CASE("serial and parallel code lists agree") {
  std::mt19937_64 rng(4);
  std::vector<FiniteStructure> items;
  for (int i = 0; i < 40; ++i) {
    items.push_back(testing::random_structure(rng, RelationalSignature({{"T", 3}}), 1 + i % 7, 0.3));
  }
  CHECK(canonical_codes_parallel(items, 3) == canonical_codes_serial(items));
}

TEST_CASE("tree orbit representatives meet every class of the full enumeration") {
  for (std::size_t depth = 1; depth <= 4; ++depth) {
    const FiniteStructure tree = sample_model(tree_c(), depth);
    const DenseModel dense(tree);
    for (std::size_t k = 1; k <= std::min<std::size_t>(tree.size(), 7); ++k) {
      const auto reps = tree_subset_orbits(depth, k);
      const CodeSet full = age_codes_serial(dense, AllSubsets{tree.size(), k});
      const CodeSet reduced = age_codes_serial(dense, ExplicitSubsets{reps});
      CHECK(full == reduced);
      CHECK(reps.size() <= binomial(tree.size(), k));
    }
  }
}

TEST_CASE("dense model refuses oversized relations") {
  const FiniteStructure big(RelationalSignature({{"Q", 4}}), 300, {{}});
  CHECK_THROWS_AS(DenseModel{big}, ResourceError);
}
