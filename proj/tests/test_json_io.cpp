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

#include "oligo/catalogue.hpp"
#include "oligo/error.hpp"
#include "oligo/json_io.hpp"

using namespace oligo;

TEST_CASE("structure round trip") {
  const FiniteStructure s = sample_model(circular(), 5);
  CHECK(io::structure_from_json(io::parse(io::to_json(s).dump())) == s);
  const FiniteStructure empty = sample_model(pure_set(), 3);
  CHECK(io::structure_from_json(io::to_json(empty)) == empty);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(io::parse("{"), FormatError);
  CHECK_THROWS_AS(io::structure_from_json(io::parse(R"({"size":2})")), FormatError);
  CHECK_THROWS_AS(io::poset_from_json(io::parse(R"({"size":2,"leq":[[0]]})")), FormatError);
  CHECK_THROWS_AS(io::fragments_from_json(io::parse(R"({"fragments":[{"id":"a"}]})")), FormatError);
  CHECK_THROWS_AS(io::sequence_from_json(io::parse(R"({"values":"x"})")), FormatError);
}

TEST_CASE("poset input may omit reflexive pairs") {
  const FinitePoset p = io::poset_from_json(io::parse(R"({"size":3,"leq":[[0,1],[1,2],[0,2]]})"));
  CHECK(p.leq(2, 2));
  CHECK(p.less(0, 2));
  CHECK_THROWS_AS(io::poset_from_json(io::parse(R"({"size":2,"leq":[[0,1],[1,0]]})")), ParameterError);
}

TEST_CASE("fragments round trip") {
  const std::vector<OrderFragment> f{{"a", {1, -2, 3}}, {"b", {7, 8}}};
  const auto back = io::fragments_from_json(io::to_json(f));
  REQUIRE(back.size() == 2);
  CHECK(back[0].id == "a");
  CHECK(back[0].elements == f[0].elements);
}

TEST_CASE("big integers") {
  CHECK(io::big_to_json(BigInt(42)) == io::Json(42));
  const BigInt huge = BigInt(1) << 80;
  CHECK(io::big_to_json(huge).is_string());
  CHECK(io::big_from_json(io::big_to_json(huge)) == huge);
  CHECK(io::sequence_from_json(io::parse("[1, 2, \"3\"]")) == std::vector<BigInt>{1, 2, 3});
  CHECK(io::sequence_from_json(io::parse(R"({"values":[5]})")) == std::vector<BigInt>{5});
}

TEST_CASE("profile csv") {
  ProfileSequence p{"dlo", {1, 1}, {5, 7}};
  CHECK(io::to_csv(p) == "n,f_n,saturated_at\n1,1,5\n2,1,7\n");
  CHECK(io::to_json(p)["values"] == io::Json::array({1, 1}));
}

TEST_CASE("real formatting") {
  CHECK(io::format_real(1.0) == "1");
  CHECK(io::format_real(1.61803398875) == "1.61803");
  CHECK(io::format_real(2.48325) == "2.48325");
}
