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

// JSON and CSV forms of the library types. Readers throw FormatError on
// malformed documents.

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "oligo/bigint.hpp"
#include "oligo/glue.hpp"
#include "oligo/growth.hpp"
#include "oligo/poset.hpp"
#include "oligo/profile.hpp"
#include "oligo/structure.hpp"
#include "oligo/witness.hpp"

namespace oligo::io {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text);

/// {"signature":[["name",arity],...],"size":n,"tuples":{"name":[[...],...]}}
Json to_json(const FiniteStructure& s);
FiniteStructure structure_from_json(const Json& j);

/// {"size":n,"leq":[[a,b],...]}; the pairs are closed reflexively and
/// transitively, so covering pairs are enough.
FinitePoset poset_from_json(const Json& j);
Json to_json(const FinitePoset& p);
Json to_json(const LinearizationResult& r);

/// {"fragments":[{"id":"f1","elements":[...]},...]}
std::vector<OrderFragment> fragments_from_json(const Json& j);
Json to_json(const std::vector<OrderFragment>& fragments);
Json to_json(const std::vector<GlueComponent>& components);

Json to_json(const ProfileSequence& p);
/// Header "n,f_n,saturated_at".
std::string to_csv(const ProfileSequence& p);

/// Numbers up to 2^64-1 stay numbers; larger values become decimal strings.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);
/// A bare array or {"values":[...]}.
std::vector<BigInt> sequence_from_json(const Json& j);

Json to_json(const GrowthReport& g);
/// Two columns "n ratio", ratio = f_{n+1}/f_n, 6 significant digits.
std::string growth_table(const GrowthReport& g);

Json to_json(const WitnessFamily& family, const CollisionReport& report);

/// Shortest round-trip text would drift across platforms; this keeps 6
/// significant digits and never depends on the locale.
std::string format_real(double value);

}  // namespace oligo::io
