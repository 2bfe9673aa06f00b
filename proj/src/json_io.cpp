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

#include "oligo/json_io.hpp"

#include <charconv>
#include <limits>
#include <set>

#include "oligo/error.hpp"

namespace oligo::io {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

Element element_from(const Json& v) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
      v.get<std::int64_t>() > std::numeric_limits<Element>::max()) {
    throw FormatError("expected a non-negative element index, got " + v.dump());
  }
  return static_cast<Element>(v.get<std::int64_t>());
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const FiniteStructure& s) {
  Json sig = Json::array();
  Json tuples = Json::object();
  for (std::size_t r = 0; r < s.relation_count(); ++r) {
    sig.push_back({s.signature()[r].name, s.arity(r)});
    Json list = Json::array();
    for (std::size_t i = 0; i < s.tuple_count(r); ++i) {
      auto t = s.tuple(r, i);
      list.push_back(std::vector<Element>(t.begin(), t.end()));
    }
    tuples[s.signature()[r].name] = std::move(list);
  }
  return Json{{"signature", sig}, {"size", s.size()}, {"tuples", tuples}};
}

FiniteStructure structure_from_json(const Json& j) {
  const Json sig = get<Json>(j, "signature");
  if (!sig.is_array()) throw FormatError("'signature' must be an array");
  std::vector<RelationSymbol> symbols;
  for (const auto& entry : sig) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_number_unsigned()) {
      throw FormatError("signature entries must be [name, arity], got " + entry.dump());
    }
    symbols.push_back({entry[0].get<std::string>(), entry[1].get<std::size_t>()});
  }
  RelationalSignature signature(std::move(symbols));
  const auto size = get<std::size_t>(j, "size");
  const Json tuples = j.contains("tuples") ? j.at("tuples") : Json::object();
  if (!tuples.is_object()) throw FormatError("'tuples' must be an object");
  for (const auto& [name, list] : tuples.items()) {
    if (!signature.index_of(name)) throw FormatError("tuples given for unknown relation '" + name + "'");
  }
  std::vector<std::vector<Element>> flat(signature.size());
  for (std::size_t r = 0; r < signature.size(); ++r) {
    const auto& name = signature[r].name;
    if (!tuples.contains(name)) continue;
    const Json& list = tuples.at(name);
    if (!list.is_array()) throw FormatError("tuples of '" + name + "' must be an array");
    for (const auto& t : list) {
      if (!t.is_array() || t.size() != signature[r].arity) {
        throw FormatError("tuple " + t.dump() + " of '" + name + "' has the wrong length");
      }
      for (const auto& v : t) flat[r].push_back(element_from(v));
    }
  }
  return FiniteStructure(std::move(signature), size, std::move(flat));
}

FinitePoset poset_from_json(const Json& j) {
  const auto size = get<std::size_t>(j, "size");
  std::vector<std::pair<Element, Element>> pairs;
  const Json leq = j.contains("leq") ? j.at("leq") : Json::array();
  if (!leq.is_array()) throw FormatError("'leq' must be an array");
  for (const auto& p : leq) {
    if (!p.is_array() || p.size() != 2) throw FormatError("leq entries must be pairs, got " + p.dump());
    pairs.emplace_back(element_from(p[0]), element_from(p[1]));
  }
  return poset_closure(size, pairs);
}

Json to_json(const FinitePoset& p) {
  Json leq = Json::array();
  for (auto [a, b] : p.relation().pairs()) leq.push_back({a, b});
  return Json{{"size", p.size()}, {"leq", leq}};
}

Json to_json(const LinearizationResult& r) {
  Json trace = Json::array();
  for (const auto& round : r.trace) {
    Json pairs = Json::array();
    for (auto [a, b] : round.triangle) pairs.push_back({a, b});
    trace.push_back(Json{{"elements", round.elements},
                         {"triangle", pairs},
                         {"merged", round.merged},
                         {"max_incomparable_before", round.max_incomparable_before},
                         {"max_incomparable_after", round.max_incomparable_after},
                         {"quotient_width", round.quotient_width}});
  }
  return Json{{"classes", r.classes}, {"rounds", r.trace.size()}, {"trace", trace}};
}

std::vector<OrderFragment> fragments_from_json(const Json& j) {
  const Json list = get<Json>(j, "fragments");
  if (!list.is_array()) throw FormatError("'fragments' must be an array");
  std::vector<OrderFragment> out;
  for (const auto& f : list) {
    OrderFragment frag;
    frag.id = get<std::string>(f, "id");
    const Json elements = get<Json>(f, "elements");
    if (!elements.is_array()) throw FormatError("elements of '" + frag.id + "' must be an array");
    for (const auto& e : elements) {
      if (!e.is_number_integer()) throw FormatError("fragment elements must be integers");
      frag.elements.push_back(e.get<GroundId>());
    }
    out.push_back(std::move(frag));
  }
  return out;
}

Json to_json(const std::vector<OrderFragment>& fragments) {
  Json list = Json::array();
  for (const auto& f : fragments) list.push_back(Json{{"id", f.id}, {"elements", f.elements}});
  return Json{{"fragments", list}};
}

Json to_json(const std::vector<GlueComponent>& components) {
  Json list = Json::array();
  for (const auto& c : components) {
    list.push_back(Json{{"kind", std::string(to_string(c.kind))},
                        {"arrangement", c.arrangement},
                        {"members", c.members}});
  }
  return Json{{"components", list}};
}

Json to_json(const ProfileSequence& p) {
  return Json{{"entry_id", p.entry_id}, {"values", p.values}, {"saturated_at", p.saturated_at}};
}

std::string to_csv(const ProfileSequence& p) {
  std::string out = "n,f_n,saturated_at\n";
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    out += std::to_string(i + 1) + "," + std::to_string(p.values[i]) + "," +
           std::to_string(p.saturated_at[i]) + "\n";
  }
  return out;
}

Json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) ==
                                          std::string::npos && s != "-";
    if (!digits) throw FormatError("expected a decimal integer string, got \"" + s + "\"");
    return BigInt(s);
  }
  throw FormatError("expected an integer, got " + j.dump());
}

std::vector<BigInt> sequence_from_json(const Json& j) {
  const Json list = j.is_object() ? get<Json>(j, "values") : j;
  if (!list.is_array()) throw FormatError("a sequence must be an array of integers");
  std::vector<BigInt> out;
  for (const auto& v : list) out.push_back(big_from_json(v));
  return out;
}

std::string format_real(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 6);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

Json to_json(const GrowthReport& g) {
  return Json{{"nth_roots", g.nth_roots},
              {"ratios", g.ratios},
              {"last_ratio", g.last_ratio},
              {"limit_estimate", g.limit_estimate},
              {"monotone", g.monotone}};
}

std::string growth_table(const GrowthReport& g) {
  std::string out = "# n ratio\n";
  for (std::size_t i = 0; i < g.ratios.size(); ++i) {
    out += std::to_string(i + 1) + " " + format_real(g.ratios[i]) + "\n";
  }
  return out;
}

Json to_json(const WitnessFamily& family, const CollisionReport& report) {
  Json members = Json::array();
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    members.push_back(Json{{"index", family.indices[i]}, {"structure", to_json(family.members[i])}});
  }
  Json collisions = Json::array();
  for (auto [a, b] : report) collisions.push_back({a, b});
  return Json{{"construction_id", family.construction_id},
              {"n", family.n},
              {"count", family.members.size()},
              {"members", members},
              {"collisions", collisions}};
}

}  // namespace oligo::io
