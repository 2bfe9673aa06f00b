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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "oligo/canonical.hpp"
#include "oligo/catalogue.hpp"
#include "oligo/error.hpp"
#include "oligo/glue.hpp"
#include "oligo/growth.hpp"
#include "oligo/json_io.hpp"
#include "oligo/poset.hpp"
#include "oligo/profile.hpp"
#include "oligo/witness.hpp"

namespace oligo::cli {

namespace {

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t budget = ProfileOptions{}.budget;
  int jobs = 0;
  std::string out_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string describe_signature(const RelationalSignature& sig) {
  if (sig.empty()) return "(empty)";
  std::string out;
  for (const auto& r : sig) {
    if (!out.empty()) out += ",";
    out += r.name + "/" + std::to_string(r.arity);
  }
  return out;
}

int env_jobs() {
  const char* v = std::getenv("OLIGO_JOBS");
  if (v == nullptr) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  return (end != v && *end == '\0' && n > 0) ? static_cast<int>(n) : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit profiles, growth constants and order constructions", "oligo"};
  app.require_subcommand(1);
  RunConfig config;
  config.jobs = env_jobs();
  app.add_option("--seed", config.seed, "Seed for random inputs");
  app.add_option("--jobs", config.jobs, "Worker threads (default: OLIGO_JOBS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget", config.budget, "Maximum subsets one profile may enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", config.out_path, "Write the result here instead of stdout");

  auto* list_cmd = app.add_subcommand("catalogue-list", "List catalogue entries");

  auto* profile_cmd = app.add_subcommand("profile", "Compute f_1..f_N for a catalogue entry");
  std::string profile_entry;
  std::size_t n_max = 0;
  std::string profile_format = "csv";
  bool serial = false;
  profile_cmd->add_option("entry", profile_entry, "Catalogue id")->required();
  profile_cmd->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::PositiveNumber);
  profile_cmd->add_option("--format", profile_format)->check(CLI::IsMember({"csv", "json"}));
  profile_cmd->add_flag("--serial", serial, "Use the serial reference kernel");

  auto* growth_cmd = app.add_subcommand("growth", "Growth report for a sequence");
  std::string growth_source;
  std::string growth_file;
  std::size_t growth_n = 0;
  std::string growth_format = "json";
  growth_cmd->add_option("source", growth_source, "tree_count, fibonacci or a catalogue id");
  growth_cmd->add_option("--file", growth_file, "JSON array of integers, or {\"values\": [...]}");
  growth_cmd->add_option("--n", growth_n, "Sequence length")->check(CLI::PositiveNumber);
  growth_cmd->add_option("--format", growth_format)->check(CLI::IsMember({"json", "table"}));

  auto* witness_cmd = app.add_subcommand("witness", "Build and verify a witness family");
  std::string construction;
  std::size_t witness_n = 0;
  std::size_t max_part = 0;
  witness_cmd->add_option("construction", construction)
      ->required()
      ->check(CLI::IsMember({"composition", "binary_pattern", "antichain"}));
  witness_cmd->add_option("--n", witness_n)->required()->check(CLI::PositiveNumber);
  witness_cmd->add_option("--max-part", max_part, "Largest part (composition; default n)");

  auto* lin_cmd = app.add_subcommand("linearize", "Linearize a poset");
  std::string poset_path;
  std::size_t random_size = 0;
  std::size_t max_width = 6;
  auto* lin_in = lin_cmd->add_option("--in", poset_path, "Poset JSON file");
  auto* lin_random = lin_cmd->add_option("--random", random_size, "Draw a random poset of at most this size")
                         ->check(CLI::PositiveNumber);
  lin_cmd->add_option("--max-width", max_width, "Width bound for --random")->check(CLI::PositiveNumber);
  lin_in->excludes(lin_random);

  auto* glue_cmd = app.add_subcommand("glue", "Assemble overlapping fragments");
  std::string fragments_path;
  glue_cmd->add_option("--in", fragments_path, "Fragment JSON file")->required();

  auto* const_cmd = app.add_subcommand("constants", "Growth constant table");

  auto* canon_cmd = app.add_subcommand("canon", "Canonical code of a structure");
  std::string structure_path;
  canon_cmd->add_option("--in", structure_path, "Structure JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (lin_cmd->parsed() && lin_in->count() == 0 && lin_random->count() == 0) {
    err << "usage error: linearize needs --in or --random\n";
    return 2;
  }

  try {
    std::ostringstream result;
    if (list_cmd->parsed()) {
      for (const auto& id : catalogue_ids()) {
        const CatalogueEntry e = lookup_entry(id == "fibered_order:k" ? "fibered_order:2" : id);
        result << id << "\t" << describe_signature(e.signature) << "\t"
               << (e.predictor ? "predictor" : "no-predictor") << "\n";
      }
    } else if (profile_cmd->parsed()) {
      ProfileOptions options;
      options.budget = config.budget;
      options.jobs = config.jobs;
      options.parallel = !serial;
      const ProfileSequence seq = profile(lookup_entry(profile_entry), n_max, options);
      if (profile_format == "csv") {
        result << io::to_csv(seq);
      } else {
        result << io::to_json(seq).dump(2) << "\n";
      }
    } else if (growth_cmd->parsed()) {
      std::vector<BigInt> values;
      if (!growth_file.empty()) {
        if (!growth_source.empty()) throw ParameterError("give either a source or --file, not both");
        values = io::sequence_from_json(io::parse(read_file(growth_file)));
      } else if (growth_source == "tree_count") {
        values = tree_counts(growth_n ? growth_n : 40);
      } else if (growth_source == "fibonacci") {
        values = fibonacci_prefix(growth_n ? growth_n : 25);
      } else if (!growth_source.empty()) {
        ProfileOptions options;
        options.budget = config.budget;
        options.jobs = config.jobs;
        const auto seq = profile(lookup_entry(growth_source), growth_n ? growth_n : 8, options);
        for (auto v : seq.values) values.emplace_back(v);
      } else {
        throw ParameterError("growth needs a source or --file");
      }
      const GrowthReport report = growth_estimate(values);
      if (growth_format == "json") {
        result << io::to_json(report).dump(2) << "\n";
      } else {
        result << io::growth_table(report);
      }
    } else if (witness_cmd->parsed()) {
      WitnessFamily family;
      if (construction == "composition") {
        family = composition_witness(witness_n, max_part ? max_part : witness_n);
      } else if (construction == "binary_pattern") {
        family = binary_pattern_witness(witness_n);
      } else {
        family = antichain_witness(witness_n);
      }
      result << io::to_json(family, verify_pairwise_nonisomorphic(family, config.jobs)).dump(2)
             << "\n";
    } else if (lin_cmd->parsed()) {
      if (!poset_path.empty()) {
        const FinitePoset p = io::poset_from_json(io::parse(read_file(poset_path)));
        result << io::to_json(linearize(p)).dump(2) << "\n";
      } else {
        std::mt19937_64 rng(config.seed);
        const FinitePoset p = random_poset(rng, random_size, max_width);
        io::Json doc = io::to_json(linearize(p));
        doc["poset"] = io::to_json(p);
        result << doc.dump(2) << "\n";
      }
    } else if (glue_cmd->parsed()) {
      const auto fragments = io::fragments_from_json(io::parse(read_file(fragments_path)));
      result << io::to_json(glue(fragments)).dump(2) << "\n";
    } else if (const_cmd->parsed()) {
      for (const auto& c : growth_constants()) {
        result << c.symbol << "\t" << io::format_real(c.value) << "\t" << c.meaning << "\n";
      }
    } else if (canon_cmd->parsed()) {
      const FiniteStructure s = io::structure_from_json(io::parse(read_file(structure_path)));
      const CanonicalLabeling lab = canonical_labeling(s);
      io::Json doc{{"code", lab.code.hex()}, {"labels", lab.labels}};
      result << doc.dump(2) << "\n";
    }

    if (config.out_path.empty()) {
      out << result.str();
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) throw ParameterError("cannot write '" + config.out_path + "'");
      file << result.str();
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace oligo::cli
