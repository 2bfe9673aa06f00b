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

#include "oligo/profile.hpp"

#include <algorithm>
#include <functional>

#include "oligo/error.hpp"
#include "oligo/kernels.hpp"

namespace oligo {

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : left_(limit) {}

  void spend(std::uint64_t subsets, const std::string& what) {
    if (subsets > left_) {
      throw ResourceError(what + " needs " + std::to_string(subsets) +
                          " subsets but only " + std::to_string(left_) +
                          " remain in the enumeration budget");
    }
    left_ -= subsets;
  }

 private:
  std::uint64_t left_;
};

std::uint64_t count_with_budget(const CatalogueEntry& entry, std::size_t size, std::size_t n,
                                const ProfileOptions& options, Budget& budget) {
  const FiniteStructure model = sample_model(entry, size);
  const DenseModel dense(model);
  std::vector<std::vector<Element>> explicit_subsets;
  SubsetSource source = AllSubsets{model.size(), n};
  if (entry.orbit_subsets) {
    explicit_subsets = entry.orbit_subsets(size, n);
    source = ExplicitSubsets{explicit_subsets};
  }
  budget.spend(subset_count(source),
               entry.id + " at size " + std::to_string(size) + ", n=" + std::to_string(n));
  const CodeSet codes = options.parallel ? age_codes_parallel(dense, source, options.jobs)
                                         : age_codes_serial(dense, source);
  return codes.size();
}

}  // namespace

std::uint64_t count_classes(const CatalogueEntry& entry, std::size_t size, std::size_t n,
                            const ProfileOptions& options) {
  Budget budget(options.budget);
  return count_with_budget(entry, size, n, options, budget);
}

ProfileSequence profile(const CatalogueEntry& entry, std::size_t n_max,
                        const ProfileOptions& options) {
  if (n_max == 0) throw ParameterError("profile needs n_max >= 1");
  Budget budget(options.budget);
  ProfileSequence seq;
  seq.entry_id = entry.id;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const SaturationPlan plan = entry.saturation_rule(n);
    const std::uint64_t at_base = count_with_budget(entry, plan.base, n, options, budget);
    const std::uint64_t at_verify = count_with_budget(entry, plan.verify, n, options, budget);
    std::size_t used = plan.base;
    std::uint64_t value = at_base;
    if (at_base != at_verify) {
      const std::uint64_t at_retry = count_with_budget(entry, plan.retry, n, options, budget);
      if (at_retry != at_verify) {
        throw SaturationError(n, plan.verify, at_verify, plan.retry, at_retry);
      }
      used = plan.verify;
      value = at_verify;
    }
    seq.values.push_back(value);
    seq.saturated_at.push_back(used);
  }
  return seq;
}

bool is_non_decreasing(const ProfileSequence& seq) {
  return std::is_sorted(seq.values.begin(), seq.values.end());
}

BigInt compositions_count(std::size_t n, std::size_t max_part) {
  if (n == 0 || max_part == 0) throw ParameterError("compositions_count needs n, max_part >= 1");
  // ways[s] = compositions of s; ways[0] = 1 for the empty prefix.
  std::vector<BigInt> ways(n + 1);
  ways[0] = 1;
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t part = 1; part <= std::min(s, max_part); ++part) ways[s] += ways[s - part];
  }
  return ways[n];
}

std::vector<std::vector<std::size_t>> compositions(std::size_t n, std::size_t max_part) {
  if (n == 0 || max_part == 0) throw ParameterError("compositions needs n, max_part >= 1");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  std::function<void(std::size_t)> extend = [&](std::size_t left) {
    if (left == 0) {
      out.push_back(prefix);
      return;
    }
    for (std::size_t part = 1; part <= std::min(left, max_part); ++part) {
      prefix.push_back(part);
      extend(left - part);
      prefix.pop_back();
    }
  };
  extend(n);
  return out;
}

}  // namespace oligo
