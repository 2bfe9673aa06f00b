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

#include <algorithm>
#include <functional>
#include <string_view>

#include "oligo/error.hpp"
#include "oligo/kernels.hpp"

namespace oligo {

namespace {

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::size_t LiteralHash::operator()(const Literal& lit) const noexcept {
  return std::hash<std::string_view>{}(std::string_view(
      reinterpret_cast<const char*>(lit.data()), lit.size() * sizeof(std::uint64_t)));
}

DenseModel::DenseModel(const FiniteStructure& model)
    : signature_(model.signature()), size_(model.size()) {
  bits_.resize(model.relation_count());
  for (std::size_t r = 0; r < model.relation_count(); ++r) {
    const std::size_t k = model.arity(r);
    std::uint64_t cells = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (size_ != 0 && cells > kMaxBits / size_) {
        throw ResourceError("relation '" + signature_[r].name + "' of arity " +
                            std::to_string(k) + " over " + std::to_string(size_) +
                            " points exceeds the dense-model limit");
      }
      cells *= size_;
    }
    auto& words = bits_[r];
    words.assign((cells + 63) / 64, 0);
    auto flat = model.flat_tuples(r);
    for (std::size_t off = 0; off < flat.size(); off += k) {
      std::uint64_t idx = 0;
      for (std::size_t j = 0; j < k; ++j) idx = idx * size_ + flat[off + j];
      words[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
  }
}

void DenseModel::literal(std::span<const Element> subset, Literal& out) const {
  const std::size_t m = subset.size();
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < bits_.size(); ++r) total += power(m, signature_[r].arity);
  out.assign((total + 63) / 64, 0);
  if (m == 0) return;

  std::uint64_t bit = 0;
  std::vector<std::size_t> pos;
  std::vector<std::uint64_t> partial;
  for (std::size_t r = 0; r < bits_.size(); ++r) {
    const std::size_t k = signature_[r].arity;
    const auto& words = bits_[r];
    pos.assign(k, 0);
    // partial[j] is the dense index contributed by coordinates 0..j-1.
    partial.assign(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) partial[j + 1] = partial[j] * size_ + subset[0];
    for (;;) {
      const std::uint64_t idx = partial[k];
      if ((words[idx / 64] >> (idx % 64)) & 1U) {
        out[bit / 64] |= std::uint64_t{1} << (bit % 64);
      }
      ++bit;
      std::size_t j = k;
      while (j > 0 && pos[j - 1] + 1 == m) --j;
      if (j == 0) break;
      ++pos[j - 1];
      for (std::size_t t = j - 1; t < k; ++t) {
        if (t >= j) pos[t] = 0;
        partial[t + 1] = partial[t] * size_ + subset[pos[t]];
      }
    }
  }
}

FiniteStructure DenseModel::structure_from_literal(const Literal& lit, std::size_t m) const {
  std::vector<std::vector<Element>> tuples(bits_.size());
  std::uint64_t bit = 0;
  for (std::size_t r = 0; r < bits_.size(); ++r) {
    const std::size_t k = signature_[r].arity;
    const std::uint64_t cells = power(m, k);
    std::vector<Element> t(k, 0);
    for (std::uint64_t c = 0; c < cells; ++c, ++bit) {
      if ((lit[bit / 64] >> (bit % 64)) & 1U) tuples[r].insert(tuples[r].end(), t.begin(), t.end());
      std::size_t j = k;
      while (j > 0 && t[j - 1] + 1 == m) t[--j] = 0;
      if (j > 0) ++t[j - 1];
    }
  }
  return FiniteStructure(signature_, m, std::move(tuples));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using Wide = unsigned __int128;
  Wide out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(out);
}

std::uint64_t subset_count(const SubsetSource& source) {
  if (const auto* all = std::get_if<AllSubsets>(&source)) return binomial(all->universe, all->k);
  return std::get<ExplicitSubsets>(source).subsets.size();
}

std::vector<Element> colex_unrank(std::uint64_t rank, std::size_t k) {
  std::vector<Element> out(k);
  for (std::size_t i = k; i > 0; --i) {
    std::uint64_t c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    out[i - 1] = static_cast<Element>(c);
    rank -= binomial(c, i);
  }
  return out;
}

bool colex_next(std::vector<Element>& subset, std::size_t universe) {
  const std::size_t k = subset.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Element limit = i + 1 < k ? subset[i + 1] : static_cast<Element>(universe);
    if (subset[i] + 1 < limit) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<Element>(j);
      return true;
    }
  }
  return false;
}

}  // namespace oligo
