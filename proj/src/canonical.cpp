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

#include "oligo/canonical.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <string_view>

#include "oligo/error.hpp"

namespace oligo {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint64_t value) {
  if (value > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("value " + std::to_string(value) + " does not fit the 32-bit encoding");
  }
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<std::uint8_t>(value >> shift));
  }
}

constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kOdd = 0xff51afd7ed558ccdULL;

// Above this many key bits a leaf is keyed by its sorted tuple list instead
// of a dense bit matrix.
constexpr std::uint64_t kMaxDenseKeyBits = std::uint64_t{1} << 27;

class Canonizer {
 public:
  explicit Canonizer(const FiniteStructure& s) : s_(s), n_(s.size()) {
    std::uint64_t bits = 0;
    dense_ = true;
    for (std::size_t r = 0; r < s.relation_count(); ++r) {
      std::uint64_t cells = 1;
      for (std::size_t j = 0; j < s.arity(r); ++j) {
        if (cells > kMaxDenseKeyBits / std::max<std::size_t>(n_, 1)) {
          dense_ = false;
          break;
        }
        cells *= n_;
      }
      if (!dense_) break;
      word_offset_.push_back(bits / 64);
      bits += (cells + 63) / 64 * 64;
      if (bits > kMaxDenseKeyBits) dense_ = false;
    }
    key_words_ = static_cast<std::size_t>(bits / 64);
  }

  CanonicalLabeling run() {
    Partition root{std::vector<std::uint32_t>(n_, 0), n_ == 0 ? 0u : 1u};
    std::vector<Element> path;
    search(std::move(root), path);
    CanonicalLabeling result;
    result.labels = best_labels_;
    result.code = dense_ ? code_from_key() : encode(relabel(s_, best_labels_));
    result.leaves_visited = leaves_;
    return result;
  }

 private:
  struct Partition {
    std::vector<std::uint32_t> cell;  // dense cell rank per vertex
    std::uint32_t cells = 0;
  };

  static constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kMaxStoredAutomorphisms = 256;

  // Splits cells by a hash of the cell pattern of every tuple each vertex
  // takes part in, ordering new cells by (old cell, hash). Both inputs are
  // label-independent, so the result commutes with relabeling.
  void refine(Partition& p) const {
    std::vector<std::uint64_t> sig(n_);
    std::vector<Element> order(n_);
    while (p.cells < n_) {
      std::fill(sig.begin(), sig.end(), 0);
      for (std::size_t r = 0; r < s_.relation_count(); ++r) {
        const std::size_t k = s_.arity(r);
        auto flat = s_.flat_tuples(r);
        const std::uint64_t seed = mix64(0x5eed0000ULL + r);
        for (std::size_t off = 0; off < flat.size(); off += k) {
          std::uint64_t h = seed;
          for (std::size_t j = 0; j < k; ++j) h = (h ^ (p.cell[flat[off + j]] + 1)) * kOdd;
          h = mix64(h);
          for (std::size_t j = 0; j < k; ++j) sig[flat[off + j]] += mix64(h + j + 1);
        }
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](Element a, Element b) {
        if (p.cell[a] != p.cell[b]) return p.cell[a] < p.cell[b];
        return sig[a] < sig[b];
      });
      std::vector<std::uint32_t> next(n_);
      std::uint32_t rank = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && (p.cell[order[i]] != p.cell[order[i - 1]] ||
                      sig[order[i]] != sig[order[i - 1]])) {
          ++rank;
        }
        next[order[i]] = rank;
      }
      const std::uint32_t cells = rank + 1;
      if (cells == p.cells) break;
      p.cell = std::move(next);
      p.cells = cells;
    }
  }

  Partition individualize(const Partition& p, Element v) const {
    Partition child{p.cell, p.cells + 1};
    const std::uint32_t cv = p.cell[v];
    for (std::size_t u = 0; u < n_; ++u) {
      if (p.cell[u] > cv || (p.cell[u] == cv && u != v)) ++child.cell[u];
    }
    return child;
  }

  // First smallest non-singleton cell.
  std::vector<Element> target_cell(const Partition& p) const {
    std::vector<std::uint32_t> sizes(p.cells, 0);
    for (auto c : p.cell) ++sizes[c];
    std::uint32_t best = 0;
    std::uint32_t best_size = std::numeric_limits<std::uint32_t>::max();
    for (std::uint32_t c = 0; c < p.cells; ++c) {
      if (sizes[c] > 1 && sizes[c] < best_size) {
        best = c;
        best_size = sizes[c];
      }
    }
    std::vector<Element> members;
    for (std::size_t v = 0; v < n_; ++v) {
      if (p.cell[v] == best) members.push_back(static_cast<Element>(v));
    }
    return members;
  }

  // Same bytes as encode(relabel(s_, best_labels_)): set bits of the dense
  // key already run in lexicographic tuple order.
  CanonicalCode code_from_key() const {
    std::size_t elements = 0;
    for (std::size_t r = 0; r < s_.relation_count(); ++r) elements += s_.flat_tuples(r).size();
    std::vector<std::uint8_t> out;
    out.reserve(4 * (2 + 2 * s_.relation_count() + elements));
    put_u32(out, n_);
    put_u32(out, s_.relation_count());
    std::vector<Element> digits;
    for (std::size_t r = 0; r < s_.relation_count(); ++r) {
      const std::size_t k = s_.arity(r);
      put_u32(out, k);
      put_u32(out, s_.tuple_count(r));
      const std::size_t first = word_offset_[r];
      const std::size_t last = r + 1 < s_.relation_count() ? word_offset_[r + 1] : key_words_;
      digits.resize(k);
      for (std::size_t w = first; w < last; ++w) {
        for (std::uint64_t word = best_key_[w]; word != 0; word &= word - 1) {
          std::uint64_t idx = (w - first) * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
          for (std::size_t j = k; j-- > 0;) {
            digits[j] = static_cast<Element>(idx % n_);
            idx /= n_;
          }
          for (Element e : digits) put_u32(out, e);
        }
      }
    }
    return CanonicalCode(std::move(out));
  }

  std::vector<std::uint64_t> leaf_key(const std::vector<std::uint32_t>& labels) const {
    std::vector<std::uint64_t> key;
    if (dense_) {
      key.assign(key_words_, 0);
      for (std::size_t r = 0; r < s_.relation_count(); ++r) {
        const std::size_t k = s_.arity(r);
        auto flat = s_.flat_tuples(r);
        const std::uint64_t base = word_offset_[r] * 64;
        for (std::size_t off = 0; off < flat.size(); off += k) {
          std::uint64_t idx = 0;
          for (std::size_t j = 0; j < k; ++j) idx = idx * n_ + labels[flat[off + j]];
          idx += base;
          key[idx / 64] |= std::uint64_t{1} << (idx % 64);
        }
      }
      return key;
    }
    for (std::size_t r = 0; r < s_.relation_count(); ++r) {
      const std::size_t k = s_.arity(r);
      auto flat = s_.flat_tuples(r);
      std::vector<Element> mapped(flat.size());
      for (std::size_t i = 0; i < flat.size(); ++i) mapped[i] = labels[flat[i]];
      const std::size_t count = flat.size() / k;
      std::vector<std::size_t> order(count);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(&mapped[a * k], &mapped[a * k] + k,
                                            &mapped[b * k], &mapped[b * k] + k);
      });
      key.push_back(count);
      for (std::size_t idx : order) {
        for (std::size_t j = 0; j < k; ++j) key.push_back(mapped[idx * k + j]);
      }
    }
    return key;
  }

  // Orbit representative of each vertex under the stored automorphisms that
  // fix `path` pointwise.
  std::vector<Element> orbits_fixing(const std::vector<Element>& path) const {
    std::vector<Element> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<Element(Element)> find = [&](Element x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(),
                               [&](Element v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        Element a = find(static_cast<Element>(v));
        Element b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t v = 0; v < n_; ++v) parent[v] = find(static_cast<Element>(v));
    return parent;
  }

  // Returns kNoJump, or the depth of the node at which the search resumes
  // after an automorphism made the rest of the current subtree redundant.
  std::size_t search(Partition p, std::vector<Element>& path) {
    refine(p);
    const std::size_t depth = path.size();
    if (p.cells == n_) return leaf(p, path);

    const std::vector<Element> candidates = target_cell(p);
    std::vector<Element> explored;
    std::size_t autos_seen = std::numeric_limits<std::size_t>::max();
    std::vector<Element> orbit;
    for (Element w : candidates) {
      if (!explored.empty()) {
        if (autos_seen != automorphisms_.size()) {
          orbit = orbits_fixing(path);
          autos_seen = automorphisms_.size();
        }
        const bool redundant = std::any_of(explored.begin(), explored.end(),
                                           [&](Element u) { return orbit[u] == orbit[w]; });
        if (redundant) continue;
      }
      path.push_back(w);
      const std::size_t jump = search(individualize(p, w), path);
      path.pop_back();
      explored.push_back(w);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  std::size_t leaf(const Partition& p, const std::vector<Element>& path) {
    ++leaves_;
    auto key = leaf_key(p.cell);
    const auto cmp = key <=> best_key_;
    if (leaves_ == 1 || cmp < 0) {
      adopt(p, path, std::move(key));
      return kNoJump;
    }
    if (cmp > 0) return kNoJump;

    std::vector<Element> inverse_best(n_);
    for (std::size_t v = 0; v < n_; ++v) inverse_best[best_labels_[v]] = static_cast<Element>(v);
    std::vector<Element> gamma(n_);
    for (std::size_t v = 0; v < n_; ++v) gamma[v] = inverse_best[p.cell[v]];
    if (automorphisms_.size() < kMaxStoredAutomorphisms) {
      automorphisms_.push_back(std::move(gamma));
    }
    std::size_t common = 0;
    while (common < path.size() && common < best_path_.size() &&
           path[common] == best_path_[common]) {
      ++common;
    }
    return common;
  }

  void adopt(const Partition& p, const std::vector<Element>& path,
             std::vector<std::uint64_t> key) {
    best_key_ = std::move(key);
    best_labels_.assign(p.cell.begin(), p.cell.end());
    best_path_ = path;
  }

  const FiniteStructure& s_;
  std::size_t n_;
  bool dense_ = true;
  std::vector<std::size_t> word_offset_;
  std::size_t key_words_ = 0;

  std::vector<std::uint64_t> best_key_;
  std::vector<Element> best_labels_;
  std::vector<Element> best_path_;
  std::vector<std::vector<Element>> automorphisms_;
  std::size_t leaves_ = 0;
};

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& code) const noexcept {
  const auto& b = code.bytes();
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(b.data()), b.size()));
}

CanonicalCode encode(const FiniteStructure& s) {
  if (s.size() == 0) return CanonicalCode::empty_sentinel();
  std::vector<std::uint8_t> out;
  std::size_t words = 2;
  for (std::size_t r = 0; r < s.relation_count(); ++r) words += 2 + s.flat_tuples(r).size();
  out.reserve(4 * words);
  put_u32(out, s.size());
  put_u32(out, s.relation_count());
  for (std::size_t r = 0; r < s.relation_count(); ++r) {
    put_u32(out, s.arity(r));
    put_u32(out, s.tuple_count(r));
    for (Element e : s.flat_tuples(r)) put_u32(out, e);
  }
  return CanonicalCode(std::move(out));
}

CanonicalLabeling canonical_labeling(const FiniteStructure& s) {
  if (s.size() == 0) return CanonicalLabeling{{}, CanonicalCode::empty_sentinel(), 0};
  return Canonizer(s).run();
}

CanonicalCode canonical_form(const FiniteStructure& s) {
  return canonical_labeling(s).code;
}

bool is_isomorphic(const FiniteStructure& a, const FiniteStructure& b) {
  if (!(a.signature() == b.signature())) {
    throw SignatureError("cannot compare structures over different signatures");
  }
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.relation_count(); ++r) {
    if (a.tuple_count(r) != b.tuple_count(r)) return false;
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace oligo
