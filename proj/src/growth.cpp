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

#include "oligo/growth.hpp"

#include <algorithm>
#include <cmath>

#include "oligo/error.hpp"

namespace oligo {

double log_big(const BigInt& value) {
  if (value <= 0) throw DomainError("logarithm of a non-positive integer");
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log(value.convert_to<double>());
  // Leading 64 bits as a mantissa.
  const std::size_t shift = bits - 64;
  double top = 0.0;
  for (std::size_t b = bits; b-- > shift;) {
    top = top * 2.0 + (boost::multiprecision::bit_test(value, b) ? 1.0 : 0.0);
  }
  return std::log(top) + static_cast<double>(shift) * std::log(2.0);
}

std::vector<BigInt> tree_counts(std::size_t n) {
  std::vector<BigInt> t(n + 1);
  if (n >= 1) t[1] = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    BigInt sum = 0;
    for (std::size_t i = 1; 2 * i < m; ++i) sum += t[i] * t[m - i];
    if (m % 2 == 0) sum += t[m / 2] * (t[m / 2] + 1) / 2;
    t[m] = sum;
  }
  return std::vector<BigInt>(t.begin() + 1, t.end());
}

BigInt tree_count(std::size_t n) {
  if (n == 0) throw ParameterError("tree_count needs n >= 1");
  return tree_counts(n).back();
}

std::vector<BigInt> fibonacci_prefix(std::size_t n) {
  std::vector<BigInt> f;
  BigInt a = 1;
  BigInt b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    f.push_back(a);
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return f;
}

BigInt fibonacci(std::size_t n) {
  if (n == 0) throw ParameterError("fibonacci needs n >= 1");
  return fibonacci_prefix(n).back();
}

GrowthReport growth_estimate(std::span<const BigInt> values) {
  if (values.size() < 3) {
    throw DomainError("growth_estimate needs at least 3 values, got " +
                      std::to_string(values.size()));
  }
  std::vector<double> logs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) {
      throw DomainError("growth_estimate needs positive values; f_" + std::to_string(i + 1) +
                        " is not");
    }
    logs.push_back(log_big(values[i]));
  }
  GrowthReport report;
  for (std::size_t i = 0; i < values.size(); ++i) {
    report.nth_roots.push_back(std::exp(logs[i] / static_cast<double>(i + 1)));
    if (i + 1 < values.size()) report.ratios.push_back(std::exp(logs[i + 1] - logs[i]));
    if (i > 0 && values[i] < values[i - 1]) report.monotone = false;
  }
  const std::size_t m = report.ratios.size();
  report.last_ratio = report.ratios[m - 1];
  const double n = static_cast<double>(m);
  report.limit_estimate = n * report.ratios[m - 1] - (n - 1.0) * report.ratios[m - 2];
  return report;
}

bool lower_bound_check(std::span<const BigInt> values, double c, unsigned degree) {
  if (c <= 0.0) throw DomainError("lower_bound_check needs c > 0");
  std::vector<double> logs;
  for (const auto& v : values) logs.push_back(log_big(v));
  for (double k = 1.0; k <= 1e6; k *= 10.0) {
    bool holds = true;
    for (std::size_t i = 0; i < logs.size() && holds; ++i) {
      const double n = static_cast<double>(i + 1);
      const double rhs = n * std::log(c) - std::log(k * std::pow(n, degree) + k);
      holds = logs[i] >= rhs - 1e-12;
    }
    if (holds) return true;
  }
  return false;
}

std::vector<GrowthConstant> growth_constants() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return {
      {"2^(1/5)", std::pow(2.0, 0.2), "early general lower bound on c for primitive groups"},
      {"c_1.324", 1.324, "improved general lower bound on c"},
      {"sqrt(t)", std::sqrt(2.483), "square root of the binary tree growth rate; five-reducts threshold"},
      {"phi", phi, "golden ratio; growth of the order with blocks of size 2"},
      {"2", 2.0, "growth of the local order; upper limit for c"},
      {"t", 2.483, "growth rate lim t_n^(1/n) of binary tree counts"},
  };
}

}  // namespace oligo
