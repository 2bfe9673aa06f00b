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

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oligo {

/// Base of every error raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSubsetError : public Error {
 public:
  using Error::Error;
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Bad sampler size, unknown catalogue id, malformed input value.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Enumeration budget, memory guard or integer width exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A property the algorithms guarantee was observed to fail; always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input or a document not matching the expected schema.
class FormatError : public Error {
 public:
  using Error::Error;
};

class InvalidFragmentPairError : public Error {
 public:
  using Error::Error;
};

class InconsistentFragmentsError : public Error {
 public:
  using Error::Error;
};

/// Profile counts still drifting after the retry size.
class SaturationError : public Error {
 public:
  SaturationError(std::size_t n, std::size_t size_a, std::uint64_t count_a,
                  std::size_t size_b, std::uint64_t count_b)
      : Error("saturation failure at n=" + std::to_string(n) + ": " +
              std::to_string(count_a) + " classes at size " +
              std::to_string(size_a) + " vs " + std::to_string(count_b) +
              " at size " + std::to_string(size_b)),
        n_(n),
        size_a_(size_a),
        count_a_(count_a),
        size_b_(size_b),
        count_b_(count_b) {}

  std::size_t n() const { return n_; }
  std::size_t size_a() const { return size_a_; }
  std::uint64_t count_a() const { return count_a_; }
  std::size_t size_b() const { return size_b_; }
  std::uint64_t count_b() const { return count_b_; }

 private:
  std::size_t n_;
  std::size_t size_a_;
  std::uint64_t count_a_;
  std::size_t size_b_;
  std::uint64_t count_b_;
};

}  // namespace oligo
