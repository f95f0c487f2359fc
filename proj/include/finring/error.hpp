// Copyright 2026 The finring Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FINRING_ERROR_HPP_
#define FINRING_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace finring {

// Caller passed something outside an operation's domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A ring, pairing or operator could not be assembled from a well-formed
// request (reducible modulus, unsupported constructor, failed axiom check).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds the supported desk-scale limits.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed ring-spec text. `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace finring

#endif  // FINRING_ERROR_HPP_
