// Copyright 2026 The gamesep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMESEP_ERRORS_HPP_
#define GAMESEP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gamesep {

// Malformed input: bad literals, schema violations, inconsistent sizes.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (mismatched node counts, directed graph
// where an undirected one is required, non-separable input, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dense table or clique enumeration would exceed the configured size guard.
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A result failed one of its own postconditions.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gamesep

#endif  // GAMESEP_ERRORS_HPP_
