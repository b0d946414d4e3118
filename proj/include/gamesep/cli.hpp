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

// Command-line front end. Exit codes:
//   0  success
//   1  usage error
//   2  malformed input (unreadable file, bad JSON, schema violation)
//   3  invariant violation or module error
//   4  size guard exceeded (override with GAMESEP_MAX_PROFILES)

#ifndef GAMESEP_CLI_HPP_
#define GAMESEP_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>

#include "gamesep/decomposition.hpp"
#include "gamesep/hypergraph.hpp"
#include "gamesep/json_io.hpp"

namespace gamesep {

inline constexpr int kExitUsage = 1;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitSizeGuard = 4;

struct AnalysisReport {
  std::string version;
  Json flags = Json::object();
  // FNV-1a 64 of the canonical game JSON, hex.
  std::string input_digest;
  std::string scalar;
  FdhGraph minimal_fdh{1};
  DiGraph minimal_graph{1};
  bool is_potential = false;
  // φ table with φ(all-zeros) = 0, present iff is_potential.
  std::optional<Json> potential_function;
  // Present iff is_potential.
  std::optional<bool> potential_structure;
  DecompositionChecks decomposition;
  bool potential_component_zero = false;
  bool harmonic_component_zero = false;
  bool component_separability = false;
  std::optional<double> seconds;

  friend bool operator==(const AnalysisReport&,
                         const AnalysisReport&) = default;
};

Json ToJson(const AnalysisReport& r);
// Throws ParseError.
AnalysisReport ReportFromJson(const Json& j);
std::string ToText(const AnalysisReport& r);

// FNV-1a 64-bit hash as 16 lowercase hex digits.
std::string Digest(const std::string& bytes);

// Size limits with GAMESEP_MAX_PROFILES applied. Throws ParseError when the
// variable is set but not a positive integer.
SizeLimits LimitsFromEnvironment();

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace gamesep

#endif  // GAMESEP_CLI_HPP_
