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

#include "gamesep/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

#include "gamesep/errors.hpp"
#include "gamesep/gamegen.hpp"
#include "gamesep/mrf.hpp"
#include "gamesep/potential.hpp"
#include "gamesep/separability.hpp"

#ifndef GAMESEP_VERSION
#define GAMESEP_VERSION "unknown"
#endif

namespace gamesep {
namespace {

struct Flags {
  bool exact = false;
  bool as_float = false;
  double tolerance = kDefaultTolerance;
  std::string reference;
  std::string out;
};

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void Emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidArgument("cannot write " + path);
  file << j.dump(2) << "\n";
}

void EmitText(const std::string& text, const std::string& path,
              std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidArgument("cannot write " + path);
  file << text;
}

AnyGame LoadGame(const std::string& path, const Flags& flags,
                 const SizeLimits& limits) {
  const Json j = ReadJsonFile(path);
  AnyGame game = [&] {
    try {
      return GameFromJson(j, limits);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
  }();
  if (flags.as_float && std::holds_alternative<Game<Rational>>(game))
    return ToFloat(std::get<Game<Rational>>(game));
  if (flags.exact && std::holds_alternative<Game<double>>(game))
    throw ParseError(path + " holds float scalars; exact mode rejects them");
  return game;
}

SeparabilityOptions Options(const StrategySpace& space, const Flags& flags) {
  SeparabilityOptions options;
  options.tolerance = flags.tolerance;
  if (flags.reference.empty()) return options;
  Profile z;
  std::stringstream in(flags.reference);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      z.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad --reference-profile entry \"" + item + "\"");
    }
  }
  if (static_cast<int>(z.size()) != space.num_players())
    throw ParseError("--reference-profile needs one action per player");
  for (int i = 0; i < space.num_players(); ++i)
    if (z[i] < 0 || z[i] >= space.actions(i))
      throw ParseError("--reference-profile action out of range for player " +
                       std::to_string(i));
  options.reference = space.Encode(z);
  return options;
}

Json FlagsJson(const Flags& flags, std::string_view scalar) {
  Json j = Json::object();
  j["scalar"] = scalar;
  j["tolerance"] = flags.tolerance;
  j["reference_profile"] = flags.reference;
  return j;
}

template <typename Scalar>
std::string_view ScalarName(const Game<Scalar>&) {
  return ScalarTraits<Scalar>::kName;
}

Json ProfileJson(const StrategySpace& space, ProfileIndex x) {
  return Json(space.Decode(x));
}

Json PathJson(const StrategySpace& space, const std::vector<ProfileIndex>& p) {
  Json out = Json::array();
  for (ProfileIndex x : p) out.push_back(ProfileJson(space, x));
  return out;
}

template <typename Scalar>
Json CertificateJson(const Game<Scalar>& u,
                     const PotentialCertificate<Scalar>& cert) {
  Json j = Json::object();
  j["is_potential"] = cert.is_potential;
  if (cert.potential) {
    j["potential"] = TableToJson(cert.potential->values);
    return j;
  }
  if (cert.violated_edge) {
    const auto& e = *cert.violated_edge;
    j["violated_edge"] = Json{{"player", e.player},
                              {"from", ProfileJson(u.space(), e.from)},
                              {"to", ProfileJson(u.space(), e.to)}};
  }
  j["edge_cycle"] = PathJson(u.space(), cert.edge_cycle);
  j["four_cycle"] = PathJson(u.space(), cert.four_cycle);
  j["circulation"] = ScalarToJson(cert.circulation);
  return j;
}

template <typename Scalar>
bool IsZeroGame(const Game<Scalar>& u, double tolerance) {
  for (const auto& t : u.utilities())
    if (!IsZeroTable(t, tolerance, 1.0)) return false;
  return true;
}

template <typename Scalar>
AnalysisReport Analyze(const Game<Scalar>& u, const Flags& flags) {
  const auto options = Options(u.space(), flags);
  AnalysisReport r;
  r.version = GAMESEP_VERSION;
  r.scalar = ScalarTraits<Scalar>::kName;
  r.flags = FlagsJson(flags, r.scalar);
  r.input_digest = Digest(ToJson(u).dump());
  r.minimal_fdh = MinimalFdh(u, options);
  r.minimal_graph = MinimalGraph(u, options);
  const auto cert = DetectPotential(u, flags.tolerance);
  r.is_potential = cert.is_potential;
  if (cert.is_potential) {
    r.potential_function = TableToJson(cert.potential->values);
    r.potential_structure = VerifyPotentialStructure(u, options);
  }
  const auto d = Decompose(u, flags.tolerance);
  r.decomposition = CheckDecomposition(u, d, flags.tolerance);
  r.potential_component_zero = IsZeroGame(d.potential, flags.tolerance);
  r.harmonic_component_zero = IsZeroGame(d.harmonic, flags.tolerance);
  r.component_separability = VerifyComponentSeparability(u, d, options);
  return r;
}

int CmdAnalyze(const std::string& path, const Flags& flags, bool text,
               bool timing, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto game = LoadGame(path, flags, LimitsFromEnvironment());
  AnalysisReport r =
      std::visit([&](const auto& u) { return Analyze(u, flags); }, game);
  if (timing)
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (text)
    EmitText(ToText(r), flags.out, out);
  else
    Emit(ToJson(r), flags.out, out);
  // A failed theorem check means the inputs broke an invariant.
  const bool ok = r.decomposition.all() && r.component_separability &&
                  r.potential_structure.value_or(true);
  return ok ? 0 : kExitInvariant;
}

int CmdMinimalFdh(const std::string& path, const Flags& flags, bool terms,
                  std::ostream& out) {
  const auto game = LoadGame(path, flags, LimitsFromEnvironment());
  const Json j = std::visit(
      [&](const auto& u) {
        const auto options = Options(u.space(), flags);
        const FdhGraph f = MinimalFdh(u, options);
        if (!terms) return ToJson(f);
        Json both = Json::object();
        both["minimal_fdh"] = ToJson(f);
        both["terms"] = ToJson(ExtractFTerms(u, f, options));
        return both;
      },
      game);
  Emit(j, flags.out, out);
  return 0;
}

int CmdPotential(const std::string& path, const Flags& flags,
                 std::ostream& out) {
  const auto game = LoadGame(path, flags, LimitsFromEnvironment());
  const Json j = std::visit(
      [&](const auto& u) {
        return CertificateJson(u, DetectPotential(u, flags.tolerance));
      },
      game);
  Emit(j, flags.out, out);
  return 0;
}

int CmdDecompose(const std::string& path, const std::string& local,
                 const std::string& prefix, const Flags& flags,
                 std::ostream& out) {
  const auto game = LoadGame(path, flags, LimitsFromEnvironment());
  std::optional<FdhGraph> f;
  if (!local.empty()) {
    try {
      f = FdhGraphFromJson(ReadJsonFile(local));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
  }
  const Json report = std::visit(
      [&](const auto& u) {
        const auto options = Options(u.space(), flags);
        const auto d = f ? DecomposeLocal(u, *f, options)
                         : Decompose(u, flags.tolerance);
        const auto checks = CheckDecomposition(u, d, flags.tolerance);
        const bool separable = VerifyComponentSeparability(u, d, options);
        const std::string names[3] = {prefix + ".potential.json",
                                      prefix + ".harmonic.json",
                                      prefix + ".nonstrategic.json"};
        Emit(ToJson(d.potential), names[0], out);
        Emit(ToJson(d.harmonic), names[1], out);
        Emit(ToJson(d.nonstrategic), names[2], out);
        Json j = Json::object();
        j["version"] = GAMESEP_VERSION;
        j["flags"] = FlagsJson(flags, ScalarName(u));
        j["local"] = local;
        j["files"] = {{"potential", names[0]},
                      {"harmonic", names[1]},
                      {"nonstrategic", names[2]}};
        j["potential_function"] = TableToJson(d.potential_function);
        j["checks"] = {{"reconstructs", checks.reconstructs},
                       {"potential_is_potential", checks.potential_is_potential},
                       {"harmonic_is_harmonic", checks.harmonic_is_harmonic},
                       {"potential_normalized", checks.potential_normalized},
                       {"harmonic_normalized", checks.harmonic_normalized},
                       {"remainder_nonstrategic",
                        checks.remainder_nonstrategic},
                       {"component_separability", separable}};
        j["ok"] = checks.all() && separable;
        return j;
      },
      game);
  Emit(report, flags.out, out);
  return report["ok"].get<bool>() ? 0 : kExitInvariant;
}

int CmdMrf(const std::string& dist_path, const std::string& graph_path,
           const Flags& flags, std::ostream& out, std::ostream& err) {
  LoadedDistribution loaded = [&] {
    const Json j = ReadJsonFile(dist_path);
    try {
      return DistributionFromJson(j, LimitsFromEnvironment());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
  }();
  if (loaded.renormalized)
    err << "warning: " << dist_path
        << " did not sum to one and was renormalized\n";
  const DiGraph g = [&] {
    try {
      return DiGraphFromJson(ReadJsonFile(graph_path));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
  }();
  const double tol = flags.tolerance == kDefaultTolerance ? kMarkovTolerance
                                                          : flags.tolerance;
  Emit(FactorsToJson(HcFactorize(loaded.table, g, tol)), flags.out, out);
  return 0;
}

struct GenParams {
  std::string variant;
  int n = 3;
  std::string cost = "1/2";
  std::string bonus = "1";
  std::string graph = "ring";
  std::string zeta;
  std::string structure;
  int actions = 2;
  std::uint64_t seed = 0;
  bool generic = false;
};

DiGraph GraphFromName(const std::string& name, int n) {
  if (name == "ring") return RingGraph(n);
  if (name == "line") return LineGraph(n);
  if (name == "complete") return CompleteGraph(n);
  if (name == "empty") return EmptyGraph(n);
  try {
    return DiGraphFromJson(ReadJsonFile(name));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

template <typename Scalar>
Scalar ScalarFlag(const std::string& text) {
  if constexpr (ScalarTraits<Scalar>::kExact)
    return ParseRational(text);
  else
    return ParseDouble(text);
}

template <typename Scalar>
Matrix<Scalar> ZetaFlag(const std::string& text) {
  if (text.empty()) return SignZeta<Scalar>();
  std::vector<Scalar> v;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    v.push_back(ScalarFlag<Scalar>(item));
  if (v.size() != 4) throw ParseError("--zeta needs four entries");
  Matrix<Scalar> z(2, 2);
  z << v[0], v[1], v[2], v[3];
  return z;
}

template <typename Scalar>
Game<Scalar> Generate(const GenParams& p, const SizeLimits& limits) {
  // Guard the size before tabulating anything.
  if (p.variant != "matching-pennies")
    StrategySpace(std::vector<int>(std::max(p.n, 1), p.actions), limits);
  const auto& v = p.variant;
  if (v == "coordination")
    return Coordination(GraphFromName(p.graph, p.n), ZetaFlag<Scalar>(p.zeta));
  if (v == "best-shot")
    return BestShot(GraphFromName(p.graph, p.n), ScalarFlag<Scalar>(p.cost));
  if (v == "best-shot-ring")
    return BestShotRing(p.n, ScalarFlag<Scalar>(p.cost));
  if (v == "two-level")
    return TwoLevelCoordination(GraphFromName(p.graph, p.n),
                                ZetaFlag<Scalar>(p.zeta),
                                ScalarFlag<Scalar>(p.bonus));
  if (v == "strong-coordination")
    return StrongCoordination<Scalar>(GraphFromName(p.graph, p.n));
  if (v == "matching-pennies") return MatchingPennies<Scalar>();
  const StrategySpace space(std::vector<int>(p.n, p.actions), limits);
  SplitMix64 rng(p.seed);
  SplitMix64 structure_rng = rng.Split();
  auto load = [&](auto reader) {
    try {
      return reader(ReadJsonFile(p.structure));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
  };
  if (v == "planted") {
    const FdhGraph f =
        p.structure.empty()
            ? RandomFdhGraph(p.n, 1, 2, structure_rng)
            : load([](const Json& j) { return FdhGraphFromJson(j); });
    return Planted<Scalar>(space, f, rng.Next(), p.generic);
  }
  if (v == "planted-potential") {
    const HGraph h =
        p.structure.empty()
            ? RandomHGraph(p.n, p.n, 3, structure_rng)
            : load([](const Json& j) { return HGraphFromJson(j); });
    return PlantedPotential<Scalar>(space, h, rng.Next(), p.generic);
  }
  throw InvalidArgument("unknown variant \"" + v + "\"");
}

int CmdGen(const GenParams& p, const Flags& flags, std::ostream& out) {
  const SizeLimits limits = LimitsFromEnvironment();
  const Json j = flags.as_float ? ToJson(Generate<double>(p, limits))
                                : ToJson(Generate<Rational>(p, limits));
  Emit(j, flags.out, out);
  return 0;
}

void AddCommonFlags(CLI::App* cmd, Flags& flags) {
  auto* exact = cmd->add_flag("--exact", flags.exact,
                              "Exact rational arithmetic (reject float input)");
  auto* fl = cmd->add_flag("--float", flags.as_float,
                           "Floating-point arithmetic");
  exact->excludes(fl);
  cmd->add_option("--tolerance", flags.tolerance,
                  "Float-mode zero tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--reference-profile", flags.reference,
                  "Reference profile z as comma-separated actions");
  cmd->add_option("--out", flags.out, "Output file (stdout when omitted)");
}

}  // namespace

std::string Digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) out[k] = kHex[h & 0xf];
  return out;
}

SizeLimits LimitsFromEnvironment() {
  SizeLimits limits;
  const char* value = std::getenv("GAMESEP_MAX_PROFILES");
  if (value == nullptr || *value == '\0') return limits;
  const std::string_view text(value);
  ProfileIndex parsed = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), parsed);
  if (ec != std::errc() || ptr != text.data() + text.size() || parsed <= 0)
    throw ParseError("GAMESEP_MAX_PROFILES must be a positive integer");
  limits.max_profiles = parsed;
  return limits;
}

Json ToJson(const AnalysisReport& r) {
  Json j = Json::object();
  j["version"] = r.version;
  j["flags"] = r.flags;
  j["input_digest"] = r.input_digest;
  j["scalar"] = r.scalar;
  j["minimal_fdh"] = ToJson(r.minimal_fdh);
  j["minimal_graph"] = ToJson(r.minimal_graph);
  j["is_potential"] = r.is_potential;
  j["potential_function"] =
      r.potential_function ? *r.potential_function : Json(nullptr);
  j["potential_structure"] =
      r.potential_structure ? Json(*r.potential_structure) : Json(nullptr);
  const auto& c = r.decomposition;
  j["decomposition"] = {{"reconstructs", c.reconstructs},
                        {"potential_is_potential", c.potential_is_potential},
                        {"harmonic_is_harmonic", c.harmonic_is_harmonic},
                        {"potential_normalized", c.potential_normalized},
                        {"harmonic_normalized", c.harmonic_normalized},
                        {"remainder_nonstrategic", c.remainder_nonstrategic},
                        {"potential_zero", r.potential_component_zero},
                        {"harmonic_zero", r.harmonic_component_zero}};
  j["component_separability"] = r.component_separability;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

AnalysisReport ReportFromJson(const Json& j) {
  try {
    AnalysisReport r;
    r.version = j.at("version").get<std::string>();
    r.flags = j.at("flags");
    r.input_digest = j.at("input_digest").get<std::string>();
    r.scalar = j.at("scalar").get<std::string>();
    r.minimal_fdh = FdhGraphFromJson(j.at("minimal_fdh"));
    r.minimal_graph = DiGraphFromJson(j.at("minimal_graph"));
    r.is_potential = j.at("is_potential").get<bool>();
    if (!j.at("potential_function").is_null())
      r.potential_function = j.at("potential_function");
    if (!j.at("potential_structure").is_null())
      r.potential_structure = j.at("potential_structure").get<bool>();
    const Json& d = j.at("decomposition");
    auto& c = r.decomposition;
    c.reconstructs = d.at("reconstructs").get<bool>();
    c.potential_is_potential = d.at("potential_is_potential").get<bool>();
    c.harmonic_is_harmonic = d.at("harmonic_is_harmonic").get<bool>();
    c.potential_normalized = d.at("potential_normalized").get<bool>();
    c.harmonic_normalized = d.at("harmonic_normalized").get<bool>();
    c.remainder_nonstrategic = d.at("remainder_nonstrategic").get<bool>();
    r.potential_component_zero = d.at("potential_zero").get<bool>();
    r.harmonic_component_zero = d.at("harmonic_zero").get<bool>();
    r.component_separability = j.at("component_separability").get<bool>();
    if (j.contains("seconds")) r.seconds = j.at("seconds").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string ToText(const AnalysisReport& r) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream s;
  s << "gamesep " << r.version << " analysis\n";
  s << "  input digest:            " << r.input_digest << "\n";
  s << "  flags:                   " << r.flags.dump() << "\n";
  s << "  minimal FDH-graph:       " << ToString(r.minimal_fdh) << "\n";
  s << "  minimal graph:           " << ToString(r.minimal_graph) << "\n";
  s << "  potential game:          " << yes(r.is_potential) << "\n";
  if (r.potential_function)
    s << "  potential function:      " << r.potential_function->dump() << "\n";
  if (r.potential_structure)
    s << "  potential structure:     " << yes(*r.potential_structure) << "\n";
  const auto& c = r.decomposition;
  s << "  decomposition valid:     " << yes(c.all()) << "\n";
  s << "    potential part zero:   " << yes(r.potential_component_zero) << "\n";
  s << "    harmonic part zero:    " << yes(r.harmonic_component_zero) << "\n";
  s << "  component separability:  " << yes(r.component_separability) << "\n";
  if (r.seconds) s << "  seconds:                 " << *r.seconds << "\n";
  return s.str();
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Separability analysis of finite games", "gamesep"};
  app.set_version_flag("--version", GAMESEP_VERSION);
  app.require_subcommand(1);

  Flags flags;
  std::string input, second, local, prefix = "decomposition";
  bool text = false, timing = false, terms = false;
  GenParams gen;

  auto* analyze = app.add_subcommand("analyze", "Full structural report");
  analyze->add_option("game", input, "Game JSON file")->required();
  analyze->add_flag("--text", text, "Plain-text report");
  analyze->add_flag("--timing", timing, "Include wall-clock seconds");
  AddCommonFlags(analyze, flags);

  auto* fdh = app.add_subcommand("minimal-fdh", "Minimal FDH-graph");
  fdh->add_option("game", input, "Game JSON file")->required();
  fdh->add_flag("--terms", terms, "Also emit the separable terms");
  AddCommonFlags(fdh, flags);

  auto* pot = app.add_subcommand("potential", "Potential detection");
  pot->add_option("game", input, "Game JSON file")->required();
  AddCommonFlags(pot, flags);

  auto* dec = app.add_subcommand("decompose", "Potential/harmonic split");
  dec->add_option("game", input, "Game JSON file")->required();
  dec->add_option("--local", local,
                  "FDH-graph JSON: decompose term by term on it");
  dec->add_option("--prefix", prefix,
                  "Component files are <prefix>.{potential,harmonic,"
                  "nonstrategic}.json");
  AddCommonFlags(dec, flags);

  auto* mrf = app.add_subcommand("mrf-factorize", "Clique factorization");
  mrf->add_option("distribution", input, "Distribution JSON file")
      ->required();
  mrf->add_option("graph", second, "Undirected graph JSON file")->required();
  AddCommonFlags(mrf, flags);

  auto* g = app.add_subcommand("gen", "Generate a game");
  g->add_option("variant", gen.variant,
                "coordination | best-shot | best-shot-ring | two-level | "
                "strong-coordination | matching-pennies | planted | "
                "planted-potential")
      ->required()
      ->check(CLI::IsMember({"coordination", "best-shot", "best-shot-ring",
                             "two-level", "strong-coordination",
                             "matching-pennies", "planted",
                             "planted-potential"}));
  g->add_option("--n", gen.n, "Number of players")->check(CLI::Range(1, 64));
  g->add_option("--c", gen.cost, "Best-shot cost in [0, 1]");
  g->add_option("--L", gen.bonus, "Two-level bonus");
  g->add_option("--graph", gen.graph,
                "ring | line | complete | empty | graph JSON file");
  g->add_option("--zeta", gen.zeta, "Pairwise table z00,z01,z10,z11");
  g->add_option("--structure", gen.structure,
                "Planted FDH-graph or H-graph JSON (random when omitted)");
  g->add_option("--actions", gen.actions, "Actions per player (planted)")
      ->check(CLI::PositiveNumber);
  g->add_option("--seed", gen.seed, "PRNG seed");
  g->add_flag("--generic", gen.generic, "Redraw until the structure is tight");
  AddCommonFlags(g, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << GAMESEP_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*analyze) return CmdAnalyze(input, flags, text, timing, out);
    if (*fdh) return CmdMinimalFdh(input, flags, terms, out);
    if (*pot) return CmdPotential(input, flags, out);
    if (*dec) return CmdDecompose(input, local, prefix, flags, out);
    if (*mrf) return CmdMrf(input, second, flags, out, err);
    if (*g) return CmdGen(gen, flags, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what()
        << " (set GAMESEP_MAX_PROFILES to raise the limit)\n";
    return kExitSizeGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace gamesep
