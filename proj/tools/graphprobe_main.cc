// Copyright 2026 The Authors.
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

// graphprobe: generate instances, verify and reconstruct hidden graphs
// through a distance oracle, run scaling sweeps and the acceptance suite.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphprobe/acceptance.h"
#include "graphprobe/decomposition.h"
#include "graphprobe/gen.h"
#include "graphprobe/harness.h"
#include "graphprobe/io.h"

namespace graphprobe {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Input problems detected after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

int ParseInt(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError("bad " + what + ": '" + text + "'");
  }
  return v;
}

Edge ParseEdge(const std::string& text) {
  const std::vector<std::string> parts = SplitCommas(text);
  if (parts.size() != 2) throw UsageError("expected a,b for --chord");
  return Edge::Canonical(ParseInt(parts[0], "vertex"),
                         ParseInt(parts[1], "vertex"));
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text << '\n';
  if (!out) throw std::runtime_error("cannot write " + path);
}

Graph ReadGraphOrThrow(const std::string& path) {
  try {
    return ReadEdgeListFile(path);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct GenArgs {
  std::string family;
  int n = 0;
  int delta = 4;
  int k = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string chord;
};

int RunGen(const GenArgs& a) {
  GenSpec spec;
  const std::optional<Family> family = ParseFamily(a.family);
  if (!family) throw UsageError("unknown family '" + a.family + "'");
  spec.family = *family;
  spec.n = a.n;
  spec.max_degree = a.delta;
  spec.k = a.k;
  spec.seed = a.seed;
  if (!a.chord.empty()) {
    if (spec.family != Family::kStarAdversary) {
      throw UsageError("--chord applies to star-adversary only");
    }
    spec.chord = ParseEdge(a.chord);
  }
  Generated gen;
  try {
    gen = Generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  WriteEdgeListFile(a.out, gen.graph);
  WriteTextFile(a.out + ".json", SidecarJson(gen));
  if (gen.decomposition) {
    WriteDecompositionFile(a.out + ".td", *gen.decomposition);
  }
  std::cout << SidecarJson(gen) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string hidden;
  std::string candidate;
  std::string algorithm = "greedy-verify";
  std::string td;
  std::string mode = "distance";
  std::uint64_t seed = 0;
  std::optional<std::int64_t> budget;
  std::int64_t time_limit_ms = 120000;
  std::string log;
};

// Short aliases accepted next to the full algorithm names.
Algorithm ParseVerifier(const std::string& name) {
  const std::string full = name == "greedy"      ? "greedy-verify"
                           : name == "subgraph"  ? "verify-subgraph"
                           : name == "chordal"   ? "verify-chordal"
                           : name == "treewidth" ? "verify-treewidth"
                                                 : name;
  const std::optional<Algorithm> a = ParseAlgorithm(full);
  if (!a || !IsVerification(*a)) {
    throw UsageError("unknown verification algorithm '" + name + "'");
  }
  return *a;
}

Algorithm ParseReconstructor(const std::string& name) {
  const std::string full = name == "greedy"    ? "greedy-reconstruct"
                           : name == "chordal" ? "reconstruct-chordal"
                                               : name;
  const std::optional<Algorithm> a = ParseAlgorithm(full);
  if (!a || IsVerification(*a)) {
    throw UsageError("unknown reconstruction algorithm '" + name + "'");
  }
  return *a;
}

int RunVerify(const VerifyArgs& a) {
  RunSpec spec;
  spec.algorithm = ParseVerifier(a.algorithm);
  if (a.mode == "path") {
    spec.mode = OracleMode::kPath;
  } else if (a.mode != "distance") {
    throw UsageError("--mode must be distance or path");
  }
  const Graph hidden = ReadGraphOrThrow(a.hidden);
  const Graph candidate = ReadGraphOrThrow(a.candidate);
  if (hidden.num_vertices() != candidate.num_vertices()) {
    throw UsageError("hidden and candidate have different vertex counts");
  }
  std::optional<TreeDecomposition> td;
  if (!a.td.empty()) {
    if (spec.algorithm != Algorithm::kVerifyTreewidth) {
      throw UsageError("--td applies to treewidth verification only");
    }
    td = ReadDecompositionFile(a.td);
    std::string why;
    if (!IsValidDecomposition(*td, candidate, &why)) {
      throw UsageError("invalid decomposition: " + why);
    }
  }
  if (spec.algorithm == Algorithm::kVerifyChordal && !IsChordal(candidate)) {
    throw UsageError("verify-chordal needs a chordal candidate");
  }
  spec.gen.n = candidate.num_vertices();
  spec.gen.max_degree = candidate.MaxDegree();
  spec.gen.seed = a.seed;
  spec.budget = a.budget;
  spec.time_limit_ms = a.time_limit_ms;
  spec.log_csv_path = a.log;
  ExperimentRecord rec =
      RunInstance(spec, hidden, candidate, td ? &*td : nullptr,
                  td ? std::optional<int>(td->width()) : std::nullopt);
  rec.family = "file";
  std::cout << RecordJson(rec) << '\n';
  return rec.error.empty() ? kExitOk : kExitFailed;
}

struct ReconstructArgs {
  std::string hidden;
  std::string algorithm = "greedy-reconstruct";
  std::optional<int> delta;
  std::uint64_t seed = 0;
  std::string out;
  std::optional<std::int64_t> n0;
  std::optional<double> c1;
  std::optional<std::int64_t> budget;
  std::int64_t time_limit_ms = 120000;
  std::string log;
};

int RunReconstruct(const ReconstructArgs& a) {
  RunSpec spec;
  spec.algorithm = ParseReconstructor(a.algorithm);
  const Graph hidden = ReadGraphOrThrow(a.hidden);
  if (spec.algorithm == Algorithm::kReconstructChordal) {
    if (!IsChordal(hidden)) {
      throw UsageError("reconstruct-chordal needs a chordal hidden graph");
    }
    const int delta = a.delta.value_or(hidden.MaxDegree());
    if (delta < 1 || delta > 24) throw UsageError("--delta must be in [1, 24]");
  }
  spec.gen.n = hidden.num_vertices();
  spec.gen.max_degree = a.delta.value_or(hidden.MaxDegree());
  spec.gen.seed = a.seed;
  spec.chordal_n0 = a.n0;
  spec.chordal_c1 = a.c1;
  spec.budget = a.budget;
  spec.time_limit_ms = a.time_limit_ms;
  spec.log_csv_path = a.log;
  spec.keep_graph = !a.out.empty();
  ExperimentRecord rec = RunInstance(spec, hidden, Graph(0), nullptr);
  rec.family = "file";
  if (!a.out.empty() && rec.reconstructed) {
    WriteEdgeListFile(a.out, *rec.reconstructed);
  }
  std::cout << RecordJson(rec) << '\n';
  return rec.correct ? kExitOk : kExitFailed;
}

struct ScalingArgs {
  std::string config;
  std::string out_dir = "scaling_out";
};

int RunScalingCommand(const ScalingArgs& a) {
  ScalingConfig config;
  try {
    config = LoadScalingConfig(a.config);
  } catch (const std::exception& e) {
    throw UsageError(a.config + ": " + e.what());
  }
  const ScalingResult result = RunScaling(config, WorkerCount());
  WriteScalingOutputs(a.out_dir, result);
  std::cout << SummaryJson(result) << '\n';
  for (const ExperimentRecord& r : result.records) {
    if (!r.correct) return kExitFailed;
  }
  return kExitOk;
}

int RunAccept(const std::string& only) {
  AcceptanceOptions options;
  for (const std::string& id : SplitCommas(only)) {
    const int v = ParseInt(id, "criterion id");
    if (v < 1 || v > kNumCriteria) {
      throw UsageError("criterion ids run from 1 to " +
                       std::to_string(kNumCriteria));
    }
    options.only.push_back(v);
  }
  options.workers = WorkerCount();
  options.on_result = [](const CriterionResult& r) {
    std::cout << FormatCriterion(r) << std::endl;
  };
  const std::vector<CriterionResult> results = RunAcceptance(options);
  int passed = 0;
  for (const CriterionResult& r : results) passed += r.passed ? 1 : 0;
  std::cout << "acceptance: " << passed << "/" << results.size()
            << " criteria passed\n";
  return passed == static_cast<int>(results.size()) ? kExitOk : kExitFailed;
}

int Main(int argc, char** argv) {
  CLI::App app{"Graph verification and reconstruction with a distance oracle"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a hidden graph");
  gen_cmd->add_option("--family", gen.family, "Graph family")->required();
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required();
  gen_cmd->add_option("--delta", gen.delta, "Maximum degree");
  gen_cmd->add_option("--k", gen.k, "Width bound for partial k-trees");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Edge list output path")->required();
  gen_cmd->add_option("--chord", gen.chord, "Star adversary chord a,b");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a candidate against a hidden graph");
  verify_cmd->add_option("--hidden", verify.hidden, "Hidden edge list")
      ->required();
  verify_cmd->add_option("--candidate", verify.candidate, "Candidate edge list")
      ->required();
  verify_cmd->add_option("--algorithm", verify.algorithm,
                         "greedy, subgraph, chordal or treewidth");
  verify_cmd->add_option("--td", verify.td,
                         "Tree decomposition of the candidate");
  verify_cmd->add_option("--mode", verify.mode, "distance or path");
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_option("--budget", verify.budget, "Query budget");
  verify_cmd->add_option("--time-limit-ms", verify.time_limit_ms,
                         "Wall clock limit");
  verify_cmd->add_option("--log", verify.log, "Write the query log as CSV");

  ReconstructArgs rec;
  CLI::App* rec_cmd =
      app.add_subcommand("reconstruct", "Recover a hidden graph by queries");
  rec_cmd->add_option("--hidden", rec.hidden, "Hidden edge list")->required();
  rec_cmd->add_option("--algorithm", rec.algorithm,
                      "greedy, chordal or all-pairs");
  rec_cmd->add_option("--delta", rec.delta,
                      "Degree bound (default: the hidden maximum degree)");
  rec_cmd->add_option("--seed", rec.seed, "Random seed");
  rec_cmd->add_option("--out", rec.out, "Write the recovered edge list");
  rec_cmd->add_option("--n0", rec.n0, "Chordal base case size override");
  rec_cmd->add_option("--c1", rec.c1, "Chordal sampling constant override");
  rec_cmd->add_option("--budget", rec.budget, "Query budget");
  rec_cmd->add_option("--time-limit-ms", rec.time_limit_ms, "Wall clock limit");
  rec_cmd->add_option("--log", rec.log, "Write the query log as CSV");

  ScalingArgs scaling;
  CLI::App* scaling_cmd =
      app.add_subcommand("scaling", "Run a query-count scaling sweep");
  scaling_cmd->add_option("--config", scaling.config, "YAML sweep config")
      ->required();
  scaling_cmd->add_option("--out-dir", scaling.out_dir, "Output directory");

  std::string only;
  CLI::App* accept_cmd =
      app.add_subcommand("accept", "Run the acceptance criteria");
  accept_cmd->add_option("--only", only, "Comma separated criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen);
    if (*verify_cmd) return RunVerify(verify);
    if (*rec_cmd) return RunReconstruct(rec);
    if (*scaling_cmd) return RunScalingCommand(scaling);
    if (*accept_cmd) return RunAccept(only);
  } catch (const UsageError& e) {
    std::cerr << "graphprobe: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "graphprobe: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "graphprobe: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace graphprobe

int main(int argc, char** argv) { return graphprobe::Main(argc, argv); }
