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

#ifndef GRAPHPROBE_HARNESS_H_
#define GRAPHPROBE_HARNESS_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "graphprobe/gen.h"
#include "graphprobe/verify.h"

namespace graphprobe {

enum class Algorithm {
  kGreedyVerify,
  kVerifySubgraph,
  kVerifyChordal,
  kVerifyTreewidth,
  kGreedyReconstruct,
  kReconstructChordal,
  // Baseline: Query(V, V) and read off the distance-1 pairs.
  kAllPairs,
};

std::string_view AlgorithmName(Algorithm a);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
bool IsVerification(Algorithm a);

enum class Fault {
  kNone,
  // The hidden graph gets one extra edge the candidate lacks.
  kPlantedEdge,
};

std::string_view FaultName(Fault f);
std::optional<Fault> ParseFault(std::string_view name);

struct RunSpec {
  Algorithm algorithm = Algorithm::kGreedyReconstruct;
  GenSpec gen;
  Fault fault = Fault::kNone;
  OracleMode mode = OracleMode::kDistance;  // greedy verification only
  // Counted-query cap; 4 n^2 when unset.
  std::optional<std::int64_t> budget;
  std::int64_t time_limit_ms = 120000;
  std::optional<std::int64_t> chordal_n0;
  std::optional<double> chordal_c1;
  std::optional<RecursionParams> recursion;
  // When set, the session keeps its query log and writes it here as CSV.
  std::string log_csv_path;
  // Keep the reconstructed graph in the record.
  bool keep_graph = false;
};

// Raised before any query when algorithm and family do not fit together.
class IncompatibleRun : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentRecord {
  std::string series;  // scaling runs only
  std::string algorithm;
  std::string family;
  int n = 0;
  int max_degree = 0;
  int k = 0;
  std::optional<int> width;
  std::uint64_t seed = 0;
  std::string fault;
  std::int64_t queries_cached = 0;
  std::int64_t queries_raw = 0;
  // "yes"/"no" for verification, "reconstructed" otherwise, "error" when
  // the run aborted.
  std::string verdict;
  std::int64_t edges_found = 0;
  // Decided against the generator's hidden graph, never the algorithm.
  bool correct = false;
  double elapsed_ms = 0;
  std::string error;
  std::map<std::string, std::int64_t> stats;
  std::optional<Mismatch> mismatch;    // first disagreeing answer
  std::optional<Graph> reconstructed;  // with RunSpec::keep_graph
};

// Throws IncompatibleRun when the pair cannot run.
void CheckCompatible(const RunSpec& spec);

// Fresh hidden graph, fresh session, one algorithm run. Oracle limits and
// algorithm failures end up in `error`.
ExperimentRecord RunOne(const RunSpec& spec);

// The same on given graphs; spec.gen only labels the record and seeds the
// algorithm. `candidate` is ignored by reconstruction, `td` is used by
// treewidth verification when present. Correctness of a verification
// verdict is judged by comparing hidden and candidate.
ExperimentRecord RunInstance(const RunSpec& spec, const Graph& hidden,
                             const Graph& candidate,
                             const TreeDecomposition* td,
                             std::optional<int> declared_width = std::nullopt);

std::string RecordJson(const ExperimentRecord& r, bool with_timing = true);

// Number of concurrent jobs: GRAPHPROBE_WORKERS when set, else the
// hardware concurrency. Throws std::invalid_argument on a malformed value.
int WorkerCount();

// fn(i) for i in [0, count) on `workers` threads; results by index. The
// first exception in index order is rethrown after all jobs finish. Inside
// the pool OpenMP kernels run single-threaded.
namespace internal {
// Limits OpenMP in the calling thread to one thread.
void SingleThreadedKernels();
}  // namespace internal

template <typename Fn>
auto ParallelMap(std::size_t count, int workers, Fn fn)
    -> std::vector<decltype(fn(std::size_t{0}))>;

struct PowerFit {
  double alpha = 0;
  double intercept = 0;
  double r2 = 0;
};

// Least squares of log y against log x. Needs two distinct positive x.
PowerFit FitPowerLaw(const std::vector<double>& x,
                     const std::vector<double>& y);

struct SeriesConfig {
  std::string id;
  Algorithm algorithm = Algorithm::kGreedyReconstruct;
  Family family = Family::kRandomBoundedDegree;
  int max_degree = 4;
  int k = 1;
  Fault fault = Fault::kNone;
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
};

struct ScalingConfig {
  std::string name;
  std::int64_t time_limit_ms = 120000;
  std::vector<SeriesConfig> series;
};

// YAML with `name`, optional `time_limit_ms` and a `series` list; each
// entry has algorithm, family, delta, optional k and fault, `n` as a list
// and `seeds` as a count (1..count) or a list. Throws std::runtime_error.
ScalingConfig ParseScalingConfig(const std::string& yaml_text);
ScalingConfig LoadScalingConfig(const std::string& path);

struct SeriesPoint {
  int n = 0;
  double mean = 0;
  double stddev = 0;
  int runs = 0;
  int failures = 0;
};

// A fit needs this many distinct sizes, each with this many clean runs.
inline constexpr int kMinFitSizes = 4;
inline constexpr int kMinFitRuns = 10;

struct SeriesSummary {
  std::string id;
  std::string algorithm;
  std::string family;
  int max_degree = 0;
  std::vector<SeriesPoint> points;
  std::optional<PowerFit> fit;  // only when the thresholds above are met
};

struct ScalingResult {
  std::string name;
  std::vector<ExperimentRecord> records;  // by series, then n, then seed
  std::vector<SeriesSummary> summary;
};

ScalingResult RunScaling(const ScalingConfig& config, int workers);

// One row per record, no timing column, so reruns are byte-identical.
void WriteRecordsCsv(std::ostream& out,
                     const std::vector<ExperimentRecord>& records);
std::string SummaryJson(const ScalingResult& result);
// x = n, y = mean cached queries, plus the standard deviation.
void WritePlotCsv(std::ostream& out, const SeriesSummary& series);

// Writes records.csv, summary.json and plot_<id>.csv into `dir`.
void WriteScalingOutputs(const std::string& dir, const ScalingResult& result);

template <typename Fn>
auto ParallelMap(std::size_t count, int workers, Fn fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    internal::SingleThreadedKernels();
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(
      std::max(workers, 1), std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Result> out;
  out.reserve(count);
  for (std::optional<Result>& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace graphprobe

#endif  // GRAPHPROBE_HARNESS_H_
