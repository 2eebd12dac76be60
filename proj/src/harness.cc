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

#include "graphprobe/harness.h"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "graphprobe/oracle.h"
#include "graphprobe/reconstruct.h"
#include "json.hpp"
#include "yaml-cpp/yaml.h"

namespace graphprobe {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kAlgorithmSeedMix = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kFaultSeedMix = 0x5151;

struct AlgorithmEntry {
  Algorithm algorithm;
  std::string_view name;
};

constexpr AlgorithmEntry kAlgorithms[] = {
    {Algorithm::kGreedyVerify, "greedy-verify"},
    {Algorithm::kVerifySubgraph, "verify-subgraph"},
    {Algorithm::kVerifyChordal, "verify-chordal"},
    {Algorithm::kVerifyTreewidth, "verify-treewidth"},
    {Algorithm::kGreedyReconstruct, "greedy-reconstruct"},
    {Algorithm::kReconstructChordal, "reconstruct-chordal"},
    {Algorithm::kAllPairs, "all-pairs"},
};

bool ChordalFamily(Family f) {
  return f == Family::kTree || f == Family::kRandomChordal ||
         f == Family::kStarAdversary;
}

VertexSet AllVertices(int n) {
  VertexSet v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Edge RandomNonEdge(const Graph& g, std::mt19937_64& rng) {
  const int n = g.num_vertices();
  const std::int64_t pairs = std::int64_t{n} * (n - 1) / 2;
  if (g.num_edges() >= pairs) {
    throw IncompatibleRun("complete graph has no pair to plant");
  }
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (;;) {
    const Vertex a = pick(rng), b = pick(rng);
    if (a != b && !g.HasEdge(a, b)) return Edge::Canonical(a, b);
  }
}

void AddVerifyStats(const VerifyResult& r, ExperimentRecord& rec) {
  rec.stats["nonedge_queries"] = r.stats.nonedge_queries;
  rec.stats["recursion_nodes"] = r.stats.recursion_nodes;
  rec.stats["max_depth"] = r.stats.max_depth;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Slug(const std::string& id) {
  std::string out;
  for (char c : id) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) != 0 ||
                      c == '-' || c == '_';
    out += keep ? c : '-';
  }
  return out;
}

}  // namespace

namespace internal {
void SingleThreadedKernels() { omp_set_num_threads(1); }
}  // namespace internal

std::string_view AlgorithmName(Algorithm a) {
  for (const AlgorithmEntry& e : kAlgorithms) {
    if (e.algorithm == a) return e.name;
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (const AlgorithmEntry& e : kAlgorithms) {
    if (e.name == name) return e.algorithm;
  }
  return std::nullopt;
}

bool IsVerification(Algorithm a) {
  return a == Algorithm::kGreedyVerify || a == Algorithm::kVerifySubgraph ||
         a == Algorithm::kVerifyChordal || a == Algorithm::kVerifyTreewidth;
}

std::string_view FaultName(Fault f) {
  return f == Fault::kNone ? "none" : "planted-edge";
}

std::optional<Fault> ParseFault(std::string_view name) {
  if (name == "none") return Fault::kNone;
  if (name == "planted-edge") return Fault::kPlantedEdge;
  return std::nullopt;
}

void CheckCompatible(const RunSpec& spec) {
  const Algorithm a = spec.algorithm;
  if ((a == Algorithm::kVerifyChordal || a == Algorithm::kReconstructChordal) &&
      !ChordalFamily(spec.gen.family)) {
    throw IncompatibleRun(std::string(AlgorithmName(a)) +
                          " needs a chordal family, got " +
                          std::string(FamilyName(spec.gen.family)));
  }
  if (spec.fault != Fault::kNone && !IsVerification(a)) {
    throw IncompatibleRun("faults apply to verification runs only");
  }
  if (a == Algorithm::kReconstructChordal &&
      (spec.gen.max_degree < 1 || spec.gen.max_degree > 24)) {
    throw IncompatibleRun("chordal reconstruction needs 1 <= delta <= 24");
  }
}

ExperimentRecord RunOne(const RunSpec& spec) {
  CheckCompatible(spec);
  const Generated gen = Generate(spec.gen);
  Graph hidden = gen.graph;
  if (spec.fault == Fault::kPlantedEdge) {
    std::mt19937_64 fault_rng(spec.gen.seed + kFaultSeedMix);
    const Edge e = RandomNonEdge(gen.graph, fault_rng);
    hidden.AddEdge(e.u, e.v);
  }
  return RunInstance(spec, hidden, gen.graph,
                     gen.decomposition ? &*gen.decomposition : nullptr,
                     gen.declared_width);
}

ExperimentRecord RunInstance(const RunSpec& spec, const Graph& hidden,
                             const Graph& candidate,
                             const TreeDecomposition* td,
                             std::optional<int> declared_width) {
  const int n = hidden.num_vertices();
  if (IsVerification(spec.algorithm) && candidate.num_vertices() != n) {
    throw std::invalid_argument("hidden and candidate sizes differ");
  }
  const bool expect_yes = hidden == candidate;

  ExperimentRecord rec;
  rec.algorithm = AlgorithmName(spec.algorithm);
  rec.family = FamilyName(spec.gen.family);
  rec.n = n;
  rec.max_degree = spec.gen.max_degree;
  rec.k = spec.gen.k;
  rec.width = declared_width;
  rec.seed = spec.gen.seed;
  rec.fault = FaultName(spec.fault);

  OracleOptions opts;
  opts.budget = spec.budget.value_or(std::int64_t{4} * n * n);
  opts.time_limit = std::chrono::milliseconds(spec.time_limit_ms);
  opts.record_log = !spec.log_csv_path.empty();
  std::mt19937_64 rng(spec.gen.seed ^ kAlgorithmSeedMix);
  const auto start = std::chrono::steady_clock::now();
  OracleSession session(hidden, opts);
  const VertexSet all = AllVertices(n);
  try {
    std::optional<VerifyResult> verified;
    switch (spec.algorithm) {
      case Algorithm::kGreedyVerify: {
        GreedyVerifyOptions g;
        g.mode = spec.mode;
        verified = GreedyVerify(session, candidate, g);
        AddVerifyStats(*verified, rec);
        break;
      }
      case Algorithm::kVerifySubgraph:
      case Algorithm::kVerifyChordal:
      case Algorithm::kVerifyTreewidth: {
        verified = VerifyEdges(session, candidate);
        rec.stats["edge_queries"] = verified->stats.edge_queries;
        if (!verified->yes) break;
        if (spec.algorithm == Algorithm::kVerifySubgraph) {
          const RecursionParams params = spec.recursion.value_or(
              RecursionParams::Compute(n, candidate.MaxDegree()));
          verified = VerifySubgraph(session, candidate, all, params, rng);
        } else if (spec.algorithm == Algorithm::kVerifyChordal) {
          verified = VerifyChordal(session, candidate, all);
        } else {
          verified = VerifyTreewidth(session, candidate, td, all);
          rec.stats["width"] = verified->stats.width;
          rec.stats["max_local_degree"] = verified->stats.max_local_degree;
        }
        AddVerifyStats(*verified, rec);
        break;
      }
      case Algorithm::kGreedyReconstruct: {
        const GreedyReconstructResult r = GreedyReconstruct(session);
        rec.verdict = "reconstructed";
        rec.edges_found = r.graph.num_edges();
        rec.correct = r.graph == hidden;
        if (spec.keep_graph) rec.reconstructed = r.graph;
        rec.stats["init_queries"] = r.stats.init_queries;
        rec.stats["loop_queries"] = r.stats.loop_queries;
        rec.stats["edge_additions"] = r.stats.edge_additions;
        rec.stats["confirmations"] = r.stats.confirmations;
        break;
      }
      case Algorithm::kReconstructChordal: {
        ChordalParams params = ChordalParams::FromDegree(spec.gen.max_degree);
        if (spec.chordal_n0) params.n0 = *spec.chordal_n0;
        if (spec.chordal_c1) params.c1 = *spec.chordal_c1;
        const ChordalReconstructResult r =
            ReconstructChordal(session, all, params, rng);
        rec.verdict = "reconstructed";
        rec.edges_found = static_cast<std::int64_t>(r.edges.size());
        rec.correct = r.edges == hidden.Edges();
        if (spec.keep_graph) {
          Graph found(n);
          for (const Edge& e : r.edges) found.AddEdge(e.u, e.v);
          rec.reconstructed = std::move(found);
        }
        rec.stats["recursion_nodes"] = r.stats.recursion_nodes;
        rec.stats["base_cases"] = r.stats.base_cases;
        rec.stats["max_depth"] = r.stats.max_depth;
        rec.stats["separator_attempts"] = r.stats.separator.attempts;
        rec.stats["sampled_paths"] = r.stats.separator.sampled_paths;
        break;
      }
      case Algorithm::kAllPairs: {
        const DistanceTable t = session.QueryBatch(all, all);
        Graph found(n);
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (t.at(i, j) == 1) found.AddEdge(i, j);
          }
        }
        rec.verdict = "reconstructed";
        rec.edges_found = found.num_edges();
        rec.correct = found == hidden;
        if (spec.keep_graph) rec.reconstructed = std::move(found);
        break;
      }
    }
    if (verified) {
      rec.verdict = verified->yes ? "yes" : "no";
      rec.correct = verified->yes == expect_yes;
      rec.edges_found = candidate.num_edges();
      rec.mismatch = verified->mismatch;
    }
  } catch (const BudgetExhausted& e) {
    rec.error = std::string("budget exhausted: ") + e.what();
  } catch (const TimeLimitExceeded& e) {
    rec.error = std::string("time limit: ") + e.what();
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  if (!rec.error.empty()) {
    rec.verdict = "error";
    rec.correct = false;
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  rec.queries_cached = session.counts().cached();
  rec.queries_raw = session.counts().raw;
  if (!spec.log_csv_path.empty()) {
    std::ofstream log(spec.log_csv_path);
    session.WriteLogCsv(log);
    if (!log) throw std::runtime_error("cannot write " + spec.log_csv_path);
  }
  return rec;
}

std::string RecordJson(const ExperimentRecord& r, bool with_timing) {
  Json j;
  if (!r.series.empty()) j["series"] = r.series;
  j["algorithm"] = r.algorithm;
  j["family"] = r.family;
  j["n"] = r.n;
  j["delta"] = r.max_degree;
  j["k"] = r.k;
  if (r.width) j["tw"] = *r.width;
  j["seed"] = r.seed;
  j["fault"] = r.fault;
  j["queries_cached"] = r.queries_cached;
  j["queries_raw"] = r.queries_raw;
  j["verdict"] = r.verdict;
  j["edges_found"] = r.edges_found;
  j["correct"] = r.correct;
  if (with_timing) j["elapsed_ms"] = std::round(r.elapsed_ms * 1000) / 1000;
  if (!r.error.empty()) j["error"] = r.error;
  if (r.mismatch) {
    j["mismatch"] = {{"u", r.mismatch->u},
                     {"v", r.mismatch->v},
                     {"expected", r.mismatch->expected},
                     {"answered", r.mismatch->answered}};
  }
  j["stats"] = Json::object();
  for (const auto& [key, value] : r.stats) j["stats"][key] = value;
  return j.dump(2);
}

int WorkerCount() {
  const char* env = std::getenv("GRAPHPROBE_WORKERS");
  if (env == nullptr || *env == '\0') {
    return std::max(1u, std::thread::hardware_concurrency());
  }
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096) {
    throw std::invalid_argument(
        std::string("GRAPHPROBE_WORKERS must be a positive integer, got '") +
        env + "'");
  }
  return static_cast<int>(v);
}

PowerFit FitPowerLaw(const std::vector<double>& x,
                     const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("power fit needs two or more points");
  }
  const std::size_t m = x.size();
  std::vector<double> lx(m), ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] <= 0 || y[i] <= 0) {
      throw std::invalid_argument("power fit needs positive values");
    }
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / m;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("power fit needs distinct x");
  PowerFit f;
  f.alpha = sxy / sxx;
  f.intercept = my - f.alpha * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ly[i] - (f.intercept + f.alpha * lx[i]);
    ss_res += r * r;
  }
  f.r2 = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
  return f;
}

ScalingConfig ParseScalingConfig(const std::string& yaml_text) {
  ScalingConfig cfg;
  try {
    const YAML::Node root = YAML::Load(yaml_text);
    cfg.name = root["name"] ? root["name"].as<std::string>() : "scaling";
    if (root["time_limit_ms"]) {
      cfg.time_limit_ms = root["time_limit_ms"].as<std::int64_t>();
    }
    if (!root["series"] || !root["series"].IsSequence() ||
        root["series"].size() == 0) {
      throw std::runtime_error("config needs a nonempty 'series' list");
    }
    for (const YAML::Node& node : root["series"]) {
      SeriesConfig s;
      const auto algo = ParseAlgorithm(node["algorithm"].as<std::string>());
      if (!algo) throw std::runtime_error("unknown algorithm");
      s.algorithm = *algo;
      const auto fam = ParseFamily(node["family"].as<std::string>());
      if (!fam) throw std::runtime_error("unknown family");
      s.family = *fam;
      if (node["delta"]) s.max_degree = node["delta"].as<int>();
      if (node["k"]) s.k = node["k"].as<int>();
      if (node["fault"]) {
        const auto f = ParseFault(node["fault"].as<std::string>());
        if (!f) throw std::runtime_error("unknown fault");
        s.fault = *f;
      }
      s.sizes = node["n"].as<std::vector<int>>();
      const YAML::Node seeds = node["seeds"];
      if (seeds.IsSequence()) {
        s.seeds = seeds.as<std::vector<std::uint64_t>>();
      } else {
        const int count = seeds.as<int>();
        for (int i = 1; i <= count; ++i) s.seeds.push_back(i);
      }
      if (s.sizes.empty() || s.seeds.empty()) {
        throw std::runtime_error("series needs sizes and seeds");
      }
      s.id = node["id"] ? node["id"].as<std::string>()
                        : std::string(AlgorithmName(s.algorithm)) + "_" +
                              std::string(FamilyName(s.family)) + "_d" +
                              std::to_string(s.max_degree);
      cfg.series.push_back(std::move(s));
    }
  } catch (const YAML::Exception& e) {
    throw std::runtime_error(std::string("bad scaling config: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string("bad scaling config: ") + e.what());
  }
  return cfg;
}

ScalingConfig LoadScalingConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream text;
  text << in.rdbuf();
  return ParseScalingConfig(text.str());
}

ScalingResult RunScaling(const ScalingConfig& config, int workers) {
  struct Job {
    std::size_t series;
    RunSpec spec;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < config.series.size(); ++i) {
    const SeriesConfig& s = config.series[i];
    for (int n : s.sizes) {
      for (std::uint64_t seed : s.seeds) {
        RunSpec spec;
        spec.algorithm = s.algorithm;
        spec.gen.family = s.family;
        spec.gen.n = n;
        spec.gen.max_degree = s.max_degree;
        spec.gen.k = s.k;
        spec.gen.seed = seed;
        spec.fault = s.fault;
        spec.time_limit_ms = config.time_limit_ms;
        jobs.push_back({i, spec});
      }
    }
  }
  ScalingResult result;
  result.name = config.name;
  result.records = ParallelMap(jobs.size(), workers, [&](std::size_t i) {
    ExperimentRecord r;
    try {
      r = RunOne(jobs[i].spec);
    } catch (const std::exception& e) {
      // Rejected or ungeneratable runs still get a row.
      r.algorithm = AlgorithmName(jobs[i].spec.algorithm);
      r.family = FamilyName(jobs[i].spec.gen.family);
      r.n = jobs[i].spec.gen.n;
      r.max_degree = jobs[i].spec.gen.max_degree;
      r.k = jobs[i].spec.gen.k;
      r.seed = jobs[i].spec.gen.seed;
      r.fault = FaultName(jobs[i].spec.fault);
      r.verdict = "error";
      r.error = e.what();
    }
    r.series = config.series[jobs[i].series].id;
    return r;
  });

  std::size_t at = 0;
  for (const SeriesConfig& s : config.series) {
    SeriesSummary sum;
    sum.id = s.id;
    sum.algorithm = AlgorithmName(s.algorithm);
    sum.family = FamilyName(s.family);
    sum.max_degree = s.max_degree;
    for (int n : s.sizes) {
      SeriesPoint p;
      p.n = n;
      std::vector<double> q;
      for (std::size_t j = 0; j < s.seeds.size(); ++j, ++at) {
        const ExperimentRecord& r = result.records[at];
        if (r.error.empty()) {
          q.push_back(static_cast<double>(r.queries_cached));
        } else {
          ++p.failures;
        }
      }
      p.runs = static_cast<int>(q.size());
      if (!q.empty()) {
        p.mean = std::accumulate(q.begin(), q.end(), 0.0) / q.size();
        double var = 0;
        for (double v : q) var += (v - p.mean) * (v - p.mean);
        p.stddev = q.size() > 1 ? std::sqrt(var / (q.size() - 1)) : 0;
      }
      sum.points.push_back(p);
    }
    std::vector<double> xs, ys;
    for (const SeriesPoint& p : sum.points) {
      if (p.runs >= kMinFitRuns && p.mean > 0) {
        xs.push_back(p.n);
        ys.push_back(p.mean);
      }
    }
    std::vector<double> distinct = xs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    if (static_cast<int>(distinct.size()) >= kMinFitSizes) {
      sum.fit = FitPowerLaw(xs, ys);
    }
    result.summary.push_back(std::move(sum));
  }
  return result;
}

void WriteRecordsCsv(std::ostream& out,
                     const std::vector<ExperimentRecord>& records) {
  out << "series,algorithm,family,n,delta,k,seed,fault,queries_cached,"
         "queries_raw,verdict,edges_found,correct,error\n";
  for (const ExperimentRecord& r : records) {
    out << CsvField(r.series) << ',' << r.algorithm << ',' << r.family << ','
        << r.n << ',' << r.max_degree << ',' << r.k << ',' << r.seed << ','
        << r.fault << ',' << r.queries_cached << ',' << r.queries_raw << ','
        << r.verdict << ',' << r.edges_found << ','
        << (r.correct ? "true" : "false") << ',' << CsvField(r.error) << '\n';
  }
}

std::string SummaryJson(const ScalingResult& result) {
  Json j;
  j["name"] = result.name;
  j["series"] = Json::array();
  for (const SeriesSummary& s : result.summary) {
    Json js;
    js["id"] = s.id;
    js["algorithm"] = s.algorithm;
    js["family"] = s.family;
    js["delta"] = s.max_degree;
    js["points"] = Json::array();
    for (const SeriesPoint& p : s.points) {
      js["points"].push_back({{"n", p.n},
                              {"mean_queries", p.mean},
                              {"std_queries", p.stddev},
                              {"runs", p.runs},
                              {"failures", p.failures}});
    }
    if (s.fit) {
      js["fit"] = {{"alpha", s.fit->alpha},
                   {"intercept", s.fit->intercept},
                   {"r2", s.fit->r2}};
    } else {
      js["fit"] = nullptr;
    }
    j["series"].push_back(std::move(js));
  }
  return j.dump(2);
}

void WritePlotCsv(std::ostream& out, const SeriesSummary& series) {
  out << "n,mean_queries,std_queries\n";
  for (const SeriesPoint& p : series.points) {
    out << p.n << ',' << p.mean << ',' << p.stddev << '\n';
  }
}

void WriteScalingOutputs(const std::string& dir, const ScalingResult& result) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  {
    std::ofstream out(base / "records.csv");
    WriteRecordsCsv(out, result.records);
    if (!out) throw std::runtime_error("cannot write records.csv in " + dir);
  }
  {
    std::ofstream out(base / "summary.json");
    out << SummaryJson(result) << '\n';
  }
  for (const SeriesSummary& s : result.summary) {
    std::ofstream out(base / ("plot_" + Slug(s.id) + ".csv"));
    WritePlotCsv(out, s);
  }
}

}  // namespace graphprobe
