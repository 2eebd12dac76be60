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

#include "graphprobe/oracle.h"

#include <chrono>
#include <sstream>
#include <thread>

#include "graphprobe/metric.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace graphprobe {
namespace {

using ::graphprobe::testing::CycleGraph;
using ::graphprobe::testing::FloydWarshall;
using ::graphprobe::testing::GridGraph;
using ::graphprobe::testing::PathGraph;
using ::graphprobe::testing::RandomSparseGraph;

TEST(QueryDistanceTest, IdentityAdjacentAndFar) {
  OracleSession s(PathGraph(5));
  EXPECT_EQ(s.QueryDistance(2, 2), 0);
  EXPECT_EQ(s.counts().cached(), 0);
  EXPECT_EQ(s.QueryDistance(1, 2), 1);
  EXPECT_EQ(s.QueryDistance(0, 4), 4);
  EXPECT_EQ(s.counts().distance, 2);
  EXPECT_EQ(s.counts().raw, 3);
  EXPECT_EQ(s.QueryDistance(4, 0), 4);
  EXPECT_EQ(s.counts().distance, 2);
  EXPECT_EQ(s.counts().raw, 4);
  EXPECT_THROW(s.QueryDistance(0, 5), std::invalid_argument);
}

TEST(QueryPathTest, IdentityAdjacentAndLexLeast) {
  OracleSession s(CycleGraph(4));
  EXPECT_EQ(s.QueryPath(3, 3), (std::vector<Vertex>{3}));
  EXPECT_EQ(s.QueryPath(0, 1), (std::vector<Vertex>{0, 1}));
  // Shortest 0-2 paths: 0-1-2 and 0-3-2.
  EXPECT_EQ(s.QueryPath(0, 2), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(s.QueryPath(2, 0), (std::vector<Vertex>{2, 1, 0}));
  EXPECT_EQ(s.counts().path, 2);
  EXPECT_EQ(s.counts().distance, 0);
}

TEST(QueryPathTest, PathsAreValidShortestPaths) {
  const Graph g = RandomSparseGraph(120, 4, 3);
  const auto truth = FloydWarshall(g);
  OracleSession s(g);
  for (Vertex u = 0; u < 120; u += 7) {
    for (Vertex v = 0; v < 120; v += 5) {
      const auto p = s.QueryPath(u, v);
      ASSERT_EQ(static_cast<int>(p.size()) - 1, truth[u][v]);
      EXPECT_EQ(p.front(), u);
      EXPECT_EQ(p.back(), v);
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        ASSERT_TRUE(g.HasEdge(p[i], p[i + 1]));
      }
    }
  }
}

TEST(QueryPathTest, GridPathIsLexicographicallyLeast) {
  const Graph g = GridGraph(3, 3);
  OracleSession s(g);
  // Corner to corner: every monotone staircase is shortest; the lowest-id
  // parent rule walks back along the top row first.
  EXPECT_EQ(s.QueryPath(0, 8), (std::vector<Vertex>{0, 1, 2, 5, 8}));
}

TEST(QueryBatchTest, CachingAndCounting) {
  OracleSession s(PathGraph(3));
  const std::vector<Vertex> a = {0};
  const auto self = s.QueryBatch(a, a);
  EXPECT_EQ(self.at(0, 0), 0);
  EXPECT_EQ(s.counts().cached(), 0);

  const std::vector<Vertex> all = {0, 1, 2};
  const auto t = s.QueryBatch(all, all);
  EXPECT_EQ(s.counts().distance, 3);
  EXPECT_EQ(t.at(0, 2), 2);
  EXPECT_EQ(t.at(2, 1), 1);
  const auto again = s.QueryBatch(all, all);
  EXPECT_EQ(s.counts().distance, 3);
  EXPECT_EQ(again.data, t.data);
  EXPECT_EQ(s.counts().raw, 1 + 9 + 9);
  EXPECT_THROW(s.QueryBatch({}, all), std::invalid_argument);
}

TEST(QueryBatchTest, BudgetStopsMidBatchWithPartialLog) {
  OracleOptions opts;
  opts.budget = 4;
  opts.record_log = true;
  OracleSession s(PathGraph(6), opts);
  const std::vector<Vertex> all = {0, 1, 2, 3, 4, 5};
  try {
    s.QueryBatch(all, all);
    FAIL() << "expected BudgetExhausted";
  } catch (const BudgetExhausted& e) {
    EXPECT_EQ(e.counts().distance, 4);
  }
  EXPECT_EQ(s.log().size(), 4u);
  EXPECT_EQ(s.counts().distance, 4);
  // Answers already cached stay free.
  EXPECT_EQ(s.QueryDistance(0, 2), 2);
}

TEST(QueryBatchTest, CachedLookupDoesNotCount) {
  OracleSession s(PathGraph(4));
  EXPECT_FALSE(s.Cached(0, 3).has_value());
  EXPECT_EQ(s.Cached(2, 2), 0);
  s.QueryDistance(0, 3);
  EXPECT_EQ(s.Cached(3, 0), 3);
  EXPECT_EQ(s.counts().raw, 1);
}

TEST(DistanceFromPathOracleTest, UsesPathCounter) {
  OracleSession s(PathGraph(4));
  EXPECT_EQ(DistanceFromPathOracle(s, 1, 2), 1);
  EXPECT_EQ(s.counts().path, 1);
  EXPECT_EQ(DistanceFromPathOracle(s, 3, 3), 0);
  EXPECT_EQ(DistanceFromPathOracle(s, 0, 3), 3);
  EXPECT_EQ(s.counts().path, 2);
  EXPECT_EQ(s.counts().distance, 0);
}

TEST(OracleTest, AnswersMatchGroundTruthAndAreSymmetric) {
  const Graph g = RandomSparseGraph(90, 5, 17);
  const auto truth = FloydWarshall(g);
  OracleSession dense(g);
  OracleOptions sparse_opts;
  sparse_opts.dense_cap = 10;
  OracleSession sparse(g, sparse_opts);
  for (Vertex u = 0; u < 90; ++u) {
    for (Vertex v = 0; v < 90; ++v) {
      ASSERT_EQ(dense.QueryDistance(u, v), truth[u][v]);
      ASSERT_EQ(sparse.QueryDistance(v, u), truth[u][v]);
    }
  }
  EXPECT_EQ(dense.counts().distance, 90 * 89 / 2);
  EXPECT_EQ(sparse.counts().distance, 90 * 89 / 2);
}

TEST(OracleTest, LogCsvFormat) {
  OracleOptions opts;
  opts.record_log = true;
  OracleSession s(PathGraph(3), opts);
  s.QueryDistance(2, 0);
  s.QueryPath(0, 2);
  s.QueryDistance(0, 2);  // cached, not logged
  std::ostringstream out;
  s.WriteLogCsv(out);
  EXPECT_EQ(out.str(),
            "idx,kind,u,v,answer\n"
            "0,distance,2,0,2\n"
            "1,path,0,2,0-1-2\n");
  EXPECT_EQ(s.log().size(), static_cast<std::size_t>(s.counts().cached()));
}

TEST(OracleTest, CountersAreMonotone) {
  OracleSession s(RandomSparseGraph(40, 4, 1));
  std::int64_t last = 0;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const Vertex u = rng() % 40, v = rng() % 40;
    if (i % 3 == 0) {
      s.QueryPath(u, v);
    } else {
      s.QueryDistance(u, v);
    }
    ASSERT_GE(s.counts().cached(), last);
    last = s.counts().cached();
  }
}

TEST(OracleTest, DeadlineThrows) {
  OracleOptions opts;
  opts.time_limit = std::chrono::milliseconds(1);
  OracleSession s(PathGraph(50), opts);
  std::this_thread::sleep_for(std::chrono::milliseconds(5));
  EXPECT_THROW(s.CheckDeadline(), TimeLimitExceeded);
  const std::vector<Vertex> all = [] {
    std::vector<Vertex> v(50);
    for (int i = 0; i < 50; ++i) v[i] = i;
    return v;
  }();
  EXPECT_THROW(s.QueryBatch(all, all), TimeLimitExceeded);
}

}  // namespace
}  // namespace graphprobe
