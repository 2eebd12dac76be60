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

// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Optional arguments restrict the run to the listed criterion ids.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "graphprobe/acceptance.h"
#include "graphprobe/harness.h"

int main(int argc, char** argv) {
  graphprobe::AcceptanceOptions options;
  try {
    for (int i = 1; i < argc; ++i) {
      const int id = std::stoi(argv[i]);
      if (id < 1 || id > graphprobe::kNumCriteria) throw std::exception();
      options.only.push_back(id);
    }
    options.workers = graphprobe::WorkerCount();
  } catch (const std::exception&) {
    std::cerr << "usage: acceptance [criterion id ...]\n";
    return 2;
  }
  options.on_result = [](const graphprobe::CriterionResult& r) {
    std::cout << graphprobe::FormatCriterion(r) << std::endl;
  };
  const std::vector<graphprobe::CriterionResult> results =
      graphprobe::RunAcceptance(options);
  int passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << "acceptance: " << passed << "/" << results.size()
            << " criteria passed" << std::endl;
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
