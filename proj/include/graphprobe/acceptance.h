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

#ifndef GRAPHPROBE_ACCEPTANCE_H_
#define GRAPHPROBE_ACCEPTANCE_H_

#include <functional>
#include <string>
#include <vector>

namespace graphprobe {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double elapsed_s = 0;
};

inline constexpr int kNumCriteria = 11;

struct AcceptanceOptions {
  // Criterion ids to run; empty means all.
  std::vector<int> only;
  int workers = 1;
  // Called as each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

// Runs the acceptance criteria with fixed seeds, in id order.
std::vector<CriterionResult> RunAcceptance(const AcceptanceOptions& options);

// "criterion 3: PASS  <title> (<detail>) [12.3 s]"
std::string FormatCriterion(const CriterionResult& r);

}  // namespace graphprobe

#endif  // GRAPHPROBE_ACCEPTANCE_H_
