// SPDX-License-Identifier: Apache-2.0
//
// fama-lab: fluid-antenna multiple access SIR statistics and Monte-Carlo toolkit
// Copyright (C) 2026 The fama-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef FAMA_ACCEPTANCE_HPP
#define FAMA_ACCEPTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fama::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    std::uint64_t seed = 20260118;
    std::size_t workers = 0;
    std::vector<int> only; // empty: all criteria
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const SuiteOptions &options);
std::vector<CriterionResult> run_suite(const SuiteOptions &options);

// One "PASS|FAIL  #id name  (seconds)  detail" line per criterion.
std::string format_line(const CriterionResult &result);
std::string format_table(const std::vector<CriterionResult> &results);

} // namespace fama::acceptance

#endif
