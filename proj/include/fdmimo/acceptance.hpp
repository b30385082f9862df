// SPDX-License-Identifier: Apache-2.0
//
// fdmimo - full-duplex large-scale MIMO self-interference cancellation simulator
// Copyright (C) 2026 The fdmimo Authors
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
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fdmimo::acceptance {

struct Options {
    std::size_t trials = 10000; // base Monte Carlo size per operating point
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::function<void(std::string_view)> progress;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

/// One line: "[PASS] <id>. <title>: <detail>" (or FAIL).
std::string format_result(const CriterionResult& r);

/// Runs the closed-form-vs-simulation acceptance criteria in order, invoking
/// on_result as each one finishes.
std::vector<CriterionResult> run_all(const Options& options,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

} // namespace fdmimo::acceptance
