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

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fdmimo/experiments.hpp"

namespace fdmimo {

inline constexpr std::string_view kCsvHeader =
    "scenario,mode,x_db,dl_sim,dl_sim_ci,ul_sim,ul_sim_ci,dl_cf,ul_cf,trials,failures";

/// Reals use 6 significant digits, absent closed forms are empty fields and
/// lines end with LF.
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::string format_csv(const std::vector<SweepRow>& rows);

/// Writes the CSV to `path`; I/O failures raise std::runtime_error naming the path.
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

std::vector<SweepRow> parse_csv(std::string_view text);

} // namespace fdmimo
