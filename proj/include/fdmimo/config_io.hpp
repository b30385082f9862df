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
#include <optional>
#include <string>
#include <string_view>

#include "fdmimo/experiments.hpp"
#include "fdmimo/system_config.hpp"

namespace fdmimo {

struct LoadedConfig {
    SystemConfig system;
    Scenario scenario;
};

/// Parses `key = value` lines (UTF-8, '#' starts a comment). Missing keys keep
/// their defaults: default_config() for system keys and the preset named by
/// the `scenario` key (or `scenario_override`, or fig-perfect) for scenario
/// keys. Errors are reported as ConfigError "<source>:<line>:<col>: ...".
LoadedConfig parse_config(std::string_view text, std::string_view source = "<config>",
                          std::optional<ScenarioName> scenario_override = std::nullopt);

LoadedConfig load_config(const std::filesystem::path& path,
                         std::optional<ScenarioName> scenario_override = std::nullopt);

/// Text that parse_config maps back to identical values (shortest round-trip
/// decimal representation for reals).
std::string format_config(const SystemConfig& system, const Scenario& scenario);

void save_config(const std::filesystem::path& path, const SystemConfig& system, const Scenario& scenario);

} // namespace fdmimo
