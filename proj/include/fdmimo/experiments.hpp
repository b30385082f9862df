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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fdmimo/system_config.hpp"
#include "fdmimo/transceiver.hpp"

namespace fdmimo {

enum class ScenarioName { FigPerfect, FigImperfectSi, FigCorrelated, Custom };
enum class SweepVariable { RhoDlDb, RhoSiDb };

/// Curves that can be requested from a sweep. HalfDuplex is the time-shared
/// ZF/ZF baseline; the passive-ANC-only curve is NoSic.
enum class RunMode { NoSic, Subtraction, SpatialSuppression, HalfDuplex };

std::string_view to_string(ScenarioName name);
std::string_view to_string(SweepVariable v);
std::string_view to_string(RunMode mode);
ScenarioName parse_scenario_name(std::string_view s);
SweepVariable parse_sweep_variable(std::string_view s);
RunMode parse_run_mode(std::string_view s);
std::vector<RunMode> parse_run_modes(std::string_view comma_list);
std::string format_run_modes(const std::vector<RunMode>& modes);

struct Scenario {
    ScenarioName name = ScenarioName::FigPerfect;
    SweepVariable sweep_variable = SweepVariable::RhoDlDb;
    double sweep_start = 0.0;
    double sweep_stop = 30.0;
    double sweep_step = 2.0;
    std::vector<RunMode> modes{RunMode::NoSic, RunMode::Subtraction, RunMode::SpatialSuppression};
    std::size_t trials = 10000;
    std::uint64_t master_seed = 1;
    bool perfect_csi = true;
    bool correlated = false;
    double kappa = 1.0;
    double sigma_si = 1.0;
    double carrier_hz = 2.1e9;

    std::vector<double> sweep_points() const;
    void validate() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Preset for one of the named scenarios (Custom starts from FigPerfect's
/// sweep with no preset semantics).
Scenario preset(ScenarioName name);

/// M=64, N=20, K=10, rho_UL=10 dB, beta_SI=-40 dB, beta_UE=-80 dB,
/// alpha_anc=40 dB, NMSE=0.2, rho_t=80 dB (rho_DL = 0 dB).
SystemConfig default_config();

/// Configuration with the operating point moved to sweep value x (dB).
SystemConfig at_sweep_point(const SystemConfig& config, SweepVariable variable, double x_db);

struct SweepRow {
    std::string scenario;
    std::string mode;
    double x_db = 0.0;
    double dl_sim = 0.0;
    double dl_sim_ci = 0.0;
    double ul_sim = 0.0;
    double ul_sim_ci = 0.0;
    std::optional<double> dl_cf;
    std::optional<double> ul_cf;
    std::size_t trials = 0;
    std::size_t failures = 0;
};

struct RunOptions {
    unsigned threads = 0;
    std::function<void(std::string_view)> progress;
};

/// Thrown by run_scenario when a sweep point fails; carries the rows of all
/// completed points in emission order.
class ScenarioAborted : public std::runtime_error {
public:
    ScenarioAborted(const std::string& what, std::vector<SweepRow> partial)
        : std::runtime_error(what), partial_(std::move(partial))
    {
    }
    const std::vector<SweepRow>& partial_rows() const { return partial_; }

private:
    std::vector<SweepRow> partial_;
};

/// One row per (mode, sweep point), mode-major then ascending x. Closed-form
/// columns are filled where an approximation exists (not for correlated
/// channels, nor for the downlink under imperfect estimation).
std::vector<SweepRow> run_scenario(const Scenario& scenario, const SystemConfig& config,
                                   const RunOptions& options = {});

} // namespace fdmimo
