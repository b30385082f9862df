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
#include "fdmimo/experiments.hpp"

#include <cmath>
#include <sstream>

#include "fdmimo/channel.hpp"
#include "fdmimo/closedform.hpp"
#include "fdmimo/errors.hpp"
#include "fdmimo/estimation.hpp"
#include "fdmimo/metrics.hpp"

namespace fdmimo {

std::string_view to_string(ScenarioName name)
{
    switch (name) {
    case ScenarioName::FigPerfect:
        return "fig-perfect";
    case ScenarioName::FigImperfectSi:
        return "fig-imperfect-si";
    case ScenarioName::FigCorrelated:
        return "fig-correlated";
    case ScenarioName::Custom:
        return "custom";
    }
    return "unknown";
}

std::string_view to_string(SweepVariable v)
{
    return v == SweepVariable::RhoDlDb ? "rho_dl_db" : "rho_si_db";
}

std::string_view to_string(RunMode mode)
{
    switch (mode) {
    case RunMode::NoSic:
        return "nosic";
    case RunMode::Subtraction:
        return "stt";
    case RunMode::SpatialSuppression:
        return "sps";
    case RunMode::HalfDuplex:
        return "hd";
    }
    return "unknown";
}

ScenarioName parse_scenario_name(std::string_view s)
{
    for (ScenarioName n :
         {ScenarioName::FigPerfect, ScenarioName::FigImperfectSi, ScenarioName::FigCorrelated, ScenarioName::Custom})
        if (s == to_string(n))
            return n;
    throw ConfigError("unknown scenario '" + std::string(s) +
                      "' (expected fig-perfect, fig-imperfect-si, fig-correlated or custom)");
}

SweepVariable parse_sweep_variable(std::string_view s)
{
    if (s == "rho_dl_db")
        return SweepVariable::RhoDlDb;
    if (s == "rho_si_db")
        return SweepVariable::RhoSiDb;
    throw ConfigError("unknown sweep variable '" + std::string(s) + "' (expected rho_dl_db or rho_si_db)");
}

RunMode parse_run_mode(std::string_view s)
{
    if (s == "nosic" || s == "passive-anc")
        return RunMode::NoSic;
    if (s == "stt")
        return RunMode::Subtraction;
    if (s == "sps")
        return RunMode::SpatialSuppression;
    if (s == "hd")
        return RunMode::HalfDuplex;
    throw ConfigError("unknown mode '" + std::string(s) + "' (expected nosic, stt, sps or hd)");
}

std::vector<RunMode> parse_run_modes(std::string_view list)
{
    std::vector<RunMode> modes;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const std::size_t comma = list.find(',', pos);
        std::string_view item = list.substr(pos, comma == std::string_view::npos ? list.size() - pos : comma - pos);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        const RunMode m = parse_run_mode(item);
        for (RunMode existing : modes)
            if (existing == m)
                throw ConfigError("mode '" + std::string(item) + "' listed twice");
        modes.push_back(m);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return modes;
}

std::string format_run_modes(const std::vector<RunMode>& modes)
{
    std::string out;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (i > 0)
            out += ',';
        out += to_string(modes[i]);
    }
    return out;
}

std::vector<double> Scenario::sweep_points() const
{
    validate();
    const auto count = static_cast<std::size_t>(std::floor((sweep_stop - sweep_start) / sweep_step + 1e-9)) + 1;
    std::vector<double> xs;
    xs.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        xs.push_back(sweep_start + static_cast<double>(i) * sweep_step);
    return xs;
}

void Scenario::validate() const
{
    if (!std::isfinite(sweep_start) || !std::isfinite(sweep_stop) || !std::isfinite(sweep_step))
        throw ConfigError("invalid scenario: sweep bounds must be finite");
    if (!(sweep_step > 0.0))
        throw ConfigError("invalid scenario: sweep_step > 0 violated");
    if (!(sweep_start <= sweep_stop))
        throw ConfigError("invalid scenario: sweep_start <= sweep_stop violated");
    if (modes.empty())
        throw ConfigError("invalid scenario: at least one mode is required");
    if (trials < 1)
        throw ConfigError("invalid scenario: trials >= 1 violated");
    if (correlated) {
        if (!(kappa >= 0.0) || !(sigma_si >= 0.0))
            throw ConfigError("invalid scenario: kappa >= 0 and sigma_si >= 0 required");
        if (!(carrier_hz > 0.0))
            throw ConfigError("invalid scenario: carrier_hz > 0 violated");
    }
}

Scenario preset(ScenarioName name)
{
    Scenario s;
    s.name = name;
    switch (name) {
    case ScenarioName::FigPerfect:
    case ScenarioName::Custom:
        break;
    case ScenarioName::FigImperfectSi:
        // rho_SI from 30 to 70 dB puts rho_SI / alpha_anc at -10 .. 30 dB.
        s.sweep_variable = SweepVariable::RhoSiDb;
        s.sweep_start = 30.0;
        s.sweep_stop = 70.0;
        s.perfect_csi = false;
        break;
    case ScenarioName::FigCorrelated:
        s.modes = {RunMode::Subtraction, RunMode::SpatialSuppression};
        s.trials = 5000;
        s.perfect_csi = false;
        s.correlated = true;
        break;
    }
    return s;
}

SystemConfig default_config()
{
    return SystemConfig{};
}

SystemConfig at_sweep_point(const SystemConfig& config, SweepVariable variable, double x_db)
{
    SystemConfig c = config;
    c.rho_t_db = variable == SweepVariable::RhoDlDb ? x_db - config.beta_ue_db : x_db - config.beta_si_db;
    return c;
}

namespace {

EvalMode to_eval_mode(RunMode m)
{
    switch (m) {
    case RunMode::NoSic:
        return {SicMode::NoSic, false};
    case RunMode::Subtraction:
        return {SicMode::Subtraction, false};
    case RunMode::SpatialSuppression:
        return {SicMode::SpatialSuppression, false};
    case RunMode::HalfDuplex:
        return {SicMode::Subtraction, true};
    }
    return {};
}

void fill_closed_form(SweepRow& row, RunMode mode, const Scenario& scenario, const SystemConfig& cfg)
{
    if (scenario.correlated)
        return;
    if (scenario.perfect_csi) {
        if (mode == RunMode::HalfDuplex) {
            const ClosedFormPoint p = rate_perfect(SicMode::Subtraction, cfg);
            row.dl_cf = 0.5 * p.dl_rate;
            row.ul_cf = 0.5 * p.ul_rate;
        } else {
            const ClosedFormPoint p = rate_perfect(to_eval_mode(mode).sic, cfg);
            row.dl_cf = p.dl_rate;
            row.ul_cf = p.ul_rate;
        }
        return;
    }
    if (mode == RunMode::HalfDuplex)
        row.ul_cf = 0.5 * cfg.K * std::log2(1.0 + ul_sinr_imperfect_with_leakage(cfg, 0.0));
    else
        row.ul_cf = ul_rate_imperfect(to_eval_mode(mode).sic, cfg);
}

} // namespace

std::vector<SweepRow> run_scenario(const Scenario& scenario, const SystemConfig& config, const RunOptions& options)
{
    scenario.validate();
    config.validate();

    const std::vector<double> xs = scenario.sweep_points();
    std::vector<EvalMode> eval_modes;
    for (RunMode m : scenario.modes)
        eval_modes.push_back(to_eval_mode(m));

    ScenarioKnobs base;
    base.threads = options.threads;
    if (scenario.correlated) {
        const ArrayGeometry geometry = default_geometry(config, scenario.carrier_hz);
        base.correlated = make_correlated_model(config, geometry, RicianParams{scenario.kappa, scenario.sigma_si});
    }

    // grid[m][i] for mode m at sweep point i
    std::vector<std::vector<SweepRow>> grid(scenario.modes.size());
    auto flatten = [&] {
        std::vector<SweepRow> rows;
        for (const auto& per_mode : grid)
            rows.insert(rows.end(), per_mode.begin(), per_mode.end());
        return rows;
    };

    for (double x : xs) {
        try {
            const SystemConfig cfg = at_sweep_point(config, scenario.sweep_variable, x);
            ScenarioKnobs knobs = base;
            knobs.estimation = model_from_config(cfg, scenario.perfect_csi);
            if (knobs.correlated && !scenario.perfect_csi)
                knobs.estimation.si_power = knobs.correlated->si_entry_power();

            const std::vector<RateReport> reports =
                monte_carlo_modes(cfg, eval_modes, knobs, scenario.trials, scenario.master_seed);
            for (std::size_t m = 0; m < scenario.modes.size(); ++m) {
                const RateReport& r = reports[m];
                SweepRow row;
                row.scenario = std::string(to_string(scenario.name));
                row.mode = std::string(to_string(scenario.modes[m]));
                row.x_db = x;
                row.dl_sim = r.dl_sum_rate;
                row.dl_sim_ci = r.dl_ci95;
                row.ul_sim = r.ul_sum_rate;
                row.ul_sim_ci = r.ul_ci95;
                row.trials = r.trials;
                row.failures = r.failures;
                fill_closed_form(row, scenario.modes[m], scenario, cfg);
                grid[m].push_back(std::move(row));
                if (!r.valid() && options.progress)
                    options.progress("warning: " + std::string(to_string(scenario.modes[m])) + " at x=" +
                                     std::to_string(x) + " has " + std::to_string(r.failures) +
                                     " failed trials; estimate flagged invalid");
            }
            if (options.progress) {
                std::ostringstream msg;
                msg << to_string(scenario.name) << ": " << to_string(scenario.sweep_variable) << " = " << x
                    << " dB done (" << scenario.trials << " trials)";
                options.progress(msg.str());
            }
        } catch (const std::exception& e) {
            throw ScenarioAborted(std::string("sweep aborted at x = ") + std::to_string(x) + ": " + e.what(),
                                  flatten());
        }
    }
    return flatten();
}

} // namespace fdmimo
