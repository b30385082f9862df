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
#include "fdmimo/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>

#include "fdmimo/acceptance.hpp"
#include "fdmimo/config_io.hpp"
#include "fdmimo/csv.hpp"
#include "fdmimo/diagnostics.hpp"
#include "fdmimo/errors.hpp"
#include "fdmimo/experiments.hpp"

namespace fdmimo {

namespace {

struct Flags {
    std::string scenario;
    std::string config_path;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    std::string output = "-";
    std::string modes;
    unsigned threads = 0;
};

LoadedConfig resolve(const Flags& f)
{
    std::optional<ScenarioName> name;
    if (!f.scenario.empty())
        name = parse_scenario_name(f.scenario);
    LoadedConfig cfg = f.config_path.empty() ? parse_config("", "<defaults>", name) : load_config(f.config_path, name);
    if (f.trials)
        cfg.scenario.trials = *f.trials;
    if (f.seed)
        cfg.scenario.master_seed = *f.seed;
    if (!f.modes.empty())
        cfg.scenario.modes = parse_run_modes(f.modes);
    cfg.scenario.validate();
    return cfg;
}

int do_run(const Flags& f, std::ostream& out, std::ostream& err)
{
    const LoadedConfig cfg = resolve(f);
    if (cfg.scenario.trials < 100)
        warn("trials = " + std::to_string(cfg.scenario.trials) + " gives loose confidence intervals");
    RunOptions ro;
    ro.threads = f.threads;
    ro.progress = [&err](std::string_view msg) { err << msg << '\n'; };

    auto write = [&](const std::vector<SweepRow>& rows) {
        if (f.output == "-")
            write_csv(rows, out);
        else
            emit_csv(rows, f.output);
    };
    try {
        write(run_scenario(cfg.scenario, cfg.system, ro));
    } catch (const ScenarioAborted& e) {
        write(e.partial_rows());
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

int do_check(const Flags& f, std::ostream& out, std::ostream& err)
{
    acceptance::Options opt;
    if (f.trials)
        opt.trials = *f.trials;
    if (f.seed)
        opt.seed = *f.seed;
    opt.threads = f.threads;
    opt.progress = [&err](std::string_view msg) { err << msg << '\n'; };
    bool all = true;
    acceptance::run_all(opt, [&](const acceptance::CriterionResult& r) {
        out << acceptance::format_result(r) << '\n' << std::flush;
        all = all && r.passed;
    });
    return all ? 0 : 2;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Full-duplex large-scale MIMO self-interference cancellation simulator", "fdmimo"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* run = app.add_subcommand("run", "Run a sweep scenario and write CSV");
    run->add_option("--scenario", f.scenario, "fig-perfect, fig-imperfect-si, fig-correlated or custom")->required();
    run->add_option("--config", f.config_path, "key = value configuration file");
    run->add_option("--trials", f.trials, "Monte Carlo trials per sweep point");
    run->add_option("--seed", f.seed, "master seed");
    run->add_option("--output", f.output, "output path, or - for standard output");
    run->add_option("--modes", f.modes, "comma list of nosic,stt,sps,hd");
    run->add_option("--threads", f.threads, "worker threads (0 = all cores)");

    CLI::App* check = app.add_subcommand("check", "Run the closed-form-vs-simulation acceptance suite");
    check->add_option("--trials", f.trials, "base trials per operating point");
    check->add_option("--seed", f.seed, "master seed");
    check->add_option("--threads", f.threads, "worker threads (0 = all cores)");

    CLI::App* print = app.add_subcommand("print-config", "Print the effective configuration");
    print->add_option("--config", f.config_path, "key = value configuration file");
    print->add_option("--scenario", f.scenario, "scenario preset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return 1;
    }

    // route diagnostics to the caller's error stream for the duration of the call
    struct SinkGuard {
        DiagnosticSink previous;
        ~SinkGuard() { set_diagnostic_sink(std::move(previous)); }
    } guard{set_diagnostic_sink([&err](std::string_view msg) { err << "warning: " << msg << '\n'; })};

    try {
        if (run->parsed())
            return do_run(f, out, err);
        if (check->parsed())
            return do_check(f, out, err);
        const LoadedConfig cfg = resolve(f);
        out << format_config(cfg.system, cfg.scenario);
        return 0;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace fdmimo
