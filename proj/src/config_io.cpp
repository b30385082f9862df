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
#include "fdmimo/config_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "fdmimo/errors.hpp"

namespace fdmimo {

namespace {

struct Entry {
    std::string value;
    std::size_t line = 0;
    std::size_t column = 0; // 1-based column of the value
};

std::string location(std::string_view source, std::size_t line, std::size_t column)
{
    return std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) + ": ";
}

bool is_key_char(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

constexpr std::array kKnownKeys{
    "M",          "N",           "K",          "rho_t_db",       "beta_ue_db", "beta_si_db",  "rho_ul_db",
    "alpha_anc_db", "nmse",      "scenario",   "sweep_variable", "sweep_start", "sweep_stop", "sweep_step",
    "modes",      "trials",      "seed",       "perfect_csi",    "correlated", "kappa",       "sigma_si",
    "carrier_hz",
};

bool known_key(std::string_view key)
{
    for (const char* k : kKnownKeys)
        if (key == k)
            return true;
    return false;
}

class EntryReader {
public:
    EntryReader(std::string_view source, std::map<std::string, Entry> entries)
        : source_(source), entries_(std::move(entries))
    {
    }

    const Entry* find(const std::string& key) const
    {
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    void real(const std::string& key, double& out) const
    {
        if (const Entry* e = find(key)) {
            double v = 0.0;
            const char* end = e->value.data() + e->value.size();
            auto [ptr, ec] = std::from_chars(e->value.data(), end, v);
            if (ec != std::errc() || ptr != end)
                throw ConfigError(location(source_, e->line, e->column) + "invalid number '" + e->value +
                                  "' for key '" + key + "'");
            out = v;
        }
    }

    template <typename Int> void integer(const std::string& key, Int& out) const
    {
        if (const Entry* e = find(key)) {
            Int v{};
            const char* end = e->value.data() + e->value.size();
            auto [ptr, ec] = std::from_chars(e->value.data(), end, v);
            if (ec != std::errc() || ptr != end)
                throw ConfigError(location(source_, e->line, e->column) + "invalid integer '" + e->value +
                                  "' for key '" + key + "'");
            out = v;
        }
    }

    void boolean(const std::string& key, bool& out) const
    {
        if (const Entry* e = find(key)) {
            if (e->value == "true" || e->value == "1")
                out = true;
            else if (e->value == "false" || e->value == "0")
                out = false;
            else
                throw ConfigError(location(source_, e->line, e->column) + "invalid boolean '" + e->value +
                                  "' for key '" + key + "' (expected true or false)");
        }
    }

    template <typename Fn> void text(const std::string& key, Fn&& apply) const
    {
        if (const Entry* e = find(key)) {
            try {
                apply(e->value);
            } catch (const ConfigError& err) {
                throw ConfigError(location(source_, e->line, e->column) + err.what());
            }
        }
    }

private:
    std::string_view source_;
    std::map<std::string, Entry> entries_;
};

std::string format_real(double v)
{
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

} // namespace

LoadedConfig parse_config(std::string_view text, std::string_view source, std::optional<ScenarioName> scenario_override)
{
    std::map<std::string, Entry> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF"))
            line.remove_prefix(3);
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        if (i == line.size())
            continue;

        const std::size_t key_begin = i;
        while (i < line.size() && is_key_char(line[i]))
            ++i;
        const std::string key(line.substr(key_begin, i - key_begin));
        if (key.empty())
            throw ConfigError(location(source, line_no, key_begin + 1) + "expected a key");
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        if (i == line.size() || line[i] != '=')
            throw ConfigError(location(source, line_no, i + 1) + "expected '=' after key '" + key + "'");
        ++i;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t end = line.size();
        while (end > i && (line[end - 1] == ' ' || line[end - 1] == '\t'))
            --end;
        if (end == i)
            throw ConfigError(location(source, line_no, i + 1) + "missing value for key '" + key + "'");

        if (!known_key(key))
            throw ConfigError(location(source, line_no, key_begin + 1) + "unknown key '" + key + "'");
        if (entries.contains(key))
            throw ConfigError(location(source, line_no, key_begin + 1) + "duplicate key '" + key + "'");
        entries.emplace(key, Entry{std::string(line.substr(i, end - i)), line_no, i + 1});
    }

    const EntryReader reader(source, std::move(entries));

    std::optional<ScenarioName> file_scenario;
    reader.text("scenario", [&](const std::string& v) { file_scenario = parse_scenario_name(v); });
    if (scenario_override && file_scenario && *scenario_override != *file_scenario) {
        const Entry* e = reader.find("scenario");
        throw ConfigError(location(source, e->line, e->column) + "config selects scenario '" +
                          std::string(to_string(*file_scenario)) + "' but '" +
                          std::string(to_string(*scenario_override)) + "' was requested");
    }

    LoadedConfig out{default_config(), preset(scenario_override.value_or(file_scenario.value_or(ScenarioName::FigPerfect)))};
    SystemConfig& sys = out.system;
    reader.integer("M", sys.M);
    reader.integer("N", sys.N);
    reader.integer("K", sys.K);
    reader.real("rho_t_db", sys.rho_t_db);
    reader.real("beta_ue_db", sys.beta_ue_db);
    reader.real("beta_si_db", sys.beta_si_db);
    reader.real("rho_ul_db", sys.rho_ul_db);
    reader.real("alpha_anc_db", sys.alpha_anc_db);
    reader.real("nmse", sys.nmse);

    Scenario& sc = out.scenario;
    reader.text("sweep_variable", [&](const std::string& v) { sc.sweep_variable = parse_sweep_variable(v); });
    reader.real("sweep_start", sc.sweep_start);
    reader.real("sweep_stop", sc.sweep_stop);
    reader.real("sweep_step", sc.sweep_step);
    reader.text("modes", [&](const std::string& v) { sc.modes = parse_run_modes(v); });
    reader.integer("trials", sc.trials);
    reader.integer("seed", sc.master_seed);
    reader.boolean("perfect_csi", sc.perfect_csi);
    reader.boolean("correlated", sc.correlated);
    reader.real("kappa", sc.kappa);
    reader.real("sigma_si", sc.sigma_si);
    reader.real("carrier_hz", sc.carrier_hz);

    sys.validate();
    sc.validate();
    return out;
}

LoadedConfig load_config(const std::filesystem::path& path, std::optional<ScenarioName> scenario_override)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.string(), scenario_override);
}

std::string format_config(const SystemConfig& system, const Scenario& scenario)
{
    std::ostringstream out;
    out << "# system\n";
    out << "M = " << system.M << '\n';
    out << "N = " << system.N << '\n';
    out << "K = " << system.K << '\n';
    out << "rho_t_db = " << format_real(system.rho_t_db) << '\n';
    out << "beta_ue_db = " << format_real(system.beta_ue_db) << '\n';
    out << "beta_si_db = " << format_real(system.beta_si_db) << '\n';
    out << "rho_ul_db = " << format_real(system.rho_ul_db) << '\n';
    out << "alpha_anc_db = " << format_real(system.alpha_anc_db) << '\n';
    out << "nmse = " << format_real(system.nmse) << '\n';
    out << "\n# scenario\n";
    out << "scenario = " << to_string(scenario.name) << '\n';
    out << "sweep_variable = " << to_string(scenario.sweep_variable) << '\n';
    out << "sweep_start = " << format_real(scenario.sweep_start) << '\n';
    out << "sweep_stop = " << format_real(scenario.sweep_stop) << '\n';
    out << "sweep_step = " << format_real(scenario.sweep_step) << '\n';
    out << "modes = " << format_run_modes(scenario.modes) << '\n';
    out << "trials = " << scenario.trials << '\n';
    out << "seed = " << scenario.master_seed << '\n';
    out << "perfect_csi = " << (scenario.perfect_csi ? "true" : "false") << '\n';
    out << "correlated = " << (scenario.correlated ? "true" : "false") << '\n';
    out << "kappa = " << format_real(scenario.kappa) << '\n';
    out << "sigma_si = " << format_real(scenario.sigma_si) << '\n';
    out << "carrier_hz = " << format_real(scenario.carrier_hz) << '\n';
    return out.str();
}

void save_config(const std::filesystem::path& path, const SystemConfig& system, const Scenario& scenario)
{
    std::ofstream out(path, std::ios::binary);
    out << format_config(system, scenario);
    if (!out)
        throw std::runtime_error("cannot write config file '" + path.string() + "'");
}

} // namespace fdmimo
