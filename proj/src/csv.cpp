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
#include "fdmimo/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fdmimo {

namespace {

std::string real6(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = line.find(sep, pos);
        out.push_back(line.substr(pos, next == std::string_view::npos ? line.size() - pos : next - pos));
        if (next == std::string_view::npos)
            return out;
        pos = next + 1;
    }
}

double to_real(std::string_view s)
{
    return std::stod(std::string(s));
}

} // namespace

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out)
{
    out << kCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        out << r.scenario << ',' << r.mode << ',' << real6(r.x_db) << ',' << real6(r.dl_sim) << ','
            << real6(r.dl_sim_ci) << ',' << real6(r.ul_sim) << ',' << real6(r.ul_sim_ci) << ','
            << (r.dl_cf ? real6(*r.dl_cf) : "") << ',' << (r.ul_cf ? real6(*r.ul_cf) : "") << ',' << r.trials << ','
            << r.failures << '\n';
    }
}

std::string format_csv(const std::vector<SweepRow>& rows)
{
    std::ostringstream out;
    write_csv(rows, out);
    return out.str();
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_csv(rows, out);
    out.flush();
    if (!out)
        throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<SweepRow> parse_csv(std::string_view text)
{
    std::vector<SweepRow> rows;
    bool header = true;
    for (std::string_view line : split(text, '\n')) {
        if (line.empty())
            continue;
        if (header) {
            if (line != kCsvHeader)
                throw std::runtime_error("parse_csv: unexpected header");
            header = false;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 11)
            throw std::runtime_error("parse_csv: expected 11 fields, got " + std::to_string(f.size()));
        SweepRow r;
        r.scenario = std::string(f[0]);
        r.mode = std::string(f[1]);
        r.x_db = to_real(f[2]);
        r.dl_sim = to_real(f[3]);
        r.dl_sim_ci = to_real(f[4]);
        r.ul_sim = to_real(f[5]);
        r.ul_sim_ci = to_real(f[6]);
        if (!f[7].empty())
            r.dl_cf = to_real(f[7]);
        if (!f[8].empty())
            r.ul_cf = to_real(f[8]);
        r.trials = std::stoull(std::string(f[9]));
        r.failures = std::stoull(std::string(f[10]));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace fdmimo
