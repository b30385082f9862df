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
#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fdmimo/closedform.hpp"
#include "fdmimo/config_io.hpp"
#include "fdmimo/csv.hpp"
#include "fdmimo/errors.hpp"
#include "fdmimo/experiments.hpp"

using namespace fdmimo;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::string config_error(std::string_view text)
{
    try {
        parse_config(text, "test.cfg");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("fdmimo_test_" + name);
}

} // namespace

TEST_CASE("system config defaults and invariants")
{
    const SystemConfig cfg = default_config();
    CHECK(cfg.M == 64);
    CHECK(cfg.N == 20);
    CHECK(cfg.K == 10);
    CHECK(cfg.L() == 84);
    CHECK(cfg.rho_ul_db == 10.0);
    CHECK(cfg.beta_si_db == -40.0);
    CHECK(cfg.beta_ue_db == -80.0);
    CHECK(cfg.alpha_anc_db == 40.0);
    CHECK(cfg.nmse == 0.2);

    SystemConfig c = cfg;
    c.rho_t_db = 50.0;
    CHECK_THAT(linear_to_db(c.rho_si()), WithinAbs(10.0, 1e-12));

    c = cfg;
    c.M = 29;
    CHECK_THROWS_WITH(c.validate(), ContainsSubstring("M >= N + K"));
    c = cfg;
    c.N = 10;
    CHECK_THROWS_WITH(c.validate(), ContainsSubstring("N > K"));
    c = cfg;
    c.K = 0;
    CHECK_THROWS_WITH(c.validate(), ContainsSubstring("K >= 1"));
    c = cfg;
    c.nmse = -0.1;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = cfg;
    c.rho_ul_db = NAN;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.rho_ul_db = -INFINITY;
    CHECK_NOTHROW(c.validate());
    c.alpha_anc_db = -INFINITY;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("scenario presets and sweeps")
{
    const Scenario perfect = preset(ScenarioName::FigPerfect);
    const std::vector<double> xs = perfect.sweep_points();
    REQUIRE(xs.size() == 16);
    CHECK(xs.front() == 0.0);
    CHECK(xs.back() == 30.0);
    CHECK(perfect.perfect_csi);

    const Scenario imperfect = preset(ScenarioName::FigImperfectSi);
    CHECK(imperfect.sweep_variable == SweepVariable::RhoSiDb);
    CHECK_FALSE(imperfect.perfect_csi);
    const std::vector<double> si = imperfect.sweep_points();
    REQUIRE(si.size() == 21);
    CHECK_THAT(at_sweep_point(default_config(), SweepVariable::RhoSiDb, si.front()).si_to_noise(),
               WithinRel(0.1, 1e-12));
    CHECK_THAT(at_sweep_point(default_config(), SweepVariable::RhoSiDb, si.back()).si_to_noise(),
               WithinRel(1000.0, 1e-12));

    const Scenario corr = preset(ScenarioName::FigCorrelated);
    CHECK(corr.correlated);
    CHECK(corr.kappa == 1.0);
    CHECK(corr.sigma_si == 1.0);
    CHECK(corr.carrier_hz == 2.1e9);
    CHECK(corr.trials == 5000);

    const SystemConfig at = at_sweep_point(default_config(), SweepVariable::RhoDlDb, 12.0);
    CHECK_THAT(linear_to_db(at.rho_dl()), WithinAbs(12.0, 1e-12));

    Scenario bad = perfect;
    bad.sweep_step = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = perfect;
    bad.trials = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("names round trip")
{
    for (ScenarioName n : {ScenarioName::FigPerfect, ScenarioName::FigImperfectSi, ScenarioName::FigCorrelated,
                           ScenarioName::Custom})
        CHECK(parse_scenario_name(to_string(n)) == n);
    CHECK(parse_run_modes("nosic,stt,sps,hd") ==
          std::vector<RunMode>{RunMode::NoSic, RunMode::Subtraction, RunMode::SpatialSuppression,
                               RunMode::HalfDuplex});
    CHECK(parse_run_mode("passive-anc") == RunMode::NoSic);
    CHECK(format_run_modes({RunMode::SpatialSuppression, RunMode::HalfDuplex}) == "sps,hd");
    CHECK_THROWS_AS(parse_run_modes("stt,stt"), ConfigError);
    CHECK_THROWS_AS(parse_run_mode("magic"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_name("fig-9"), ConfigError);
}

TEST_CASE("run_scenario rows")
{
    Scenario s = preset(ScenarioName::FigPerfect);
    s.sweep_stop = 20.0;
    s.sweep_step = 5.0;
    s.trials = 40;
    RunOptions ro;
    ro.threads = 1;
    const std::vector<SweepRow> rows = run_scenario(s, default_config(), ro);
    REQUIRE(rows.size() == 15);
    // mode-major, x ascending
    CHECK(rows[0].mode == "nosic");
    CHECK(rows[4].x_db == 20.0);
    CHECK(rows[5].mode == "stt");
    CHECK(rows[5].x_db == 0.0);
    CHECK(rows[14].mode == "sps");
    for (const SweepRow& r : rows) {
        CHECK(r.scenario == "fig-perfect");
        CHECK(r.trials == 40);
        CHECK(r.failures == 0);
        CHECK(r.dl_sim >= 0.0);
        CHECK(r.ul_sim >= 0.0);
        REQUIRE(r.dl_cf.has_value());
        REQUIRE(r.ul_cf.has_value());
    }
    CHECK_THAT(*rows[5].dl_cf, WithinRel(27.004397181410923, 1e-12));

    SECTION("imperfect rows carry only the uplink closed form")
    {
        Scenario im = preset(ScenarioName::FigImperfectSi);
        im.sweep_step = 20.0;
        im.trials = 20;
        im.modes = {RunMode::Subtraction, RunMode::HalfDuplex};
        const std::vector<SweepRow> ir = run_scenario(im, default_config(), ro);
        REQUIRE(ir.size() == 6);
        for (const SweepRow& r : ir) {
            CHECK_FALSE(r.dl_cf.has_value());
            CHECK(r.ul_cf.has_value());
        }
        const SystemConfig at = at_sweep_point(default_config(), SweepVariable::RhoSiDb, 50.0);
        CHECK(*ir[1].ul_cf == ul_rate_imperfect(SicMode::Subtraction, at));
    }

    SECTION("correlated rows carry no closed form")
    {
        Scenario c = preset(ScenarioName::FigCorrelated);
        c.sweep_stop = 2.0;
        c.trials = 10;
        const std::vector<SweepRow> cr = run_scenario(c, default_config(), ro);
        REQUIRE(cr.size() == 4);
        for (const SweepRow& r : cr) {
            CHECK_FALSE(r.dl_cf.has_value());
            CHECK_FALSE(r.ul_cf.has_value());
        }
    }

    SECTION("same seed twice gives identical CSV")
    {
        CHECK(format_csv(run_scenario(s, default_config(), ro)) == format_csv(rows));
        ro.threads = 3;
        CHECK(format_csv(run_scenario(s, default_config(), ro)) == format_csv(rows));
    }
}

TEST_CASE("config parsing")
{
    const LoadedConfig empty = parse_config("");
    CHECK(empty.system == default_config());
    CHECK(empty.scenario == preset(ScenarioName::FigPerfect));

    const LoadedConfig c = parse_config("# comment\nM = 80\n  nmse=0.35  # trailing\nmodes = stt,sps\n"
                                        "scenario = fig-imperfect-si\r\ntrials = 123\nperfect_csi = true\n");
    CHECK(c.system.M == 80);
    CHECK(c.system.nmse == 0.35);
    CHECK(c.scenario.name == ScenarioName::FigImperfectSi);
    CHECK(c.scenario.sweep_variable == SweepVariable::RhoSiDb);
    CHECK(c.scenario.trials == 123);
    CHECK(c.scenario.perfect_csi);
    CHECK(c.scenario.modes == std::vector<RunMode>{RunMode::Subtraction, RunMode::SpatialSuppression});

    CHECK_THAT(config_error("M = 64\nbogus = 1\n"), ContainsSubstring("test.cfg:2:1"));
    CHECK_THAT(config_error("M = 64\nbogus = 1\n"), ContainsSubstring("unknown key 'bogus'"));
    CHECK_THAT(config_error("M = 29\n"), ContainsSubstring("M >= N + K"));
    CHECK(config_error("M = 30\n").empty());
    CHECK_THAT(config_error("K = 10\nK = 11\n"), ContainsSubstring("duplicate key"));
    CHECK_THAT(config_error("nmse 0.2\n"), ContainsSubstring("expected '='"));
    CHECK_THAT(config_error("nmse =\n"), ContainsSubstring("missing value"));
    CHECK_THAT(config_error("nmse = abc\n"), ContainsSubstring("test.cfg:1:8"));
    CHECK_THAT(config_error("M = 6.5\n"), ContainsSubstring("invalid integer"));
    CHECK_THAT(config_error("correlated = maybe\n"), ContainsSubstring("invalid boolean"));

    // an explicit scenario override supplies the preset, and conflicts are reported
    const LoadedConfig o = parse_config("trials = 7\n", "x", ScenarioName::FigCorrelated);
    CHECK(o.scenario.correlated);
    CHECK(o.scenario.trials == 7);
    CHECK_THROWS_AS(parse_config("scenario = fig-perfect\n", "x", ScenarioName::FigCorrelated), ConfigError);
}

TEST_CASE("config save and load round trip")
{
    SystemConfig sys = default_config();
    sys.nmse = 0.2;
    sys.rho_t_db = 77.123456789012345;
    Scenario sc = preset(ScenarioName::FigCorrelated);
    sc.sweep_step = 0.1;
    sc.master_seed = 18446744073709551615ULL;
    const std::filesystem::path p = temp_path("roundtrip.cfg");
    save_config(p, sys, sc);
    const LoadedConfig back = load_config(p);
    CHECK(back.system == sys);
    CHECK(back.scenario == sc);
    CHECK(std::bit_cast<std::uint64_t>(back.system.nmse) == std::bit_cast<std::uint64_t>(0.2));
    std::filesystem::remove(p);

    CHECK_THROWS_AS(load_config(temp_path("does-not-exist.cfg")), ConfigError);
}

TEST_CASE("CSV output")
{
    CHECK(format_csv({}) == std::string(kCsvHeader) + "\n");

    SweepRow r;
    r.scenario = "fig-perfect";
    r.mode = "stt";
    r.x_db = 2.0;
    r.dl_sim = 27.004397181410923;
    r.dl_sim_ci = 0.0344997;
    r.ul_sim = 1.0 / 3.0;
    r.ul_sim_ci = 1e-7;
    r.ul_cf = 67.94415866350106;
    r.trials = 10000;
    r.failures = 0;
    const std::string text = format_csv({r});
    CHECK(text == std::string(kCsvHeader) + "\nfig-perfect,stt,2,27.0044,0.0344997,0.333333,1e-07,,67.9442,10000,0\n");
    CHECK(text.find('\r') == std::string::npos);

    const std::vector<SweepRow> back = parse_csv(text);
    REQUIRE(back.size() == 1);
    CHECK(back[0].mode == "stt");
    CHECK_THAT(back[0].dl_sim, WithinRel(r.dl_sim, 5e-6));
    CHECK_THAT(back[0].ul_sim, WithinRel(r.ul_sim, 5e-6));
    CHECK_FALSE(back[0].dl_cf.has_value());
    CHECK_THAT(*back[0].ul_cf, WithinRel(*r.ul_cf, 5e-6));
    CHECK(back[0].trials == 10000);
    CHECK(format_csv(back) == text);

    const std::filesystem::path p = temp_path("rows.csv");
    emit_csv({r}, p);
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == text);
    std::filesystem::remove(p);

    CHECK_THROWS_WITH(emit_csv({r}, "/nonexistent-dir/x.csv"), ContainsSubstring("/nonexistent-dir/x.csv"));
    CHECK_THROWS(parse_csv("wrong,header\n"));
}
