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

#include "fdmimo/closedform.hpp"
#include "fdmimo/errors.hpp"

using namespace fdmimo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// rho_SI / alpha_anc = 1 (0 dB) with the default geometry of the system
SystemConfig unit_si()
{
    SystemConfig cfg;
    cfg.rho_t_db = 80.0;
    cfg.beta_si_db = -40.0;
    cfg.alpha_anc_db = 40.0;
    return cfg;
}

} // namespace

TEST_CASE("perfect-CSI rates")
{
    const SystemConfig cfg;
    const ClosedFormPoint stt = rate_perfect_at(SicMode::Subtraction, cfg, 1.0);
    CHECK_THAT(stt.dl_rate, WithinRel(27.004397181410923, 1e-13));
    CHECK_THAT(stt.ul_rate, WithinRel(67.94415866350106, 1e-13));
    CHECK(stt.omega_bar == 0.0);

    const ClosedFormPoint sps = rate_perfect_at(SicMode::SpatialSuppression, cfg, 1.0);
    CHECK_THAT(sps.dl_rate, WithinRel(21.69925001442312, 1e-13));
    CHECK(sps.ul_rate == stt.ul_rate);

    // passive cancellation only: the SI-to-noise ratio enters the uplink term
    const ClosedFormPoint nosic = rate_perfect_at(SicMode::NoSic, cfg, 1.0);
    CHECK(nosic.dl_rate == stt.dl_rate);
    CHECK_THAT(nosic.ul_rate, WithinRel(58.07354922057604, 1e-13));

    SystemConfig silent = cfg;
    silent.rho_ul_db = -INFINITY;
    for (SicMode m : {SicMode::NoSic, SicMode::Subtraction, SicMode::SpatialSuppression}) {
        const ClosedFormPoint p = rate_perfect_at(m, silent, 0.0);
        CHECK(p.dl_rate == 0.0);
        CHECK(p.ul_rate == 0.0);
    }

    // default config: rho_DL = rho_t * beta_UE = 1
    CHECK(rate_perfect(SicMode::Subtraction, cfg).dl_rate == stt.dl_rate);
}

TEST_CASE("perfect-CSI ordering")
{
    for (double rho_t_db = 60.0; rho_t_db <= 120.0; rho_t_db += 5.0) {
        SystemConfig cfg;
        cfg.rho_t_db = rho_t_db;
        const ClosedFormPoint stt = rate_perfect(SicMode::Subtraction, cfg);
        const ClosedFormPoint sps = rate_perfect(SicMode::SpatialSuppression, cfg);
        CHECK(stt.dl_rate > sps.dl_rate);
        CHECK(stt.ul_rate == sps.ul_rate);
    }
}

TEST_CASE("expected residual SI power")
{
    const SystemConfig cfg;
    CHECK(combiner_norm_mean(cfg) == 0.1);
    CHECK(expected_si_power(SicMode::Subtraction, cfg, true) == 0.0);
    CHECK(expected_si_power(SicMode::SpatialSuppression, cfg, true) == 0.0);
    CHECK_THAT(expected_si_power(SicMode::Subtraction, cfg, false), WithinRel(0.02, 1e-14));
    CHECK_THAT(expected_si_power(SicMode::SpatialSuppression, cfg, false), WithinRel(1.0 / 60.0, 1e-14));
    CHECK_THAT(expected_si_power(SicMode::NoSic, cfg, false), WithinRel(0.1, 1e-14));

    CHECK(si_leakage_factor(SicMode::NoSic, 0.3) == 1.0);
    CHECK(si_leakage_factor(SicMode::Subtraction, 0.3) == 0.3);
    CHECK(si_leakage_factor(SicMode::SpatialSuppression, 0.0) == 0.0);
    CHECK_THAT(si_leakage_factor(SicMode::SpatialSuppression, 1e12), WithinRel(1.0, 1e-11));
}

TEST_CASE("imperfect-CSI uplink SINR")
{
    const SystemConfig cfg = unit_si();
    REQUIRE_THAT(cfg.si_to_noise(), WithinRel(1.0, 1e-14));
    CHECK_THAT(ul_sinr_imperfect(SicMode::NoSic, cfg), WithinRel(33.11258278145695, 1e-13));
    CHECK_THAT(ul_sinr_imperfect(SicMode::Subtraction, cfg), WithinRel(45.20795660036167, 1e-13));
    CHECK_THAT(ul_sinr_imperfect(SicMode::SpatialSuppression, cfg), WithinRel(45.90665646518745, 1e-13));
    CHECK_THAT(ul_rate_imperfect(SicMode::NoSic, cfg), WithinRel(50.922320853982114, 1e-13));

    SystemConfig quiet = cfg;
    quiet.alpha_anc_db = 400.0;
    for (SicMode m : {SicMode::NoSic, SicMode::Subtraction, SicMode::SpatialSuppression})
        CHECK_THAT(ul_sinr_imperfect(m, quiet), WithinRel(49.75124378109453, 1e-12));

    SystemConfig exact = cfg;
    exact.nmse = 0.0;
    CHECK(ul_sinr_imperfect(SicMode::Subtraction, exact) == ul_sinr_imperfect_with_leakage(exact, 0.0));
    CHECK(ul_sinr_imperfect(SicMode::SpatialSuppression, exact) == ul_sinr_imperfect_with_leakage(exact, 0.0));
    CHECK_THAT(ul_sinr_imperfect_with_leakage(exact, 0.0), WithinRel(49.75124378109453, 1e-13));

    SystemConfig dark = cfg;
    dark.rho_ul_db = -300.0;
    CHECK(ul_rate_imperfect(SicMode::Subtraction, dark) < 1e-50);
}

TEST_CASE("imperfect-CSI ordering across the SI range")
{
    for (double nmse : {0.01, 0.2, 0.5, 0.9})
        for (double rho_t_db = 60.0; rho_t_db <= 120.0; rho_t_db += 4.0) {
            SystemConfig cfg;
            cfg.nmse = nmse;
            cfg.rho_t_db = rho_t_db;
            const double n = ul_sinr_imperfect(SicMode::NoSic, cfg);
            const double s = ul_sinr_imperfect(SicMode::Subtraction, cfg);
            const double p = ul_sinr_imperfect(SicMode::SpatialSuppression, cfg);
            CHECK(p > s);
            CHECK(s > n);
        }
}

TEST_CASE("closed forms validate the configuration")
{
    SystemConfig bad;
    bad.N = 10;
    CHECK_THROWS_AS(rate_perfect(SicMode::Subtraction, bad), ConfigError);
    CHECK_THROWS_AS(ul_sinr_imperfect(SicMode::NoSic, bad), ConfigError);
}
