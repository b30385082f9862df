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
#include "fdmimo/closedform.hpp"

#include <cmath>

namespace fdmimo {

ClosedFormPoint rate_perfect_at(SicMode mode, const SystemConfig& config, double rho_dl)
{
    config.validate();
    const double k = config.K;
    const double m = config.M;
    const double n = config.N;
    const double rho_ul = config.rho_ul();

    const double dl_gain = mode == SicMode::SpatialSuppression ? m - n - k + 1.0 : m - k + 1.0;
    double ul_sinr = rho_ul * (n - k + 1.0);
    if (mode == SicMode::NoSic)
        ul_sinr /= config.si_to_noise() + 1.0;

    ClosedFormPoint p;
    p.dl_rate = k * std::log2(1.0 + rho_dl * dl_gain / k);
    p.ul_rate = k * std::log2(1.0 + ul_sinr);
    p.ul_sinr = ul_sinr;
    p.omega_bar = expected_si_power(mode, config, true);
    return p;
}

ClosedFormPoint rate_perfect(SicMode mode, const SystemConfig& config)
{
    return rate_perfect_at(mode, config, config.rho_dl());
}

double combiner_norm_mean(const SystemConfig& config)
{
    return 1.0 / (config.N - config.K);
}

double si_leakage_factor(SicMode mode, double eps2_si)
{
    switch (mode) {
    case SicMode::NoSic:
        return 1.0;
    case SicMode::Subtraction:
        return eps2_si;
    case SicMode::SpatialSuppression:
        return eps2_si > 0.0 ? 1.0 / (1.0 / eps2_si + 1.0) : 0.0;
    }
    return 1.0;
}

double expected_si_power(SicMode mode, const SystemConfig& config, bool perfect)
{
    config.validate();
    if (perfect && mode != SicMode::NoSic)
        return 0.0;
    return si_leakage_factor(mode, config.nmse) * combiner_norm_mean(config);
}

double ul_sinr_imperfect_with_leakage(const SystemConfig& config, double chi)
{
    config.validate();
    const double k = config.K;
    const double rho = config.rho_ul();
    const double num = k * rho * rho * (config.N - config.K);
    const double den = 2.0 * k * rho + config.si_to_noise() * chi * (k * rho + 1.0) + 1.0;
    return num / den;
}

double ul_sinr_imperfect(SicMode mode, const SystemConfig& config)
{
    return ul_sinr_imperfect_with_leakage(config, si_leakage_factor(mode, config.nmse));
}

double ul_rate_imperfect(SicMode mode, const SystemConfig& config)
{
    return config.K * std::log2(1.0 + ul_sinr_imperfect(mode, config));
}

} // namespace fdmimo
