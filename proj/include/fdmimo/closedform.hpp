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

#include <optional>

#include "fdmimo/system_config.hpp"
#include "fdmimo/transceiver.hpp"

namespace fdmimo {

/// Closed-form approximations of the ergodic sum rates (bps/Hz).
struct ClosedFormPoint {
    double dl_rate = 0.0;
    double ul_rate = 0.0;
    std::optional<double> ul_sinr;
    std::optional<double> omega_bar;
};

/// Perfect-CSI rates. Downlink: K log2(1 + rho_DL (M-K+1)/K) for the ZF
/// precoder, M-N-K+1 in place of M-K+1 for spatial suppression. Uplink:
/// K log2(1 + rho_UL (N-K+1)), divided by (s + 1) inside the log for NoSic,
/// where s = rho_SI / alpha_anc.
ClosedFormPoint rate_perfect(SicMode mode, const SystemConfig& config);

/// As rate_perfect, with the downlink SNR given explicitly (linear).
ClosedFormPoint rate_perfect_at(SicMode mode, const SystemConfig& config, double rho_dl);

/// E{||w_k||^2} of the ZF combiner on i.i.d. channels, 1/(N-K).
double combiner_norm_mean(const SystemConfig& config);

/// Weight of the SI power that survives cancellation: 1 (NoSic),
/// eps2 (Subtraction), 1/(1/eps2 + 1) (SpatialSuppression).
double si_leakage_factor(SicMode mode, double eps2_si);

/// Expected residual SI power Omega_bar; zero for Subtraction and
/// SpatialSuppression under perfect estimation.
double expected_si_power(SicMode mode, const SystemConfig& config, bool perfect);

/// K rho^2 (N-K) / (2 K rho + s chi (K rho + 1) + 1) with rho = rho_UL,
/// s = rho_SI / alpha_anc and chi = si_leakage_factor(mode, nmse).
double ul_sinr_imperfect(SicMode mode, const SystemConfig& config);

/// Same expression for an explicit leakage factor (chi = 0 removes SI).
double ul_sinr_imperfect_with_leakage(const SystemConfig& config, double chi);

/// K log2(1 + ul_sinr_imperfect(mode, config)).
double ul_rate_imperfect(SicMode mode, const SystemConfig& config);

} // namespace fdmimo
