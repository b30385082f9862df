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

#include <cmath>

namespace fdmimo {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

/// Scalar parameters of a full-duplex base station serving K downlink and
/// K uplink single-antenna users with M transmit and N receive antennas.
///
/// Transmit power and noise power only appear through rho_t = P_t / P_n.
/// All *_db fields are power ratios in decibels.
struct SystemConfig {
    int M = 64;
    int N = 20;
    int K = 10;
    double rho_t_db = 80.0;     // total transmit SNR at the BS
    double beta_ue_db = -80.0;  // BS-user propagation gain
    double beta_si_db = -40.0;  // SI propagation gain
    double rho_ul_db = 10.0;    // received uplink SNR at the BS
    double alpha_anc_db = 40.0; // passive analog cancellation
    double nmse = 0.2;          // SI channel estimation NMSE

    int L() const { return M + N; }

    double rho_t() const { return db_to_linear(rho_t_db); }
    double beta_ue() const { return db_to_linear(beta_ue_db); }
    double beta_si() const { return db_to_linear(beta_si_db); }
    double rho_ul() const { return db_to_linear(rho_ul_db); }
    double alpha_anc() const { return db_to_linear(alpha_anc_db); }
    double rho_dl() const { return rho_t() * beta_ue(); }
    double rho_si() const { return rho_t() * beta_si(); }

    /// SI-to-noise ratio left after passive cancellation, rho_SI / alpha_anc.
    double si_to_noise() const { return rho_si() / alpha_anc(); }

    /// Throws ConfigError naming the first violated invariant.
    void validate() const;

    friend bool operator==(const SystemConfig&, const SystemConfig&) = default;
};

} // namespace fdmimo
