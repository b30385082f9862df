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

#include "fdmimo/channel.hpp"
#include "fdmimo/numerics.hpp"
#include "fdmimo/rng.hpp"
#include "fdmimo/system_config.hpp"

namespace fdmimo {

/// Error variances of the additive estimation model H_hat = H + E.
struct EstimationModel {
    double eps2_dl = 0.0;
    double eps2_ul = 0.0;
    double eps2_si = 0.0;

    /// Optional N x M mean power of each SI entry. When set, the SI error
    /// variance of entry (i,j) is eps2_si * si_power(i,j), which keeps eps2_si
    /// a normalized MSE for channels with non-unit entry power.
    std::optional<RealMatrix> si_power;

    bool perfect() const { return eps2_dl == 0.0 && eps2_ul == 0.0 && eps2_si == 0.0; }
    void validate() const;
};

struct EstimatedChannels {
    ComplexMatrix h_dl_hat;
    ComplexMatrix h_ul_hat;
    ComplexMatrix h_si_hat;
    ComplexMatrix e_dl;
    ComplexMatrix e_ul;
    ComplexMatrix e_si;
};

/// MMSE error variance beta / (k * rho_u * beta + 1) for pilot-based
/// downlink/uplink estimation with transmit SNR rho_u at the users.
double uldl_error_variance(double beta_ue, double rho_u, int k);

/// All-zero model when `perfect`; otherwise eps2_dl = eps2_ul = 1/(K rho_UL + 1)
/// and eps2_si = config.nmse.
EstimationModel model_from_config(const SystemConfig& config, bool perfect);

/// Draws e_dl, e_ul, e_si (in that order) from `rng` and returns h + e.
EstimatedChannels estimate(const ChannelRealization& channels, const EstimationModel& model, RngStream& rng);

} // namespace fdmimo
