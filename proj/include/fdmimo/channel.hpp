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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fdmimo/numerics.hpp"
#include "fdmimo/rng.hpp"
#include "fdmimo/system_config.hpp"

namespace fdmimo {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

/// One draw of the downlink (K x M), uplink (N x K) and SI (N x M) channels.
struct ChannelRealization {
    ComplexMatrix h_dl;
    ComplexMatrix h_ul;
    ComplexMatrix h_si;
};

/// Antenna positions of the co-located transmit and receive arrays.
struct ArrayGeometry {
    std::vector<Eigen::Vector3d> tx_positions;
    std::vector<Eigen::Vector3d> rx_positions;
    double wavelength = 0.0;

    /// All pairwise distances positive and every TX-RX distance >= wavelength / 6.
    void validate() const;
};

struct RicianParams {
    double kappa = 1.0;    // LOS-to-scattered power ratio
    double sigma_si = 1.0; // LOS amplitude

    void validate() const;
};

/// i.i.d. unit-variance Rayleigh draw; h_dl, h_ul, h_si are sampled in that
/// order from `rng`.
ChannelRealization generate_iid(const SystemConfig& config, RngStream& rng);

/// Jakes correlation r_ij = J0(2 pi d_ij / wavelength). Coincident positions
/// are allowed but reported through fdmimo::warn.
ComplexMatrix jakes_correlation(std::span<const Eigen::Vector3d> positions, double wavelength);

/// min(1, (wavelength / (4 pi distance))^2); unity below the reference distance.
double free_space_gain(double distance, double wavelength);

/// N x M free-space power gains min(1, (wavelength / (4 pi d_ij))^2) between
/// receive element i and transmit element j.
RealMatrix si_pathloss_gains(const ArrayGeometry& geometry);

/// Precomputed factors of the spatially-correlated channel model. Building
/// this once per scenario keeps the square roots out of the trial loop.
struct CorrelatedChannelModel {
    ComplexMatrix tx_sqrt;   // R_TX^{1/2}, M x M
    ComplexMatrix rx_sqrt;   // R_RX^{1/2}, N x N
    RealMatrix si_amplitude; // sqrt of per-element SI gains, N x M
    double los_weight = 0.0;  // sqrt(kappa / (kappa + 1)) * sigma_si
    double nlos_weight = 1.0; // sqrt(1 / (kappa + 1))

    /// Mean power E|H_SI(i,j)|^2 of each SI entry, including path loss.
    RealMatrix si_entry_power() const;
};

CorrelatedChannelModel make_correlated_model(const SystemConfig& config, const ArrayGeometry& geometry,
                                             const RicianParams& rician);

/// H_DL = H_iid R_TX^{1/2}, H_UL = R_RX^{1/2} H_iid and
/// H_SI = [R_RX^{1/2} (los * 1 + nlos * H_iid) R_TX^{1/2}] .* amplitude.
/// Draw order matches generate_iid.
ChannelRealization generate_correlated(const SystemConfig& config, const CorrelatedChannelModel& model,
                                       RngStream& rng);

ChannelRealization generate_correlated(const SystemConfig& config, const ArrayGeometry& geometry,
                                       const RicianParams& rician, RngStream& rng);

/// Colinear layout: M transmit elements at spacing wavelength/6, a gap of
/// wavelength/6, then N receive elements at the same spacing.
ArrayGeometry default_geometry(const SystemConfig& config, double carrier_hz);

} // namespace fdmimo
