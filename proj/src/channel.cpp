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
#include "fdmimo/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fdmimo/diagnostics.hpp"
#include "fdmimo/errors.hpp"

namespace fdmimo {

void ArrayGeometry::validate() const
{
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw ConfigError("invalid geometry: wavelength must be positive");
    if (tx_positions.empty() || rx_positions.empty())
        throw ConfigError("invalid geometry: both arrays need at least one element");

    auto check_distinct = [](const std::vector<Eigen::Vector3d>& p, const char* which) {
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (!((p[i] - p[j]).norm() > 0.0))
                    throw ConfigError(std::string("invalid geometry: coincident ") + which + " elements " +
                                      std::to_string(i) + " and " + std::to_string(j));
    };
    check_distinct(tx_positions, "tx");
    check_distinct(rx_positions, "rx");

    const double min_allowed = wavelength / 6.0 * (1.0 - 1e-12);
    for (std::size_t i = 0; i < rx_positions.size(); ++i)
        for (std::size_t j = 0; j < tx_positions.size(); ++j) {
            const double d = (rx_positions[i] - tx_positions[j]).norm();
            if (!(d >= min_allowed))
                throw ConfigError("invalid geometry: rx " + std::to_string(i) + " to tx " + std::to_string(j) +
                                  " distance " + std::to_string(d) + " m is below wavelength/6");
        }
}

void RicianParams::validate() const
{
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw ConfigError("invalid rician parameters: kappa >= 0 violated");
    if (!(sigma_si >= 0.0) || !std::isfinite(sigma_si))
        throw ConfigError("invalid rician parameters: sigma_si >= 0 violated");
}

ChannelRealization generate_iid(const SystemConfig& config, RngStream& rng)
{
    config.validate();
    ChannelRealization ch;
    ch.h_dl = sample_complex_gaussian(config.K, config.M, 1.0, rng);
    ch.h_ul = sample_complex_gaussian(config.N, config.K, 1.0, rng);
    ch.h_si = sample_complex_gaussian(config.N, config.M, 1.0, rng);
    return ch;
}

ComplexMatrix jakes_correlation(std::span<const Eigen::Vector3d> positions, double wavelength)
{
    if (positions.empty())
        throw std::invalid_argument("jakes_correlation: need at least one position");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("jakes_correlation: wavelength must be positive");

    const auto n = static_cast<Eigen::Index>(positions.size());
    ComplexMatrix r = ComplexMatrix::Identity(n, n);
    std::size_t coincident = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d = (positions[i] - positions[j]).norm();
            if (d == 0.0)
                ++coincident;
            const double v = bessel_j0(2.0 * std::numbers::pi * d / wavelength);
            r(i, j) = v;
            r(j, i) = v;
        }
    if (coincident > 0)
        warn("jakes_correlation: " + std::to_string(coincident) +
             " coincident antenna pair(s); correlation matrix is rank deficient");
    return r;
}

double free_space_gain(double distance, double wavelength)
{
    if (!(distance > 0.0) || !(wavelength > 0.0))
        throw std::invalid_argument("free_space_gain: distance and wavelength must be positive");
    const double ratio = wavelength / (4.0 * std::numbers::pi) / distance;
    return std::min(1.0, ratio * ratio);
}

RealMatrix si_pathloss_gains(const ArrayGeometry& geometry)
{
    geometry.validate();
    const auto n = static_cast<Eigen::Index>(geometry.rx_positions.size());
    const auto m = static_cast<Eigen::Index>(geometry.tx_positions.size());
    RealMatrix gains(n, m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            gains(i, j) = free_space_gain((geometry.rx_positions[i] - geometry.tx_positions[j]).norm(),
                                          geometry.wavelength);
    return gains;
}

RealMatrix CorrelatedChannelModel::si_entry_power() const
{
    const Eigen::Index n = rx_sqrt.rows();
    const Eigen::Index m = tx_sqrt.cols();
    const Eigen::VectorXcd rx_sum = rx_sqrt * Eigen::VectorXcd::Ones(n);
    const Eigen::RowVectorXcd tx_sum = Eigen::RowVectorXcd::Ones(m) * tx_sqrt;
    const RealVector rx_diag = rx_sqrt.rowwise().squaredNorm();
    const RealVector tx_diag = tx_sqrt.colwise().squaredNorm().transpose();

    RealMatrix power(n, m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < m; ++j) {
            const double los = los_weight * los_weight * std::norm(rx_sum(i) * tx_sum(j));
            const double nlos = nlos_weight * nlos_weight * rx_diag(i) * tx_diag(j);
            power(i, j) = si_amplitude(i, j) * si_amplitude(i, j) * (los + nlos);
        }
    return power;
}

CorrelatedChannelModel make_correlated_model(const SystemConfig& config, const ArrayGeometry& geometry,
                                             const RicianParams& rician)
{
    config.validate();
    geometry.validate();
    rician.validate();
    if (static_cast<int>(geometry.tx_positions.size()) != config.M ||
        static_cast<int>(geometry.rx_positions.size()) != config.N)
        throw ConfigError("geometry does not match config: expected " + std::to_string(config.M) + " tx and " +
                          std::to_string(config.N) + " rx elements");

    CorrelatedChannelModel model;
    model.tx_sqrt = hermitian_sqrt(jakes_correlation(geometry.tx_positions, geometry.wavelength));
    model.rx_sqrt = hermitian_sqrt(jakes_correlation(geometry.rx_positions, geometry.wavelength));
    model.si_amplitude = si_pathloss_gains(geometry).cwiseSqrt();
    model.los_weight = std::sqrt(rician.kappa / (rician.kappa + 1.0)) * rician.sigma_si;
    model.nlos_weight = std::sqrt(1.0 / (rician.kappa + 1.0));
    return model;
}

ChannelRealization generate_correlated(const SystemConfig& config, const CorrelatedChannelModel& model,
                                       RngStream& rng)
{
    const Eigen::Index m = config.M;
    const Eigen::Index n = config.N;
    const Eigen::Index k = config.K;
    if (model.tx_sqrt.rows() != m || model.tx_sqrt.cols() != m || model.rx_sqrt.rows() != n ||
        model.rx_sqrt.cols() != n || model.si_amplitude.rows() != n || model.si_amplitude.cols() != m)
        throw std::invalid_argument("generate_correlated: model dimensions do not match config");

    const ComplexMatrix dl_iid = sample_complex_gaussian(k, m, 1.0, rng);
    const ComplexMatrix ul_iid = sample_complex_gaussian(n, k, 1.0, rng);
    const ComplexMatrix si_iid = sample_complex_gaussian(n, m, 1.0, rng);

    ChannelRealization ch;
    ch.h_dl = dl_iid * model.tx_sqrt;
    ch.h_ul = model.rx_sqrt * ul_iid;

    ComplexMatrix inner = model.nlos_weight * si_iid;
    if (model.los_weight != 0.0)
        inner.array() += Complex(model.los_weight, 0.0);
    ch.h_si = (model.rx_sqrt * inner * model.tx_sqrt).cwiseProduct(model.si_amplitude.cast<Complex>());
    return ch;
}

ChannelRealization generate_correlated(const SystemConfig& config, const ArrayGeometry& geometry,
                                       const RicianParams& rician, RngStream& rng)
{
    return generate_correlated(config, make_correlated_model(config, geometry, rician), rng);
}

ArrayGeometry default_geometry(const SystemConfig& config, double carrier_hz)
{
    if (!(carrier_hz > 0.0))
        throw ConfigError("default_geometry: carrier frequency must be positive");
    ArrayGeometry g;
    g.wavelength = kSpeedOfLight / carrier_hz;
    const double spacing = g.wavelength / 6.0;
    for (int j = 0; j < config.M; ++j)
        g.tx_positions.emplace_back(spacing * j, 0.0, 0.0);
    for (int i = 0; i < config.N; ++i)
        g.rx_positions.emplace_back(spacing * (config.M + i), 0.0, 0.0);
    return g;
}

} // namespace fdmimo
