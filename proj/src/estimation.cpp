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
#include "fdmimo/estimation.hpp"

#include <cmath>
#include <stdexcept>

#include "fdmimo/errors.hpp"

namespace fdmimo {

void EstimationModel::validate() const
{
    for (double v : {eps2_dl, eps2_ul, eps2_si})
        if (!std::isfinite(v) || v < 0.0)
            throw ConfigError("invalid estimation model: error variances must be finite and >= 0");
    if (si_power && (!si_power->allFinite() || si_power->minCoeff() < 0.0))
        throw ConfigError("invalid estimation model: SI power profile must be finite and >= 0");
}

double uldl_error_variance(double beta_ue, double rho_u, int k)
{
    if (!(beta_ue >= 0.0) || !(rho_u >= 0.0) || k < 1)
        throw std::invalid_argument("uldl_error_variance: requires beta_ue >= 0, rho_u >= 0, k >= 1");
    return beta_ue / (k * rho_u * beta_ue + 1.0);
}

EstimationModel model_from_config(const SystemConfig& config, bool perfect)
{
    config.validate();
    EstimationModel model;
    if (perfect)
        return model;
    // rho_u * beta_UE is identified with the received uplink SNR, which
    // normalizes the MMSE variance to unit-power channels.
    const double eps2 = uldl_error_variance(1.0, config.rho_ul(), config.K);
    model.eps2_dl = eps2;
    model.eps2_ul = eps2;
    model.eps2_si = config.nmse;
    return model;
}

EstimatedChannels estimate(const ChannelRealization& channels, const EstimationModel& model, RngStream& rng)
{
    model.validate();
    EstimatedChannels est;
    est.e_dl = sample_complex_gaussian(channels.h_dl.rows(), channels.h_dl.cols(), model.eps2_dl, rng);
    est.e_ul = sample_complex_gaussian(channels.h_ul.rows(), channels.h_ul.cols(), model.eps2_ul, rng);
    est.e_si = sample_complex_gaussian(channels.h_si.rows(), channels.h_si.cols(), model.eps2_si, rng);
    if (model.si_power) {
        if (model.si_power->rows() != channels.h_si.rows() || model.si_power->cols() != channels.h_si.cols())
            throw std::invalid_argument("estimate: SI power profile shape does not match the SI channel");
        est.e_si = est.e_si.cwiseProduct(model.si_power->cwiseSqrt().cast<Complex>());
    }
    est.h_dl_hat = channels.h_dl + est.e_dl;
    est.h_ul_hat = channels.h_ul + est.e_ul;
    est.h_si_hat = channels.h_si + est.e_si;
    return est;
}

} // namespace fdmimo
