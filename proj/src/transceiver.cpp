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
#include "fdmimo/transceiver.hpp"

#include <cmath>
#include <string>

#include "fdmimo/errors.hpp"

namespace fdmimo {

std::string_view to_string(SicMode mode)
{
    switch (mode) {
    case SicMode::NoSic:
        return "nosic";
    case SicMode::Subtraction:
        return "stt";
    case SicMode::SpatialSuppression:
        return "sps";
    }
    return "unknown";
}

ComplexMatrix zf_precoder(const ComplexMatrix& h_dl_hat)
{
    return right_pseudo_inverse(h_dl_hat);
}

ComplexMatrix sps_precoder(const ComplexMatrix& h_dl_hat, const ComplexMatrix& h_si_hat)
{
    if (h_dl_hat.cols() != h_si_hat.cols())
        throw std::invalid_argument("sps_precoder: DL and SI channels must have the same number of columns");
    ComplexMatrix ext(h_dl_hat.rows() + h_si_hat.rows(), h_dl_hat.cols());
    ext.topRows(h_dl_hat.rows()) = h_dl_hat;
    ext.bottomRows(h_si_hat.rows()) = h_si_hat;
    return right_pseudo_inverse(ext).leftCols(h_dl_hat.rows());
}

ComplexMatrix normalize_vector(const ComplexMatrix& f_raw)
{
    const auto k = static_cast<double>(f_raw.cols());
    ComplexMatrix g(f_raw.rows(), f_raw.cols());
    for (Eigen::Index c = 0; c < f_raw.cols(); ++c) {
        const double norm = f_raw.col(c).norm();
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw DegeneratePrecoderError("normalize_vector: precoder column " + std::to_string(c) +
                                          " has zero or non-finite norm");
        g.col(c) = f_raw.col(c) / (std::sqrt(k) * norm);
    }
    return g;
}

ComplexMatrix zf_combiner(const ComplexMatrix& h_ul_hat)
{
    return left_pseudo_inverse(h_ul_hat);
}

TransceiverSet build(SicMode mode, const EstimatedChannels& est)
{
    TransceiverSet set;
    set.mode = mode;
    set.f_raw = mode == SicMode::SpatialSuppression ? sps_precoder(est.h_dl_hat, est.h_si_hat)
                                                    : zf_precoder(est.h_dl_hat);
    set.g = normalize_vector(set.f_raw);
    set.w = zf_combiner(est.h_ul_hat);
    return set;
}

} // namespace fdmimo
