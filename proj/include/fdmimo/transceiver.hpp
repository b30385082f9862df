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

#include <string_view>

#include "fdmimo/estimation.hpp"
#include "fdmimo/numerics.hpp"

namespace fdmimo {

enum class SicMode { NoSic, Subtraction, SpatialSuppression };

std::string_view to_string(SicMode mode);

struct TransceiverSet {
    ComplexMatrix g;     // M x K normalized precoder, columns g_k
    ComplexMatrix f_raw; // M x K precoder before normalization
    ComplexMatrix w;     // K x N combiner, row k is w_k^T
    SicMode mode = SicMode::Subtraction;
};

/// F = H^H (H H^H)^-1 for the K x M estimated downlink channel.
ComplexMatrix zf_precoder(const ComplexMatrix& h_dl_hat);

/// First K columns of the pseudo-inverse of [H_dl_hat; H_si_hat], which
/// zero-forces the users and places the transmission in the null space of
/// the estimated SI channel.
ComplexMatrix sps_precoder(const ComplexMatrix& h_dl_hat, const ComplexMatrix& h_si_hat);

/// g_k = f_k / (sqrt(K) ||f_k||). Throws DegeneratePrecoderError on a zero column.
ComplexMatrix normalize_vector(const ComplexMatrix& f_raw);

/// W = (H^H H)^-1 H^H for the N x K estimated uplink channel.
ComplexMatrix zf_combiner(const ComplexMatrix& h_ul_hat);

/// NoSic and Subtraction share the ZF precoder; SpatialSuppression uses
/// sps_precoder. All modes use the ZF combiner.
TransceiverSet build(SicMode mode, const EstimatedChannels& est);

} // namespace fdmimo
