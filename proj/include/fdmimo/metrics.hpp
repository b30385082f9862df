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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fdmimo/channel.hpp"
#include "fdmimo/estimation.hpp"
#include "fdmimo/numerics.hpp"
#include "fdmimo/system_config.hpp"
#include "fdmimo/transceiver.hpp"

namespace fdmimo {

/// Per-user SINRs of one realization plus the residual SI power Omega_k.
struct SinrSample {
    RealVector dl;
    RealVector ul;
    RealVector omega;
};

/// gamma_k = rho |h_k^T g_k|^2 / (rho sum_{l != k} |h_k^T g_l|^2 + 1), with h_k
/// the k-th row of the true downlink channel.
RealVector dl_sinr(const ComplexMatrix& h_dl, const ComplexMatrix& g, double rho_dl);

/// Omega_k = ||w_k^T X G||^2 where X is H_SI for NoSic and SpatialSuppression
/// and H_SI - H_SI_hat for Subtraction.
RealVector residual_si(SicMode mode, const ComplexMatrix& w, const ComplexMatrix& h_si,
                       const ComplexMatrix& h_si_hat, const ComplexMatrix& g);

/// gamma_k = rho |w_k^T h_k|^2 / (rho sum_{l != k} |w_k^T h_l|^2 + s Omega_k + ||w_k||^2)
/// with s = si_to_noise (rho_SI / alpha_anc) and h_l the true uplink columns.
RealVector ul_sinr(const ComplexMatrix& h_ul, const ComplexMatrix& w, const RealVector& omega, double rho_ul,
                   double si_to_noise);

/// sum_k log2(1 + gamma_k)
double sum_rate(const RealVector& sinrs);

/// Half-duplex ZF/ZF baseline: exactly half of the perfect-CSI SI-subtraction
/// closed-form total rate at downlink SNR rho_dl.
double half_duplex_rate(const SystemConfig& config, double rho_dl);

struct ScenarioKnobs {
    EstimationModel estimation;
    /// When set, channels come from the correlated model and the SI path loss
    /// lives inside H_SI, so the SI term scales with rho_t / alpha_anc.
    std::optional<CorrelatedChannelModel> correlated;
    unsigned threads = 0; // 0 = hardware concurrency
};

/// SI-to-noise scale applied to Omega in the uplink SINR.
double si_to_noise(const SystemConfig& config, const ScenarioKnobs& knobs);

/// One link evaluated per trial. `half_duplex` drops the SI term and halves
/// both rates (time-shared ZF/ZF operation).
struct EvalMode {
    SicMode sic = SicMode::Subtraction;
    bool half_duplex = false;
};

struct TrialRecord {
    double dl_rate = 0.0;
    double ul_rate = 0.0;
    double omega_mean = 0.0; // mean over users of Omega_k
    bool ok = false;
};

struct TrialDiagnostics {
    double null_residual = 0.0;     // ||H_si_hat G_sps||_F / (||H_si_hat||_F ||G_sps||_F)
    double combiner_residual = 0.0; // ||W H_ul_hat - I||_F
    double zf_dl_leakage = 0.0;     // max_k interference/signal on H_dl_hat with the ZF precoder
};

struct RateReport {
    double dl_sum_rate = 0.0;
    double ul_sum_rate = 0.0;
    double dl_ci95 = 0.0;
    double ul_ci95 = 0.0;
    double omega_mean = 0.0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    TrialDiagnostics worst; // element-wise maximum over trials

    bool valid() const { return trials > failures && static_cast<double>(failures) < 1e-3 * trials; }
};

/// Per-trial records for every mode: out[m][t]. Trial t draws channels and
/// estimation errors from RngStream(master_seed, t), so all modes see the same
/// draws and results do not depend on the thread count.
struct TrialSet {
    std::vector<std::vector<TrialRecord>> records;
    std::vector<TrialDiagnostics> diagnostics;
};

TrialSet run_trials(const SystemConfig& config, std::span<const EvalMode> modes, const ScenarioKnobs& knobs,
                    std::size_t trials, std::uint64_t master_seed);

/// Means and normal-approximation 95% half-widths over successful trials.
RateReport summarize(std::span<const TrialRecord> records, std::span<const TrialDiagnostics> diagnostics);

std::vector<RateReport> monte_carlo_modes(const SystemConfig& config, std::span<const EvalMode> modes,
                                          const ScenarioKnobs& knobs, std::size_t trials,
                                          std::uint64_t master_seed);

RateReport monte_carlo(const SystemConfig& config, SicMode mode, const ScenarioKnobs& knobs, std::size_t trials,
                       std::uint64_t master_seed);

} // namespace fdmimo
