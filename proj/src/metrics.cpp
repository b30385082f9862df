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
#include "fdmimo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fdmimo/closedform.hpp"
#include "fdmimo/errors.hpp"
#include "fdmimo/parallel.hpp"

namespace fdmimo {

RealVector dl_sinr(const ComplexMatrix& h_dl, const ComplexMatrix& g, double rho_dl)
{
    if (h_dl.cols() != g.rows() || h_dl.rows() != g.cols())
        throw std::invalid_argument("dl_sinr: expected K x M channel and M x K precoder");
    const RealMatrix gains = (h_dl * g).cwiseAbs2();
    const Eigen::Index k = gains.rows();
    RealVector out(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const double signal = gains(i, i);
        const double interference = gains.row(i).sum() - signal;
        out(i) = rho_dl * signal / (rho_dl * std::max(interference, 0.0) + 1.0);
    }
    return out;
}

RealVector residual_si(SicMode mode, const ComplexMatrix& w, const ComplexMatrix& h_si,
                       const ComplexMatrix& h_si_hat, const ComplexMatrix& g)
{
    if (w.cols() != h_si.rows() || h_si.cols() != g.rows())
        throw std::invalid_argument("residual_si: shape mismatch");
    if (mode == SicMode::Subtraction) {
        if (h_si_hat.rows() != h_si.rows() || h_si_hat.cols() != h_si.cols())
            throw std::invalid_argument("residual_si: estimated SI channel shape mismatch");
        return (w * (h_si - h_si_hat) * g).rowwise().squaredNorm();
    }
    return (w * h_si * g).rowwise().squaredNorm();
}

RealVector ul_sinr(const ComplexMatrix& h_ul, const ComplexMatrix& w, const RealVector& omega, double rho_ul,
                   double si_to_noise)
{
    if (w.cols() != h_ul.rows() || w.rows() != h_ul.cols() || omega.size() != w.rows())
        throw std::invalid_argument("ul_sinr: expected N x K channel, K x N combiner and K residuals");
    const RealMatrix gains = (w * h_ul).cwiseAbs2();
    const RealVector noise = w.rowwise().squaredNorm();
    const Eigen::Index k = gains.rows();
    RealVector out(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const double signal = gains(i, i);
        const double interference = std::max(gains.row(i).sum() - signal, 0.0);
        const double si = si_to_noise > 0.0 ? si_to_noise * omega(i) : 0.0;
        out(i) = rho_ul * signal / (rho_ul * interference + si + noise(i));
    }
    return out;
}

double sum_rate(const RealVector& sinrs)
{
    double total = 0.0;
    for (double s : sinrs) {
        if (!(s >= 0.0))
            throw std::invalid_argument("sum_rate: SINR values must be nonnegative");
        total += std::log2(1.0 + s);
    }
    return total;
}

double half_duplex_rate(const SystemConfig& config, double rho_dl)
{
    const ClosedFormPoint p = rate_perfect_at(SicMode::Subtraction, config, rho_dl);
    return 0.5 * (p.dl_rate + p.ul_rate);
}

double si_to_noise(const SystemConfig& config, const ScenarioKnobs& knobs)
{
    return knobs.correlated ? config.rho_t() / config.alpha_anc() : config.si_to_noise();
}

namespace {

enum : std::uint64_t { kChannelStream = 0, kEstimationStream = 1 };

struct TrialContext {
    const SystemConfig& config;
    std::span<const EvalMode> modes;
    const ScenarioKnobs& knobs;
    double rho_dl;
    double rho_ul;
    double si_scale;
    bool need_zf;
    bool need_sps;
};

void run_one_trial(const TrialContext& ctx, std::uint64_t master_seed, std::size_t t, TrialSet& out)
{
    const RngStream trial(master_seed, t);
    RngStream channel_rng = trial.fork(kChannelStream);
    RngStream estimation_rng = trial.fork(kEstimationStream);

    const ChannelRealization ch = ctx.knobs.correlated
                                      ? generate_correlated(ctx.config, *ctx.knobs.correlated, channel_rng)
                                      : generate_iid(ctx.config, channel_rng);
    const EstimatedChannels est = estimate(ch, ctx.knobs.estimation, estimation_rng);

    TrialDiagnostics& diag = out.diagnostics[t];
    ComplexMatrix w;
    try {
        w = zf_combiner(est.h_ul_hat);
    } catch (const NumericalError&) {
        return; // every mode fails for this trial
    }
    diag.combiner_residual = (w * est.h_ul_hat - ComplexMatrix::Identity(w.rows(), w.rows())).norm();

    std::optional<ComplexMatrix> g_zf;
    std::optional<ComplexMatrix> g_sps;
    if (ctx.need_zf) {
        try {
            g_zf = normalize_vector(zf_precoder(est.h_dl_hat));
            const RealMatrix gains = (est.h_dl_hat * *g_zf).cwiseAbs2();
            for (Eigen::Index k = 0; k < gains.rows(); ++k) {
                const double leak = (gains.row(k).sum() - gains(k, k)) / gains(k, k);
                diag.zf_dl_leakage = std::max(diag.zf_dl_leakage, std::abs(leak));
            }
        } catch (const NumericalError&) {
        }
    }
    if (ctx.need_sps) {
        try {
            g_sps = normalize_vector(sps_precoder(est.h_dl_hat, est.h_si_hat));
            const double denom = est.h_si_hat.norm() * g_sps->norm();
            diag.null_residual = denom > 0.0 ? (est.h_si_hat * *g_sps).norm() / denom : 0.0;
        } catch (const NumericalError&) {
        }
    }

    const RealVector no_si = RealVector::Zero(ctx.config.K);
    for (std::size_t m = 0; m < ctx.modes.size(); ++m) {
        const EvalMode& mode = ctx.modes[m];
        const std::optional<ComplexMatrix>& g = mode.sic == SicMode::SpatialSuppression ? g_sps : g_zf;
        if (!g)
            continue;
        TrialRecord& rec = out.records[m][t];
        const RealVector dl = dl_sinr(ch.h_dl, *g, ctx.rho_dl);
        if (mode.half_duplex) {
            const RealVector ul = ul_sinr(ch.h_ul, w, no_si, ctx.rho_ul, 0.0);
            rec.dl_rate = 0.5 * sum_rate(dl);
            rec.ul_rate = 0.5 * sum_rate(ul);
            rec.omega_mean = 0.0;
        } else {
            const RealVector omega = residual_si(mode.sic, w, ch.h_si, est.h_si_hat, *g);
            const RealVector ul = ul_sinr(ch.h_ul, w, omega, ctx.rho_ul, ctx.si_scale);
            rec.dl_rate = sum_rate(dl);
            rec.ul_rate = sum_rate(ul);
            rec.omega_mean = omega.mean();
        }
        rec.ok = std::isfinite(rec.dl_rate) && std::isfinite(rec.ul_rate);
    }
}

} // namespace

TrialSet run_trials(const SystemConfig& config, std::span<const EvalMode> modes, const ScenarioKnobs& knobs,
                    std::size_t trials, std::uint64_t master_seed)
{
    if (trials < 1)
        throw std::invalid_argument("monte_carlo: trials must be >= 1");
    config.validate();
    knobs.estimation.validate();

    TrialContext ctx{config, modes, knobs, config.rho_dl(), config.rho_ul(), si_to_noise(config, knobs), false, false};
    for (const EvalMode& m : modes) {
        if (m.sic == SicMode::SpatialSuppression)
            ctx.need_sps = true;
        else
            ctx.need_zf = true;
    }

    TrialSet out;
    out.records.assign(modes.size(), std::vector<TrialRecord>(trials));
    out.diagnostics.assign(trials, TrialDiagnostics{});
    parallel_for(trials, knobs.threads, [&](std::size_t t) { run_one_trial(ctx, master_seed, t, out); });
    return out;
}

RateReport summarize(std::span<const TrialRecord> records, std::span<const TrialDiagnostics> diagnostics)
{
    RateReport r;
    r.trials = records.size();
    std::size_t n = 0;
    double dl_sum = 0.0, ul_sum = 0.0, om_sum = 0.0;
    for (const TrialRecord& rec : records) {
        if (!rec.ok)
            continue;
        ++n;
        dl_sum += rec.dl_rate;
        ul_sum += rec.ul_rate;
        om_sum += rec.omega_mean;
    }
    r.failures = r.trials - n;
    if (n == 0)
        return r;
    r.dl_sum_rate = dl_sum / n;
    r.ul_sum_rate = ul_sum / n;
    r.omega_mean = om_sum / n;
    if (n > 1) {
        double dl_ss = 0.0, ul_ss = 0.0;
        for (const TrialRecord& rec : records) {
            if (!rec.ok)
                continue;
            dl_ss += (rec.dl_rate - r.dl_sum_rate) * (rec.dl_rate - r.dl_sum_rate);
            ul_ss += (rec.ul_rate - r.ul_sum_rate) * (rec.ul_rate - r.ul_sum_rate);
        }
        const double scale = 1.96 / std::sqrt(static_cast<double>(n));
        r.dl_ci95 = scale * std::sqrt(dl_ss / (n - 1));
        r.ul_ci95 = scale * std::sqrt(ul_ss / (n - 1));
    }
    for (const TrialDiagnostics& d : diagnostics) {
        r.worst.null_residual = std::max(r.worst.null_residual, d.null_residual);
        r.worst.combiner_residual = std::max(r.worst.combiner_residual, d.combiner_residual);
        r.worst.zf_dl_leakage = std::max(r.worst.zf_dl_leakage, d.zf_dl_leakage);
    }
    return r;
}

std::vector<RateReport> monte_carlo_modes(const SystemConfig& config, std::span<const EvalMode> modes,
                                          const ScenarioKnobs& knobs, std::size_t trials,
                                          std::uint64_t master_seed)
{
    const TrialSet set = run_trials(config, modes, knobs, trials, master_seed);
    std::vector<RateReport> reports;
    reports.reserve(modes.size());
    for (const auto& rec : set.records)
        reports.push_back(summarize(rec, set.diagnostics));
    return reports;
}

RateReport monte_carlo(const SystemConfig& config, SicMode mode, const ScenarioKnobs& knobs, std::size_t trials,
                       std::uint64_t master_seed)
{
    const EvalMode m{mode, false};
    return monte_carlo_modes(config, std::span<const EvalMode>(&m, 1), knobs, trials, master_seed).front();
}

} // namespace fdmimo
