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
#include "fdmimo/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "fdmimo/channel.hpp"
#include "fdmimo/closedform.hpp"
#include "fdmimo/csv.hpp"
#include "fdmimo/estimation.hpp"
#include "fdmimo/experiments.hpp"
#include "fdmimo/metrics.hpp"
#include "fdmimo/parallel.hpp"
#include "fdmimo/transceiver.hpp"

namespace fdmimo::acceptance {

namespace {

constexpr SicMode kModes[] = {SicMode::NoSic, SicMode::Subtraction, SicMode::SpatialSuppression};
constexpr double kZ99OneSided = 2.3263478740408408;

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

struct SweepPoint {
    double x_db = 0.0;
    SystemConfig config;
    std::vector<RateReport> reports; // indexed like kModes
    std::vector<ClosedFormPoint> perfect_cf;
};

std::vector<SweepPoint> run_sweep(const Scenario& scenario, const Options& opt)
{
    std::vector<SweepPoint> points;
    const std::vector<EvalMode> modes{{SicMode::NoSic}, {SicMode::Subtraction}, {SicMode::SpatialSuppression}};
    for (double x : scenario.sweep_points()) {
        SweepPoint p;
        p.x_db = x;
        p.config = at_sweep_point(default_config(), scenario.sweep_variable, x);
        ScenarioKnobs knobs;
        knobs.threads = opt.threads;
        knobs.estimation = model_from_config(p.config, scenario.perfect_csi);
        p.reports = monte_carlo_modes(p.config, modes, knobs, opt.trials, opt.seed);
        for (SicMode m : kModes)
            p.perfect_cf.push_back(rate_perfect(m, p.config));
        points.push_back(std::move(p));
        if (opt.progress)
            opt.progress(std::string(to_string(scenario.name)) + " point " + fmt("%g", x) + " dB done");
    }
    return points;
}

CriterionResult perfect_match(const std::vector<SweepPoint>& sweep)
{
    CriterionResult r{1, "Perfect-CSI closed-form match (DL and UL, 3%)", true, ""};
    double worst = 0.0;
    std::string where;
    int checked = 0;
    for (const SweepPoint& p : sweep) {
        if (p.x_db != 0.0 && p.x_db != 10.0 && p.x_db != 20.0)
            continue;
        for (std::size_t m = 0; m < 3; ++m) {
            const double dl = std::abs(p.reports[m].dl_sum_rate - p.perfect_cf[m].dl_rate) / p.perfect_cf[m].dl_rate;
            const double ul = std::abs(p.reports[m].ul_sum_rate - p.perfect_cf[m].ul_rate) / p.perfect_cf[m].ul_rate;
            checked += 2;
            for (auto [err, link] : {std::pair{dl, "DL"}, std::pair{ul, "UL"}}) {
                if (!(err < 0.03)) {
                    r.passed = false;
                    r.detail += std::string(to_string(kModes[m])) + " " + link + fmt(" @ %g dB: %.2f%%; ", p.x_db, 100 * err);
                }
                if (err > worst) {
                    worst = err;
                    where = std::string(to_string(kModes[m])) + " " + link + fmt(" @ rho_DL=%g dB", p.x_db);
                }
            }
        }
    }
    r.detail += fmt("%g checks, worst relative error %.3f%%", checked, 100 * worst) + " (" + where + ")";
    return r;
}

CriterionResult imperfect_match(const std::vector<SweepPoint>& sweep)
{
    CriterionResult r{2, "Imperfect-CSI UL closed-form match (5% for rho_SI/alpha >= 0 dB, else 15%)", true, ""};
    double worst_high = 0.0, worst_low = 0.0;
    for (const SweepPoint& p : sweep) {
        const double s_db = linear_to_db(p.config.si_to_noise());
        const bool high = s_db >= -1e-9;
        const double tol = high ? 0.05 : 0.15;
        for (std::size_t m = 0; m < 3; ++m) {
            const double cf = ul_rate_imperfect(kModes[m], p.config);
            const double err = std::abs(p.reports[m].ul_sum_rate - cf) / cf;
            (high ? worst_high : worst_low) = std::max(high ? worst_high : worst_low, err);
            if (!(err < tol)) {
                r.passed = false;
                r.detail += std::string(to_string(kModes[m])) +
                            fmt(" @ %g dB: sim %.3f vs cf %.3f (%.2f%%); ", s_db, p.reports[m].ul_sum_rate, cf, 100 * err);
            }
        }
    }
    r.detail += fmt("worst error %.2f%% at rho_SI/alpha >= 0 dB, %.2f%% below 0 dB", 100 * worst_high, 100 * worst_low);
    return r;
}

CriterionResult expectation_identities(const Options& opt)
{
    CriterionResult r{3, "Expectation identities E{1/||f||^2}, E{1/||w||^2} (2%)", true, ""};
    const SystemConfig cfg = default_config();
    const std::size_t draws = 10 * opt.trials;
    struct Means {
        double zf = 0, sps = 0, comb = 0;
    };
    std::vector<Means> per(draws);
    parallel_for(draws, opt.threads, [&](std::size_t t) {
        RngStream rng(opt.seed ^ 0x5eedf00dULL, t);
        const ChannelRealization ch = generate_iid(cfg, rng);
        per[t].zf = zf_precoder(ch.h_dl).colwise().squaredNorm().cwiseInverse().mean();
        per[t].sps = sps_precoder(ch.h_dl, ch.h_si).colwise().squaredNorm().cwiseInverse().mean();
        per[t].comb = zf_combiner(ch.h_ul).rowwise().squaredNorm().cwiseInverse().mean();
    });
    Means mean;
    for (const Means& m : per) {
        mean.zf += m.zf;
        mean.sps += m.sps;
        mean.comb += m.comb;
    }
    mean.zf /= draws;
    mean.sps /= draws;
    mean.comb /= draws;
    const double targets[] = {double(cfg.M - cfg.K + 1), double(cfg.M - cfg.N - cfg.K + 1), double(cfg.N - cfg.K + 1)};
    const double got[] = {mean.zf, mean.sps, mean.comb};
    for (int i = 0; i < 3; ++i)
        if (!(std::abs(got[i] - targets[i]) / targets[i] < 0.02))
            r.passed = false;
    r.detail = fmt("ZF %.3f (55), SPS %.3f (35), combiner %.3f (11)", mean.zf, mean.sps, mean.comb) +
               fmt(" over %g draws", double(draws));
    return r;
}

CriterionResult exactness(const std::vector<SweepPoint>& perfect, const std::vector<SweepPoint>& imperfect)
{
    CriterionResult r{4, "Null-space and ZF exactness in every trial (1e-9)", true, ""};
    double null_res = 0.0, comb_res = 0.0;
    std::size_t trials = 0;
    for (const auto* sweep : {&perfect, &imperfect})
        for (const SweepPoint& p : *sweep)
            for (const RateReport& rep : p.reports) {
                null_res = std::max(null_res, rep.worst.null_residual);
                comb_res = std::max(comb_res, rep.worst.combiner_residual);
                trials += rep.trials;
            }
    r.passed = null_res < 1e-9 && comb_res < 1e-9;
    r.detail = fmt("max ||H_si_hat G_sps||/(||H_si_hat|| ||G_sps||) = %.3g, max ||W H_ul_hat - I|| = %.3g", null_res,
                   comb_res);
    return r;
}

CriterionResult omega_inequality(const Options& opt)
{
    CriterionResult r{5, "Residual SI: mean Omega(sps) <= mean Omega(stt), paired one-sided test alpha=0.01", true, ""};
    const SystemConfig cfg = default_config();
    ScenarioKnobs knobs;
    knobs.threads = opt.threads;
    knobs.estimation = model_from_config(cfg, false);
    const std::vector<EvalMode> modes{{SicMode::Subtraction}, {SicMode::SpatialSuppression}};
    const TrialSet set = run_trials(cfg, modes, knobs, opt.trials, opt.seed + 5);

    double sum = 0.0, stt = 0.0, sps = 0.0;
    std::size_t n = 0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const TrialRecord& a = set.records[0][t];
        const TrialRecord& b = set.records[1][t];
        if (!a.ok || !b.ok)
            continue;
        sum += b.omega_mean - a.omega_mean;
        stt += a.omega_mean;
        sps += b.omega_mean;
        ++n;
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const TrialRecord& a = set.records[0][t];
        const TrialRecord& b = set.records[1][t];
        if (a.ok && b.ok)
            ss += (b.omega_mean - a.omega_mean - mean) * (b.omega_mean - a.omega_mean - mean);
    }
    const double se = std::sqrt(ss / (n - 1) / n);
    const double upper = mean + kZ99OneSided * se;
    r.passed = upper <= 0.0;
    r.detail = fmt("mean Omega stt %.5f, sps %.5f; 99%% upper bound of paired difference %.3g", stt / n, sps / n, upper) +
               fmt(" (%g pairs)", double(n));
    return r;
}

CriterionResult orderings(const std::vector<SweepPoint>& perfect, const std::vector<SweepPoint>& imperfect)
{
    CriterionResult r{6, "Orderings: perfect total stt >= sps; imperfect UL sps >= stt >= nosic", true, ""};
    int violations = 0, checked = 0;
    for (const SweepPoint& p : perfect) {
        const double cf_stt = p.perfect_cf[1].dl_rate + p.perfect_cf[1].ul_rate;
        const double cf_sps = p.perfect_cf[2].dl_rate + p.perfect_cf[2].ul_rate;
        const RateReport& a = p.reports[1];
        const RateReport& b = p.reports[2];
        const double ci = a.dl_ci95 + a.ul_ci95 + b.dl_ci95 + b.ul_ci95;
        checked += 2;
        if (!(cf_stt >= cf_sps)) {
            ++violations;
            r.detail += fmt("(a) closed form @ %g dB; ", p.x_db);
        }
        if (!(a.dl_sum_rate + a.ul_sum_rate >= b.dl_sum_rate + b.ul_sum_rate - ci)) {
            ++violations;
            r.detail += fmt("(a) simulated @ %g dB; ", p.x_db);
        }
    }
    for (const SweepPoint& p : imperfect) {
        if (!(p.config.si_to_noise() > 1.0))
            continue;
        const double nosic = ul_sinr_imperfect(SicMode::NoSic, p.config);
        const double stt = ul_sinr_imperfect(SicMode::Subtraction, p.config);
        const double sps = ul_sinr_imperfect(SicMode::SpatialSuppression, p.config);
        checked += 3;
        if (!(sps > stt && stt > nosic)) {
            ++violations;
            r.detail += fmt("(b) closed form @ rho_SI=%g dB; ", p.x_db);
        }
        const RateReport& n0 = p.reports[0];
        const RateReport& s1 = p.reports[1];
        const RateReport& s2 = p.reports[2];
        if (!(s2.ul_sum_rate >= s1.ul_sum_rate - (s1.ul_ci95 + s2.ul_ci95))) {
            ++violations;
            r.detail += fmt("(b) simulated sps<stt @ rho_SI=%g dB; ", p.x_db);
        }
        if (!(s1.ul_sum_rate >= n0.ul_sum_rate - (n0.ul_ci95 + s1.ul_ci95))) {
            ++violations;
            r.detail += fmt("(b) simulated stt<nosic @ rho_SI=%g dB; ", p.x_db);
        }
    }
    r.passed = violations == 0;
    r.detail += fmt("%g ordering checks, %g violations", checked, violations);
    return r;
}

CriterionResult half_duplex_identity(const Options& opt)
{
    CriterionResult r{7, "Half-duplex identity at 10 random configs", true, ""};
    std::mt19937_64 gen(opt.seed + 7);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        SystemConfig cfg;
        cfg.K = std::uniform_int_distribution<int>(1, 16)(gen);
        cfg.N = cfg.K + std::uniform_int_distribution<int>(1, 24)(gen);
        cfg.M = cfg.N + cfg.K + std::uniform_int_distribution<int>(0, 64)(gen);
        cfg.rho_t_db = std::uniform_real_distribution<double>(40.0, 120.0)(gen);
        cfg.rho_ul_db = std::uniform_real_distribution<double>(-10.0, 30.0)(gen);
        cfg.alpha_anc_db = std::uniform_real_distribution<double>(0.0, 60.0)(gen);
        cfg.nmse = std::uniform_real_distribution<double>(0.0, 1.0)(gen);
        const ClosedFormPoint p = rate_perfect(SicMode::Subtraction, cfg);
        const double expected = 0.5 * (p.dl_rate + p.ul_rate);
        const double got = half_duplex_rate(cfg, cfg.rho_dl());
        const double err = std::abs(got - expected) / expected;
        worst = std::max(worst, err);
        if (!(err <= 4 * std::numeric_limits<double>::epsilon()))
            r.passed = false;
    }
    r.detail = fmt("max relative deviation %.3g", worst);
    return r;
}

CriterionResult correlated_ordering(const Options& opt)
{
    CriterionResult r{8, "Correlated channels: UL sps > stt and DL stt > sps beyond summed CIs", true, ""};
    Scenario sc = preset(ScenarioName::FigCorrelated);
    sc.trials = std::max<std::size_t>(1, opt.trials / 2);
    sc.master_seed = opt.seed + 8;
    RunOptions ro;
    ro.threads = opt.threads;
    ro.progress = opt.progress;
    const std::vector<SweepRow> rows = run_scenario(sc, default_config(), ro);
    const std::size_t n = rows.size() / 2; // modes stt then sps
    double min_ul = INFINITY, min_dl = INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
        const SweepRow& stt = rows[i];
        const SweepRow& sps = rows[n + i];
        const double ul_margin = (sps.ul_sim - stt.ul_sim) - (sps.ul_sim_ci + stt.ul_sim_ci);
        const double dl_margin = (stt.dl_sim - sps.dl_sim) - (sps.dl_sim_ci + stt.dl_sim_ci);
        min_ul = std::min(min_ul, ul_margin);
        min_dl = std::min(min_dl, dl_margin);
        if (!(ul_margin > 0.0) || !(dl_margin > 0.0)) {
            r.passed = false;
            r.detail += fmt("@ %g dB: UL margin %.4g, DL margin %.4g; ", stt.x_db, ul_margin, dl_margin);
        }
    }
    r.detail += fmt("%g points, smallest UL margin %.4g, smallest DL margin %.4g bps/Hz", double(n), min_ul, min_dl) +
                fmt(" (%g trials)", double(sc.trials));
    return r;
}

CriterionResult determinism(const Options& opt)
{
    CriterionResult r{9, "Determinism across repeated runs and thread counts", true, ""};
    Scenario sc = preset(ScenarioName::FigPerfect);
    sc.sweep_start = 0.0;
    sc.sweep_stop = 20.0;
    sc.sweep_step = 10.0;
    sc.trials = std::max<std::size_t>(50, opt.trials / 50);
    sc.master_seed = opt.seed + 9;
    sc.modes = {RunMode::NoSic, RunMode::Subtraction, RunMode::SpatialSuppression, RunMode::HalfDuplex};
    Scenario sc_imp = preset(ScenarioName::FigImperfectSi);
    sc_imp.sweep_step = 20.0;
    sc_imp.trials = sc.trials;
    sc_imp.master_seed = sc.master_seed;

    for (const Scenario* s : {&sc, &sc_imp}) {
        std::string reference;
        for (unsigned threads : {1u, 3u, 1u, 8u}) {
            RunOptions ro;
            ro.threads = threads;
            const std::string csv = format_csv(run_scenario(*s, default_config(), ro));
            if (reference.empty())
                reference = csv;
            else if (csv != reference) {
                r.passed = false;
                r.detail += std::string(to_string(s->name)) + fmt(" differs with %g threads; ", threads);
            }
        }
    }
    r.detail += "CSV bytes compared for 1, 3, 1, 8 threads";
    return r;
}

} // namespace

std::string format_result(const CriterionResult& r)
{
    return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + ". " + r.title + ": " + r.detail;
}

std::vector<CriterionResult> run_all(const Options& options, const std::function<void(const CriterionResult&)>& on_result)
{
    std::vector<CriterionResult> results;
    auto record = [&](CriterionResult r) {
        if (on_result)
            on_result(r);
        results.push_back(std::move(r));
    };

    Scenario perfect_sc = preset(ScenarioName::FigPerfect);
    Scenario imperfect_sc = preset(ScenarioName::FigImperfectSi);
    const std::vector<SweepPoint> perfect = run_sweep(perfect_sc, options);
    record(perfect_match(perfect));
    const std::vector<SweepPoint> imperfect = run_sweep(imperfect_sc, options);
    record(imperfect_match(imperfect));
    record(expectation_identities(options));
    record(exactness(perfect, imperfect));
    record(omega_inequality(options));
    record(orderings(perfect, imperfect));
    record(half_duplex_identity(options));
    record(correlated_ordering(options));
    record(determinism(options));
    return results;
}

} // namespace fdmimo::acceptance
