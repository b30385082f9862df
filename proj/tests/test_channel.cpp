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
#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fdmimo/channel.hpp"
#include "fdmimo/diagnostics.hpp"
#include "fdmimo/errors.hpp"

using namespace fdmimo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;

CorrelatedChannelModel identity_model(const SystemConfig& cfg, double kappa, double sigma)
{
    CorrelatedChannelModel m;
    m.tx_sqrt = ComplexMatrix::Identity(cfg.M, cfg.M);
    m.rx_sqrt = ComplexMatrix::Identity(cfg.N, cfg.N);
    m.si_amplitude = RealMatrix::Ones(cfg.N, cfg.M);
    m.los_weight = std::sqrt(kappa / (kappa + 1.0)) * sigma;
    m.nlos_weight = std::sqrt(1.0 / (kappa + 1.0));
    return m;
}

} // namespace

TEST_CASE("iid channel shapes, power and determinism")
{
    const SystemConfig cfg;
    RngStream rng(11, 0);
    const ChannelRealization ch = generate_iid(cfg, rng);
    CHECK(ch.h_dl.rows() == 10);
    CHECK(ch.h_dl.cols() == 64);
    CHECK(ch.h_ul.rows() == 20);
    CHECK(ch.h_ul.cols() == 10);
    CHECK(ch.h_si.rows() == 20);
    CHECK(ch.h_si.cols() == 64);

    // 160 draws give 10^5 downlink entries and more for the other two
    double dl = 0.0, ul = 0.0, si = 0.0;
    const int draws = 160;
    for (int t = 0; t < draws; ++t) {
        RngStream s(12, t);
        const ChannelRealization c = generate_iid(cfg, s);
        dl += c.h_dl.cwiseAbs2().sum();
        ul += c.h_ul.cwiseAbs2().sum();
        si += c.h_si.cwiseAbs2().sum();
    }
    for (double p : {dl / (draws * 640.0), ul / (draws * 200.0), si / (draws * 1280.0)}) {
        CHECK(p >= 0.98);
        CHECK(p <= 1.02);
    }

    RngStream a(5, 5), b(5, 5);
    const ChannelRealization x = generate_iid(cfg, a), y = generate_iid(cfg, b);
    CHECK(x.h_dl == y.h_dl);
    CHECK(x.h_ul == y.h_ul);
    CHECK(x.h_si == y.h_si);

    SystemConfig bad;
    bad.M = 25;
    CHECK_THROWS_AS(generate_iid(bad, rng), ConfigError);
}

TEST_CASE("jakes correlation")
{
    const double lambda = 0.1;
    const std::vector<Eigen::Vector3d> one{{0, 0, 0}};
    const ComplexMatrix r1 = jakes_correlation(one, lambda);
    REQUIRE(r1.rows() == 1);
    CHECK(r1(0, 0) == Complex(1.0, 0.0));

    const double zero_spacing = 2.404825557695773 * lambda / (2 * kPi);
    const std::vector<Eigen::Vector3d> at_zero{{0, 0, 0}, {zero_spacing, 0, 0}};
    CHECK(std::abs(jakes_correlation(at_zero, lambda)(0, 1)) < 1e-9);

    const std::vector<Eigen::Vector3d> sixth{{0, 0, 0}, {0, lambda / 6, 0}};
    CHECK_THAT(jakes_correlation(sixth, lambda)(0, 1).real(), WithinAbs(0.7441, 5e-5));

    // symmetric, unit diagonal and bounded for a scattered layout
    std::vector<Eigen::Vector3d> cloud;
    for (int i = 0; i < 12; ++i)
        cloud.emplace_back(0.013 * i, 0.007 * (i % 3), 0.021 * std::sin(i));
    const ComplexMatrix r = jakes_correlation(cloud, lambda);
    CHECK(r == r.transpose());
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
        CHECK(r(i, i) == Complex(1.0, 0.0));
        for (Eigen::Index j = 0; j < r.cols(); ++j) {
            CHECK(r(i, j).imag() == 0.0);
            CHECK(r(i, j).real() >= -0.4028);
            CHECK(r(i, j).real() <= 1.0);
        }
    }

    std::vector<std::string> warnings;
    const DiagnosticSink old = set_diagnostic_sink([&](std::string_view m) { warnings.emplace_back(m); });
    const std::vector<Eigen::Vector3d> dup{{0, 0, 0}, {0, 0, 0}};
    const ComplexMatrix rd = jakes_correlation(dup, lambda);
    set_diagnostic_sink(old);
    CHECK(rd(0, 1) == Complex(1.0, 0.0));
    CHECK(warnings.size() == 1);

    CHECK_THROWS_AS(jakes_correlation(std::vector<Eigen::Vector3d>{}, lambda), std::invalid_argument);
    CHECK_THROWS_AS(jakes_correlation(one, 0.0), std::invalid_argument);
}

TEST_CASE("free-space SI gains")
{
    const double lambda = 0.3;
    CHECK(free_space_gain(lambda / (4 * kPi), lambda) == 1.0);
    CHECK(free_space_gain(lambda / (8 * kPi), lambda) == 1.0);
    CHECK_THAT(free_space_gain(lambda / 6, lambda), WithinRel(0.22797266319526, 1e-12));

    ArrayGeometry g;
    g.wavelength = lambda;
    g.tx_positions = {{0, 0, 0}, {lambda / 6, 0, 0}};
    g.rx_positions = {{0, lambda / 6, 0}, {0, lambda / 3, 0}, {lambda, lambda, 0}};
    const RealMatrix gains = si_pathloss_gains(g);
    REQUIRE(gains.rows() == 3);
    REQUIRE(gains.cols() == 2);
    CHECK_THAT(gains(0, 0), WithinRel(0.22797266319526, 1e-12));

    ArrayGeometry doubled = g;
    for (auto* list : {&doubled.tx_positions, &doubled.rx_positions})
        for (Eigen::Vector3d& p : *list)
            p *= 2.0;
    const RealMatrix gains2 = si_pathloss_gains(doubled);
    for (Eigen::Index i = 0; i < gains.rows(); ++i)
        for (Eigen::Index j = 0; j < gains.cols(); ++j)
            CHECK_THAT(gains2(i, j), WithinRel(gains(i, j) / 4.0, 1e-13));

    // the unit-gain distance lambda / (4 pi) is closer than the lambda / 6 minimum
    ArrayGeometry close = g;
    close.rx_positions = {{0, lambda / (4 * kPi), 0}};
    CHECK_THROWS_AS(si_pathloss_gains(close), ConfigError);
}

TEST_CASE("geometry validation")
{
    ArrayGeometry g;
    g.wavelength = 1.0;
    g.tx_positions = {{0, 0, 0}, {0.5, 0, 0}};
    g.rx_positions = {{1.0, 0, 0}};
    CHECK_NOTHROW(g.validate());
    g.tx_positions[1] = g.tx_positions[0];
    CHECK_THROWS_AS(g.validate(), ConfigError);
    g.tx_positions[1] = {0.9, 0, 0};
    CHECK_THROWS_AS(g.validate(), ConfigError);
    g.tx_positions[1] = {0.5, 0, 0};
    g.wavelength = -1.0;
    CHECK_THROWS_AS(g.validate(), ConfigError);

    RicianParams rp;
    rp.kappa = -1.0;
    CHECK_THROWS_AS(rp.validate(), ConfigError);
}

TEST_CASE("default geometry")
{
    const SystemConfig cfg;
    const ArrayGeometry g = default_geometry(cfg, 2.1e9);
    CHECK_THAT(g.wavelength, WithinRel(0.14275831333333333, 1e-12));
    REQUIRE(g.tx_positions.size() == 64);
    REQUIRE(g.rx_positions.size() == 20);
    CHECK_THAT((g.tx_positions[1] - g.tx_positions[0]).norm(), WithinRel(0.023793052222222222, 1e-12));
    CHECK_THAT((g.rx_positions[1] - g.rx_positions[0]).norm(), WithinRel(0.023793052222222222, 1e-12));

    double min_d = INFINITY;
    for (const auto& r : g.rx_positions)
        for (const auto& t : g.tx_positions)
            min_d = std::min(min_d, (r - t).norm());
    CHECK_THAT(min_d, WithinRel(g.wavelength / 6, 1e-12));
    CHECK_NOTHROW(g.validate());

    const ComplexMatrix r = jakes_correlation(g.tx_positions, g.wavelength);
    CHECK_THAT(r(0, 1).real(), WithinAbs(0.74407197075293, 1e-12));

    CHECK_THROWS_AS(default_geometry(cfg, 0.0), ConfigError);
}

TEST_CASE("correlated model with identity correlation matches iid")
{
    const SystemConfig cfg;
    const CorrelatedChannelModel m = identity_model(cfg, 0.0, 1.0);
    RngStream a(21, 0), b(21, 0);
    const ChannelRealization c = generate_correlated(cfg, m, a);
    const ChannelRealization i = generate_iid(cfg, b);
    CHECK(c.h_dl == i.h_dl);
    CHECK(c.h_ul == i.h_ul);
    CHECK(c.h_si == i.h_si);

    // Kolmogorov-Smirnov of real parts against N(0, 1/2)
    std::vector<double> samples;
    for (int t = 0; samples.size() < 100000; ++t) {
        RngStream s(22, t);
        const ChannelRealization d = generate_correlated(cfg, m, s);
        for (Eigen::Index k = 0; k < d.h_si.size(); ++k)
            samples.push_back(d.h_si(k).real());
    }
    samples.resize(100000);
    std::sort(samples.begin(), samples.end());
    double ks = 0.0;
    const double n = static_cast<double>(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const double cdf = 0.5 * std::erfc(-samples[k]);
        ks = std::max({ks, cdf - k / n, (k + 1) / n - cdf});
    }
    CHECK(ks < 1.628 / std::sqrt(n));
}

TEST_CASE("correlated model limits and moments")
{
    const SystemConfig cfg;

    SECTION("pure line of sight")
    {
        const CorrelatedChannelModel m = identity_model(cfg, 1e9, 1.0);
        RngStream rng(31, 0);
        const ChannelRealization c = generate_correlated(cfg, m, rng);
        CHECK((c.h_si - ComplexMatrix::Ones(cfg.N, cfg.M)).cwiseAbs().maxCoeff() < 1e-4);
    }

    SECTION("unit entry power at kappa = 1")
    {
        const CorrelatedChannelModel m = identity_model(cfg, 1.0, 1.0);
        CHECK(m.si_entry_power().isApproxToConstant(1.0, 1e-14));
        double p = 0.0;
        const int draws = 100;
        for (int t = 0; t < draws; ++t) {
            RngStream rng(32, t);
            p += generate_correlated(cfg, m, rng).h_si.cwiseAbs2().sum();
        }
        CHECK_THAT(p / (draws * 1280.0), WithinAbs(1.0, 0.02));
    }

    SECTION("uncorrelated layout gives identity sample covariance")
    {
        // three transmit elements on an equilateral triangle whose side hits the first J0 zero
        SystemConfig small;
        small.M = 3;
        small.N = 2;
        small.K = 1;
        const double lambda = 1.0;
        const double d = 2.404825557695773 / (2 * kPi);
        ArrayGeometry g;
        g.wavelength = lambda;
        g.tx_positions = {{0, 0, 0}, {d, 0, 0}, {d / 2, d * std::sqrt(3.0) / 2, 0}};
        g.rx_positions = {{0, 0, 10}, {d, 0, 10}};
        RicianParams rp{0.0, 1.0};
        const CorrelatedChannelModel m = make_correlated_model(small, g, rp);
        CHECK((m.tx_sqrt - ComplexMatrix::Identity(3, 3)).norm() < 1e-9);

        ComplexMatrix cov = ComplexMatrix::Zero(3, 3);
        const int draws = 10000;
        for (int t = 0; t < draws; ++t) {
            RngStream rng(33, t);
            const ComplexMatrix h = generate_correlated(small, m, rng).h_dl;
            cov += h.adjoint() * h;
        }
        cov /= draws;
        CHECK((cov - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 0.05);
    }

    SECTION("default geometry model")
    {
        const CorrelatedChannelModel m = make_correlated_model(cfg, default_geometry(cfg, 2.1e9), RicianParams{});
        CHECK(m.tx_sqrt.rows() == 64);
        CHECK(m.rx_sqrt.rows() == 20);
        CHECK((m.tx_sqrt * m.tx_sqrt - jakes_correlation(default_geometry(cfg, 2.1e9).tx_positions,
                                                         default_geometry(cfg, 2.1e9).wavelength))
                  .norm() < 1e-8);
        // sample power of each SI entry tracks the exact profile
        RealMatrix acc = RealMatrix::Zero(cfg.N, cfg.M);
        const int draws = 4000;
        for (int t = 0; t < draws; ++t) {
            RngStream rng(34, t);
            acc += generate_correlated(cfg, m, rng).h_si.cwiseAbs2();
        }
        acc /= draws;
        const RealMatrix exact = m.si_entry_power();
        CHECK(std::abs(acc.sum() / exact.sum() - 1.0) < 0.02);

        RngStream a(35, 0), b(35, 0);
        const ChannelRealization x = generate_correlated(cfg, m, a);
        const ChannelRealization y = generate_correlated(cfg, default_geometry(cfg, 2.1e9), RicianParams{}, b);
        CHECK(x.h_si == y.h_si);
    }

    SECTION("mismatched geometry")
    {
        ArrayGeometry g = default_geometry(cfg, 2.1e9);
        g.rx_positions.pop_back();
        CHECK_THROWS_AS(make_correlated_model(cfg, g, RicianParams{}), ConfigError);
    }
}
