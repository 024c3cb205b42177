// SPDX-License-Identifier: Apache-2.0
//
// secrecy-ascent: secrecy capacity optimization for jammer-assisted V2I links
// Copyright (C) 2026 The secrecy-ascent authors
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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "secrecy/channel.hpp"

using namespace secrecy;
using Catch::Matchers::WithinAbs;

TEST_CASE("steering_vector - closed forms")
{
    const CVec a = steering_vector(2, 0.0);
    REQUIRE(a.size() == 2);
    CHECK_THAT(a(0).real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    CHECK_THAT(a(1).real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    CHECK_THAT(a(1).imag(), WithinAbs(0.0, 1e-15));

    const CVec single = steering_vector(1, 1.234);
    REQUIRE(single.size() == 1);
    CHECK_THAT(std::abs(single(0) - cplx(1.0, 0.0)), WithinAbs(0.0, 1e-15));

    // sin(pi/2) = 1: alternating signs
    const CVec b = steering_vector(4, std::numbers::pi / 2);
    const double expected[] = {0.5, -0.5, 0.5, -0.5};
    for (int k = 0; k < 4; ++k)
    {
        CHECK_THAT(b(k).real(), WithinAbs(expected[k], 1e-15));
        CHECK_THAT(b(k).imag(), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("steering_vector - unit norm for any size and angle")
{
    Rng rng(11);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (std::size_t n = 1; n <= 256; ++n)
        for (int i = 0; i < 1000 / 64 + 1; ++i)
            REQUIRE_THAT(steering_vector(n, angle(rng)).norm(), WithinAbs(1.0, 1e-12));
    for (int i = 0; i < 1000; ++i)
        REQUIRE_THAT(steering_vector(64, angle(rng)).norm(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("draw_paths - cardinality and zero spread")
{
    Rng rng(3);
    CHECK(draw_paths(ChannelParams::mmwave(), rng).size() == 60);

    ChannelParams one{1, 1, 2, 2, 10.0, CarrierBand::Sub6};
    CHECK(draw_paths(one, rng).size() == 1);

    ChannelParams tight = ChannelParams::sub6();
    tight.angular_spread_deg = 0.0;
    const auto paths = draw_paths(tight, rng);
    for (std::size_t c = 0; c < tight.n_clusters; ++c)
        for (std::size_t r = 1; r < tight.n_rays; ++r)
        {
            const auto &first = paths[c * tight.n_rays];
            const auto &p = paths[c * tight.n_rays + r];
            CHECK(p.aoa_azimuth == first.aoa_azimuth);
            CHECK(p.aod_azimuth == first.aod_azimuth);
        }
}

TEST_CASE("draw_paths - rejects invalid parameters")
{
    Rng rng(1);
    ChannelParams bad = ChannelParams::mmwave();
    bad.n_rays = 0;
    CHECK_THROWS_AS(draw_paths(bad, rng), std::invalid_argument);
    bad = ChannelParams::mmwave();
    bad.angular_spread_deg = -1.0;
    CHECK_THROWS_AS(draw_paths(bad, rng), std::invalid_argument);
}

TEST_CASE("build_channel - deterministic cases")
{
    ChannelParams p{1, 1, 3, 5, 0.0, CarrierBand::Sub6};
    std::vector<PathComponent> paths(1);
    paths[0].gain = 1.0;
    const CMat h = build_channel(p, paths);
    REQUIRE(h.rows() == 3);
    REQUIRE(h.cols() == 5);
    CHECK((h - CMat::Ones(3, 5)).norm() < 1e-14);

    Rng rng(5);
    const ChannelParams mm = ChannelParams::mmwave();
    auto zero = draw_paths(mm, rng);
    for (auto &c : zero)
        c.gain = 0.0;
    CHECK(build_channel(mm, zero).norm() == 0.0);

    CHECK_THROWS_AS(build_channel(mm, std::vector<PathComponent>(3)), std::invalid_argument);
}

TEST_CASE("build_channel - linear in the path gains")
{
    Rng rng(8);
    const ChannelParams p = ChannelParams::sub6();
    auto paths = draw_paths(p, rng);
    const CMat h1 = build_channel(p, paths);
    for (auto &c : paths)
        c.gain *= 2.0;
    const CMat h2 = build_channel(p, paths);
    // scaling by two is exact in binary floating point
    CHECK(h2 == 2.0 * h1);
}

TEST_CASE("build_channel - Monte Carlo energy and mean")
{
    // E||H||_F^2 = n_rx * n_tx follows from CN(0,1) gains and unit-norm steering vectors
    for (const auto &p : {ChannelParams::mmwave(), ChannelParams::sub6()})
    {
        Rng rng(2024);
        double energy = 0.0;
        cplx entry_sum = 0.0;
        const int draws = 1000;
        for (int i = 0; i < draws; ++i)
        {
            const CMat h = build_channel(p, draw_paths(p, rng));
            energy += h.squaredNorm() / static_cast<double>(p.n_rx * p.n_tx);
            entry_sum += h.sum();
        }
        const double mean_energy = energy / draws;
        const cplx mean_entry = entry_sum / static_cast<double>(draws * p.n_rx * p.n_tx);
        CHECK_THAT(mean_energy, WithinAbs(1.0, 0.05));
        CHECK(std::abs(mean_entry) < 0.1);
    }
}

TEST_CASE("draw_channel_set - dimensions and determinism")
{
    Rng a(77), b(77);
    const ChannelSet x = draw_channel_set(ChannelParams::mmwave(), a);
    const ChannelSet y = draw_channel_set(ChannelParams::mmwave(), b);
    for (const CMat *m : {&x.h_sl, &x.h_se, &x.h_jl, &x.h_je})
    {
        CHECK(m->rows() == 4);
        CHECK(m->cols() == 64);
    }
    CHECK(x.h_sl == y.h_sl);
    CHECK(x.h_je == y.h_je);
    CHECK(x.h_sl != x.h_se);

    Rng c(1);
    const ChannelSet s = draw_channel_set(ChannelParams::sub6(), c);
    CHECK(s.n_rx() == 4);
    CHECK(s.n_tx() == 16);
    CHECK_NOTHROW(s.validate());
}
