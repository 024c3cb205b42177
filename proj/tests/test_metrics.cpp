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

#include "secrecy/metrics.hpp"
#include "secrecy/optimizer.hpp"

using namespace secrecy;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    CMat scalar(double v)
    {
        return CMat::Constant(1, 1, cplx(v, 0.0));
    }

    ChannelSet scalar_channels(double sl, double se, double jl, double je)
    {
        return {scalar(sl), scalar(se), scalar(jl), scalar(je)};
    }

    BeamformerState scalar_state()
    {
        const CVec one = CVec::Constant(1, cplx(1.0, 0.0));
        return {one, one, one, one};
    }

    PowerConfig powers(double p_s, double p_j)
    {
        return {p_s, p_j, 1.0, 1.0};
    }
}

TEST_CASE("sinr - scalar substitutions")
{
    const BeamformerState bf = scalar_state();
    CHECK_THAT(sinr_legitimate(scalar_channels(1, 0, 0, 0), bf, powers(10, 10)), WithinAbs(10.0, 1e-15));
    CHECK(sinr_legitimate(scalar_channels(1, 0, 0, 0), bf, powers(0, 10)) == 0.0);
    CHECK_THAT(sinr_legitimate(scalar_channels(1, 0, 1, 0), bf, powers(10, 10)), WithinAbs(10.0 / 11.0, 1e-15));

    CHECK(sinr_eavesdropper(scalar_channels(1, 0, 0, 0), bf, powers(10, 10)) == 0.0);
    CHECK_THAT(sinr_eavesdropper(scalar_channels(0, 1, 0, 0), bf, powers(10, 10)), WithinAbs(10.0, 1e-15));
    CHECK_THAT(sinr_eavesdropper(scalar_channels(0, 1, 0, 3), bf, powers(1, 1)), WithinAbs(0.1, 1e-15));
}

TEST_CASE("capacity - log2(1 + gamma)")
{
    CHECK(capacity(0.0) == 0.0);
    CHECK(capacity(1.0) == 1.0);
    CHECK(capacity(3.0) == 2.0);
}

TEST_CASE("secrecy_capacity - subtraction, symmetry and clamp")
{
    const BeamformerState bf = scalar_state();
    // gamma_L = 2^2.5 - 1, gamma_E = 1 with P_s = 1 and no jamming
    const double h_sl = std::sqrt(std::pow(2.0, 2.5) - 1.0);
    const SecrecySnapshot s = secrecy_capacity(scalar_channels(h_sl, 1, 0, 0), bf, powers(1, 0));
    CHECK_THAT(s.c_l, WithinAbs(2.5, 1e-12));
    CHECK_THAT(s.c_e, WithinAbs(1.0, 1e-12));
    CHECK_THAT(s.c_s, WithinAbs(1.5, 1e-12));

    Rng rng(4);
    const ChannelParams p = ChannelParams::sub6();
    ChannelSet sym = draw_channel_set(p, rng);
    sym.h_se = sym.h_sl;
    sym.h_je = sym.h_jl;
    BeamformerState same = warm_start(p, rng);
    same.w_e = same.w_l;
    CHECK(secrecy_capacity(sym, same, powers(10, 10)).c_s == 0.0);

    const SecrecySnapshot neg = secrecy_capacity(scalar_channels(1, 3, 0, 0), bf, powers(1, 0));
    CHECK(neg.c_l < neg.c_e);
    CHECK(neg.c_s == 0.0);
}

TEST_CASE("secrecy_capacity - dimension mismatch")
{
    Rng rng(1);
    const ChannelSet ch = draw_channel_set(ChannelParams::sub6(), rng);
    BeamformerState bf = warm_start(ChannelParams::sub6(), rng);
    bf.f_s = CVec::Ones(3);
    CHECK_THROWS_AS(secrecy_capacity(ch, bf, powers(10, 10)), std::invalid_argument);
}

TEST_CASE("svd_upper_bound - scalar cases")
{
    // log2(1 + 1*4/(1 + 1)) - log2(1 + 1/(1 + 9)) = log2(3) - log2(1.1)
    const ChannelSet ch = scalar_channels(2, 1, 1, 3);
    CHECK_THAT(svd_upper_bound(ch, powers(1, 1)), WithinAbs(std::log2(3.0) - std::log2(1.1), 1e-12));
    CHECK_THAT(svd_upper_bound(ch, powers(1, 1)), WithinAbs(1.4474589, 1e-6));

    const ChannelSet no_eve = scalar_channels(2, 0, 1, 3);
    CHECK_THAT(svd_upper_bound(no_eve, powers(1, 1)), WithinAbs(std::log2(3.0), 1e-12));

    CHECK(svd_upper_bound(ch, powers(0, 1)) == 0.0);

    // the literal form drops P_j from the first denominator only
    CHECK_THAT(svd_upper_bound(ch, powers(1, 4), true),
               WithinAbs(std::log2(1.0 + 4.0 / 2.0) - std::log2(1.0 + 1.0 / 37.0), 1e-12));
}

TEST_CASE("svd_upper_bound - may be negative")
{
    const ChannelSet ch = scalar_channels(0.1, 3, 5, 0);
    CHECK(svd_upper_bound(ch, powers(10, 1)) < 0.0);
}

TEST_CASE("metrics properties on random instances")
{
    Rng rng(99);
    const ChannelParams p = ChannelParams::sub6();
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i)
    {
        const ChannelSet ch = draw_channel_set(p, rng);
        const BeamformerState bf = warm_start(p, rng);
        PowerConfig pw = powers(db_to_linear(30 * u(rng) - 10), db_to_linear(30 * u(rng) - 10));

        const SecrecySnapshot s = secrecy_capacity(ch, bf, pw);
        REQUIRE(s.c_s >= 0.0);
        REQUIRE(std::isfinite(s.c_s));

        // more jamming never helps the eavesdropper
        PowerConfig louder = pw;
        louder.p_j *= 1.0 + 5.0 * u(rng);
        REQUIRE(sinr_eavesdropper(ch, bf, louder) <= sinr_eavesdropper(ch, bf, pw));

        // |.|^2 is blind to a common phase on w_L
        BeamformerState rotated = bf;
        rotated.w_l *= std::polar(1.0, 6.28 * u(rng));
        REQUIRE_THAT(sinr_legitimate(ch, rotated, pw), WithinRel(sinr_legitimate(ch, bf, pw), 1e-12));

        REQUIRE_THAT(bf.w_l.squaredNorm() * pw.sigma2_l, WithinAbs(pw.sigma2_l, 1e-9));
    }
}

TEST_CASE("dB conversion")
{
    CHECK_THAT(db_to_linear(10.0), WithinRel(10.0, 1e-15));
    CHECK_THAT(db_to_linear(30.0), WithinRel(1000.0, 1e-15));
    CHECK_THAT(linear_to_db(db_to_linear(15.62)), WithinAbs(15.62, 1e-12));
}
