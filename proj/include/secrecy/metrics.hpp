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

#pragma once

#include "secrecy/channel.hpp"

namespace secrecy
{
    // Linear-scale powers and receiver noise variances.
    struct PowerConfig
    {
        double p_s = 10.0;
        double p_j = 10.0;
        double sigma2_l = 1.0;
        double sigma2_e = 1.0;

        void validate() const;
    };

    // Optimization variables: combiners at L and E, precoders at S and J.
    struct BeamformerState
    {
        CVec w_l;
        CVec w_e;
        CVec f_s;
        CVec f_j;
    };

    struct SecrecySnapshot
    {
        double gamma_l = 0.0;
        double gamma_e = 0.0;
        double c_l = 0.0;
        double c_e = 0.0;
        double c_s = 0.0; // max(c_l - c_e, 0)

        // Unclamped c_l - c_e, the smooth objective the ascent follows.
        double rate_gap() const { return c_l - c_e; }
    };

    double db_to_linear(double db);
    double linear_to_db(double linear);

    // Throws std::invalid_argument unless every vector matches the channel set.
    void check_dimensions(const ChannelSet &ch, const BeamformerState &bf);

    // P_s |w_L^H H_sl f_s|^2 / (w_L^H w_L sigma_L^2 + P_j |w_L^H H_jl f_j|^2)
    double sinr_legitimate(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw);

    // Same form with H_se, H_je, w_E and sigma_E^2.
    double sinr_eavesdropper(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw);

    // log2(1 + gamma)
    double capacity(double gamma);

    SecrecySnapshot secrecy_capacity(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw);

    // Diagnostic built from the extreme singular values of the four links.
    // Not clamped, so it can come out negative. With literal_form the first
    // denominator omits P_j, exactly as typeset in the source material; the
    // default scales both jammer terms by P_j.
    double svd_upper_bound(const ChannelSet &ch, const PowerConfig &pw, bool literal_form = false);
}
