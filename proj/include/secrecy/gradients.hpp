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

#include <cstdint>
#include <functional>
#include <optional>

#include "secrecy/metrics.hpp"

namespace secrecy
{
    // Squared bilinear forms |w^H H f|^2 of the four links.
    struct QuadForms
    {
        double psi_jl = 0.0;
        double psi_sl = 0.0;
        double psi_je = 0.0;
        double psi_se = 0.0;
    };

    // Conjugate (Wirtinger) gradients d(C_L - C_E)/dv* of the unclamped
    // secrecy rate, 1/ln2 factor included. Wherever C_s > 0 these are the
    // gradients of C_s itself.
    struct GradientBundle
    {
        CVec g_wl;
        CVec g_fj;
        CVec g_fs;
        std::optional<CVec> g_we; // benchmark mode only
    };

    enum class BeamVariable
    {
        WL,
        WE,
        FS,
        FJ
    };

    QuadForms quad_forms(const ChannelSet &ch, const BeamformerState &bf);

    CVec grad_wl(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw);
    CVec grad_fj(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw);
    CVec grad_fs(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw);
    CVec grad_we(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw);

    // All gradients from one shared evaluation of the link terms.
    GradientBundle gradient_bundle(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw,
                                   bool include_we);

    const CVec &component(const BeamformerState &bf, BeamVariable v);
    CVec &component(BeamformerState &bf, BeamVariable v);

    using VectorObjective = std::function<double(const CVec &)>;

    // Central differences on every real and imaginary coordinate, assembled as
    // 0.5 * (d/dRe + j d/dIm). Throws std::runtime_error when the objective is
    // not finite at a probe point.
    CVec fd_gradient(const VectorObjective &objective, const CVec &point, double h = 1e-6);

    // C_L - C_E as a function of one beamformer vector, the others held at bf.
    VectorObjective rate_gap_objective(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw,
                                       BeamVariable v);

    // ||analytic - reference|| / max(||reference||, floor). The floor keeps
    // identically-zero gradients (e.g. combiners of a single-antenna receiver)
    // from dividing round-off by round-off.
    double relative_error(const CVec &analytic, const CVec &reference, double floor = 1e-3);

    struct GradCheckOptions
    {
        std::size_t n_rx = 4;
        std::size_t n_tx = 16;
        std::uint64_t seed = 1;
        std::size_t instances = 100;
        double h = 1e-6;
        bool corrupt = false; // negative control: perturbs the analytic f_s gradient
    };

    struct GradCheckReport
    {
        std::size_t instances = 0;
        double max_err_wl = 0.0;
        double max_err_fj = 0.0;
        double max_err_fs = 0.0;
        double max_err_we = 0.0;

        double worst() const;
        bool passed(double tolerance = 1e-5) const { return worst() < tolerance; }
    };

    // Random channels, powers and constant-amplitude states; every analytic
    // gradient compared against fd_gradient.
    GradCheckReport gradient_check(const GradCheckOptions &opt);
}
