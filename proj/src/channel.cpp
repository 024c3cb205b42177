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

#include "secrecy/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace secrecy
{
    namespace
    {
        cplx draw_cn01(Rng &rng)
        {
            std::normal_distribution<double> n(0.0, std::sqrt(0.5));
            const double re = n(rng);
            const double im = n(rng);
            return {re, im};
        }

        void check_finite(const CMat &m, const char *name)
        {
            if (!m.allFinite())
                throw std::invalid_argument(std::string("channel ") + name + " has non-finite entries");
        }
    }

    double deg_to_rad(double deg)
    {
        return deg * std::numbers::pi / 180.0;
    }

    void ChannelParams::validate() const
    {
        if (n_clusters < 1)
            throw std::invalid_argument("n_clusters must be >= 1");
        if (n_rays < 1)
            throw std::invalid_argument("n_rays must be >= 1");
        if (n_rx < 1)
            throw std::invalid_argument("n_rx must be >= 1");
        if (n_tx < 1)
            throw std::invalid_argument("n_tx must be >= 1");
        if (!std::isfinite(angular_spread_deg) || angular_spread_deg < 0.0)
            throw std::invalid_argument("angular_spread_deg must be finite and >= 0");
    }

    ChannelParams ChannelParams::mmwave()
    {
        return ChannelParams{4, 15, 4, 64, 10.0, CarrierBand::MmWave};
    }

    ChannelParams ChannelParams::sub6()
    {
        return ChannelParams{10, 20, 4, 16, 10.0, CarrierBand::Sub6};
    }

    void ChannelSet::validate() const
    {
        const auto r = h_sl.rows(), c = h_sl.cols();
        for (const CMat *m : {&h_se, &h_jl, &h_je})
            if (m->rows() != r || m->cols() != c)
                throw std::invalid_argument("channel matrices must share dimensions");
        if (r < 1 || c < 1)
            throw std::invalid_argument("channel matrices must be non-empty");
        check_finite(h_sl, "h_sl");
        check_finite(h_se, "h_se");
        check_finite(h_jl, "h_jl");
        check_finite(h_je, "h_je");
    }

    CVec steering_vector(std::size_t n_antennas, double azimuth)
    {
        if (n_antennas < 1)
            throw std::invalid_argument("steering_vector: n_antennas must be >= 1");
        const double scale = 1.0 / std::sqrt(static_cast<double>(n_antennas));
        const double phase_step = std::numbers::pi * std::sin(azimuth);
        CVec a(static_cast<Eigen::Index>(n_antennas));
        for (std::size_t k = 0; k < n_antennas; ++k)
            a(static_cast<Eigen::Index>(k)) = std::polar(scale, phase_step * static_cast<double>(k));
        return a;
    }

    std::vector<PathComponent> draw_paths(const ChannelParams &params, Rng &rng)
    {
        params.validate();
        constexpr double two_pi = 2.0 * std::numbers::pi;
        constexpr double half_pi = 0.5 * std::numbers::pi;
        const double sigma = deg_to_rad(params.angular_spread_deg);

        std::uniform_real_distribution<double> azimuth_centre(0.0, two_pi);
        std::uniform_real_distribution<double> elevation_centre(-half_pi, half_pi);
        // normal_distribution requires a positive deviation
        auto offset = [&](void) -> double
        {
            if (sigma == 0.0)
                return 0.0;
            std::normal_distribution<double> n(0.0, sigma);
            return n(rng);
        };

        std::vector<PathComponent> paths;
        paths.reserve(params.n_paths());
        for (std::size_t c = 0; c < params.n_clusters; ++c)
        {
            const double aoa_az = azimuth_centre(rng);
            const double aoa_el = elevation_centre(rng);
            const double aod_az = azimuth_centre(rng);
            const double aod_el = elevation_centre(rng);
            for (std::size_t r = 0; r < params.n_rays; ++r)
            {
                PathComponent p;
                p.gain = draw_cn01(rng);
                p.aoa_azimuth = aoa_az + offset();
                p.aoa_elevation = aoa_el + offset();
                p.aod_azimuth = aod_az + offset();
                p.aod_elevation = aod_el + offset();
                paths.push_back(p);
            }
        }
        return paths;
    }

    CMat build_channel(const ChannelParams &params, const std::vector<PathComponent> &paths)
    {
        params.validate();
        if (paths.size() != params.n_paths())
            throw std::invalid_argument("build_channel: expected " + std::to_string(params.n_paths()) +
                                        " path components, got " + std::to_string(paths.size()));

        const double scale = std::sqrt(static_cast<double>(params.n_rx * params.n_tx) /
                                       static_cast<double>(params.n_paths()));
        CMat h = CMat::Zero(static_cast<Eigen::Index>(params.n_rx), static_cast<Eigen::Index>(params.n_tx));
        for (const auto &p : paths)
        {
            const CVec a_r = steering_vector(params.n_rx, p.aoa_azimuth);
            const CVec a_t = steering_vector(params.n_tx, p.aod_azimuth);
            h.noalias() += p.gain * a_r * a_t.adjoint();
        }
        h *= scale;
        return h;
    }

    ChannelSet draw_channel_set(const ChannelParams &params, Rng &rng)
    {
        ChannelSet ch;
        ch.h_sl = build_channel(params, draw_paths(params, rng));
        ch.h_se = build_channel(params, draw_paths(params, rng));
        ch.h_jl = build_channel(params, draw_paths(params, rng));
        ch.h_je = build_channel(params, draw_paths(params, rng));
        return ch;
    }

    CVec complex_gaussian(std::size_t n, Rng &rng)
    {
        CVec v(static_cast<Eigen::Index>(n));
        for (Eigen::Index k = 0; k < v.size(); ++k)
            v(k) = draw_cn01(rng);
        return v;
    }
}
