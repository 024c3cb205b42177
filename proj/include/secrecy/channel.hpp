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

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace secrecy
{
    using cplx = std::complex<double>;
    using CVec = Eigen::VectorXcd;
    using CMat = Eigen::MatrixXcd;

    // Every stochastic routine takes one of these by reference. Callers running
    // in parallel must each own their engine.
    using Rng = std::mt19937_64;

    enum class CarrierBand
    {
        Sub6,
        MmWave
    };

    struct ChannelParams
    {
        std::size_t n_clusters = 4;
        std::size_t n_rays = 15;
        std::size_t n_rx = 4;
        std::size_t n_tx = 64;
        double angular_spread_deg = 10.0;
        CarrierBand band = CarrierBand::MmWave;

        std::size_t n_paths() const { return n_clusters * n_rays; }

        // Throws std::invalid_argument naming the offending field.
        void validate() const;

        // Table 1 columns.
        static ChannelParams mmwave();
        static ChannelParams sub6();
    };

    // One (cluster, ray) term of the geometric sum. Elevation angles are kept
    // for completeness; the ULA response only depends on azimuth.
    struct PathComponent
    {
        cplx gain{0.0, 0.0};
        double aoa_azimuth = 0.0;
        double aoa_elevation = 0.0;
        double aod_azimuth = 0.0;
        double aod_elevation = 0.0;
    };

    // The four links of one realization, each n_rx x n_tx.
    struct ChannelSet
    {
        CMat h_sl; // source -> legitimate receiver
        CMat h_se; // source -> eavesdropper
        CMat h_jl; // jammer -> legitimate receiver
        CMat h_je; // jammer -> eavesdropper

        Eigen::Index n_rx() const { return h_sl.rows(); }
        Eigen::Index n_tx() const { return h_sl.cols(); }

        // Dimensions agree and every entry is finite.
        void validate() const;
    };

    // Half-wavelength ULA response, unit 2-norm:
    // a[k] = exp(j*pi*k*sin(azimuth)) / sqrt(n), k = 0..n-1
    CVec steering_vector(std::size_t n_antennas, double azimuth);

    // Cluster centres uniform on [0, 2pi), ray offsets Gaussian with the
    // angular spread as standard deviation, gains CN(0,1). Arrival and
    // departure angles are independent.
    std::vector<PathComponent> draw_paths(const ChannelParams &params, Rng &rng);

    // H = sqrt(n_rx*n_tx / (n_cl*n_ray)) * sum_k gain_k * a_R(aoa_k) * a_T(aod_k)^H
    CMat build_channel(const ChannelParams &params, const std::vector<PathComponent> &paths);

    // Four independent realizations drawn in the order sl, se, jl, je.
    ChannelSet draw_channel_set(const ChannelParams &params, Rng &rng);

    // Standard circularly-symmetric complex Gaussian vector, CN(0, I).
    CVec complex_gaussian(std::size_t n, Rng &rng);

    double deg_to_rad(double deg);
}
