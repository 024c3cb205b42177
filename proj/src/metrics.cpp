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

#include "secrecy/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace secrecy
{
    namespace
    {
        double link_sinr(const CMat &h_signal, const CMat &h_jam, const CVec &w, const CVec &f_s, const CVec &f_j,
                         double p_s, double p_j, double sigma2)
        {
            const double signal = std::norm(w.dot(h_signal * f_s));
            const double jam = std::norm(w.dot(h_jam * f_j));
            return p_s * signal / (w.squaredNorm() * sigma2 + p_j * jam);
        }

        void check_vector(const CVec &v, Eigen::Index n, const char *name)
        {
            if (v.size() != n)
                throw std::invalid_argument(std::string(name) + " has length " + std::to_string(v.size()) +
                                            ", expected " + std::to_string(n));
        }
    }

    void PowerConfig::validate() const
    {
        if (!(p_s >= 0.0) || !std::isfinite(p_s))
            throw std::invalid_argument("p_s must be finite and >= 0");
        if (!(p_j >= 0.0) || !std::isfinite(p_j))
            throw std::invalid_argument("p_j must be finite and >= 0");
        if (!(sigma2_l > 0.0) || !std::isfinite(sigma2_l))
            throw std::invalid_argument("sigma2_l must be finite and > 0");
        if (!(sigma2_e > 0.0) || !std::isfinite(sigma2_e))
            throw std::invalid_argument("sigma2_e must be finite and > 0");
    }

    double db_to_linear(double db)
    {
        return std::pow(10.0, db / 10.0);
    }

    double linear_to_db(double linear)
    {
        return 10.0 * std::log10(linear);
    }

    void check_dimensions(const ChannelSet &ch, const BeamformerState &bf)
    {
        for (const CMat *m : {&ch.h_se, &ch.h_jl, &ch.h_je})
            if (m->rows() != ch.n_rx() || m->cols() != ch.n_tx())
                throw std::invalid_argument("channel matrices must share dimensions");
        check_vector(bf.w_l, ch.n_rx(), "w_l");
        check_vector(bf.w_e, ch.n_rx(), "w_e");
        check_vector(bf.f_s, ch.n_tx(), "f_s");
        check_vector(bf.f_j, ch.n_tx(), "f_j");
    }

    double sinr_legitimate(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw)
    {
        check_dimensions(ch, bf);
        return link_sinr(ch.h_sl, ch.h_jl, bf.w_l, bf.f_s, bf.f_j, pw.p_s, pw.p_j, pw.sigma2_l);
    }

    double sinr_eavesdropper(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw)
    {
        check_dimensions(ch, bf);
        return link_sinr(ch.h_se, ch.h_je, bf.w_e, bf.f_s, bf.f_j, pw.p_s, pw.p_j, pw.sigma2_e);
    }

    double capacity(double gamma)
    {
        return std::log2(1.0 + gamma);
    }

    SecrecySnapshot secrecy_capacity(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw)
    {
        SecrecySnapshot s;
        s.gamma_l = sinr_legitimate(ch, bf, pw);
        s.gamma_e = sinr_eavesdropper(ch, bf, pw);
        s.c_l = capacity(s.gamma_l);
        s.c_e = capacity(s.gamma_e);
        s.c_s = std::max(s.c_l - s.c_e, 0.0);
        if (!std::isfinite(s.c_l) || !std::isfinite(s.c_e))
            throw std::runtime_error("secrecy_capacity: non-finite capacity");
        return s;
    }

    double svd_upper_bound(const ChannelSet &ch, const PowerConfig &pw, bool literal_form)
    {
        ch.validate();
        // singular values come back sorted in descending order
        auto singular = [](const CMat &h) { return Eigen::JacobiSVD<CMat>(h).singularValues(); };
        const Eigen::VectorXd sv_sl = singular(ch.h_sl);
        const Eigen::VectorXd sv_se = singular(ch.h_se);
        const Eigen::VectorXd sv_jl = singular(ch.h_jl);
        const Eigen::VectorXd sv_je = singular(ch.h_je);
        const double sl_max = sv_sl(0);
        const double se_min = sv_se(sv_se.size() - 1);
        const double jl_min = sv_jl(sv_jl.size() - 1);
        const double je_max = sv_je(0);

        const double jam_l = (literal_form ? 1.0 : pw.p_j) * jl_min * jl_min;
        const double legit = std::log2(1.0 + pw.p_s * sl_max * sl_max / (pw.sigma2_l + jam_l));
        const double eaves = std::log2(1.0 + pw.p_s * se_min * se_min / (pw.sigma2_e + pw.p_j * je_max * je_max));
        return legit - eaves;
    }
}
