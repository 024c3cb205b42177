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

#include "secrecy/gradients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "secrecy/optimizer.hpp"

namespace secrecy
{
    namespace
    {
        constexpr double inv_ln2 = 1.0 / std::numbers::ln2;

        // Everything the gradients of one receiver's capacity need.
        struct LinkTerms
        {
            CVec u_s;      // H_signal f_s
            CVec u_j;      // H_jam f_j
            cplx c_s;      // w^H u_s
            cplx c_j;      // w^H u_j
            double d_int;  // sigma^2 w^H w + P_j |c_j|^2
            double d_full; // d_int + P_s |c_s|^2
        };

        LinkTerms link_terms(const CMat &h_signal, const CMat &h_jam, const CVec &w, const BeamformerState &bf,
                             double p_s, double p_j, double sigma2)
        {
            LinkTerms t;
            t.u_s = h_signal * bf.f_s;
            t.u_j = h_jam * bf.f_j;
            t.c_s = w.dot(t.u_s);
            t.c_j = w.dot(t.u_j);
            t.d_int = sigma2 * w.squaredNorm() + p_j * std::norm(t.c_j);
            t.d_full = t.d_int + p_s * std::norm(t.c_s);
            return t;
        }

        // d log2(w^H A w / w^H B w) / dw*
        CVec combiner_gradient(const LinkTerms &t, const CVec &w, double p_s, double p_j, double sigma2)
        {
            const CVec b_w = sigma2 * w + (p_j * std::conj(t.c_j)) * t.u_j;
            const CVec a_w = b_w + (p_s * std::conj(t.c_s)) * t.u_s;
            return inv_ln2 * (a_w / t.d_full - b_w / t.d_int);
        }

        // d C / df_j* for one receiver: P_j a (a^H f_j) (1/d_full - 1/d_int), a = H_jam^H w
        CVec jammer_gradient(const LinkTerms &t, const CMat &h_jam, const CVec &w, double p_j)
        {
            const CVec a = h_jam.adjoint() * w;
            return (inv_ln2 * p_j * t.c_j * (1.0 / t.d_full - 1.0 / t.d_int)) * a;
        }

        // d C / df_s* for one receiver: P_s b (b^H f_s) / d_full, b = H_signal^H w
        CVec source_gradient(const LinkTerms &t, const CMat &h_signal, const CVec &w, double p_s)
        {
            const CVec b = h_signal.adjoint() * w;
            return (inv_ln2 * p_s * t.c_s / t.d_full) * b;
        }

        struct BothLinks
        {
            LinkTerms l;
            LinkTerms e;
        };

        BothLinks both_links(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw)
        {
            check_dimensions(ch, bf);
            return {link_terms(ch.h_sl, ch.h_jl, bf.w_l, bf, pw.p_s, pw.p_j, pw.sigma2_l),
                    link_terms(ch.h_se, ch.h_je, bf.w_e, bf, pw.p_s, pw.p_j, pw.sigma2_e)};
        }
    }

    QuadForms quad_forms(const ChannelSet &ch, const BeamformerState &bf)
    {
        check_dimensions(ch, bf);
        QuadForms q;
        q.psi_sl = std::norm(bf.w_l.dot(ch.h_sl * bf.f_s));
        q.psi_jl = std::norm(bf.w_l.dot(ch.h_jl * bf.f_j));
        q.psi_se = std::norm(bf.w_e.dot(ch.h_se * bf.f_s));
        q.psi_je = std::norm(bf.w_e.dot(ch.h_je * bf.f_j));
        return q;
    }

    CVec grad_wl(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw)
    {
        const auto t = both_links(ch, bf, pw);
        return combiner_gradient(t.l, bf.w_l, pw.p_s, pw.p_j, pw.sigma2_l);
    }

    CVec grad_we(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw)
    {
        const auto t = both_links(ch, bf, pw);
        return -combiner_gradient(t.e, bf.w_e, pw.p_s, pw.p_j, pw.sigma2_e);
    }

    CVec grad_fj(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw)
    {
        const auto t = both_links(ch, bf, pw);
        return jammer_gradient(t.l, ch.h_jl, bf.w_l, pw.p_j) - jammer_gradient(t.e, ch.h_je, bf.w_e, pw.p_j);
    }

    CVec grad_fs(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw)
    {
        const auto t = both_links(ch, bf, pw);
        return source_gradient(t.l, ch.h_sl, bf.w_l, pw.p_s) - source_gradient(t.e, ch.h_se, bf.w_e, pw.p_s);
    }

    GradientBundle gradient_bundle(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw,
                                   bool include_we)
    {
        const auto t = both_links(ch, bf, pw);
        GradientBundle g;
        g.g_wl = combiner_gradient(t.l, bf.w_l, pw.p_s, pw.p_j, pw.sigma2_l);
        g.g_fj = jammer_gradient(t.l, ch.h_jl, bf.w_l, pw.p_j) - jammer_gradient(t.e, ch.h_je, bf.w_e, pw.p_j);
        g.g_fs = source_gradient(t.l, ch.h_sl, bf.w_l, pw.p_s) - source_gradient(t.e, ch.h_se, bf.w_e, pw.p_s);
        if (include_we)
            g.g_we = -combiner_gradient(t.e, bf.w_e, pw.p_s, pw.p_j, pw.sigma2_e);
        return g;
    }

    const CVec &component(const BeamformerState &bf, BeamVariable v)
    {
        switch (v)
        {
        case BeamVariable::WL:
            return bf.w_l;
        case BeamVariable::WE:
            return bf.w_e;
        case BeamVariable::FS:
            return bf.f_s;
        case BeamVariable::FJ:
            return bf.f_j;
        }
        throw std::invalid_argument("unknown beam variable");
    }

    CVec &component(BeamformerState &bf, BeamVariable v)
    {
        return const_cast<CVec &>(component(static_cast<const BeamformerState &>(bf), v));
    }

    CVec fd_gradient(const VectorObjective &objective, const CVec &point, double h)
    {
        if (!(h > 0.0))
            throw std::invalid_argument("fd_gradient: step must be positive");

        auto eval = [&](const CVec &x)
        {
            const double f = objective(x);
            if (!std::isfinite(f))
                throw std::runtime_error("fd_gradient: objective not finite at probe point");
            return f;
        };

        CVec g(point.size());
        CVec probe = point;
        for (Eigen::Index k = 0; k < point.size(); ++k)
        {
            const cplx x0 = point(k);

            probe(k) = x0 + cplx(h, 0.0);
            const double re_plus = eval(probe);
            probe(k) = x0 - cplx(h, 0.0);
            const double re_minus = eval(probe);

            probe(k) = x0 + cplx(0.0, h);
            const double im_plus = eval(probe);
            probe(k) = x0 - cplx(0.0, h);
            const double im_minus = eval(probe);

            probe(k) = x0;
            const double d_re = (re_plus - re_minus) / (2.0 * h);
            const double d_im = (im_plus - im_minus) / (2.0 * h);
            g(k) = 0.5 * cplx(d_re, d_im);
        }
        return g;
    }

    VectorObjective rate_gap_objective(const ChannelSet &ch, const BeamformerState &bf, const PowerConfig &pw,
                                       BeamVariable v)
    {
        return [ch, bf, pw, v](const CVec &x)
        {
            BeamformerState s = bf;
            component(s, v) = x;
            return secrecy_capacity(ch, s, pw).rate_gap();
        };
    }

    double relative_error(const CVec &analytic, const CVec &reference, double floor)
    {
        return (analytic - reference).norm() / std::max(reference.norm(), floor);
    }

    double GradCheckReport::worst() const
    {
        return std::max({max_err_wl, max_err_fj, max_err_fs, max_err_we});
    }

    GradCheckReport gradient_check(const GradCheckOptions &opt)
    {
        ChannelParams params;
        params.n_rx = opt.n_rx;
        params.n_tx = opt.n_tx;
        params.n_clusters = 3;
        params.n_rays = 4;
        params.validate();

        Rng rng(opt.seed);
        std::uniform_real_distribution<double> power_db(-10.0, 20.0);

        GradCheckReport report;
        for (std::size_t i = 0; i < opt.instances; ++i)
        {
            const ChannelSet ch = draw_channel_set(params, rng);
            PowerConfig pw;
            pw.p_s = db_to_linear(power_db(rng));
            pw.p_j = db_to_linear(power_db(rng));
            const BeamformerState bf = warm_start(params, rng);

            GradientBundle g = gradient_bundle(ch, bf, pw, true);
            if (opt.corrupt)
                g.g_fs *= 1.01;

            auto check = [&](BeamVariable v, const CVec &analytic, double &worst)
            {
                const CVec fd = fd_gradient(rate_gap_objective(ch, bf, pw, v), component(bf, v), opt.h);
                worst = std::max(worst, relative_error(analytic, fd));
            };
            check(BeamVariable::WL, g.g_wl, report.max_err_wl);
            check(BeamVariable::FJ, g.g_fj, report.max_err_fj);
            check(BeamVariable::FS, g.g_fs, report.max_err_fs);
            check(BeamVariable::WE, *g.g_we, report.max_err_we);
            ++report.instances;
        }
        return report;
    }
}
