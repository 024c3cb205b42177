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

#include "secrecy/optimizer.hpp"

#include <cmath>

namespace secrecy
{
    namespace
    {
        CVec project(const CVec &v, const CVec &step, double delta)
        {
            return project_ca(project_unit_norm(v + delta * step));
        }

        bool all_zero(const GradientBundle &g)
        {
            bool zero = g.g_wl.isZero(0.0) && g.g_fj.isZero(0.0) && g.g_fs.isZero(0.0);
            if (g.g_we)
                zero = zero && g.g_we->isZero(0.0);
            return zero;
        }

        TraceRecord make_record(std::size_t cycle, std::size_t iteration, const SecrecySnapshot &s, double delta,
                                double p_s)
        {
            return {cycle, iteration, s.c_s, s.c_l, s.c_e, delta, p_s};
        }

        // Body of the fixed-power loop; updates state/snapshot in place and
        // appends accepted iterates to the trace.
        CycleSummary run_cycle(const ChannelSet &ch, const PowerConfig &pw, const OptimizerConfig &cfg,
                               std::size_t cycle, BeamformerState &state, SecrecySnapshot &snap,
                               OptimizerTrace &trace, const IterateObserver &observer)
        {
            double delta = cfg.delta0;
            snap = secrecy_capacity(ch, state, pw);
            trace.records.push_back(make_record(cycle, 0, snap, delta, pw.p_s));
            if (observer)
                observer(state, trace.records.back());

            CycleSummary summary;
            summary.cycle = cycle;
            summary.p_s = pw.p_s;
            summary.reason = Termination::IterCap;

            std::size_t iter = 0;
            while (iter < cfg.max_iters)
            {
                const GradientBundle g = gradient_bundle(ch, state, pw, cfg.optimize_we);
                if (all_zero(g))
                {
                    summary.reason = Termination::Converged;
                    break;
                }
                ++iter;

                BeamformerState next = state;
                next.w_l = project(state.w_l, g.g_wl, delta);
                if (cfg.optimize_we)
                    next.w_e = project(state.w_e, *g.g_we, delta);
                next.f_j = project(state.f_j, g.g_fj, delta);
                next.f_s = project(state.f_s, g.g_fs, delta);

                const SecrecySnapshot candidate = secrecy_capacity(ch, next, pw);
                if (candidate.rate_gap() < snap.rate_gap())
                {
                    if (delta <= cfg.delta_min)
                    {
                        summary.reason = Termination::Converged;
                        break;
                    }
                    delta = std::max(0.5 * delta, cfg.delta_min);
                    continue;
                }

                const double change = std::abs(candidate.rate_gap() - snap.rate_gap());
                state = std::move(next);
                snap = candidate;
                trace.records.push_back(make_record(cycle, iter, snap, delta, pw.p_s));
                if (observer)
                    observer(state, trace.records.back());
                if (change <= cfg.epsilon)
                {
                    summary.reason = Termination::Converged;
                    break;
                }
            }
            summary.iterations = iter;
            summary.c_s = snap.c_s;
            trace.cycles.push_back(summary);
            return summary;
        }

        void check_inputs(const ChannelSet &ch, const PowerConfig &pw, const OptimizerConfig &cfg,
                          const BeamformerState &init)
        {
            ch.validate();
            pw.validate();
            cfg.validate();
            check_dimensions(ch, init);
        }
    }

    void OptimizerConfig::validate() const
    {
        if (!(delta0 > 0.0))
            throw std::invalid_argument("delta0 must be > 0");
        if (!(epsilon > 0.0))
            throw std::invalid_argument("epsilon must be > 0");
        if (!(kappa > 0.0))
            throw std::invalid_argument("kappa must be > 0");
        if (!(mu > 0.0))
            throw std::invalid_argument("mu must be > 0");
        if (max_iters < 1)
            throw std::invalid_argument("max_iters must be >= 1");
        if (max_cycles < 1)
            throw std::invalid_argument("max_cycles must be >= 1");
        if (!(delta_min > 0.0))
            throw std::invalid_argument("delta_min must be > 0");
        if (zeta && !(*zeta >= 0.0 && std::isfinite(*zeta)))
            throw std::invalid_argument("zeta must be finite and >= 0");
    }

    std::string to_string(Termination t)
    {
        switch (t)
        {
        case Termination::Converged:
            return "Converged";
        case Termination::IterCap:
            return "IterCap";
        case Termination::PowerCap:
            return "PowerCap";
        case Termination::TargetReached:
            return "TargetReached";
        case Termination::CycleCap:
            return "CycleCap";
        }
        return "Unknown";
    }

    Termination termination_from_string(const std::string &s)
    {
        for (auto t : {Termination::Converged, Termination::IterCap, Termination::PowerCap,
                       Termination::TargetReached, Termination::CycleCap})
            if (to_string(t) == s)
                return t;
        throw std::invalid_argument("unknown termination reason '" + s + "'");
    }

    CVec project_unit_norm(const CVec &v)
    {
        const double n = v.norm();
        if (!(n > 0.0) || !std::isfinite(n))
            throw DegenerateIterate("project_unit_norm: zero or non-finite vector");
        return v / n;
    }

    CVec project_ca(const CVec &v)
    {
        if (v.size() < 1)
            throw std::invalid_argument("project_ca: empty vector");
        const double amp = 1.0 / std::sqrt(static_cast<double>(v.size()));
        CVec out(v.size());
        for (Eigen::Index k = 0; k < v.size(); ++k)
        {
            const double m = std::abs(v(k));
            out(k) = m < 1e-12 ? cplx(amp, 0.0) : std::polar(amp, std::arg(v(k)));
        }
        return out;
    }

    bool is_ca_feasible(const CVec &v, double tol)
    {
        if (v.size() < 1 || std::abs(v.norm() - 1.0) > tol)
            return false;
        const double amp = 1.0 / std::sqrt(static_cast<double>(v.size()));
        for (Eigen::Index k = 0; k < v.size(); ++k)
            if (std::abs(std::abs(v(k)) - amp) > tol)
                return false;
        return true;
    }

    BeamformerState warm_start(const ChannelParams &params, Rng &rng)
    {
        params.validate();
        BeamformerState s;
        s.w_l = project_ca(complex_gaussian(params.n_rx, rng));
        s.w_e = project_ca(complex_gaussian(params.n_rx, rng));
        s.f_s = project_ca(complex_gaussian(params.n_tx, rng));
        s.f_j = project_ca(complex_gaussian(params.n_tx, rng));
        return s;
    }

    OptimizeResult ascend_fixed_power(const ChannelSet &ch, const PowerConfig &pw, const OptimizerConfig &cfg,
                                      const BeamformerState &init, const IterateObserver &observer)
    {
        check_inputs(ch, pw, cfg, init);
        OptimizeResult result;
        result.state = init;
        result.p_s = pw.p_s;
        const CycleSummary s = run_cycle(ch, pw, cfg, 0, result.state, result.snapshot, result.trace, observer);
        result.trace.reason = s.reason;
        return result;
    }

    OptimizeResult ascend_variable_power(const ChannelSet &ch, const PowerConfig &pw, const OptimizerConfig &cfg,
                                         const BeamformerState &init, const IterateObserver &observer)
    {
        check_inputs(ch, pw, cfg, init);
        if (!cfg.zeta)
            throw std::invalid_argument("ascend_variable_power: zeta must be set");
        const double zeta = *cfg.zeta;

        OptimizeResult result;
        result.state = init;
        PowerConfig current = pw;

        if (current.p_s > cfg.mu)
        {
            result.snapshot = secrecy_capacity(ch, init, current);
            result.p_s = current.p_s;
            result.trace.records.push_back(make_record(0, 0, result.snapshot, cfg.delta0, current.p_s));
            result.trace.reason = Termination::PowerCap;
            return result;
        }

        for (std::size_t cycle = 0;; ++cycle)
        {
            run_cycle(ch, current, cfg, cycle, result.state, result.snapshot, result.trace, observer);
            result.p_s = current.p_s;
            if (result.snapshot.c_s >= zeta)
            {
                result.trace.reason = Termination::TargetReached;
                break;
            }
            const double next_p = current.p_s + cfg.kappa * current.p_s;
            if (next_p > cfg.mu)
            {
                result.trace.reason = Termination::PowerCap;
                break;
            }
            if (cycle + 1 >= cfg.max_cycles)
            {
                result.trace.reason = Termination::CycleCap;
                break;
            }
            current.p_s = next_p;
        }
        return result;
    }
}
