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

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "secrecy/gradients.hpp"

namespace secrecy
{
    // Raised when a projection receives an all-zero iterate.
    class DegenerateIterate : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct OptimizerConfig
    {
        double delta0 = 0.1;           // initial step size
        double epsilon = 1e-7;         // convergence threshold on |dC_s|
        double kappa = 1e-2;           // P_s <- P_s + kappa * P_s per cycle
        std::optional<double> zeta;    // secrecy target, variable-power only
        double mu = 1000.0;            // source power ceiling, linear
        std::size_t max_iters = 10000; // per cycle
        std::size_t max_cycles = 1000;
        double delta_min = 1e-6;
        bool optimize_we = false; // benchmark: also ascend on the eavesdropper combiner

        void validate() const;
    };

    enum class Termination
    {
        Converged,
        IterCap,
        PowerCap,
        TargetReached,
        CycleCap
    };

    std::string to_string(Termination t);
    Termination termination_from_string(const std::string &s);

    // One accepted iterate. Iteration 0 of every cycle is its starting point.
    struct TraceRecord
    {
        std::size_t cycle = 0;
        std::size_t iteration = 0;
        double c_s = 0.0;
        double c_l = 0.0;
        double c_e = 0.0;
        double delta = 0.0;
        double p_s = 0.0;
    };

    struct CycleSummary
    {
        std::size_t cycle = 0;
        std::size_t iterations = 0; // gradient steps attempted, rejected ones included
        double c_s = 0.0;           // at the end of the cycle
        double p_s = 0.0;           // power the cycle ran at
        Termination reason = Termination::Converged;
    };

    struct OptimizerTrace
    {
        std::vector<TraceRecord> records;
        std::vector<CycleSummary> cycles;
        Termination reason = Termination::Converged;
    };

    struct OptimizeResult
    {
        BeamformerState state;
        SecrecySnapshot snapshot;
        double p_s = 0.0;
        OptimizerTrace trace;
    };

    // Sees every accepted iterate, the starting point of each cycle included.
    using IterateObserver = std::function<void(const BeamformerState &, const TraceRecord &)>;

    // v / ||v||_2. Throws DegenerateIterate on a zero vector.
    CVec project_unit_norm(const CVec &v);

    // Entry-wise v_k / (sqrt(N) |v_k|). Entries with |v_k| < 1e-12 map to
    // 1/sqrt(N) with phase zero.
    CVec project_ca(const CVec &v);

    // True when ||v|| = 1 and every |v_k| = 1/sqrt(N), both within tol.
    bool is_ca_feasible(const CVec &v, double tol = 1e-9);

    // CN(0, I) draws projected onto the constant-amplitude set, in the order
    // w_l, w_e, f_s, f_j.
    BeamformerState warm_start(const ChannelParams &params, Rng &rng);

    // Projected gradient ascent at fixed P_s. A step that lowers the secrecy
    // rate is undone and the step size halved (down to delta_min, after which
    // the run counts as converged). w_E moves only when cfg.optimize_we.
    OptimizeResult ascend_fixed_power(const ChannelSet &ch, const PowerConfig &pw, const OptimizerConfig &cfg,
                                      const BeamformerState &init, const IterateObserver &observer = {});

    // Repeated fixed-power cycles, each warm-started from the last, raising
    // P_s by a factor (1 + kappa) after every cycle that misses zeta.
    OptimizeResult ascend_variable_power(const ChannelSet &ch, const PowerConfig &pw, const OptimizerConfig &cfg,
                                         const BeamformerState &init, const IterateObserver &observer = {});
}
