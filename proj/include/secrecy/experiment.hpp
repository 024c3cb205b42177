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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "secrecy/optimizer.hpp"

namespace secrecy
{
    enum class ExperimentKind
    {
        FixedPower,
        VariablePower
    };

    std::string to_string(ExperimentKind k);

    struct SystemConfig
    {
        ChannelParams channel;
        PowerConfig powers;        // linear; dB inputs are converted on load
        OptimizerConfig optimizer; // optimize_we is driven by the experiment, not the config
        std::size_t n_trials = 1000;
        std::uint64_t seed = 1;
        ExperimentKind experiment = ExperimentKind::FixedPower;
        bool svd_bound_literal = false;
        std::size_t trace_trials = 20; // trials written to the trace sink, 0 = all

        // Throws std::invalid_argument on field and cross-field violations.
        void validate() const;
    };

    // Per-trial engine seed. Injective in trial_index for a fixed master seed.
    std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);
    Rng seed_fanout(std::uint64_t master_seed, std::uint64_t trial_index);

    struct TrialSummary
    {
        std::size_t trial = 0;
        std::uint64_t seed = 0;
        double c_s = 0.0;
        double c_l = 0.0;
        double c_e = 0.0;
        std::size_t iterations = 0; // steps in the first cycle
        std::string reason;
        // fixed-power only
        double c_s_benchmark = 0.0;
        std::size_t iterations_benchmark = 0;
        double svd_bound = 0.0;
        // variable-power only
        std::size_t cycles = 0;
        double final_p_s_db = 0.0;

        bool operator==(const TrialSummary &) const = default;
    };

    struct TrialOutcome
    {
        TrialSummary summary;
        OptimizeResult primary;   // random, fixed w_E
        OptimizeResult benchmark; // optimized w_E (fixed-power only)
    };

    struct AggregateReport
    {
        std::string experiment;
        std::size_t n_trials = 0;

        // Fixed power, indexed by iteration; shorter runs carry their last value forward.
        std::vector<double> mean_c_s;
        std::vector<double> mean_c_l;
        std::vector<double> mean_c_e;
        std::vector<double> mean_c_s_benchmark;
        double mean_svd_bound = 0.0;
        std::size_t svd_violations = 0;

        // Variable power, indexed by cycle.
        std::vector<double> cycle_mean_c_s;
        std::vector<double> cycle_mean_p_s_db;
        double mean_cycles = 0.0;
        double mean_final_p_s_db = 0.0;

        double converged_mean = 0.0;
        double converged_std = 0.0;
        double benchmark_mean = 0.0;
        double benchmark_std = 0.0;
        double mean_iterations = 0.0;
        double mean_iterations_benchmark = 0.0;

        std::map<std::string, std::size_t> terminations;
        std::vector<TrialSummary> trials;

        bool operator==(const AggregateReport &) const = default;
    };

    class TrialFailure : public std::runtime_error
    {
    public:
        TrialFailure(std::size_t trial, std::uint64_t seed, const std::string &what);
        std::size_t trial() const { return trial_; }
        std::uint64_t seed() const { return seed_; }

    private:
        std::size_t trial_;
        std::uint64_t seed_;
    };

    // Called once per trial, in trial-index order, whatever the scheduling.
    using TrialSink = std::function<void(const TrialOutcome &)>;

    struct ExperimentOptions
    {
        unsigned threads = 1;
        TrialSink sink;
    };

    // Values of the first cycle at iterations 0..n, holding the last accepted
    // value through rejected steps.
    std::vector<double> iteration_series(const OptimizerTrace &trace, double TraceRecord::*field);

    // Mean of series of unequal length, each padded with its terminal value.
    class CurveAccumulator
    {
    public:
        void add(const std::vector<double> &series);
        std::vector<double> mean() const;
        std::size_t count() const { return count_; }

    private:
        std::vector<double> sum_;
        std::vector<double> tail_from_; // tail_from_[i]: terminal values padding from index i on
        std::size_t count_ = 0;
    };

    TrialOutcome run_fixed_power_trial(const SystemConfig &cfg, std::size_t trial);
    TrialOutcome run_variable_power_trial(const SystemConfig &cfg, std::size_t trial);

    AggregateReport run_fixed_power_experiment(const SystemConfig &cfg, const ExperimentOptions &opt = {});
    AggregateReport run_variable_power_experiment(const SystemConfig &cfg, const ExperimentOptions &opt = {});
    AggregateReport run_experiment(const SystemConfig &cfg, const ExperimentOptions &opt = {});
}
