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

#include "secrecy/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace secrecy
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9E3779B97F4A7C15ULL;
            x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
            x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
            return x ^ (x >> 31);
        }

        // Runs body(i) for i in [0, n) on up to `threads` workers and hands the
        // results to consume() strictly in index order. Only out-of-order
        // results are buffered.
        template <typename Result, typename Body, typename Consume>
        void ordered_parallel(std::size_t n, unsigned threads, Body body, Consume consume)
        {
            std::mutex mtx;
            std::map<std::size_t, Result> pending;
            std::size_t next_to_consume = 0;
            std::atomic<std::size_t> next_index{0};
            std::atomic<bool> stop{false};
            std::optional<std::pair<std::size_t, std::exception_ptr>> failure;

            auto worker = [&]()
            {
                for (;;)
                {
                    const std::size_t i = next_index.fetch_add(1);
                    if (i >= n || stop.load())
                        return;
                    try
                    {
                        Result r = body(i);
                        std::lock_guard lock(mtx);
                        pending.emplace(i, std::move(r));
                        while (!pending.empty() && pending.begin()->first == next_to_consume)
                        {
                            consume(pending.begin()->second);
                            pending.erase(pending.begin());
                            ++next_to_consume;
                        }
                    }
                    catch (...)
                    {
                        std::lock_guard lock(mtx);
                        if (!failure || i < failure->first)
                            failure.emplace(i, std::current_exception());
                        stop.store(true);
                    }
                }
            };

            const unsigned n_workers = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1)));
            if (n_workers == 1)
                worker();
            else
            {
                std::vector<std::thread> pool;
                pool.reserve(n_workers);
                for (unsigned t = 0; t < n_workers; ++t)
                    pool.emplace_back(worker);
                for (auto &t : pool)
                    t.join();
            }
            if (failure)
                std::rethrow_exception(failure->second);
        }

        template <typename Body>
        TrialOutcome guarded_trial(const SystemConfig &cfg, std::size_t trial, Body body)
        {
            try
            {
                return body();
            }
            catch (const TrialFailure &)
            {
                throw;
            }
            catch (const std::exception &e)
            {
                throw TrialFailure(trial, trial_seed(cfg.seed, trial), e.what());
            }
        }

        struct Moments
        {
            double sum = 0.0;
            double sum_sq = 0.0;
            std::size_t n = 0;

            void add(double x)
            {
                sum += x;
                sum_sq += x * x;
                ++n;
            }
            double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
            double stddev() const
            {
                if (n == 0)
                    return 0.0;
                const double m = mean();
                return std::sqrt(std::max(sum_sq / static_cast<double>(n) - m * m, 0.0));
            }
        };

        std::vector<double> cycle_series(const OptimizerTrace &trace, double CycleSummary::*field)
        {
            std::vector<double> out;
            out.reserve(trace.cycles.size());
            for (const auto &c : trace.cycles)
                out.push_back(c.*field);
            return out;
        }
    }

    std::string to_string(ExperimentKind k)
    {
        return k == ExperimentKind::FixedPower ? "fixed_power" : "variable_power";
    }

    void SystemConfig::validate() const
    {
        channel.validate();
        powers.validate();
        optimizer.validate();
        if (n_trials < 1)
            throw std::invalid_argument("n_trials must be >= 1");
        if (experiment == ExperimentKind::VariablePower)
        {
            if (!optimizer.zeta)
                throw std::invalid_argument("zeta is required when experiment=variable_power");
            if (powers.p_s > optimizer.mu)
                throw std::invalid_argument("p_s_db must not exceed mu_db when experiment=variable_power");
        }
    }

    std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index)
    {
        return splitmix64(splitmix64(master_seed) + trial_index * 0xD1B54A32D192ED03ULL);
    }

    Rng seed_fanout(std::uint64_t master_seed, std::uint64_t trial_index)
    {
        return Rng(trial_seed(master_seed, trial_index));
    }

    TrialFailure::TrialFailure(std::size_t trial, std::uint64_t seed, const std::string &what)
        : std::runtime_error("trial " + std::to_string(trial) + " (seed " + std::to_string(seed) + ") failed: " + what),
          trial_(trial), seed_(seed)
    {
    }

    std::vector<double> iteration_series(const OptimizerTrace &trace, double TraceRecord::*field)
    {
        std::vector<double> out;
        if (trace.records.empty())
            return out;
        const std::size_t last = trace.cycles.empty() ? trace.records.front().iteration : trace.cycles.front().iterations;
        out.reserve(last + 1);
        std::size_t r = 0;
        double current = trace.records.front().*field;
        for (std::size_t it = 0; it <= last; ++it)
        {
            while (r < trace.records.size() && trace.records[r].cycle == 0 && trace.records[r].iteration <= it)
                current = trace.records[r++].*field;
            out.push_back(current);
        }
        return out;
    }

    void CurveAccumulator::add(const std::vector<double> &series)
    {
        if (series.empty())
            return;
        if (series.size() > sum_.size())
            sum_.resize(series.size(), 0.0);
        if (series.size() + 1 > tail_from_.size())
            tail_from_.resize(series.size() + 1, 0.0);
        for (std::size_t i = 0; i < series.size(); ++i)
            sum_[i] += series[i];
        tail_from_[series.size()] += series.back();
        ++count_;
    }

    std::vector<double> CurveAccumulator::mean() const
    {
        std::vector<double> out(sum_.size());
        double tail = 0.0;
        for (std::size_t i = 0; i < sum_.size(); ++i)
        {
            tail += tail_from_[i];
            out[i] = (sum_[i] + tail) / static_cast<double>(count_);
        }
        return out;
    }

    TrialOutcome run_fixed_power_trial(const SystemConfig &cfg, std::size_t trial)
    {
        return guarded_trial(cfg, trial, [&]
        {
            Rng rng = seed_fanout(cfg.seed, trial);
            const ChannelSet ch = draw_channel_set(cfg.channel, rng);
            const BeamformerState init = warm_start(cfg.channel, rng);

            OptimizerConfig opt = cfg.optimizer;
            opt.optimize_we = false;
            TrialOutcome out;
            out.primary = ascend_fixed_power(ch, cfg.powers, opt, init);
            opt.optimize_we = true;
            out.benchmark = ascend_fixed_power(ch, cfg.powers, opt, init);

            TrialSummary &s = out.summary;
            s.trial = trial;
            s.seed = trial_seed(cfg.seed, trial);
            s.c_s = out.primary.snapshot.c_s;
            s.c_l = out.primary.snapshot.c_l;
            s.c_e = out.primary.snapshot.c_e;
            s.iterations = out.primary.trace.cycles.front().iterations;
            s.reason = to_string(out.primary.trace.reason);
            s.c_s_benchmark = out.benchmark.snapshot.c_s;
            s.iterations_benchmark = out.benchmark.trace.cycles.front().iterations;
            s.svd_bound = svd_upper_bound(ch, cfg.powers, cfg.svd_bound_literal);
            s.cycles = 1;
            s.final_p_s_db = linear_to_db(out.primary.p_s);
            return out;
        });
    }

    TrialOutcome run_variable_power_trial(const SystemConfig &cfg, std::size_t trial)
    {
        return guarded_trial(cfg, trial, [&]
        {
            Rng rng = seed_fanout(cfg.seed, trial);
            const ChannelSet ch = draw_channel_set(cfg.channel, rng);
            const BeamformerState init = warm_start(cfg.channel, rng);

            OptimizerConfig opt = cfg.optimizer;
            opt.optimize_we = false;
            TrialOutcome out;
            out.primary = ascend_variable_power(ch, cfg.powers, opt, init);

            TrialSummary &s = out.summary;
            s.trial = trial;
            s.seed = trial_seed(cfg.seed, trial);
            s.c_s = out.primary.snapshot.c_s;
            s.c_l = out.primary.snapshot.c_l;
            s.c_e = out.primary.snapshot.c_e;
            s.iterations = out.primary.trace.cycles.empty() ? 0 : out.primary.trace.cycles.front().iterations;
            s.reason = to_string(out.primary.trace.reason);
            s.cycles = out.primary.trace.cycles.size();
            s.final_p_s_db = linear_to_db(out.primary.p_s);
            return out;
        });
    }

    AggregateReport run_fixed_power_experiment(const SystemConfig &cfg, const ExperimentOptions &opt)
    {
        cfg.validate();
        if (cfg.experiment != ExperimentKind::FixedPower)
            throw std::invalid_argument("run_fixed_power_experiment: experiment must be fixed_power");

        AggregateReport rep;
        rep.experiment = to_string(cfg.experiment);
        rep.n_trials = cfg.n_trials;
        CurveAccumulator c_s, c_l, c_e, bench;
        Moments converged, benchmark, iters, iters_bench, svd;

        ordered_parallel<TrialOutcome>(
            cfg.n_trials, opt.threads, [&](std::size_t i) { return run_fixed_power_trial(cfg, i); },
            [&](const TrialOutcome &t)
            {
                c_s.add(iteration_series(t.primary.trace, &TraceRecord::c_s));
                c_l.add(iteration_series(t.primary.trace, &TraceRecord::c_l));
                c_e.add(iteration_series(t.primary.trace, &TraceRecord::c_e));
                bench.add(iteration_series(t.benchmark.trace, &TraceRecord::c_s));
                const auto &s = t.summary;
                converged.add(s.c_s);
                benchmark.add(s.c_s_benchmark);
                iters.add(static_cast<double>(s.iterations));
                iters_bench.add(static_cast<double>(s.iterations_benchmark));
                svd.add(s.svd_bound);
                if (s.c_s > s.svd_bound)
                    ++rep.svd_violations;
                ++rep.terminations[s.reason];
                rep.trials.push_back(s);
                if (opt.sink)
                    opt.sink(t);
            });

        rep.mean_c_s = c_s.mean();
        rep.mean_c_l = c_l.mean();
        rep.mean_c_e = c_e.mean();
        rep.mean_c_s_benchmark = bench.mean();
        rep.mean_svd_bound = svd.mean();
        rep.converged_mean = converged.mean();
        rep.converged_std = converged.stddev();
        rep.benchmark_mean = benchmark.mean();
        rep.benchmark_std = benchmark.stddev();
        rep.mean_iterations = iters.mean();
        rep.mean_iterations_benchmark = iters_bench.mean();
        rep.mean_cycles = 1.0;
        rep.mean_final_p_s_db = linear_to_db(cfg.powers.p_s);
        return rep;
    }

    AggregateReport run_variable_power_experiment(const SystemConfig &cfg, const ExperimentOptions &opt)
    {
        cfg.validate();
        if (cfg.experiment != ExperimentKind::VariablePower)
            throw std::invalid_argument("run_variable_power_experiment: experiment must be variable_power");

        AggregateReport rep;
        rep.experiment = to_string(cfg.experiment);
        rep.n_trials = cfg.n_trials;
        CurveAccumulator cycle_c_s, cycle_p_s_db;
        Moments converged, iters, cycles, final_p;

        ordered_parallel<TrialOutcome>(
            cfg.n_trials, opt.threads, [&](std::size_t i) { return run_variable_power_trial(cfg, i); },
            [&](const TrialOutcome &t)
            {
                cycle_c_s.add(cycle_series(t.primary.trace, &CycleSummary::c_s));
                std::vector<double> p_db = cycle_series(t.primary.trace, &CycleSummary::p_s);
                for (double &p : p_db)
                    p = linear_to_db(p);
                cycle_p_s_db.add(p_db);

                const auto &s = t.summary;
                converged.add(s.c_s);
                iters.add(static_cast<double>(s.iterations));
                cycles.add(static_cast<double>(s.cycles));
                final_p.add(s.final_p_s_db);
                ++rep.terminations[s.reason];
                rep.trials.push_back(s);
                if (opt.sink)
                    opt.sink(t);
            });

        rep.cycle_mean_c_s = cycle_c_s.mean();
        rep.cycle_mean_p_s_db = cycle_p_s_db.mean();
        rep.converged_mean = converged.mean();
        rep.converged_std = converged.stddev();
        rep.mean_iterations = iters.mean();
        rep.mean_cycles = cycles.mean();
        rep.mean_final_p_s_db = final_p.mean();
        return rep;
    }

    AggregateReport run_experiment(const SystemConfig &cfg, const ExperimentOptions &opt)
    {
        return cfg.experiment == ExperimentKind::FixedPower ? run_fixed_power_experiment(cfg, opt)
                                                            : run_variable_power_experiment(cfg, opt);
    }
}
