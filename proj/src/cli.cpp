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

#include "secrecy/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

#include "secrecy/report_io.hpp"

namespace secrecy::cli
{
    namespace fs = std::filesystem;

    unsigned resolve_threads(std::optional<unsigned> flag)
    {
        if (flag && *flag > 0)
            return *flag;
        if (const char *env = std::getenv("SECRECY_ASCENT_THREADS"))
        {
            char *end = nullptr;
            const unsigned long v = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0' && v > 0)
                return static_cast<unsigned>(v);
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }

    int cmd_run(const RunRequest &req, std::ostream &out, std::ostream &err)
    {
        SystemConfig cfg;
        try
        {
            cfg = load_config(req.config_path, req.overrides);
        }
        catch (const ConfigError &e)
        {
            err << "config error: " << e.what() << '\n';
            return exit_config;
        }

        const auto start = std::chrono::steady_clock::now();
        try
        {
            fs::create_directories(req.out_dir);
            const fs::path dir(req.out_dir);
            const fs::path trace_path = dir / "trace.csv";
            const fs::path aggregate_path = dir / "aggregate.csv";
            const fs::path report_path = dir / "report.json";

            std::ofstream trace(trace_path, std::ios::binary);
            if (!trace)
                throw std::runtime_error("cannot write " + trace_path.string());
            write_trace_header(trace);

            ExperimentOptions opt;
            opt.threads = resolve_threads(req.threads);
            opt.sink = [&](const TrialOutcome &t)
            {
                if (cfg.trace_trials == 0 || t.summary.trial < cfg.trace_trials)
                    write_trace_rows(trace, t.summary.trial, t.primary.trace);
            };
            const AggregateReport report = run_experiment(cfg, opt);
            trace.close();

            std::ofstream aggregate(aggregate_path, std::ios::binary);
            write_aggregate_csv(aggregate, report);
            aggregate.close();

            RunManifest manifest;
            manifest.config = config_snapshot(cfg);
            manifest.seed = cfg.seed;
            manifest.wall_clock_s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            manifest.outputs = {trace_path.string(), aggregate_path.string(), report_path.string()};

            std::ofstream json(report_path, std::ios::binary);
            json << report_document(report, manifest).dump(2) << '\n';
            json.close();
            if (!trace || !aggregate || !json)
                throw std::runtime_error("failed writing outputs under " + dir.string());

            out << "experiment      " << report.experiment << '\n'
                << "trials          " << report.n_trials << '\n'
                << "mean C_s        " << report.converged_mean << " bps/Hz (std " << report.converged_std << ")\n";
            if (cfg.experiment == ExperimentKind::FixedPower)
                out << "mean C_s (w_E)  " << report.benchmark_mean << " bps/Hz\n"
                    << "mean SVD bound  " << report.mean_svd_bound << " bps/Hz (" << report.svd_violations
                    << " trials above)\n"
                    << "mean iterations " << report.mean_iterations << '\n';
            else
                out << "mean cycles     " << report.mean_cycles << '\n'
                    << "mean final P_s  " << report.mean_final_p_s_db << " dB\n";
            out << "outputs         " << dir.string() << '\n';
        }
        catch (const TrialFailure &e)
        {
            err << "run failed: " << e.what() << '\n';
            return exit_runtime;
        }
        catch (const std::exception &e)
        {
            err << "run failed: " << e.what() << '\n';
            return exit_runtime;
        }
        return exit_ok;
    }

    int cmd_validate(const std::string &config_path, const KeyValues &overrides, std::ostream &out,
                     std::ostream &err)
    {
        try
        {
            out << format_config(load_config(config_path, overrides));
        }
        catch (const ConfigError &e)
        {
            err << "config error: " << e.what() << '\n';
            return exit_config;
        }
        return exit_ok;
    }

    int cmd_gradcheck(const GradCheckOptions &opt, std::ostream &out, std::ostream &err)
    {
        if (opt.n_rx < 1 || opt.n_tx < 1 || opt.instances < 1)
        {
            err << "gradcheck: n_rx, n_tx and instances must be >= 1\n";
            return exit_config;
        }
        GradCheckReport r;
        try
        {
            r = gradient_check(opt);
        }
        catch (const std::exception &e)
        {
            err << "gradcheck failed: " << e.what() << '\n';
            return exit_runtime;
        }
        out << "dims " << opt.n_rx << "x" << opt.n_tx << ", " << r.instances << " instances, h = " << opt.h << '\n'
            << "grad_wl max rel err " << r.max_err_wl << '\n'
            << "grad_fj max rel err " << r.max_err_fj << '\n'
            << "grad_fs max rel err " << r.max_err_fs << '\n'
            << "grad_we max rel err " << r.max_err_we << '\n'
            << (r.passed() ? "PASS" : "FAIL") << '\n';
        return r.passed() ? exit_ok : exit_runtime;
    }
}
