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

#include "secrecy/report_io.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "secrecy/metrics.hpp"

namespace secrecy
{
    std::string format_double(double x)
    {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
        if (ec != std::errc())
            throw std::runtime_error("format_double: conversion failed");
        return std::string(buf, ptr);
    }

    void write_trace_header(std::ostream &out)
    {
        out << "trial,cycle,iteration,c_s,c_l,c_e,delta,p_s_db\n";
    }

    void write_trace_rows(std::ostream &out, std::size_t trial, const OptimizerTrace &trace)
    {
        for (const auto &r : trace.records)
        {
            out << trial << ',' << r.cycle << ',' << r.iteration << ',' << format_double(r.c_s) << ','
                << format_double(r.c_l) << ',' << format_double(r.c_e) << ',' << format_double(r.delta) << ','
                << format_double(linear_to_db(r.p_s)) << '\n';
        }
    }

    void write_aggregate_csv(std::ostream &out, const AggregateReport &report)
    {
        if (report.experiment == "fixed_power")
        {
            out << "iteration,mean_c_s,mean_c_l,mean_c_e,mean_c_s_opt_we,mean_svd_bound\n";
            const std::size_t n = std::max(report.mean_c_s.size(), report.mean_c_s_benchmark.size());
            // pad the shorter curve with its last value, as the curves themselves are padded
            auto at = [](const std::vector<double> &v, std::size_t i) { return v.empty() ? 0.0 : v[std::min(i, v.size() - 1)]; };
            for (std::size_t i = 0; i < n; ++i)
                out << i << ',' << format_double(at(report.mean_c_s, i)) << ',' << format_double(at(report.mean_c_l, i))
                    << ',' << format_double(at(report.mean_c_e, i)) << ','
                    << format_double(at(report.mean_c_s_benchmark, i)) << ','
                    << format_double(report.mean_svd_bound) << '\n';
        }
        else
        {
            out << "cycle,mean_c_s,mean_p_s_db\n";
            for (std::size_t i = 0; i < report.cycle_mean_c_s.size(); ++i)
                out << i << ',' << format_double(report.cycle_mean_c_s[i]) << ','
                    << format_double(report.cycle_mean_p_s_db[i]) << '\n';
        }
    }

    void to_json(nlohmann::json &j, const TrialSummary &s)
    {
        j = nlohmann::json{{"trial", s.trial},
                           {"seed", s.seed},
                           {"c_s", s.c_s},
                           {"c_l", s.c_l},
                           {"c_e", s.c_e},
                           {"iterations", s.iterations},
                           {"reason", s.reason},
                           {"c_s_benchmark", s.c_s_benchmark},
                           {"iterations_benchmark", s.iterations_benchmark},
                           {"svd_bound", s.svd_bound},
                           {"cycles", s.cycles},
                           {"final_p_s_db", s.final_p_s_db}};
    }

    void from_json(const nlohmann::json &j, TrialSummary &s)
    {
        j.at("trial").get_to(s.trial);
        j.at("seed").get_to(s.seed);
        j.at("c_s").get_to(s.c_s);
        j.at("c_l").get_to(s.c_l);
        j.at("c_e").get_to(s.c_e);
        j.at("iterations").get_to(s.iterations);
        j.at("reason").get_to(s.reason);
        j.at("c_s_benchmark").get_to(s.c_s_benchmark);
        j.at("iterations_benchmark").get_to(s.iterations_benchmark);
        j.at("svd_bound").get_to(s.svd_bound);
        j.at("cycles").get_to(s.cycles);
        j.at("final_p_s_db").get_to(s.final_p_s_db);
    }

    void to_json(nlohmann::json &j, const AggregateReport &r)
    {
        j = nlohmann::json{{"experiment", r.experiment},
                           {"n_trials", r.n_trials},
                           {"mean_c_s", r.mean_c_s},
                           {"mean_c_l", r.mean_c_l},
                           {"mean_c_e", r.mean_c_e},
                           {"mean_c_s_benchmark", r.mean_c_s_benchmark},
                           {"mean_svd_bound", r.mean_svd_bound},
                           {"svd_violations", r.svd_violations},
                           {"cycle_mean_c_s", r.cycle_mean_c_s},
                           {"cycle_mean_p_s_db", r.cycle_mean_p_s_db},
                           {"mean_cycles", r.mean_cycles},
                           {"mean_final_p_s_db", r.mean_final_p_s_db},
                           {"converged_mean", r.converged_mean},
                           {"converged_std", r.converged_std},
                           {"benchmark_mean", r.benchmark_mean},
                           {"benchmark_std", r.benchmark_std},
                           {"mean_iterations", r.mean_iterations},
                           {"mean_iterations_benchmark", r.mean_iterations_benchmark},
                           {"terminations", r.terminations},
                           {"trials", r.trials}};
    }

    void from_json(const nlohmann::json &j, AggregateReport &r)
    {
        j.at("experiment").get_to(r.experiment);
        j.at("n_trials").get_to(r.n_trials);
        j.at("mean_c_s").get_to(r.mean_c_s);
        j.at("mean_c_l").get_to(r.mean_c_l);
        j.at("mean_c_e").get_to(r.mean_c_e);
        j.at("mean_c_s_benchmark").get_to(r.mean_c_s_benchmark);
        j.at("mean_svd_bound").get_to(r.mean_svd_bound);
        j.at("svd_violations").get_to(r.svd_violations);
        j.at("cycle_mean_c_s").get_to(r.cycle_mean_c_s);
        j.at("cycle_mean_p_s_db").get_to(r.cycle_mean_p_s_db);
        j.at("mean_cycles").get_to(r.mean_cycles);
        j.at("mean_final_p_s_db").get_to(r.mean_final_p_s_db);
        j.at("converged_mean").get_to(r.converged_mean);
        j.at("converged_std").get_to(r.converged_std);
        j.at("benchmark_mean").get_to(r.benchmark_mean);
        j.at("benchmark_std").get_to(r.benchmark_std);
        j.at("mean_iterations").get_to(r.mean_iterations);
        j.at("mean_iterations_benchmark").get_to(r.mean_iterations_benchmark);
        j.at("terminations").get_to(r.terminations);
        j.at("trials").get_to(r.trials);
    }

    void to_json(nlohmann::json &j, const RunManifest &m)
    {
        nlohmann::json cfg = nlohmann::json::array();
        for (const auto &[k, v] : m.config)
            cfg.push_back({k, v});
        j = nlohmann::json{{"config", cfg},
                           {"seed", m.seed},
                           {"version", m.version},
                           {"wall_clock_s", m.wall_clock_s},
                           {"outputs", m.outputs}};
    }

    void from_json(const nlohmann::json &j, RunManifest &m)
    {
        m.config.clear();
        for (const auto &kv : j.at("config"))
            m.config.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
        j.at("seed").get_to(m.seed);
        j.at("version").get_to(m.version);
        j.at("wall_clock_s").get_to(m.wall_clock_s);
        j.at("outputs").get_to(m.outputs);
    }

    nlohmann::json report_document(const AggregateReport &report, const RunManifest &manifest)
    {
        return nlohmann::json{{"report", report}, {"manifest", manifest}};
    }
}
