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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "secrecy/experiment.hpp"

namespace secrecy
{
    inline constexpr const char *artifact_version = "0.1.0";

    // Shortest text that parses back to the same double.
    std::string format_double(double x);

    struct RunManifest
    {
        std::vector<std::pair<std::string, std::string>> config;
        std::uint64_t seed = 0;
        std::string version = artifact_version;
        double wall_clock_s = 0.0;
        std::vector<std::string> outputs;

        bool operator==(const RunManifest &) const = default;
    };

    // trace.csv: trial,cycle,iteration,c_s,c_l,c_e,delta,p_s_db
    void write_trace_header(std::ostream &out);
    void write_trace_rows(std::ostream &out, std::size_t trial, const OptimizerTrace &trace);

    // Fixed power:    iteration,mean_c_s,mean_c_l,mean_c_e,mean_c_s_opt_we,mean_svd_bound
    // Variable power: cycle,mean_c_s,mean_p_s_db
    void write_aggregate_csv(std::ostream &out, const AggregateReport &report);

    void to_json(nlohmann::json &j, const TrialSummary &s);
    void from_json(const nlohmann::json &j, TrialSummary &s);
    void to_json(nlohmann::json &j, const AggregateReport &r);
    void from_json(const nlohmann::json &j, AggregateReport &r);
    void to_json(nlohmann::json &j, const RunManifest &m);
    void from_json(const nlohmann::json &j, RunManifest &m);

    // {"report": ..., "manifest": ...}
    nlohmann::json report_document(const AggregateReport &report, const RunManifest &manifest);
}
