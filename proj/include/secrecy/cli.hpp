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
#include <optional>
#include <string>

#include "secrecy/config.hpp"
#include "secrecy/gradients.hpp"

namespace secrecy::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_runtime = 1;
    inline constexpr int exit_config = 2;

    struct RunRequest
    {
        std::string config_path;
        std::string out_dir = "out";
        KeyValues overrides;
        std::optional<unsigned> threads;
    };

    // --threads, else SECRECY_ASCENT_THREADS, else the hardware concurrency.
    unsigned resolve_threads(std::optional<unsigned> flag);

    // Writes trace.csv, aggregate.csv and report.json under out_dir.
    int cmd_run(const RunRequest &req, std::ostream &out, std::ostream &err);

    // Prints the resolved configuration without running anything.
    int cmd_validate(const std::string &config_path, const KeyValues &overrides, std::ostream &out,
                     std::ostream &err);

    // Analytic gradients against finite differences; exit 0 when every
    // relative error is below 1e-5.
    int cmd_gradcheck(const GradCheckOptions &opt, std::ostream &out, std::ostream &err);
}
