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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "secrecy/cli.hpp"

namespace
{
    std::string flag_name(std::string key)
    {
        for (char &c : key)
            if (c == '_')
                c = '-';
        return "--" + key;
    }

    // One string option per config key; only keys given on the command line
    // end up in the override map.
    void add_key_overrides(CLI::App &cmd, std::map<std::string, std::string> &values)
    {
        for (const auto &key : secrecy::config_keys())
        {
            if (key == "n_trials" || key == "seed")
                continue;
            cmd.add_option(flag_name(key), values[key], "override '" + key + "'");
        }
    }

    secrecy::KeyValues collect(const CLI::App &cmd, const std::map<std::string, std::string> &values)
    {
        secrecy::KeyValues kv;
        for (const auto &[key, value] : values)
            if (cmd.count(flag_name(key)) > 0)
                kv[key] = value;
        return kv;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Projected gradient ascent for jammer-assisted secrecy capacity"};
    app.require_subcommand(1);

    secrecy::cli::RunRequest run;
    std::map<std::string, std::string> run_keys;
    std::string trials, seed;
    unsigned threads = 0;
    auto *run_cmd = app.add_subcommand("run", "run the configured experiment");
    run_cmd->add_option("--config", run.config_path, "configuration file")->required();
    run_cmd->add_option("--out", run.out_dir, "output directory")->capture_default_str();
    run_cmd->add_option("--trials", trials, "override n_trials");
    run_cmd->add_option("--seed", seed, "override seed");
    run_cmd->add_option("--threads", threads, "worker threads (SECRECY_ASCENT_THREADS otherwise)");
    add_key_overrides(*run_cmd, run_keys);

    std::string validate_path;
    std::map<std::string, std::string> validate_keys;
    auto *validate_cmd = app.add_subcommand("validate", "parse and validate a configuration");
    validate_cmd->add_option("--config", validate_path, "configuration file")->required();
    add_key_overrides(*validate_cmd, validate_keys);

    secrecy::GradCheckOptions grad;
    auto *grad_cmd = app.add_subcommand("gradcheck", "compare analytic gradients with finite differences");
    grad_cmd->add_option("--n-rx", grad.n_rx, "receive antennas")->capture_default_str();
    grad_cmd->add_option("--n-tx", grad.n_tx, "transmit antennas")->capture_default_str();
    grad_cmd->add_option("--seed", grad.seed, "random seed")->capture_default_str();
    grad_cmd->add_option("--instances", grad.instances, "random instances")->capture_default_str();
    grad_cmd->add_option("--fd-step", grad.h, "finite-difference step")->capture_default_str();
    grad_cmd->add_flag("--corrupt-gradient", grad.corrupt, "debug: perturb the analytic f_s gradient");

    CLI11_PARSE(app, argc, argv);

    if (*run_cmd)
    {
        run.overrides = collect(*run_cmd, run_keys);
        if (run_cmd->count("--trials"))
            run.overrides["n_trials"] = trials;
        if (run_cmd->count("--seed"))
            run.overrides["seed"] = seed;
        if (run_cmd->count("--threads"))
            run.threads = threads;
        return secrecy::cli::cmd_run(run, std::cout, std::cerr);
    }
    if (*validate_cmd)
        return secrecy::cli::cmd_validate(validate_path, collect(*validate_cmd, validate_keys), std::cout, std::cerr);
    return secrecy::cli::cmd_gradcheck(grad, std::cout, std::cerr);
}
