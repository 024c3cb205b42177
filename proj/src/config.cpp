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

#include "secrecy/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "secrecy/report_io.hpp"

namespace secrecy
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        bool is_known(const std::string &key)
        {
            for (const auto &k : config_keys())
                if (k == key)
                    return true;
            return false;
        }

        double parse_double(const std::string &key, const std::string &text)
        {
            double v = 0.0;
            const char *first = text.data();
            const char *last = first + text.size();
            if (!text.empty() && *first == '+')
                ++first;
            const auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last || !std::isfinite(v))
                throw ConfigError(key, "expected a finite number, got '" + text + "'");
            return v;
        }

        std::uint64_t parse_unsigned(const std::string &key, const std::string &text)
        {
            std::uint64_t v = 0;
            const char *first = text.data();
            const char *last = first + text.size();
            const auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last)
                throw ConfigError(key, "expected a non-negative integer, got '" + text + "'");
            return v;
        }

        bool parse_bool(const std::string &key, const std::string &text)
        {
            if (text == "true" || text == "1" || text == "on")
                return true;
            if (text == "false" || text == "0" || text == "off")
                return false;
            throw ConfigError(key, "expected true/false, got '" + text + "'");
        }

        ExperimentKind parse_experiment(const std::string &text)
        {
            if (text == "fixed_power" || text == "FixedPower")
                return ExperimentKind::FixedPower;
            if (text == "variable_power" || text == "VariablePower")
                return ExperimentKind::VariablePower;
            throw ConfigError("experiment", "expected fixed_power or variable_power, got '" + text + "'");
        }

        CarrierBand parse_band(const std::string &text)
        {
            if (text == "mmwave" || text == "MmWave")
                return CarrierBand::MmWave;
            if (text == "sub6" || text == "Sub6")
                return CarrierBand::Sub6;
            throw ConfigError("band", "expected sub6 or mmwave, got '" + text + "'");
        }

        // dB values are printed rounded so 10 dB does not come back as 9.999999999999998
        std::string format_db(double linear)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.12g", linear_to_db(linear));
            return buf;
        }

        // std::invalid_argument messages from validate() start with the field name.
        ConfigError as_config_error(const std::invalid_argument &e)
        {
            const std::string msg = e.what();
            const auto space = msg.find(' ');
            std::string field = msg.substr(0, space);
            if (!is_known(field))
                for (const auto &k : config_keys())
                    if (msg.find(k) != std::string::npos)
                    {
                        field = k;
                        break;
                    }
            return ConfigError(field, msg);
        }
    }

    ConfigError::ConfigError(std::string field, const std::string &message)
        : std::runtime_error(field + ": " + message), field_(std::move(field))
    {
    }

    const std::vector<std::string> &config_keys()
    {
        static const std::vector<std::string> keys = {
            "experiment", "band", "n_tx", "n_rx", "n_clusters", "n_rays", "angular_spread_deg",
            "p_s_db", "p_j_db", "sigma2_l", "sigma2_e", "delta0", "epsilon", "kappa", "zeta", "mu_db",
            "max_iters", "max_cycles", "delta_min", "n_trials", "seed", "svd_bound_literal", "trace_trials"};
        return keys;
    }

    KeyValues parse_key_values(const std::string &text)
    {
        KeyValues kv;
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("line " + std::to_string(line_no), "expected key = value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (!is_known(key))
                throw ConfigError(key, "unknown key (line " + std::to_string(line_no) + ")");
            if (value.empty())
                throw ConfigError(key, "empty value (line " + std::to_string(line_no) + ")");
            if (!kv.emplace(key, value).second)
                throw ConfigError(key, "duplicate key (line " + std::to_string(line_no) + ")");
        }
        return kv;
    }

    SystemConfig resolve_config(const KeyValues &file_values, const KeyValues &overrides)
    {
        KeyValues kv = file_values;
        for (const auto &[k, v] : overrides)
        {
            if (!is_known(k))
                throw ConfigError(k, "unknown key");
            kv[k] = trim(v);
        }
        auto has = [&](const char *k) { return kv.count(k) > 0; };

        SystemConfig cfg;
        if (has("band"))
        {
            cfg.channel.band = parse_band(kv.at("band"));
            if (cfg.channel.band == CarrierBand::Sub6)
                cfg.channel = ChannelParams::sub6();
        }
        if (has("experiment"))
            cfg.experiment = parse_experiment(kv.at("experiment"));

        auto count = [&](const char *k, std::size_t &dst)
        {
            if (has(k))
                dst = static_cast<std::size_t>(parse_unsigned(k, kv.at(k)));
        };
        auto real = [&](const char *k, double &dst)
        {
            if (has(k))
                dst = parse_double(k, kv.at(k));
        };

        count("n_tx", cfg.channel.n_tx);
        count("n_rx", cfg.channel.n_rx);
        count("n_clusters", cfg.channel.n_clusters);
        count("n_rays", cfg.channel.n_rays);
        real("angular_spread_deg", cfg.channel.angular_spread_deg);

        double p_s_db = 10.0, p_j_db = 10.0, mu_db = 30.0;
        real("p_s_db", p_s_db);
        real("p_j_db", p_j_db);
        real("mu_db", mu_db);
        cfg.powers.p_s = db_to_linear(p_s_db);
        cfg.powers.p_j = db_to_linear(p_j_db);
        cfg.optimizer.mu = db_to_linear(mu_db);
        real("sigma2_l", cfg.powers.sigma2_l);
        real("sigma2_e", cfg.powers.sigma2_e);

        real("delta0", cfg.optimizer.delta0);
        real("epsilon", cfg.optimizer.epsilon);
        real("kappa", cfg.optimizer.kappa);
        real("delta_min", cfg.optimizer.delta_min);
        if (has("zeta"))
            cfg.optimizer.zeta = parse_double("zeta", kv.at("zeta"));
        count("max_iters", cfg.optimizer.max_iters);
        count("max_cycles", cfg.optimizer.max_cycles);

        count("n_trials", cfg.n_trials);
        if (has("seed"))
            cfg.seed = parse_unsigned("seed", kv.at("seed"));
        if (has("svd_bound_literal"))
            cfg.svd_bound_literal = parse_bool("svd_bound_literal", kv.at("svd_bound_literal"));
        count("trace_trials", cfg.trace_trials);

        try
        {
            cfg.validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw as_config_error(e);
        }
        return cfg;
    }

    SystemConfig load_config(const std::string &path, const KeyValues &overrides)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("config", "cannot open '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return resolve_config(parse_key_values(text.str()), overrides);
    }

    std::vector<std::pair<std::string, std::string>> config_snapshot(const SystemConfig &cfg)
    {
        const auto &ch = cfg.channel;
        const auto &op = cfg.optimizer;
        std::vector<std::pair<std::string, std::string>> out = {
            {"experiment", to_string(cfg.experiment)},
            {"band", ch.band == CarrierBand::MmWave ? "mmwave" : "sub6"},
            {"n_tx", std::to_string(ch.n_tx)},
            {"n_rx", std::to_string(ch.n_rx)},
            {"n_clusters", std::to_string(ch.n_clusters)},
            {"n_rays", std::to_string(ch.n_rays)},
            {"angular_spread_deg", format_double(ch.angular_spread_deg)},
            {"p_s_db", format_db(cfg.powers.p_s)},
            {"p_j_db", format_db(cfg.powers.p_j)},
            {"sigma2_l", format_double(cfg.powers.sigma2_l)},
            {"sigma2_e", format_double(cfg.powers.sigma2_e)},
            {"delta0", format_double(op.delta0)},
            {"epsilon", format_double(op.epsilon)},
            {"kappa", format_double(op.kappa)},
        };
        if (op.zeta)
            out.emplace_back("zeta", format_double(*op.zeta));
        out.insert(out.end(), {
                                  {"mu_db", format_db(op.mu)},
                                  {"max_iters", std::to_string(op.max_iters)},
                                  {"max_cycles", std::to_string(op.max_cycles)},
                                  {"delta_min", format_double(op.delta_min)},
                                  {"n_trials", std::to_string(cfg.n_trials)},
                                  {"seed", std::to_string(cfg.seed)},
                                  {"svd_bound_literal", cfg.svd_bound_literal ? "true" : "false"},
                                  {"trace_trials", std::to_string(cfg.trace_trials)},
                              });
        return out;
    }

    std::string format_config(const SystemConfig &cfg)
    {
        std::string s;
        for (const auto &[k, v] : config_snapshot(cfg))
            s += k + " = " + v + "\n";
        return s;
    }
}
