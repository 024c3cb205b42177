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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "secrecy/cli.hpp"
#include "secrecy/report_io.hpp"

using namespace secrecy;
namespace fs = std::filesystem;

namespace
{
    std::string config_path(const std::string &name)
    {
        return std::string(SECRECY_SOURCE_DIR) + "/configs/" + name;
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    fs::path scratch(const std::string &name)
    {
        const fs::path dir = fs::temp_directory_path() / ("secrecy_test_" + name);
        fs::remove_all(dir);
        return dir;
    }

    std::vector<std::string> split(const std::string &line)
    {
        std::vector<std::string> out;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            out.push_back(cell);
        return out;
    }

    // Header must match exactly; every other cell must parse as a finite number.
    void check_csv(const fs::path &p, const std::string &header)
    {
        std::ifstream in(p);
        std::string line;
        REQUIRE(std::getline(in, line));
        REQUIRE(line == header);
        const std::size_t columns = split(header).size();
        std::size_t rows = 0;
        while (std::getline(in, line))
        {
            const auto cells = split(line);
            REQUIRE(cells.size() == columns);
            for (const auto &c : cells)
                REQUIRE(std::isfinite(std::stod(c)));
            ++rows;
        }
        CHECK(rows > 0);
    }
}

TEST_CASE("parse_key_values")
{
    const KeyValues kv = parse_key_values("# comment\n n_tx = 8  # trailing\n\nseed=3\n");
    CHECK(kv.at("n_tx") == "8");
    CHECK(kv.at("seed") == "3");
    CHECK_THROWS_AS(parse_key_values("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_key_values("n_tx = 1\nn_tx = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_key_values("n_tx\n"), ConfigError);
    CHECK_THROWS_AS(parse_key_values("n_tx =\n"), ConfigError);
}

TEST_CASE("bundled configurations encode the parameter table")
{
    const SystemConfig mm = load_config(config_path("mmwave.cfg"));
    CHECK(mm.channel.n_tx == 64);
    CHECK(mm.channel.n_rx == 4);
    CHECK(mm.channel.n_clusters == 4);
    CHECK(mm.channel.n_rays == 15);
    CHECK(mm.channel.angular_spread_deg == 10.0);
    CHECK(std::abs(mm.powers.p_s - 10.0) < 1e-12);
    CHECK(std::abs(mm.powers.p_j - 10.0) < 1e-12);
    CHECK(mm.optimizer.delta0 == 0.1);
    CHECK(mm.optimizer.epsilon == 1e-7);
    CHECK(mm.optimizer.kappa == 1e-2);
    CHECK(mm.n_trials == 1000);

    const SystemConfig s6 = load_config(config_path("sub6.cfg"));
    CHECK(s6.channel.n_tx == 16);
    CHECK(s6.channel.n_clusters == 10);
    CHECK(s6.channel.n_rays == 20);
    CHECK(s6.channel.band == CarrierBand::Sub6);

    const SystemConfig var = load_config(config_path("mmwave_variable.cfg"));
    CHECK(var.experiment == ExperimentKind::VariablePower);
    CHECK(*var.optimizer.zeta == 4.0);
}

TEST_CASE("config snapshot resolves back to the same configuration")
{
    const SystemConfig cfg = load_config(config_path("sub6_variable.cfg"), {{"p_s_db", "12.5"}});
    const SystemConfig again = resolve_config(parse_key_values(format_config(cfg)));
    CHECK(format_config(again) == format_config(cfg));
    CHECK(std::abs(again.powers.p_s - cfg.powers.p_s) < 1e-12 * cfg.powers.p_s);
}

TEST_CASE("cmd_validate")
{
    std::ostringstream out, err;
    for (const char *name : {"mmwave.cfg", "sub6.cfg", "mmwave_variable.cfg", "sub6_variable.cfg"})
        CHECK(cli::cmd_validate(config_path(name), {}, out, err) == cli::exit_ok);
    CHECK(out.str().find("n_tx = 64") != std::string::npos);

    std::ostringstream e1;
    CHECK(cli::cmd_validate(config_path("mmwave.cfg"), {{"n_trials", "0"}}, out, e1) == cli::exit_config);
    CHECK(e1.str().find("n_trials") != std::string::npos);

    std::ostringstream e2;
    const fs::path dir = scratch("validate");
    fs::create_directories(dir);
    std::ofstream(dir / "var.cfg") << "experiment = variable_power\n";
    CHECK(cli::cmd_validate((dir / "var.cfg").string(), {}, out, e2) == cli::exit_config);
    CHECK(e2.str().find("zeta") != std::string::npos);

    std::ostringstream e3;
    CHECK(cli::cmd_validate(config_path("mmwave.cfg"), {{"p_s_db", "-1x0"}}, out, e3) == cli::exit_config);
    CHECK(e3.str().find("p_s_db") != std::string::npos);

    std::ostringstream e4;
    CHECK(cli::cmd_validate("/nonexistent/x.cfg", {}, out, e4) == cli::exit_config);
}

TEST_CASE("cmd_run - outputs, schema and determinism")
{
    const fs::path a = scratch("run_a"), b = scratch("run_b");
    std::ostringstream out, err;
    cli::RunRequest req;
    req.config_path = config_path("sub6.cfg");
    req.overrides = {{"n_trials", "1"}, {"seed", "7"}, {"max_iters", "400"}};
    req.out_dir = a.string();
    req.threads = 1;
    REQUIRE(cli::cmd_run(req, out, err) == cli::exit_ok);
    req.out_dir = b.string();
    req.threads = 2;
    REQUIRE(cli::cmd_run(req, out, err) == cli::exit_ok);

    CHECK(slurp(a / "trace.csv") == slurp(b / "trace.csv"));
    CHECK(slurp(a / "aggregate.csv") == slurp(b / "aggregate.csv"));
    check_csv(a / "trace.csv", "trial,cycle,iteration,c_s,c_l,c_e,delta,p_s_db");
    check_csv(a / "aggregate.csv", "iteration,mean_c_s,mean_c_l,mean_c_e,mean_c_s_opt_we,mean_svd_bound");

    const auto doc = nlohmann::json::parse(slurp(a / "report.json"));
    const AggregateReport rep = doc.at("report").get<AggregateReport>();
    const RunManifest man = doc.at("manifest").get<RunManifest>();
    CHECK(rep.n_trials == 1);
    CHECK(man.seed == 7);
    for (const auto &p : man.outputs)
        CHECK(fs::exists(p));
    // round trip
    CHECK(nlohmann::json(rep).get<AggregateReport>() == rep);
    CHECK(nlohmann::json(man).get<RunManifest>() == man);
    CHECK(nlohmann::json::parse(report_document(rep, man).dump()).at("report").get<AggregateReport>() == rep);
}

TEST_CASE("cmd_run - variable power outputs")
{
    const fs::path dir = scratch("run_var");
    std::ostringstream out, err;
    cli::RunRequest req;
    req.config_path = config_path("sub6_variable.cfg");
    req.overrides = {{"n_trials", "2"}, {"zeta", "2"}, {"max_iters", "200"}};
    req.out_dir = dir.string();
    REQUIRE(cli::cmd_run(req, out, err) == cli::exit_ok);
    check_csv(dir / "trace.csv", "trial,cycle,iteration,c_s,c_l,c_e,delta,p_s_db");
    check_csv(dir / "aggregate.csv", "cycle,mean_c_s,mean_p_s_db");
}

TEST_CASE("cmd_run - configuration errors exit with 2")
{
    std::ostringstream out, err;
    cli::RunRequest req;
    req.config_path = config_path("mmwave.cfg");
    req.out_dir = scratch("run_bad").string();
    req.overrides = {{"p_s_db", "ten"}};
    CHECK(cli::cmd_run(req, out, err) == cli::exit_config);
    CHECK(err.str().find("p_s_db") != std::string::npos);
    CHECK_FALSE(fs::exists(req.out_dir));
}

TEST_CASE("cmd_gradcheck")
{
    std::ostringstream out, err;
    GradCheckOptions opt;
    CHECK(cli::cmd_gradcheck(opt, out, err) == cli::exit_ok);
    opt.n_rx = 1;
    opt.n_tx = 1;
    CHECK(cli::cmd_gradcheck(opt, out, err) == cli::exit_ok);
    opt.n_rx = 4;
    opt.n_tx = 16;
    opt.instances = 5;
    opt.corrupt = true;
    CHECK(cli::cmd_gradcheck(opt, out, err) == cli::exit_runtime);
    opt.n_tx = 0;
    CHECK(cli::cmd_gradcheck(opt, out, err) == cli::exit_config);
}

TEST_CASE("resolve_threads")
{
    CHECK(cli::resolve_threads(3u) == 3);
    CHECK(cli::resolve_threads(std::nullopt) >= 1);
}

TEST_CASE("format_double round-trips")
{
    for (double x : {0.1, 1.0 / 3.0, 2.4, 1e-7, 12345.678901234567})
        CHECK(std::stod(format_double(x)) == x);
}
