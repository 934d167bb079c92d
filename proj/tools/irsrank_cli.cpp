// SPDX-License-Identifier: Apache-2.0
//
// irsrank - link-level simulator for IRS-aided 2x2 LoS MIMO rank improvement
// Copyright (C) 2026 irsrank contributors
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

#include "irsrank/irsrank.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct CliOptions
{
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
};

void add_common_options(CLI::App *cmd, CliOptions &opts)
{
    cmd->add_option("--config", opts.config_path, "scenario config file (key = value sections)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opts.out_path, "CSV output path ('-' for stdout)");
    cmd->add_option_function<std::uint64_t>(
        "--seed", [&opts](std::uint64_t v) { opts.seed = v; }, "master seed (64-bit)");
    cmd->add_option("--threads", opts.threads, "worker count (0 = hardware threads)");
}

int run(const irsrank::Scenario scenario, const CliOptions &opts)
{
    irsrank::ParsedConfig pc;
    if (!opts.config_path.empty())
        pc = irsrank::parse_config(opts.config_path);
    pc.experiment.scenario = scenario;
    if (opts.seed)
        pc.experiment.seed = *opts.seed;
    if (!opts.out_path.empty())
        pc.experiment.output_path = opts.out_path;
    if (pc.experiment.output_path.empty())
        pc.experiment.output_path = std::string(irsrank::to_string(scenario)) + ".csv";
    irsrank::validate_experiment(pc);

    if (pc.experiment.output_path == "-") {
        irsrank::run_experiment(pc, std::cout, opts.threads);
        return 0;
    }
    std::ofstream out(pc.experiment.output_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file '" + pc.experiment.output_path + "'");
    irsrank::run_experiment(pc, out, opts.threads);
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing '" + pc.experiment.output_path + "'");
    std::cerr << "wrote " << pc.experiment.output_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"irsrank - link-level simulator for an IRS-aided 2x2 LoS MIMO system"};
    app.require_subcommand(1);

    struct SubSpec
    {
        irsrank::Scenario scenario;
        const char *name;
        const char *help;
    };
    const SubSpec subs[] = {
        {irsrank::Scenario::cond_vs_n, "cond-vs-n",
         "channel condition number versus the number of surface elements"},
        {irsrank::Scenario::rate_vs_n, "rate-vs-n",
         "achievable rate versus the number of surface elements"},
        {irsrank::Scenario::rate_cdf, "rate-cdf",
         "rate distribution under random phases, with optimal and direct baselines"},
        {irsrank::Scenario::rate_vs_ue_y, "rate-vs-ue-y",
         "rate versus the UE position on the y-axis"},
        {irsrank::Scenario::single, "single", "one evaluation of the configured scenario"},
    };

    CliOptions opts;
    irsrank::Scenario chosen = irsrank::Scenario::single;
    for (const auto &s : subs) {
        CLI::App *cmd = app.add_subcommand(s.name, s.help);
        add_common_options(cmd, opts);
        cmd->callback([&chosen, scenario = s.scenario] { chosen = scenario; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        return run(chosen, opts);
    } catch (const irsrank::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
