// SPDX-License-Identifier: Apache-2.0
//
// irsobf - opportunistic beamforming through intelligent reflecting surfaces
// Copyright (C) 2026 The irsobf authors
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
//
// Command-line front end. Uses only the C interface of libirsobf.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "irsobf/irsobf.h"

namespace {

struct ConfigDeleter {
    void operator()(irsobf_config* c) const { irsobf_config_destroy(c); }
};
struct ResultsDeleter {
    void operator()(irsobf_results* r) const { irsobf_results_destroy(r); }
};
using ConfigPtr = std::unique_ptr<irsobf_config, ConfigDeleter>;
using ResultsPtr = std::unique_ptr<irsobf_results, ResultsDeleter>;

/// Thrown after a failed library call; carries the library's diagnostic.
struct CallFailed {
    std::string what;
};

void check(irsobf_status status, const std::string& context)
{
    if (status == IRSOBF_OK) {
        return;
    }
    std::string msg = context + ": " + irsobf_last_error();
    const std::string key = irsobf_last_error_key();
    if (status == IRSOBF_ERR_CONFIG && !key.empty()) {
        msg += " [key: " + key + "]";
    }
    throw CallFailed{msg};
}

std::string echo_of(const irsobf_config* cfg)
{
    std::size_t needed = 0;
    check(irsobf_config_echo(cfg, nullptr, 0, &needed), "config echo");
    std::string text(needed, '\0');
    check(irsobf_config_echo(cfg, text.data(), text.size(), &needed), "config echo");
    text.resize(needed - 1);
    return text;
}

struct RunArgs {
    std::string config_file;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> frames;
    std::string out = "-";
    std::string format = "csv";
    unsigned threads = 0;
    bool quiet = false;
};

int run(const RunArgs& args)
{
    irsobf_config* raw = nullptr;
    check(irsobf_config_create(&raw), "create config");
    ConfigPtr cfg(raw);

    if (!args.preset.empty()) {
        check(irsobf_config_load_preset(cfg.get(), args.preset.c_str()), "preset '" + args.preset + "'");
    }
    if (!args.config_file.empty()) {
        check(irsobf_config_parse_file(cfg.get(), args.config_file.c_str()), "config '" + args.config_file + "'");
    }
    if (args.seed) {
        check(irsobf_config_set(cfg.get(), "seed", std::to_string(*args.seed).c_str()), "--seed");
    }
    if (args.trials) {
        check(irsobf_config_set(cfg.get(), "trials", std::to_string(*args.trials).c_str()), "--trials");
    }
    if (args.frames) {
        check(irsobf_config_set(cfg.get(), "frames", std::to_string(*args.frames).c_str()), "--frames");
    }
    std::size_t count = 0;
    check(irsobf_config_scenario_count(cfg.get(), &count), "configuration");

    // Record every resolved parameter next to the results.
    const std::string echo = echo_of(cfg.get());
    if (args.out != "-") {
        std::ofstream file(args.out + ".config");
        file << echo;
        if (!file) {
            throw CallFailed{"cannot write '" + args.out + ".config'"};
        }
    }
    if (!args.quiet) {
        std::cerr << "# effective configuration (" << count << " scenarios)\n" << echo << std::flush;
    }

    irsobf_results* raw_results = nullptr;
    check(irsobf_run(cfg.get(), args.threads, &raw_results), "run");
    ResultsPtr results(raw_results);

    const irsobf_format fmt = args.format == "jsonl" ? IRSOBF_FORMAT_JSONL : IRSOBF_FORMAT_CSV;
    check(irsobf_results_write(results.get(), fmt, args.out.c_str()), "write results");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Opportunistic beamforming through intelligent reflecting surfaces: Monte Carlo harness"};
    app.set_version_flag("--version", std::string(irsobf_version()));
    app.require_subcommand(1);

    RunArgs args;
    CLI::App* run_cmd = app.add_subcommand("run", "Run the scenarios of a configuration file and/or preset");
    run_cmd->add_option("config-file", args.config_file, "Flat 'key = value' configuration file")
        ->check(CLI::ExistingFile);
    run_cmd->add_option("--preset", args.preset, "Start from a built-in preset")
        ->check(CLI::IsMember({"fig1", "fig2"}));
    run_cmd->add_option("--seed", args.seed, "Master seed");
    run_cmd->add_option("--out", args.out, "Output file ('-' for standard output)");
    run_cmd->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
    run_cmd->add_option("--trials", args.trials, "Trials per scenario")->check(CLI::PositiveNumber);
    run_cmd->add_option("--frames", args.frames, "Frames per trial")->check(CLI::PositiveNumber);
    run_cmd->add_option("--threads", args.threads, "Worker threads (0 = all cores)");
    run_cmd->add_flag("--quiet", args.quiet, "Do not echo the effective configuration to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (args.config_file.empty() && args.preset.empty()) {
        std::cerr << "irsobf run: give a config file, --preset, or both\n";
        return 2;
    }
    try {
        return run(args);
    } catch (const CallFailed& e) {
        std::cerr << "irsobf: " << e.what << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "irsobf: " << e.what() << '\n';
        return 1;
    }
}
