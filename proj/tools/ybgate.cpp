// Copyright 2026 The ybgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "CLI11.hpp"
#include "ybgate/cli.hpp"

namespace cli = ybg::cli;

int main(int argc, char **argv) {
    CLI::App app{"ybgate: braid and Yang-Baxter two-qubit gates, Weyl chamber geometry and CNOT synthesis"};
    app.require_subcommand(1);

    cli::AnalyzeOptions analyze;
    auto *a = app.add_subcommand("analyze", "Report nonlocal point, entangling power and classification as JSON");
    a->add_option("input", analyze.input, "Gate spec JSON file, '-' for stdin")->capture_default_str();
    a->add_option("--seed", analyze.seed, "Seed for the Monte-Carlo entangling power estimate");
    a->add_option("--samples", analyze.samples, "Monte-Carlo sample count (default 100000)");
    a->add_option("--mu", analyze.mu, "First spectral parameter of the YBE residual")->capture_default_str();
    a->add_option("--nu", analyze.nu, "Second spectral parameter of the YBE residual")->capture_default_str();
    a->add_flag("--pretty", analyze.pretty, "Indent the JSON output");

    cli::VerifyOptions verify;
    auto *v = app.add_subcommand("verify", "Check the braid relation and the Yang-Baxter equation");
    v->add_option("input", verify.input, "Gate spec JSON file, '-' for stdin")->capture_default_str();
    v->add_option("--mu", verify.mu, "First spectral parameter")->capture_default_str();
    v->add_option("--nu", verify.nu, "Second spectral parameter")->capture_default_str();
    v->add_option("--threshold", verify.threshold, "Largest accepted residual")->capture_default_str();

    cli::SynthOptions synth;
    auto *s = app.add_subcommand("synth", "Emit a minimal-CNOT circuit over {Rz, H, S, CNOT}");
    s->add_option("input", synth.input, "Gate spec JSON file, '-' for stdin")->capture_default_str();
    s->add_option("--out,-o", synth.out, "Circuit file (default: stdout)");
    s->add_option("--threshold", synth.threshold, "Largest accepted reconstruction residual")->capture_default_str();

    cli::SweepOptions sweep;
    auto *w = app.add_subcommand("sweep", "Nonlocal point and entangling power over a (phi, mu) grid as CSV");
    w->add_option("--family", sweep.family, "I, II, III or IV")->required();
    w->add_option("--kind", sweep.kind, "Baxterization kind 1-3 (IV has only 1)")->capture_default_str();
    w->add_option("--phi-grid", sweep.phi_grid, "List a,b,c or range start:stop:count")->required();
    w->add_option("--mu-grid,--chi-grid", sweep.mu_grid, "Spectral grid (chi for family IV)")->required();
    w->add_option("--out,-o", sweep.out, "CSV file (default: stdout)");
    w->add_option("--threads", sweep.threads, "Worker threads (0: all cores)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return cli::kInputError;
    }

    const cli::Io io{std::cin, std::cout, std::cerr};
    if (a->parsed()) return cli::cmd_analyze(analyze, io);
    if (v->parsed()) return cli::cmd_verify(verify, io);
    if (s->parsed()) return cli::cmd_synth(synth, io);
    return cli::cmd_sweep(sweep, io);
}
