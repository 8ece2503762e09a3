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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ybgate/baxterize.hpp"
#include "ybgate/braid.hpp"
#include "ybgate/linalg.hpp"

namespace ybg::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kNonUnitary = 3,
    kSynthesisFailed = 4,
};

class CliError : public std::runtime_error {
   public:
    CliError(ExitCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ExitCode code() const { return code_; }

   private:
    ExitCode code_;
};

inline constexpr double kInputUnitarityTol = 1e-6;
inline constexpr const char *kSeedEnv = "GATE_TOOL_SEED";

struct GateSpec {
    enum class Source { Matrix, Named, Braid, Yb };

    Source source = Source::Named;
    std::string name;  // named gates only
    std::optional<BraidSpec> braid;
    std::optional<YbSpec> yb;
    Mat4d matrix;                    // unitary; matrix inputs are projected onto the nearest unitary
    double input_unitarity = 0.0;    // residual of the matrix as given
};

// Exactly one of "matrix", "named", "braid", "yb". Angles are numbers or strings such as "pi/4".
// Schema problems raise CliError(kInputError); matrices further than 1e-6 from unitary raise kNonUnitary.
GateSpec parse_gate_spec(const nlohmann::json &j);
GateSpec parse_gate_spec_text(const std::string &text);

double json_angle(const nlohmann::json &j, const std::string &what);

struct McSettings {
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
};

struct ReportOptions {
    std::optional<McSettings> mc;
    double mu = 0.3;  // spectral pair used for the YBE residual of yb inputs
    double nu = -0.7;
};

nlohmann::json analyze_report(const GateSpec &spec, const ReportOptions &opts = {});

// Seed from the explicit value, else from GATE_TOOL_SEED, else none.
std::optional<std::uint64_t> resolve_seed(std::optional<std::uint64_t> explicit_seed);

// "a,b,c" or "start:stop:count" (inclusive endpoints); entries are angle literals.
std::vector<double> parse_grid(const std::string &text);

struct Io {
    std::istream &in;
    std::ostream &out;
    std::ostream &err;
};

struct AnalyzeOptions {
    std::string input = "-";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    double mu = 0.3, nu = -0.7;
    bool pretty = false;
};

struct VerifyOptions {
    std::string input = "-";
    double mu = 0.3, nu = -0.7;
    double threshold = 1e-8;
};

struct SynthOptions {
    std::string input = "-";
    std::string out;  // empty: circuit on stdout, summary on stderr
    double threshold = 1e-6;
};

struct SweepOptions {
    std::string family;
    int kind = 1;
    std::string phi_grid;
    std::string mu_grid;
    std::string out;  // empty: stdout
    unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepRow {
    double phi = 0.0, mu = 0.0;
    NonlocalPoint a;
    double ep = 0.0;  // NaN at singular parameters
};

// Rows in phi-major order. The scalar phi maps to phases (0, phi, phi) for I and II, (phi, 0) for III and
// (phi) for IV; mu is chi for IV.
std::vector<SweepRow> sweep(Family f, int kind, const std::vector<double> &phis, const std::vector<double> &mus,
                            unsigned threads = 0);
void write_sweep_csv(std::ostream &out, Family f, int kind, const std::vector<SweepRow> &rows);

int cmd_analyze(const AnalyzeOptions &opts, Io io);
int cmd_verify(const VerifyOptions &opts, Io io);
int cmd_synth(const SynthOptions &opts, Io io);
int cmd_sweep(const SweepOptions &opts, Io io);

}  // namespace ybg::cli
