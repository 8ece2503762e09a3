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

#include "ybgate/cli.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>
#include <thread>

#include "ybgate/circuit_io.hpp"
#include "ybgate/classify.hpp"
#include "ybgate/synth.hpp"
#include "ybgate/weyl.hpp"

namespace ybg::cli {

using nlohmann::json;

namespace {

[[noreturn]] void input_error(const std::string &msg) { throw CliError(kInputError, msg); }

void expect_keys(const json &j, const std::string &where, std::initializer_list<const char *> allowed) {
    if (!j.is_object()) input_error(where + " must be an object");
    for (const auto &item : j.items()) {
        bool ok = false;
        for (const char *k : allowed) ok = ok || item.key() == k;
        if (!ok) input_error("unknown key '" + item.key() + "' in " + where);
    }
}

const json &require(const json &j, const char *key, const std::string &where) {
    const auto it = j.find(key);
    if (it == j.end()) input_error(where + " is missing '" + key + "'");
    return *it;
}

Family json_family(const json &j) {
    if (!j.is_string()) input_error("family must be a string (I, II, III or IV)");
    try {
        return parse_family(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
        input_error(e.what());
    }
}

std::vector<double> json_phases(const json &j) {
    if (!j.is_array()) input_error("phi must be an array of angles");
    std::vector<double> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(json_angle(j[i], "phi[" + std::to_string(i) + "]"));
    return v;
}

double json_real(const json &j, const std::string &what) {
    if (!j.is_number()) input_error(what + " must be a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) input_error(what + " must be finite");
    return x;
}

Mat4d json_matrix(const json &j) {
    if (!j.is_array() || j.size() != 4) input_error("matrix must be a 4x4 array");
    Mat4d m;
    for (int r = 0; r < 4; ++r) {
        if (!j[r].is_array() || j[r].size() != 4) input_error("matrix row " + std::to_string(r) + " must have 4 entries");
        for (int c = 0; c < 4; ++c) {
            const json &e = j[r][c];
            const std::string where = "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            if (e.is_array()) {
                if (e.size() != 2) input_error(where + " must be [re, im]");
                m(r, c) = cd(json_real(e[0], where), json_real(e[1], where));
            } else {
                m(r, c) = json_real(e, where);
            }
        }
    }
    return m;
}

Mat4d named_gate(const std::string &name) {
    if (name == "cnot") return gates::cnot(0);
    if (name == "swap") return gates::swap();
    if (name == "iswap") return gates::iswap();
    if (name == "identity") return Mat4d::Identity();
    input_error("unknown named gate '" + name + "' (expected cnot, swap, iswap or identity)");
}

template <typename F>
auto checked(F &&f) {
    try {
        return f();
    } catch (const SingularParameterError &e) {
        input_error(std::string("singular parameters: ") + e.what());
    } catch (const std::invalid_argument &e) {
        input_error(e.what());
    }
}

std::string read_input(const std::string &path, std::istream &in) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream f(path);
    if (!f) input_error("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), {});
}

json complex_json(cd z) { return json::array({z.real(), z.imag()}); }

json describe(const GateSpec &s) {
    switch (s.source) {
        case GateSpec::Source::Matrix:
            return {{"source", "matrix"}};
        case GateSpec::Source::Named:
            return {{"source", "named"}, {"name", s.name}};
        case GateSpec::Source::Braid:
            return {{"source", "braid"}, {"family", to_string(s.braid->family)}, {"phi", s.braid->phi}};
        case GateSpec::Source::Yb: {
            json j = {{"source", "yb"}, {"family", to_string(s.yb->family)}, {"kind", s.yb->kind}, {"phi", s.yb->phi}};
            j[s.yb->family == Family::IV ? "chi" : "mu"] = s.yb->spectral;
            return j;
        }
    }
    return {};
}

json verdicts_json(const ConditionVerdicts &v) {
    return {{"clifford", v.clifford}, {"matchgate", v.matchgate}, {"dual_unitary", v.dual_unitary}};
}

int report_failure(std::ostream &err, const std::exception &e, int code) {
    err << "error: " << e.what() << "\n";
    return code;
}

template <typename F>
int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const CliError &e) {
        return report_failure(err, e, e.code());
    } catch (const NumericalError &e) {
        return report_failure(err, e, kVerificationFailed);
    } catch (const std::exception &e) {
        return report_failure(err, e, kInputError);
    }
}

}  // namespace

double json_angle(const json &j, const std::string &what) {
    if (j.is_string()) {
        try {
            return parse_angle(j.get<std::string>());
        } catch (const std::invalid_argument &e) {
            input_error(what + ": " + e.what());
        }
    }
    return json_real(j, what);
}

GateSpec parse_gate_spec(const json &j) {
    expect_keys(j, "gate spec", {"matrix", "named", "braid", "yb"});
    if (j.size() != 1) input_error("gate spec needs exactly one of matrix, named, braid, yb");
    GateSpec s;
    if (j.contains("matrix")) {
        s.source = GateSpec::Source::Matrix;
        const Mat4d m = json_matrix(j["matrix"]);
        s.input_unitarity = unitarity_residual(m);
        if (!(s.input_unitarity <= kInputUnitarityTol)) {
            throw CliError(kNonUnitary, "matrix is not unitary (residual " + format_real(s.input_unitarity) + ")");
        }
        s.matrix = nearest_unitary(m);
    } else if (j.contains("named")) {
        s.source = GateSpec::Source::Named;
        if (!j["named"].is_string()) input_error("named must be a string");
        s.name = j["named"].get<std::string>();
        s.matrix = named_gate(s.name);
    } else if (j.contains("braid")) {
        s.source = GateSpec::Source::Braid;
        const json &b = j["braid"];
        expect_keys(b, "braid", {"family", "phi"});
        BraidSpec spec{json_family(require(b, "family", "braid")), json_phases(require(b, "phi", "braid"))};
        s.matrix = checked([&] { return build_braid(spec); });
        s.braid = spec;
    } else {
        s.source = GateSpec::Source::Yb;
        const json &y = j["yb"];
        expect_keys(y, "yb", {"family", "kind", "mu", "chi", "phi"});
        YbSpec spec;
        spec.family = json_family(require(y, "family", "yb"));
        const bool iv = spec.family == Family::IV;
        const char *spectral = iv ? "chi" : "mu";
        if (y.contains(iv ? "mu" : "chi")) input_error(std::string("family ") + to_string(spec.family) + " takes '" + spectral + "'");
        if (iv && !y.contains("kind")) {
            spec.kind = 1;
        } else {
            const json &k = require(y, "kind", "yb");
            if (!k.is_number_integer()) input_error("kind must be an integer");
            spec.kind = k.get<int>();
        }
        spec.spectral = json_angle(require(y, spectral, "yb"), spectral);
        spec.phi = json_phases(require(y, "phi", "yb"));
        s.matrix = checked([&] { return build_yb(spec); });
        s.yb = spec;
    }
    if (s.source != GateSpec::Source::Matrix) s.input_unitarity = unitarity_residual(s.matrix);
    return s;
}

GateSpec parse_gate_spec_text(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        input_error(std::string("invalid JSON: ") + e.what());
    }
    return parse_gate_spec(j);
}

json analyze_report(const GateSpec &spec, const ReportOptions &opts) {
    const Mat4d &u = spec.matrix;
    const NonlocalPoint a = extract_nonlocal(u);
    const ChamberLocation loc = chamber_location(a);
    json r;
    r["input"] = describe(spec);
    r["nonlocal"] = {a.a1, a.a2, a.a3};
    r["location"] = {{"kind", loc.kind}, {"name", loc.name}};

    json ep = {{"closed_form", entangling_power(a)}, {"monte_carlo", nullptr}};
    if (opts.mc) {
        ep["monte_carlo"] = {{"value", entangling_power_mc(u, opts.mc->samples, opts.mc->seed)},
                             {"samples", opts.mc->samples},
                             {"seed", opts.mc->seed}};
    }
    r["entangling_power"] = ep;

    const ClassificationReport c = classify(u);
    json table = json::array();
    for (const auto &entry : c.clifford.table) {
        table.push_back(entry ? json{{"input", entry->input}, {"output", entry->output}} : json(nullptr));
    }
    r["classification"] = {
        {"clifford", {{"value", c.clifford.is_clifford}, {"table", table}}},
        {"matchgate",
         {{"value", c.matchgate.is_matchgate},
          {"x_type", c.matchgate.x_type},
          {"det_outer", complex_json(c.matchgate.det_outer)},
          {"det_inner", complex_json(c.matchgate.det_inner)}}},
        {"dual_unitary", {{"value", c.dual.is_dual_unitary}, {"residual", c.dual.residual}}},
    };
    r["predicted"] = spec.braid ? verdicts_json(predict_conditions(*spec.braid))
                     : spec.yb  ? verdicts_json(predict_conditions(*spec.yb))
                                : json(nullptr);

    json residuals = {{"unitarity", spec.input_unitarity}, {"braid", nullptr}, {"ybe", nullptr}};
    if (spec.yb) {
        try {
            residuals["ybe"] = {{"value", ybe_residual(*spec.yb, opts.mu, opts.nu)}, {"mu", opts.mu}, {"nu", opts.nu}};
        } catch (const SingularParameterError &) {
        }
    } else {
        residuals["braid"] = braid_residual(u);
    }
    r["residuals"] = residuals;
    r["min_cnot_count"] = min_cnot_count(a);
    return r;
}

std::optional<std::uint64_t> resolve_seed(std::optional<std::uint64_t> explicit_seed) {
    if (explicit_seed) return explicit_seed;
    const char *env = std::getenv(kSeedEnv);
    if (env == nullptr || *env == '\0') return std::nullopt;
    std::uint64_t seed = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec != std::errc() || ptr != s.data() + s.size()) input_error(std::string(kSeedEnv) + " must be an unsigned integer");
    return seed;
}

std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> out;
    const auto angle = [&](const std::string &tok) {
        try {
            return parse_angle(tok);
        } catch (const std::invalid_argument &e) {
            input_error(std::string("grid: ") + e.what());
        }
    };
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() != 3) input_error("grid range must be start:stop:count");
        const double lo = angle(parts[0]), hi = angle(parts[1]);
        int n = 0;
        std::istringstream cs(parts[2]);
        if (!(cs >> n) || !(cs >> std::ws).eof() || n < 0) input_error("grid count must be a nonnegative integer");
        for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    } else {
        std::stringstream ss(text);
        for (std::string tok; std::getline(ss, tok, ',');) {
            if (tok.find_first_not_of(" \t") == std::string::npos) input_error("grid: empty entry in '" + text + "'");
            out.push_back(angle(tok));
        }
    }
    if (out.empty()) input_error("empty grid '" + text + "'");
    return out;
}

std::vector<SweepRow> sweep(Family f, int kind, const std::vector<double> &phis, const std::vector<double> &mus,
                            unsigned threads) {
    const std::size_t total = phis.size() * mus.size();
    std::vector<SweepRow> rows(total);
    const auto phases = [f](double phi) -> std::vector<double> {
        switch (f) {
            case Family::I:
            case Family::II:
                return {0.0, phi, phi};
            case Family::III:
                return {phi, 0.0};
            case Family::IV:
                return {phi};
        }
        return {};
    };
    YbSpec{f, kind, 0.0, phases(0.0)}.validate();
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    const auto work = [&] {
        for (std::size_t i = next++; i < total && !failed; i = next++) {
            SweepRow &row = rows[i];
            row.phi = phis[i / mus.size()];
            row.mu = mus[i % mus.size()];
            try {
                const Mat4d u = build_yb({f, kind, row.mu, phases(row.phi)});
                row.a = extract_nonlocal(u);
                row.ep = entangling_power(u);
            } catch (const SingularParameterError &) {
                const double nan = std::numeric_limits<double>::quiet_NaN();
                row.a = {nan, nan, nan};
                row.ep = nan;
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto &t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

void write_sweep_csv(std::ostream &out, Family f, int kind, const std::vector<SweepRow> &rows) {
    out << "family,kind,phi,mu,a1,a2,a3,ep\n";
    for (const SweepRow &r : rows) {
        out << to_string(f) << ',' << kind << ',' << format_real(r.phi) << ',' << format_real(r.mu) << ','
            << format_real(r.a.a1) << ',' << format_real(r.a.a2) << ',' << format_real(r.a.a3) << ','
            << format_real(r.ep) << '\n';
    }
}

int cmd_analyze(const AnalyzeOptions &opts, Io io) {
    return guarded(io.err, [&] {
        const GateSpec spec = parse_gate_spec_text(read_input(opts.input, io.in));
        ReportOptions ro;
        ro.mu = opts.mu;
        ro.nu = opts.nu;
        if (const auto seed = resolve_seed(opts.seed)) {
            ro.mc = McSettings{opts.samples.value_or(100000), *seed};
            if (ro.mc->samples == 0) input_error("--samples must be positive");
        } else if (opts.samples) {
            input_error(std::string("Monte-Carlo estimate needs --seed or ") + kSeedEnv);
        }
        io.out << analyze_report(spec, ro).dump(opts.pretty ? 2 : -1) << "\n";
        return int(kOk);
    });
}

int cmd_verify(const VerifyOptions &opts, Io io) {
    return guarded(io.err, [&] {
        const GateSpec spec = parse_gate_spec_text(read_input(opts.input, io.in));
        json r = {{"braid_residual", nullptr}, {"ybe_residual", nullptr}, {"threshold", opts.threshold}};
        double worst;
        if (spec.yb) {
            const double ybe = checked([&] { return ybe_residual(*spec.yb, opts.mu, opts.nu); });
            const double braid = braid_residual(build_braid(spec.yb->braid()));
            r["ybe_residual"] = ybe;
            r["braid_residual"] = braid;
            r["mu"] = opts.mu;
            r["nu"] = opts.nu;
            worst = std::max(ybe, braid);
        } else {
            worst = braid_residual(spec.matrix);
            r["braid_residual"] = worst;
        }
        const bool pass = worst <= opts.threshold;
        r["pass"] = pass;
        io.out << r.dump() << "\n";
        return int(pass ? kOk : kVerificationFailed);
    });
}

int cmd_synth(const SynthOptions &opts, Io io) {
    return guarded(io.err, [&] {
        const GateSpec spec = parse_gate_spec_text(read_input(opts.input, io.in));
        Circuit c;
        try {
            c = spec.yb && spec.yb->family == Family::IV ? synth_riv(spec.yb->phi[0], spec.yb->spectral)
                                                         : synth_general(spec.matrix);
        } catch (const NumericalError &e) {
            throw CliError(kSynthesisFailed, std::string("synthesis failed: ") + e.what());
        }
        const double residual = verify_circuit(c, spec.matrix);
        const json summary = {{"cnot_count", c.cnot_count()},
                              {"min_cnot_count", min_cnot_count(extract_nonlocal(spec.matrix))},
                              {"residual", residual}};
        if (!(residual <= opts.threshold)) {
            io.err << summary.dump() << "\n";
            throw CliError(kSynthesisFailed, "circuit residual " + format_real(residual) + " exceeds " +
                                                 format_real(opts.threshold));
        }
        if (opts.out.empty()) {
            write_circuit(io.out, c);
            io.err << summary.dump() << "\n";
        } else {
            std::ofstream f(opts.out);
            if (!f) input_error("cannot write '" + opts.out + "'");
            write_circuit(f, c);
            io.out << summary.dump() << "\n";
        }
        return int(kOk);
    });
}

int cmd_sweep(const SweepOptions &opts, Io io) {
    return guarded(io.err, [&] {
        const Family f = checked([&] { return parse_family(opts.family); });
        const std::vector<double> phis = parse_grid(opts.phi_grid);
        const std::vector<double> mus = parse_grid(opts.mu_grid);
        const std::vector<SweepRow> rows = checked([&] { return sweep(f, opts.kind, phis, mus, opts.threads); });
        if (opts.out.empty()) {
            write_sweep_csv(io.out, f, opts.kind, rows);
        } else {
            std::ofstream file(opts.out);
            if (!file) input_error("cannot write '" + opts.out + "'");
            write_sweep_csv(file, f, opts.kind, rows);
        }
        return int(kOk);
    });
}

}  // namespace ybg::cli
