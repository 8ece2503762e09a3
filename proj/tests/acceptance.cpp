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

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "ybgate/baxterize.hpp"
#include "ybgate/braid.hpp"
#include "ybgate/classify.hpp"
#include "ybgate/synth.hpp"
#include "ybgate/weyl.hpp"

using namespace ybg;
using ybg::testing::mixed_angle;
using ybg::testing::mixed_phases;
using ybg::testing::random_braid;
using ybg::testing::random_phases;
using ybg::testing::random_yb;
using ybg::testing::uniform;
using ybg::testing::yb_phase_count;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

constexpr std::array<Family, 3> kSixOrEight = {Family::I, Family::II, Family::III};
constexpr std::array<Family, 4> kAll = {Family::I, Family::II, Family::III, Family::IV};

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string row_name(Family f, int kind) {
    return f == Family::IV ? std::string("R_IV") : "R_" + to_string(f) + "," + std::to_string(kind);
}

Outcome braid_relation() {
    std::mt19937_64 rng(101);
    double worst = 0.0;
    for (Family f : kAll) {
        for (int i = 0; i < 1000; ++i) worst = std::max(worst, braid_residual(build_braid(random_braid(rng, f))));
    }
    return {worst < 1e-10, "max residual " + fmt("%.2e", worst) + " over 4x1000 draws"};
}

Outcome yang_baxter() {
    std::mt19937_64 rng(202);
    double worst = 0.0;
    std::string worst_row;
    int evaluated = 0, singular = 0;
    const auto run = [&](Family f, int kind) {
        for (int d = 0; d < 10; ++d) {
            const YbSpec spec = random_yb(rng, f, kind, 0.0);
            for (int i = 0; i < 10; ++i) {
                for (int j = 0; j < 10; ++j) {
                    const double mu = -2.0 + 4.0 * i / 9 + uniform(rng, -0.05, 0.05);
                    const double nu = -2.0 + 4.0 * j / 9 + uniform(rng, -0.05, 0.05);
                    try {
                        const double r = ybe_residual(spec, mu, nu);
                        ++evaluated;
                        if (r > worst) worst = r, worst_row = row_name(f, kind);
                    } catch (const SingularParameterError &) {
                        ++singular;
                    }
                }
            }
        }
    };
    for (Family f : kSixOrEight) {
        for (int k = 1; k <= 3; ++k) run(f, k);
    }
    run(Family::IV, 1);
    return {worst < 1e-9 && singular == 0,
            "max residual " + fmt("%.2e", worst) + " (" + worst_row + "), " + std::to_string(evaluated) +
                " points, " + std::to_string(singular) + " singular"};
}

Outcome theorem_unitarity() {
    const BraidSpec spec{Family::IV, {0.37}};
    const Mat4d b = build_braid(spec);
    const std::vector<cd> l = braid_eigenvalues(spec);
    std::mt19937_64 rng(303);
    double worst_real = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = uniform(rng, -10.0, 10.0);
        worst_real = std::max(worst_real, unitarity_residual(normalize_unitary(baxterize2(b, l[0], l[1], x))));
    }
    const double at_i = unitarity_residual(normalize_unitary(baxterize2(b, l[0], l[1], cd(0, 1))));
    const double at_1i = unitarity_residual(normalize_unitary(baxterize2(b, l[0], l[1], cd(1, 1))));
    return {worst_real < 1e-10 && at_i > 1e-3 && at_1i > 1e-3,
            "real x max " + fmt("%.2e", worst_real) + ", x=i " + fmt("%.3f", at_i) + ", x=1+i " + fmt("%.3f", at_1i)};
}

Outcome nonlocal_closed_forms() {
    std::mt19937_64 rng(404);
    double worst_yb = 0.0, worst_braid = 0.0;
    int singular = 0;
    const auto run = [&](Family f, int kind) {
        for (int i = 0; i < 20; ++i) {
            const std::vector<double> phi = random_phases(rng, yb_phase_count(f));
            for (int j = 0; j < 20; ++j) {
                const double s = f == Family::IV ? uniform(rng, -kPi, kPi) : -3.0 + 6.0 * j / 19 + uniform(rng, -0.1, 0.1);
                const YbSpec spec{f, kind, s, phi};
                try {
                    const NonlocalPoint numeric = extract_nonlocal(build_yb(spec));
                    worst_yb = std::max(worst_yb, chamber_distance(numeric, yb_nonlocal_closed(spec)));
                } catch (const SingularParameterError &) {
                    ++singular;
                }
            }
        }
    };
    for (Family f : kSixOrEight) {
        for (int k = 1; k <= 3; ++k) run(f, k);
    }
    run(Family::IV, 1);
    for (Family f : kAll) {
        for (int i = 0; i < 1000; ++i) {
            const BraidSpec spec = random_braid(rng, f);
            worst_braid = std::max(worst_braid,
                                   chamber_distance(extract_nonlocal(build_braid(spec)), braid_nonlocal_closed(spec)));
        }
    }
    return {worst_yb < 1e-6 && worst_braid < 1e-7 && singular == 0,
            "yb max " + fmt("%.2e", worst_yb) + ", braid max " + fmt("%.2e", worst_braid) + ", " +
                std::to_string(singular) + " singular"};
}

Outcome landmarks() {
    const auto dist = [](const Mat4d &u, NonlocalPoint want) { return chamber_distance(extract_nonlocal(u), want); };
    const double h = kPi / 2, ep = 2.0 / 9.0;
    double worst = 0.0;
    const auto check = [&](const Mat4d &u, NonlocalPoint want, double want_ep) {
        worst = std::max({worst, dist(u, want), std::abs(entangling_power(u) - want_ep)});
    };
    check(gates::cnot(0), {h, 0, 0}, ep);
    check(gates::swap(), {h, h, h}, 0.0);
    check(gates::iswap(), {h, h, 0}, ep);
    for (double chi : {0.1, 0.3, kPi / 8, 0.7}) {
        const Mat4d r = build_yb({Family::IV, 1, chi, {0.5}});
        const double s = std::sin(2 * chi);
        check(r, {2 * chi, 0, 0}, ep * s * s);
    }
    return {worst <= 1e-12, "max deviation " + fmt("%.2e", worst)};
}

Outcome monte_carlo() {
    std::vector<Mat4d> gates_under_test = {gates::cnot(0), gates::swap(), gates::iswap()};
    std::mt19937_64 rng(606);
    for (int i = 0; i < 10; ++i) gates_under_test.push_back(haar_unitary<4>(rng));
    double worst = 0.0;
    std::uint64_t seed = 6060;
    for (const Mat4d &u : gates_under_test) {
        worst = std::max(worst, std::abs(entangling_power_mc(u, 200000, seed++) - entangling_power(u)));
    }
    return {worst < 5e-3, "max |mc - closed| " + fmt("%.2e", worst) + " over 13 gates"};
}

// Distance of v to the nearest multiple of pi/4.
double lattice_gap(double v) {
    const double q = kPi / 4;
    return std::abs(v / q - std::round(v / q)) * q;
}

bool near_boundary(const std::vector<double> &values) {
    return std::any_of(values.begin(), values.end(), [](double v) {
        const double g = lattice_gap(v);
        return g > 1e-12 && g < 1e-7;
    });
}

struct Agreement {
    int compared = 0, boundary = 0, singular = 0, disagreements = 0;
    int clifford = 0, matchgate = 0, dual = 0;
    std::string first;
};

void compare(Agreement &a, const std::string &row, const Mat4d &u, const ConditionVerdicts &p) {
    const bool c = is_clifford(u), m = is_matchgate(u), d = is_dual_unitary(u).is_dual_unitary;
    ++a.compared;
    a.clifford += c, a.matchgate += m, a.dual += d;
    if (c != p.clifford || m != p.matchgate || d != p.dual_unitary) {
        if (a.disagreements++ == 0) {
            a.first = row + " numeric " + std::to_string(c) + std::to_string(m) + std::to_string(d) + " predicted " +
                      std::to_string(p.clifford) + std::to_string(p.matchgate) + std::to_string(p.dual_unitary);
        }
    }
}

// Spectral values on the loci where kinds 2 and 3 become matchgates or Clifford.
double locus_spectral(std::mt19937_64 &rng, Family f, int kind, const std::vector<double> &phi) {
    double t;
    if (f == Family::III) {
        t = kind == 2 ? std::tan(phi[0]) : 1.0 / std::tan(phi[0]);
        if (!(std::abs(t) < 1.0)) return uniform(rng, -3, 3);
        return (rng() % 2 ? 1 : -1) * std::atanh(t);
    }
    const double ph = 0.5 * (phi[1] + phi[2]) - phi[0];
    t = kind == 2 ? std::tan(ph / 2) : 1.0 / std::tan(ph / 2);
    if (!(std::abs(t) < 1.0)) return uniform(rng, -3, 3);
    return (rng() % 2 ? 1 : -1) * 2 * std::atanh(t);
}

std::vector<double> derived_values(const YbSpec &s) {
    std::vector<double> v = s.phi;
    v.push_back(s.spectral);
    if (s.family == Family::I || s.family == Family::II) {
        v.push_back(0.5 * (s.phi[1] + s.phi[2]) - s.phi[0]);
        v.push_back(0.5 * (s.phi[1] - s.phi[2]));
    }
    return v;
}

std::vector<double> derived_values(const BraidSpec &s) {
    std::vector<double> v = s.phi;
    const DerivedAngles d = derived_angles(s);
    v.insert(v.end(), {d.p1, d.p2, d.p3, d.omega});
    return v;
}

Outcome tables() {
    std::mt19937_64 rng(707);
    constexpr int kPerRow = 1200;
    Agreement a;
    int min_row = kPerRow;
    for (Family f : kAll) {
        int n = 0;
        for (int i = 0; i < kPerRow; ++i) {
            const BraidSpec spec{f, mixed_phases(rng, braid_param_count(f))};
            if (near_boundary(derived_values(spec))) {
                ++a.boundary;
                continue;
            }
            compare(a, "B_" + to_string(f), build_braid(spec), predict_conditions(spec));
            ++n;
        }
        min_row = std::min(min_row, n);
    }
    const auto run = [&](Family f, int kind) {
        int n = 0;
        for (int i = 0; i < kPerRow; ++i) {
            const std::vector<double> phi = mixed_phases(rng, yb_phase_count(f));
            double s;
            const int mode = static_cast<int>(rng() % 4);
            if (f == Family::IV) {
                s = mode < 2 ? mixed_angle(rng) : uniform(rng, -kPi, kPi);
            } else if (mode == 0) {
                s = 0.0;
            } else if (mode == 1 && kind != 1) {
                s = locus_spectral(rng, f, kind, phi);
            } else {
                s = uniform(rng, -3, 3);
            }
            const YbSpec spec{f, kind, s, phi};
            if (near_boundary(derived_values(spec))) {
                ++a.boundary;
                continue;
            }
            try {
                compare(a, row_name(f, kind), build_yb(spec), predict_conditions(spec));
                ++n;
            } catch (const SingularParameterError &) {
                ++a.singular;
            }
        }
        min_row = std::min(min_row, n);
    };
    for (Family f : kSixOrEight) {
        for (int k = 1; k <= 3; ++k) run(f, k);
    }
    run(Family::IV, 1);
    std::string detail = std::to_string(a.compared) + " points, min " + std::to_string(min_row) + " per row, " +
                         std::to_string(a.disagreements) + " disagreements, " + std::to_string(a.boundary) +
                         " boundary, " + std::to_string(a.singular) + " singular; true counts C/M/D " +
                         std::to_string(a.clifford) + "/" + std::to_string(a.matchgate) + "/" + std::to_string(a.dual);
    if (!a.first.empty()) detail += "; first: " + a.first;
    return {a.disagreements == 0 && min_row >= 1000, detail};
}

Outcome synthesis() {
    std::mt19937_64 rng(808);
    double worst = 0.0;
    int count_mismatch = 0;
    for (int i = 0; i < 1000; ++i) {
        const Mat4d u = haar_unitary<4>(rng);
        const Circuit c = synth_general(u);
        worst = std::max(worst, verify_circuit(c, u));
        if (c.cnot_count() != min_cnot_count(extract_nonlocal(u))) ++count_mismatch;
    }
    double worst_exact = 0.0;
    int bad_exact = 0;
    for (int i = 0; i < 100; ++i) {
        const double phi1 = uniform(rng, -kPi, kPi), chi = uniform(rng, -kPi, kPi), theta = uniform(rng, -kPi, kPi);
        const Circuit r = synth_riv(phi1, chi);
        const Circuit z = synth_zz(theta);
        const cd m = std::polar(1.0, -theta / 2), pl = std::polar(1.0, theta / 2);
        const Mat4d zz = Eigen::Vector4cd(m, pl, pl, m).asDiagonal();
        worst_exact = std::max({worst_exact, verify_circuit(r, build_yb({Family::IV, 1, chi, {phi1}})),
                                verify_circuit(z, zz)});
        if (r.cnot_count() != 2 || z.cnot_count() != 2) ++bad_exact;
    }
    return {worst < 1e-7 && count_mismatch == 0 && worst_exact < 1e-10 && bad_exact == 0,
            "general max " + fmt("%.2e", worst) + " with " + std::to_string(count_mismatch) +
                " CNOT-count mismatches; R_IV/ZZ max " + fmt("%.2e", worst_exact)};
}

Outcome conjugation() {
    std::mt19937_64 rng(909);
    const Mat4d x1 = kron(Mat2d(Mat2d::Identity()), gates::pauli(1));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const std::vector<double> p = random_phases(rng, 3);
        const BraidSpec b1{Family::I, {p[0], p[1], p[2], p[0]}};
        const BraidSpec b2{Family::II, p};
        worst = std::max(worst, (build_braid(b1) - x1 * build_braid(b2) * x1).cwiseAbs().maxCoeff());
        const double mu = uniform(rng, -3, 3);
        for (int k = 1; k <= 3; ++k) {
            const Mat4d r1 = build_yb({Family::I, k, mu, p});
            const Mat4d r2 = build_yb({Family::II, k, mu, p});
            worst = std::max(worst, (r1 - x1 * r2 * x1).cwiseAbs().maxCoeff());
        }
    }
    return {worst <= 1e-12, "max entry deviation " + fmt("%.2e", worst)};
}

Outcome braid_limit() {
    std::mt19937_64 rng(1010);
    double worst12 = 0.0, worst20 = 0.0;
    for (Family f : kSixOrEight) {
        for (int i = 0; i < 20; ++i) {
            const YbSpec spec = random_yb(rng, f, 1, 0.0);
            worst12 = std::max(worst12, braid_limit_residual(spec, -12.0));
            worst20 = std::max(worst20, braid_limit_residual(spec, -20.0));
        }
    }
    return {worst12 < 1e-4 && worst20 < 1e-7, "mu=-12 max " + fmt("%.2e", worst12) + ", mu=-20 max " + fmt("%.2e", worst20)};
}

Outcome kak_round_trip() {
    std::mt19937_64 rng(1111);
    std::vector<Mat4d> us;
    for (int i = 0; i < 1000; ++i) us.push_back(haar_unitary<4>(rng));
    us.push_back(gates::cnot(0));
    us.push_back(gates::cnot(1));
    us.push_back(gates::swap());
    us.push_back(gates::iswap());
    us.push_back(Mat4d::Identity());
    const double h = kPi / 2;
    const std::array<std::array<NonlocalPoint, 2>, 6> edges = {{{{{0, 0, 0}, {h, 0, 0}}},
                                                                 {{{0, 0, 0}, {h, h, 0}}},
                                                                 {{{0, 0, 0}, {h, h, h}}},
                                                                 {{{h, 0, 0}, {h, h, 0}}},
                                                                 {{{h, 0, 0}, {h, h, h}}},
                                                                 {{{h, h, 0}, {h, h, h}}}}};
    for (const auto &e : edges) {
        for (int j = 0; j <= 8; ++j) {
            const double t = j / 8.0;
            const NonlocalPoint p{e[0].a1 + t * (e[1].a1 - e[0].a1), e[0].a2 + t * (e[1].a2 - e[0].a2),
                                  e[0].a3 + t * (e[1].a3 - e[0].a3)};
            us.push_back(core_gate(p));
            const Mat4d dress = kron(haar_unitary<2>(rng), haar_unitary<2>(rng));
            us.push_back(dress * core_gate(p) * kron(haar_unitary<2>(rng), haar_unitary<2>(rng)));
        }
    }
    double worst = 0.0;
    int failures = 0;
    for (const Mat4d &u : us) {
        try {
            worst = std::max(worst, (kak_decompose(u).matrix() - u).norm());
        } catch (const KakError &) {
            ++failures;
        }
    }
    return {worst < 1e-8 && failures == 0,
            "max residual " + fmt("%.2e", worst) + " over " + std::to_string(us.size()) + " gates, " +
                std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"braid relation", braid_relation},
        {"Yang-Baxter equation", yang_baxter},
        {"Baxterization unitarity", theorem_unitarity},
        {"nonlocal closed forms", nonlocal_closed_forms},
        {"landmark points", landmarks},
        {"Monte-Carlo entangling power", monte_carlo},
        {"condition tables", tables},
        {"synthesis", synthesis},
        {"conjugation identities", conjugation},
        {"braid limit", braid_limit},
        {"KAK round-trip", kak_round_trip},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %2zu %-30s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
    return failed == 0 ? 0 : 1;
}
