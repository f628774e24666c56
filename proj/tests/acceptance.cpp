// Copyright 2026 The qhard Authors
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

// Acceptance runner: one line per criterion, exit status 1 when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qhard/boolfn.hpp"
#include "qhard/clifford.hpp"
#include "qhard/exact.hpp"
#include "qhard/numeric.hpp"
#include "qhard/search.hpp"
#include "qhard/sk.hpp"
#include "qhard/synth.hpp"

namespace {

using namespace qhard;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kDistanceTol = 1e-6;
constexpr double kAlphaTol = 1e-6;
constexpr double kHalfTol = 1e-9;
constexpr double kCertificateSlack = 1e-12;
constexpr double kSat1Seconds = 10;
constexpr double kEnumerationSeconds = 60;
constexpr uint64_t kSeed = 20260101;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::vector<BoolExpr> two_var_tables() {
    return oracle::all_tables(2);
}

std::vector<BoolExpr> random_three_var(size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<BoolExpr> out;
    while (out.size() < count) out.push_back(oracle::with_vars(oracle::random_formula(3, rng), 3));
    return out;
}

std::vector<BoolExpr> full_corpus() {
    std::vector<BoolExpr> c = oracle::all_tables(1);
    for (auto &f : two_var_tables()) c.push_back(f);
    for (auto &f : random_three_var(50, kSeed)) c.push_back(f);
    c.push_back(oracle::with_vars(oracle::dnf_for_table(3, 0), 3));
    c.push_back(oracle::with_vars(oracle::dnf_for_table(3, 0xff), 3));
    return c;
}

Outcome criterion1() {
    auto start = Clock::now();
    std::vector<BoolExpr> c = two_var_tables();
    for (auto &f : random_three_var(50, kSeed)) c.push_back(f);
    size_t wrong = 0;
    for (const auto &f : c) wrong += decide_sat(f, Variant::T).satisfiable != brute_sat(f).has_value();
    double t = seconds_since(start);
    std::ostringstream d;
    d << c.size() << " formulas, " << wrong << " disagreements, " << t << " s";
    return {wrong == 0 && t < kSat1Seconds, d.str()};
}

Outcome criterion2() {
    size_t unsat = 0, taut = 0, bad = 0;
    for (const auto &f : full_corpus()) {
        TruthTable tt = truth_table(f);
        if (!tt.is_constant()) continue;
        ReductionInstance inst = build_reduction(f, Variant::T);
        ExactUnitary u = exact_simulate(inst.circuit);
        if (tt.bits[0] == 0) {
            unsat++;
            bad += !u.is_identity();
        } else {
            taut++;
            Circuit sdg(inst.circuit.num_wires());
            sdg.append(GateKind::SDG, {inst.target});
            auto k = equal_up_to_phase(u, exact_simulate(sdg));
            bad += !(k && *k == 1);
        }
    }
    std::ostringstream d;
    d << unsat << " unsatisfiable, " << taut << " tautological, " << bad << " mismatches";
    return {bad == 0 && unsat > 0 && taut > 0, d.str()};
}

Outcome criterion3() {
    size_t checked = 0, bad = 0;
    for (const auto &f : full_corpus()) {
        auto w = find_witness_pair(f);
        auto *pair = std::get_if<WitnessPair>(&w);
        if (!pair) continue;
        checked++;
        const uint64_t z1 = assignment_index(pair->z1), z2 = assignment_index(pair->z2);
        ReductionInstance t = build_reduction(f, Variant::T);
        ExactUnitary ct = exact_simulate(t.circuit);
        bad += pauli_conjugate(ct, PauliOperator::x_mask(t.circuit.num_wires(), z1 ^ z2)).has_value();

        ReductionInstance tof = build_reduction(f, Variant::TOF);
        const uint32_t n = tof.circuit.num_wires();
        ExactUnitary c = exact_simulate(tof.circuit);
        ExactUnitary m = c.adjoint() * PauliOperator::x_mask(n, z1 ^ z2).to_matrix() * c;
        auto perm = permutation_of(m);
        if (!perm) {
            bad++;
            continue;
        }
        const uint32_t a = *tof.oracle_target, y = tof.target, z = *tof.output;
        for (uint32_t rest = 0; rest < 8; rest++) {
            uint32_t av = rest & 1, yv = (rest >> 1) & 1, zv = (rest >> 2) & 1;
            uint32_t in = static_cast<uint32_t>(z1) | av << a | yv << y | zv << z;
            uint32_t out = static_cast<uint32_t>(z2) | av << a | yv << y | (yv ^ zv) << z;
            bad += (*perm)[in] != out;
        }
    }
    std::ostringstream d;
    d << checked << " non-constant formulas, " << bad << " failures";
    return {bad == 0 && checked > 0, d.str()};
}

Outcome criterion4() {
    auto start = Clock::now();
    CliffordCatalog catalog = enumerate_clifford_group(2);
    ReductionInstance inst = build_reduction(parse_expr("x0"), Variant::T);
    NumericUnitary cf = numeric_simulate(inst.circuit);
    auto best = nearest_clifford_distance(cf, catalog);
    auto nondiag = nearest_clifford_distance(cf, catalog, [](const ExactUnitary &e) { return !e.is_diagonal(); });
    double t = seconds_since(start);
    const double target = 2 * std::sin(std::numbers::pi / 16);
    bool distance_ok = std::abs(best->distance - target) <= kDistanceTol;
    bool alpha_ok = std::abs(best->alpha - std::numbers::pi / 8) <= kAlphaTol;
    bool diag_ok = best->witness.is_diagonal();
    bool nondiag_ok = nondiag->distance >= 0.5 - kHalfTol;
    std::ostringstream d;
    d.precision(9);
    d << "nearest " << best->distance << " (want " << target << "), alpha " << best->alpha << " (want "
      << std::numbers::pi / 8 << "), diagonal witness " << (diag_ok ? "yes" : "no") << ", non-diagonal min "
      << nondiag->distance << ", " << catalog.size() << " Cliffords in " << t << " s";
    return {distance_ok && alpha_ok && diag_ok && nondiag_ok && t < kEnumerationSeconds, d.str()};
}

Outcome criterion5(const std::vector<std::shared_ptr<const BaseNet>> &nets) {
    std::vector<BoolExpr> c = two_var_tables();
    for (auto &f : random_three_var(10, kSeed + 5)) c.push_back(f);
    c.push_back(oracle::with_vars(oracle::dnf_for_table(3, 0xff), 3));
    size_t runs = 0, wrong = 0;
    for (const auto &net : nets) {
        for (double eps : {0.15, 0.1, 0.05}) {
            GVariantOptions opts{net.get(), eps};
            for (const auto &f : c) {
                runs++;
                wrong += decide_sat(f, Variant::G, &opts).satisfiable != brute_sat(f).has_value();
            }
        }
    }
    std::ostringstream d;
    d << runs << " decisions over " << nets.size() << " gates and 3 budgets, " << wrong << " wrong";
    return {wrong == 0, d.str()};
}

Outcome criterion6() {
    ExactUnitary e = exact_simulate(build_reduction(parse_expr("x0"), Variant::H).circuit);
    const RingElement r = RingElement::inv_sqrt2_power(1), ir = r * RingElement::omega_power(2);
    // Input x0 = 1 with y in {0, 1}: basis indices 1 and 3.
    bool block = e(1, 1) == r && e(3, 1) == ir && e(1, 3) == ir && e(3, 3) == r;
    size_t bad = 0, total = 0;
    for (const auto &f : full_corpus()) {
        total++;
        bad += is_generalized_permutation(exact_simulate(build_reduction(f, Variant::H).circuit)) ==
               brute_sat(f).has_value();
    }
    std::ostringstream d;
    d << "block " << (block ? "exact" : "wrong") << ", " << total << " formulas, " << bad << " mismatches";
    return {block && bad == 0, d.str()};
}

Outcome criterion7() {
    std::vector<BoolExpr> c = full_corpus();
    std::mt19937_64 rng(kSeed + 7);
    for (int i = 0; i < 30; i++) c.push_back(oracle::with_vars(oracle::random_formula(4, rng, 4), 4));
    c.push_back(oracle::with_vars("x0&x1&x2&x3", 4));
    c.push_back(oracle::with_vars("x0&x1&x2|x1&x2&x3", 4));
    size_t bad = 0, states = 0;
    for (const auto &f : c) {
        OracleCircuit o = synth_oracle(f);
        ExactUnitary u = exact_simulate(o.circuit);
        bad += !(u * u).is_identity();
        auto perm = permutation_of(u);
        if (!perm) {
            bad++;
            continue;
        }
        const uint32_t v = f.num_vars();
        for (uint32_t b = 0; b < perm->size(); b++, states++) {
            uint32_t expect = f.evaluate(uint64_t{b & ((1u << v) - 1)}) ? b ^ (1u << o.target) : b;
            bad += (*perm)[b] != expect;
        }
    }
    std::ostringstream d;
    d << c.size() << " oracles, " << states << " basis states, " << bad << " failures";
    return {bad == 0, d.str()};
}

Outcome criterion8() {
    auto c1 = std::make_shared<const CliffordCatalog>(enumerate_clifford_group(1));
    auto c2 = std::make_shared<const CliffordCatalog>(enumerate_clifford_group(2));
    std::mt19937_64 rng(kSeed + 8);
    size_t bad = 0;

    TCountSearch t1(c1);
    for (const auto &c : c1->elements()) {
        CountResult a = t1.min_tcount(c, {4}), b = naive_min_tcount(c, *c1, 4);
        bad += !(a.found() && b.found() && a.count == 0 && b.count == 0);
    }
    ExactUnitary t = exact_simulate(parse_circuit("qubits 1\nt 0\n"));
    bad += t1.min_tcount(t, {4}).count != 1 || naive_min_tcount(t, *c1, 4).count != 1;
    size_t words = 0;
    std::vector<GateKind> kinds{GateKind::H, GateKind::S, GateKind::T, GateKind::TDG};
    while (words < 20) {
        Circuit w = oracle::random_circuit(1, 2 + rng() % 12, kinds, rng);
        if (count(w, kTGates) > 4) continue;
        words++;
        ExactUnitary u = exact_simulate(w);
        CountResult a = t1.min_tcount(u, {4}), b = naive_min_tcount(u, *c1, 4);
        bad += a.status != b.status || a.count != b.count;
    }

    TCountSearch t2(c2);
    std::vector<GateKind> kinds2{GateKind::H, GateKind::S, GateKind::CX, GateKind::CZ, GateKind::T, GateKind::TDG};
    for (int i = 0; i < 200; i++) {
        ExactUnitary u = exact_simulate(oracle::random_circuit(2, 1 + rng() % 8, kinds2, rng));
        CountResult r = t2.min_tcount(u, {2});
        bad += (r.found() && r.count == 0) != is_clifford_exact(u);
    }

    auto h2 = std::make_shared<const HFreeCatalog>(hfree_closure(2));
    HCountSearch hs(h2);
    for (int i = 0; i < 100; i++) {
        ExactUnitary u = exact_simulate(oracle::random_circuit(2, 1 + rng() % 6, kinds2, rng));
        CountResult r = hs.min_hcount(u, {2});
        bad += (r.found() && r.count == 0) != h2->contains(u);
    }

    std::vector<GateKind> rev{GateKind::X, GateKind::CX, GateKind::CCX};
    for (int i = 0; i < 100; i++) {
        Permutation p = permutation_of(oracle::random_circuit(3, rng() % 10, rev, rng));
        CountResult r = exact_min_tofcount(p);
        bad += (r.found() && r.count == 0) != is_linear_reversible(p);
    }
    std::ostringstream d;
    d << "24 Cliffords, T, 20 words, 200 two-qubit circuits, 100 H-count and 100 Toffoli-count checks; " << bad
      << " failures";
    return {bad == 0, d.str()};
}

Outcome criterion9() {
    std::mt19937_64 rng(kSeed + 9);
    const uint32_t n = 5;
    std::vector<GateKind> kinds{GateKind::H, GateKind::S, GateKind::SDG, GateKind::X, GateKind::CX, GateKind::CZ};
    size_t bad = 0, longest = 0;
    for (int i = 0; i < 100; i++) {
        Circuit c = oracle::random_circuit(n, 200, kinds, rng);
        CliffordTableau tab = tableau_simulate(c);
        Circuit r = canonical_circuit(tab);
        longest = std::max(longest, r.size());
        ExactUnitary u = exact_simulate(c);
        bad += r.size() > 30 * n * n;
        bad += !equal_up_to_phase(exact_simulate(r), u);
        bad += !(tableau_simulate(r) == tab);
        auto back = tableau_of_unitary(u);
        bad += !(back && *back == tab);
    }
    std::ostringstream d;
    d << "100 circuits, longest resynthesis " << longest << " gates (bound " << 30 * n * n << "), " << bad
      << " failures";
    return {bad == 0, d.str()};
}

Outcome criterion10(const std::vector<std::shared_ptr<const BaseNet>> &nets) {
    size_t words = 0, bad = 0;
    double worst_ratio = 0;
    std::vector<BoolExpr> c = two_var_tables();
    for (auto &f : random_three_var(5, kSeed + 10)) c.push_back(f);
    for (const auto &net : nets) {
        const GateDefinition &g = net->gate();
        for (double eps : {0.15, 0.1, 0.05}) {
            for (const auto &f : c) {
                Circuit ct = build_reduction(f, Variant::T).circuit;
                Translation tr = translate_circuit(ct, *net, eps);
                const double per_gate = eps / std::max<size_t>(1, count(ct, kTGates));
                // Each substituted word is re-measured against the gate it replaced.
                size_t wi = 0;
                for (const Gate &gate : ct.gates()) {
                    if (gate.kind != GateKind::T && gate.kind != GateKind::TDG) continue;
                    words++;
                    bad += tr.gate_errors[wi] > per_gate + kCertificateSlack;
                    wi++;
                }
                double measured = phase_min_distance(numeric_simulate(ct), numeric_simulate(tr.circuit, &g)).distance;
                bad += measured > eps + kCertificateSlack;
                worst_ratio = std::max(worst_ratio, measured / eps);
            }
            for (GateKind k : {GateKind::T, GateKind::TDG}) {
                Eigen::Matrix2cd target = gate_matrix_2x2(k, g);
                SkResult r = sk_approximate(target, *net, eps / 10);
                Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
                for (GateKind w : r.word.gates) m = gate_matrix_2x2(w, g) * m;
                words++;
                bad += projective_distance(m, target) > eps / 10 + kCertificateSlack;
                bad += phase_min_distance(m, target).distance > eps / 10 + kCertificateSlack;
            }
        }
    }
    std::ostringstream d;
    d << words << " words certified, worst end-to-end distance / budget " << worst_ratio << ", " << bad << " failures";
    return {bad == 0, d.str()};
}

}  // namespace

int main() {
    std::vector<std::shared_ptr<const BaseNet>> nets{
        std::make_shared<const BaseNet>(GateDefinition::sqrt_t(), 12),
        std::make_shared<const BaseNet>(GateDefinition::generic_rotation(1.0), 12)};

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"reduction soundness (T variant vs brute force)", criterion1},
        {"constant-case identities", criterion2},
        {"Pauli witness and Toffoli state map", criterion3},
        {"nearest-Clifford distance constants", criterion4},
        {"G-variant threshold coherence", [&] { return criterion5(nets); }},
        {"H-variant block and generalized permutations", criterion6},
        {"oracle obliviousness and involution", criterion7},
        {"search oracle consistency", criterion8},
        {"Clifford normal form", criterion9},
        {"Solovay-Kitaev certificates", [&] { return criterion10(nets); }},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu of %zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
