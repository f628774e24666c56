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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qhard/clifford.hpp"
#include "qhard/exact.hpp"
#include "qhard/search.hpp"
#include "qhard/synth.hpp"

namespace {

using namespace qhard;

std::shared_ptr<const CliffordCatalog> catalog(uint32_t n) {
    static auto c1 = std::make_shared<const CliffordCatalog>(enumerate_clifford_group(1));
    static auto c2 = std::make_shared<const CliffordCatalog>(enumerate_clifford_group(2));
    return n == 1 ? c1 : c2;
}

std::shared_ptr<const HFreeCatalog> hfree(uint32_t n) {
    static auto h1 = std::make_shared<const HFreeCatalog>(hfree_closure(1));
    static auto h2 = std::make_shared<const HFreeCatalog>(hfree_closure(2));
    return n == 1 ? h1 : h2;
}

ExactUnitary sim(const char *text) {
    return exact_simulate(parse_circuit(text));
}

TEST(PauliRotations, AreCliffordConjugatesOfT) {
    for (uint32_t n : {1u, 2u}) {
        auto rots = pauli_rotations(n);
        EXPECT_EQ(rots.size(), n == 1 ? 6u : 30u);
        ExactUnitary t = exact_gate_matrix(Gate(GateKind::T, {0}), n);
        for (const auto &r : rots) {
            EXPECT_TRUE(r.is_unitary());
            EXPECT_FALSE(is_clifford_exact(r));
            // r = C T C^dagger for some Clifford C, up to phase.
            bool found = false;
            for (const auto &c : catalog(n)->elements()) {
                if (equal_up_to_phase(r, c * t * c.adjoint())) {
                    found = true;
                    break;
                }
            }
            EXPECT_TRUE(found);
        }
    }
}

TEST(CosetKey, ConstantOnLeftCosets) {
    std::mt19937_64 rng(61);
    std::vector<GateKind> kinds{GateKind::H, GateKind::S, GateKind::T, GateKind::CX};
    for (int i = 0; i < 20; i++) {
        ExactUnitary w = exact_simulate(oracle::random_circuit(2, 10, kinds, rng));
        const auto &c = catalog(2)->elements()[rng() % catalog(2)->size()];
        EXPECT_EQ(clifford_coset_key(c * w), clifford_coset_key(w));
        EXPECT_EQ(clifford_coset_key(w.times_omega(3)), clifford_coset_key(w));
    }
}

TEST(TCount, Examples) {
    SearchBudget b{4};
    TCountSearch s2(catalog(2));
    for (size_t i = 0; i < catalog(2)->size(); i += 97) EXPECT_EQ(s2.min_tcount(catalog(2)->elements()[i], b).count, 0u);
    EXPECT_EQ(s2.min_tcount(sim("qubits 2\nt 0\n"), b).count, 1u);
    EXPECT_EQ(naive_min_tcount(sim("qubits 2\nt 0\n"), *catalog(2), 3).count, 1u);
    // Controlled-S.
    ExactUnitary cs = sim("qubits 2\nt 0\nt 1\ncx 0 1\ntdg 1\ncx 0 1\n");
    CountResult mitm = s2.min_tcount(cs, b), naive = naive_min_tcount(cs, *catalog(2), 3);
    ASSERT_TRUE(mitm.found());
    ASSERT_TRUE(naive.found());
    EXPECT_EQ(mitm.count, naive.count);
    EXPECT_EQ(mitm.count, 3u);
}

TEST(TCountProperty, MitmMatchesNaiveOneQubit) {
    TCountSearch s(catalog(1));
    std::mt19937_64 rng(62);
    std::vector<GateKind> kinds{GateKind::H, GateKind::S, GateKind::T, GateKind::TDG};
    for (int i = 0; i < 60; i++) {
        Circuit c = oracle::random_circuit(1, 1 + rng() % 12, kinds, rng);
        if (count(c, kTGates) > 4) continue;
        ExactUnitary u = exact_simulate(c);
        CountResult a = s.min_tcount(u, SearchBudget{4}), b = naive_min_tcount(u, *catalog(1), 4);
        ASSERT_EQ(a.status, b.status) << emit_circuit(c);
        EXPECT_EQ(a.count, b.count) << emit_circuit(c);
        EXPECT_LE(a.count, count(c, kTGates));
    }
}

TEST(TCountProperty, MitmMatchesNaiveTwoQubits) {
    TCountSearch s(catalog(2));
    std::mt19937_64 rng(63);
    std::vector<GateKind> kinds{GateKind::H, GateKind::S, GateKind::CX, GateKind::T, GateKind::TDG};
    int tested = 0;
    while (tested < 12) {
        Circuit c = oracle::random_circuit(2, 1 + rng() % 10, kinds, rng);
        if (count(c, kTGates) > 3) continue;
        ExactUnitary u = exact_simulate(c);
        CountResult a = s.min_tcount(u, SearchBudget{3}), b = naive_min_tcount(u, *catalog(2), 3);
        ASSERT_TRUE(a.found() && b.found()) << emit_circuit(c);
        EXPECT_EQ(a.count, b.count) << emit_circuit(c);
        tested++;
    }
}

TEST(TCountProperty, ZeroIffClifford) {
    TCountSearch s(catalog(2));
    std::mt19937_64 rng(64);
    std::vector<GateKind> kinds{GateKind::H, GateKind::S, GateKind::CX, GateKind::CZ, GateKind::T, GateKind::TDG};
    for (int i = 0; i < 100; i++) {
        ExactUnitary u = exact_simulate(oracle::random_circuit(2, 1 + rng() % 8, kinds, rng));
        CountResult r = s.min_tcount(u, SearchBudget{2});
        EXPECT_EQ(r.found() && r.count == 0, is_clifford_exact(u));
    }
}

TEST(TCount, ExceedsAndCaps) {
    TCountSearch s(catalog(1));
    ExactUnitary u = sim("qubits 1\nt 0\nh 0\nt 0\nh 0\nt 0\n");
    CountResult small = s.min_tcount(u, SearchBudget{2});
    EXPECT_EQ(small.status, CountResult::Status::Exceeds);
    TCountSearch fresh(catalog(2));
    SearchBudget tiny{6, 5, 300};
    CountResult capped = fresh.min_tcount(sim("qubits 2\nt 0\nh 0\nt 0\ncx 0 1\nt 1\nh 1\nt 1\n"), tiny);
    EXPECT_EQ(capped.status, CountResult::Status::CapExhausted);
}

TEST(HFree, Closure) {
    EXPECT_EQ(hfree(1)->size(), 8u);
    for (int k = 0; k < 8; k++) {
        ExactUnitary d = ExactUnitary::identity(2);
        d(1, 1) = RingElement::omega_power(k);
        EXPECT_TRUE(hfree(1)->contains(d));
    }
    EXPECT_TRUE(hfree(2)->contains(sim("qubits 2\ncx 0 1\n")));
    EXPECT_FALSE(hfree(2)->contains(sim("qubits 2\nh 0\n")));
    EXPECT_FALSE(hfree(1)->contains(sim("qubits 1\nh 0\n")));
    // Every element is a generalized permutation, and re-closing adds nothing.
    for (const auto &e : hfree(2)->elements()) EXPECT_TRUE(is_generalized_permutation(e));
    HFreeCatalog again = hfree_closure(2, hfree(2)->elements());
    EXPECT_EQ(again.size(), hfree(2)->size());
}

TEST(HCount, Examples) {
    SearchBudget b{4};
    HCountSearch s1(hfree(1)), s2(hfree(2));
    EXPECT_EQ(s2.min_hcount(sim("qubits 2\ncx 0 1\ns 1\n"), b).count, 0u);
    EXPECT_EQ(s1.min_hcount(sim("qubits 1\nh 0\n"), b).count, 1u);
    EXPECT_EQ(s2.min_hcount(sim("qubits 2\nh 0\nh 1\n"), b).count, 2u);
    EXPECT_EQ(s1.min_hcount(sim("qubits 1\nh 0\nt 0\nh 0\n"), b).count, 2u);
    ReductionInstance inst = build_reduction(parse_expr("x0"), Variant::H);
    CountResult r = s2.min_hcount(exact_simulate(inst.circuit), b);
    ASSERT_TRUE(r.found());
    EXPECT_GE(r.count, 1u);
    EXPECT_FALSE(hfree(2)->contains(exact_simulate(inst.circuit)));
}

TEST(HCountProperty, ZeroIffHFreeMembership) {
    HCountSearch s(hfree(2));
    std::mt19937_64 rng(65);
    std::vector<GateKind> kinds{GateKind::H, GateKind::S, GateKind::CX, GateKind::T, GateKind::T, GateKind::CX};
    for (int i = 0; i < 60; i++) {
        Circuit c = oracle::random_circuit(2, 1 + rng() % 6, kinds, rng);
        ExactUnitary u = exact_simulate(c);
        CountResult r = s.min_hcount(u, SearchBudget{2});
        EXPECT_EQ(r.found() && r.count == 0, hfree(2)->contains(u));
        if (r.found()) {
            EXPECT_LE(r.count, count(c, kHadamardGates));
        }
    }
}

TEST(Tof, LinearityAndCounts) {
    Circuit cx(3);
    cx.append(GateKind::CX, {0, 1});
    cx.append(GateKind::X, {2});
    EXPECT_TRUE(is_linear_reversible(permutation_of(cx)));
    EXPECT_EQ(exact_min_tofcount(permutation_of(cx)).count, 0u);
    Circuit tof = parse_circuit("qubits 3\nccx 0 1 2\n");
    EXPECT_FALSE(is_linear_reversible(permutation_of(tof)));
    EXPECT_EQ(exact_min_tofcount(permutation_of(tof)).count, 1u);
    EXPECT_THROW(exact_min_tofcount(permutation_of(parse_circuit("qubits 4\nccx 0 1 2\n"))), std::length_error);
    EXPECT_EQ(permutation_of(exact_simulate(tof)), permutation_of(tof));
    EXPECT_FALSE(permutation_of(sim("qubits 1\nh 0\n")));
}

TEST(TofProperty, MatchesNaiveSearch) {
    std::mt19937_64 rng(66);
    std::vector<GateKind> kinds{GateKind::X, GateKind::CX, GateKind::CCX, GateKind::CCX};
    for (int i = 0; i < 100; i++) {
        Permutation p = permutation_of(oracle::random_circuit(3, rng() % 12, kinds, rng));
        CountResult a = exact_min_tofcount(p, SearchBudget{8}), b = naive_min_tofcount(p, 8);
        ASSERT_EQ(a.status, b.status);
        EXPECT_EQ(a.count, b.count);
        EXPECT_EQ(a.count == 0, is_linear_reversible(p));
    }
    // Swapping basis states 6 and 7 is ccx 1 2 0.
    Permutation p{0, 1, 2, 3, 4, 5, 7, 6};
    EXPECT_EQ(exact_min_tofcount(p).count, 1u);
}

TEST(Tof, ReductionPermutationsNeedToffolis) {
    for (const BoolExpr &f : oracle::all_tables(2)) {
        ReductionInstance inst = build_reduction(f, Variant::TOF);
        Permutation p = permutation_of(inst.circuit);
        // Five wires is beyond the exact search, so only the linearity test applies.
        EXPECT_EQ(is_linear_reversible(p), truth_table(f).is_constant());
    }
    ReductionInstance inst = build_reduction(parse_expr("x0&x1"), Variant::TOF);
    EXPECT_FALSE(is_linear_reversible(permutation_of(inst.circuit)));
}

}  // namespace
