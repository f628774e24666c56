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

#include <filesystem>

#include "oracles.hpp"
#include "qhard/numeric.hpp"
#include "qhard/sk.hpp"
#include "qhard/synth.hpp"

namespace {

using namespace qhard;
using oracle::Mat;

const BaseNet &sqrt_t_net() {
    static const BaseNet net(GateDefinition::sqrt_t(), 10);
    return net;
}

const BaseNet &rotation_net() {
    static const BaseNet net(GateDefinition::generic_rotation(1.0), 10);
    return net;
}

// Product of a word recomputed from the gate list with reference matrices.
Eigen::Matrix2cd word_matrix(const GateWord &w, const GateDefinition &gdef) {
    Eigen::Matrix2cd g;
    const auto &m = gdef.matrix();
    g << m[0], m[1], m[2], m[3];
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    for (GateKind k : w.gates) u = oracle::one_qubit(k, &g) * u;
    return u;
}

Eigen::Matrix2cd haar2(std::mt19937_64 &rng) {
    std::normal_distribution<double> n;
    Eigen::Matrix2cd m;
    m << std::complex<double>(n(rng), n(rng)), std::complex<double>(n(rng), n(rng)),
        std::complex<double>(n(rng), n(rng)), std::complex<double>(n(rng), n(rng));
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
    return qr.householderQ();
}

TEST(BaseNet, ExactEntries) {
    const BaseNet &net = sqrt_t_net();
    EXPECT_EQ(net.word(0).gates.size(), 0u);
    EXPECT_NEAR(projective_distance(net.word(0).matrix, Eigen::Matrix2cd::Identity()), 0, 1e-12);
    Eigen::Matrix2cd t = oracle::one_qubit(GateKind::T);
    const GateWord &w = net.word(net.nearest(t));
    EXPECT_EQ(w.to_string(), "g g");
    EXPECT_NEAR(projective_distance(w.matrix, t), 0, 1e-12);
}

TEST(BaseNet, EntriesAreDistinctAndCorrect) {
    const BaseNet &net = rotation_net();
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; i++) {
        size_t a = rng() % net.size(), b = rng() % net.size();
        const GateWord &w = net.word(a);
        EXPECT_LT((word_matrix(w, net.gate()) - w.matrix).norm(), 1e-9);
        if (a != b) {
            EXPECT_GT(projective_distance(w.matrix, net.word(b).matrix), 1e-10);
        }
    }
}

TEST(BaseNet, CoveringAndCache) {
    const BaseNet &net = rotation_net();
    double r = net.covering_radius_estimate(200, 1);
    EXPECT_GT(r, 0);
    EXPECT_LT(r, 0.5);
    EXPECT_EQ(r, net.covering_radius_estimate(200, 1));
    EXPECT_THROW(net.require_covering(1e-6, 50, 1), NetTooCoarseError);
    EXPECT_NO_THROW(net.require_covering(1.0, 50, 1));

    auto dir = std::filesystem::temp_directory_path() / "qhard_net_test";
    std::filesystem::remove_all(dir);
    auto a = load_base_net(GateDefinition::sqrt_t(), 6, dir);
    auto b = load_base_net(GateDefinition::sqrt_t(), 6, dir);
    ASSERT_EQ(a->size(), b->size());
    for (size_t i = 0; i < a->size(); i++) EXPECT_EQ(a->word(i).gates, b->word(i).gates);
    std::filesystem::remove_all(dir);
}

TEST(Sk, CliffordAndExactTargets) {
    SkResult t = sk_approximate(oracle::one_qubit(GateKind::T), sqrt_t_net(), 1e-6);
    EXPECT_EQ(t.word.to_string(), "g g");
    EXPECT_NEAR(t.error, 0, 1e-12);
    for (const BaseNet *net : {&sqrt_t_net(), &rotation_net()}) {
        SkResult h = sk_approximate(oracle::one_qubit(GateKind::H), *net, 1e-9);
        EXPECT_EQ(h.word.to_string(), "h");
        EXPECT_NEAR(h.error, 0, 1e-12);
    }
}

TEST(SkProperty, CertificatesHold) {
    std::mt19937_64 rng(42);
    std::vector<Eigen::Matrix2cd> targets{oracle::one_qubit(GateKind::T), oracle::one_qubit(GateKind::TDG)};
    for (int i = 0; i < 20; i++) targets.push_back(haar2(rng));
    for (double eps : {0.05, 0.01, 0.002}) {
        for (const auto &u : targets) {
            SkResult r = sk_approximate(u, rotation_net(), eps);
            Eigen::Matrix2cd m = word_matrix(r.word, rotation_net().gate());
            double measured = oracle::phase_distance(Mat(m), Mat(u));
            EXPECT_LE(measured, eps + 1e-9);
            EXPECT_NEAR(measured, r.error, 1e-7);
        }
    }
}

TEST(SkProperty, DeeperNeverWorse) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; i++) {
        Eigen::Matrix2cd u = haar2(rng);
        double prev = 1e9;
        for (uint32_t d = 0; d <= 3; d++) {
            SkResult r = sk_at_depth(u, rotation_net(), d);
            EXPECT_LE(r.error, prev + 1e-12);
            EXPECT_LE(r.depth, d);
            prev = r.error;
        }
    }
}

TEST(Sk, BudgetExceeded) {
    EXPECT_THROW(sk_approximate(oracle::one_qubit(GateKind::T), rotation_net(), 1e-14), BudgetExceededError);
}

TEST(Translate, ZeroTCircuitUnchanged) {
    Circuit c = parse_circuit("qubits 2\nh 0\ncx 0 1\ns 1\n");
    Translation tr = translate_circuit(c, rotation_net(), 0.1);
    EXPECT_EQ(tr.circuit.gates(), c.gates());
    EXPECT_EQ(tr.error_bound, 0);
}

TEST(Translate, SqrtTIsExact) {
    ReductionInstance inst = build_reduction(parse_expr("x0"), Variant::T);
    Translation tr = translate_circuit(inst.circuit, sqrt_t_net(), 0.1);
    EXPECT_EQ(count(tr.circuit, kTGates), 0u);
    EXPECT_EQ(count(tr.circuit, kNonCliffordResourceGates), 4u);
    Eigen::Matrix2cd g;
    const auto &m = GateDefinition::sqrt_t().matrix();
    g << m[0], m[1], m[2], m[3];
    EXPECT_NEAR(oracle::phase_distance(oracle::simulate(inst.circuit), oracle::simulate(tr.circuit, &g)), 0, 1e-9);
}

TEST(TranslateProperty, EndToEndWithinBudgetAndSubadditive) {
    Eigen::Matrix2cd g;
    const auto &m = rotation_net().gate().matrix();
    g << m[0], m[1], m[2], m[3];
    for (const char *f : {"x0", "x0&x1", "x0^x1", "x0|x1&x2"}) {
        ReductionInstance inst = build_reduction(parse_expr(f), Variant::T);
        for (double eps : {0.15, 0.1, 0.05}) {
            Translation tr = translate_circuit(inst.circuit, rotation_net(), eps);
            double measured = phase_min_distance(numeric_simulate(inst.circuit), numeric_simulate(tr.circuit, &rotation_net().gate())).distance;
            EXPECT_LE(measured, tr.error_bound + 1e-9);
            EXPECT_LE(tr.error_bound, eps + 1e-12);
            double reference = oracle::phase_distance(oracle::simulate(inst.circuit), oracle::simulate(tr.circuit, &g));
            EXPECT_NEAR(measured, reference, 1e-6);
        }
    }
}

}  // namespace
