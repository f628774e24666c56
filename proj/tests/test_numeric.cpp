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

#include <unsupported/Eigen/KroneckerProduct>

#include "oracles.hpp"
#include "qhard/exact.hpp"
#include "qhard/numeric.hpp"
#include "qhard/synth.hpp"

namespace {

using namespace qhard;
using oracle::Mat;

Mat haar(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Mat m(dim, dim);
    for (size_t i = 0; i < dim; i++)
        for (size_t j = 0; j < dim; j++) m(i, j) = {g(rng), g(rng)};
    Eigen::HouseholderQR<Mat> qr(m);
    return qr.householderQ();
}

TEST(Numeric, OperatorNorm) {
    EXPECT_NEAR(operator_norm(Mat::Identity(4, 4)), 1.0, 1e-12);
    EXPECT_NEAR(operator_norm(Mat::Zero(4, 4)), 0.0, 1e-12);
    Mat d = Mat::Zero(2, 2);
    d(1, 1) = std::polar(1.0, std::numbers::pi / 8) - 1.0;
    EXPECT_NEAR(operator_norm(d), 2 * std::sin(std::numbers::pi / 16), 1e-12);
    EXPECT_NEAR(2 * std::sin(std::numbers::pi / 16), 0.390181, 1e-6);
}

TEST(NumericProperty, OperatorNormMatchesSvd) {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g;
    for (size_t dim : {2, 4, 8, 16}) {
        for (int i = 0; i < 20; i++) {
            Mat m(dim, dim);
            for (size_t r = 0; r < dim; r++)
                for (size_t c = 0; c < dim; c++) m(r, c) = {g(rng), g(rng)};
            EXPECT_NEAR(operator_norm(m), oracle::spectral_norm(m), 1e-9 * oracle::spectral_norm(m));
            EXPECT_NEAR(operator_norm(haar(dim, rng)), 1.0, 1e-9);
        }
    }
}

TEST(Numeric, PhaseMinDistance) {
    std::mt19937_64 rng(22);
    Mat u = haar(4, rng);
    PhaseDistance same = phase_min_distance(u, u);
    EXPECT_NEAR(same.distance, 0, 1e-9);
    EXPECT_NEAR(same.alpha, 0, 1e-6);
    PhaseDistance rotated = phase_min_distance(oracle::w8(3) * u, u);
    EXPECT_NEAR(rotated.distance, 0, 1e-9);
    EXPECT_NEAR(rotated.alpha, 3 * std::numbers::pi / 4, 1e-6);
}

TEST(Numeric, ReductionCircuitAgainstDiagonalCandidate) {
    // The diagonal candidate with phases 1 on f = 0 and (1, -i) on f = 1 is controlled-S^dagger; its
    // phase-minimized distance to C_f is 2 sin(pi/16), attained at alpha = pi/8.
    ReductionInstance inst = build_reduction(parse_expr("x0"), Variant::T);
    Mat cf = numeric_simulate(inst.circuit);
    Mat cand = Mat::Identity(4, 4);
    cand(3, 3) = std::complex<double>(0, -1);
    PhaseDistance d = phase_min_distance(cf, cand);
    EXPECT_NEAR(d.distance, 2 * std::sin(std::numbers::pi / 16), 1e-9);
    EXPECT_NEAR(d.alpha, std::numbers::pi / 8, 1e-6);
}

TEST(NumericProperty, PhaseDistanceIsPseudometric) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; i++) {
        Mat a = haar(4, rng), b = haar(4, rng), c = haar(4, rng);
        double ab = phase_min_distance(a, b).distance, ba = phase_min_distance(b, a).distance;
        double bc = phase_min_distance(b, c).distance, ac = phase_min_distance(a, c).distance;
        EXPECT_NEAR(ab, ba, 1e-9);
        EXPECT_LE(ac, ab + bc + 1e-6);
        EXPECT_NEAR(ab, oracle::phase_distance(a, b), 1e-7);
        EXPECT_LE(phase_distance_lower_bound(a, b), ab + 1e-9);
    }
}

TEST(Numeric, ProductTest) {
    Circuit ht = parse_circuit("qubits 2\nh 0\nt 1\n");
    ProductTest p = is_product_of_single_qubit(numeric_simulate(ht));
    ASSERT_TRUE(p.factors);
    Eigen::Matrix2cd h = oracle::one_qubit(GateKind::H), t = oracle::one_qubit(GateKind::T);
    // Factors are determined up to phase.
    EXPECT_NEAR(phase_min_distance((*p.factors)[0], h).distance, 0, 1e-7);
    EXPECT_NEAR(phase_min_distance((*p.factors)[1], t).distance, 0, 1e-7);
    EXPECT_FALSE(is_product_of_single_qubit(numeric_simulate(parse_circuit("qubits 2\ncx 0 1\n"))).factors);
}

TEST(NumericProperty, ProductEvidenceIsConsistent) {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 20; i++) {
        Mat a = haar(2, rng), b = haar(2, rng), c = haar(2, rng);
        Mat ba = Eigen::kroneckerProduct(b, a);
        Mat u = Eigen::kroneckerProduct(c, ba);
        ProductTest p = is_product_of_single_qubit(u);
        ASSERT_TRUE(p.factors);
        const auto &f = *p.factors;
        Mat low = Eigen::kroneckerProduct(Mat(f[1]), Mat(f[0]));
        Mat rebuilt = Eigen::kroneckerProduct(Mat(f[2]), low);
        EXPECT_LT(phase_min_distance(rebuilt, u).distance, 1e-7);

        Mat e = haar(8, rng);
        ProductTest q = is_product_of_single_qubit(e);
        EXPECT_FALSE(q.factors);
        EXPECT_GT(q.max_schmidt_ratio, 10 * 1e-7);
    }
}

TEST(Numeric, SimulationLimits) {
    EXPECT_ANY_THROW(numeric_simulate(parse_circuit("qubits 1\ng 0\n")));
}

}  // namespace
