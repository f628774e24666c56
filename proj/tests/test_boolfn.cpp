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
#include "qhard/boolfn.hpp"

namespace {

using namespace qhard;

TEST(BoolFn, ParsesContradiction) {
    BoolExpr f = parse_expr("x0 & ~x0");
    EXPECT_EQ(f.kind(), BoolExpr::Kind::And);
    EXPECT_EQ(f.num_vars(), 1u);
    ASSERT_EQ(f.children().size(), 2u);
    EXPECT_EQ(f.children()[1].kind(), BoolExpr::Kind::Not);
}

TEST(BoolFn, Evaluates) {
    EXPECT_FALSE(parse_expr("x0 ^ x1").evaluate(0b11));
    BoolExpr f = parse_expr("(x0 | x1) & ~x2");
    EXPECT_FALSE(f.evaluate(std::vector<uint8_t>{0, 0, 0}));
    EXPECT_TRUE(f.evaluate(std::vector<uint8_t>{1, 0, 0}));
}

TEST(BoolFn, Precedence) {
    // NOT binds tighter than AND, AND tighter than XOR, XOR tighter than OR.
    BoolExpr f = parse_expr("x0 | x1 ^ x2 & x3");
    for (uint64_t a = 0; a < 16; a++) {
        bool x0 = a & 1, x1 = a & 2, x2 = a & 4, x3 = a & 8;
        EXPECT_EQ(f.evaluate(a), x0 || (x1 != (x2 && x3))) << a;
    }
}

TEST(BoolFn, Dimacs) {
    EXPECT_EQ(truth_table(parse_dimacs("p cnf 1 1\n1 0")).bits, (std::vector<uint8_t>{0, 1}));
    BoolExpr unsat = parse_dimacs("p cnf 1 2\n1 0\n-1 0");
    EXPECT_FALSE(brute_sat(unsat).has_value());
    EXPECT_EQ(truth_table(parse_dimacs("p cnf 2 1\n1 -2 0")).bits, (std::vector<uint8_t>{1, 1, 0, 1}));
    EXPECT_EQ(parse_dimacs("c comment\np cnf 3 1\n1 0\n").num_vars(), 3u);
}

TEST(BoolFn, RejectsMalformed) {
    EXPECT_THROW(parse_expr("x0 &"), ParseError);
    EXPECT_THROW(parse_expr("(x0"), ParseError);
    EXPECT_THROW(parse_expr("y0"), ParseError);
    EXPECT_THROW(parse_dimacs("p cnf 1 1\n2 0"), ParseError);
}

TEST(BoolFn, TruthTables) {
    EXPECT_EQ(truth_table(parse_expr("x0")).bits, (std::vector<uint8_t>{0, 1}));
    EXPECT_EQ(truth_table(parse_expr("x0&x1")).bits, (std::vector<uint8_t>{0, 0, 0, 1}));
    EXPECT_EQ(truth_table(parse_expr("x0|~x0")).bits, (std::vector<uint8_t>{1, 1}));
}

TEST(BoolFn, BruteSat) {
    EXPECT_FALSE(brute_sat(parse_expr("x0&~x0")));
    EXPECT_EQ(*brute_sat(parse_expr("x0&x1")), (std::vector<uint8_t>{1, 1}));
    EXPECT_EQ(*brute_sat(parse_expr("x0|~x0")), (std::vector<uint8_t>{0}));
}

TEST(BoolFn, WitnessPairs) {
    auto w = std::get<WitnessPair>(find_witness_pair(parse_expr("x0")));
    EXPECT_EQ(w.z1, (std::vector<uint8_t>{1}));
    EXPECT_EQ(w.z2, (std::vector<uint8_t>{0}));
    EXPECT_TRUE(std::get<ConstantFunction>(find_witness_pair(parse_expr("x0|~x0"))).value);
    auto w2 = std::get<WitnessPair>(find_witness_pair(parse_expr("x0&x1")));
    EXPECT_EQ(w2.z1, (std::vector<uint8_t>{1, 1}));
    EXPECT_EQ(w2.z2, (std::vector<uint8_t>{0, 0}));
}

TEST(BoolFnProperty, RoundTripPreservesTruthTable) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; i++) {
        uint32_t v = 1 + rng() % 4;
        BoolExpr f = oracle::with_vars(oracle::random_formula(v, rng), v);
        BoolExpr g = parse_expr(f.to_string()).with_num_vars(v);
        EXPECT_EQ(truth_table(f), truth_table(g)) << f.to_string();
    }
}

TEST(BoolFnProperty, BruteSatMatchesTruthTable) {
    for (uint32_t v = 1; v <= 3; v++) {
        for (const BoolExpr &f : oracle::all_tables(v)) {
            auto tt = truth_table(f);
            bool any = std::find(tt.bits.begin(), tt.bits.end(), 1) != tt.bits.end();
            auto sat = brute_sat(f);
            ASSERT_EQ(sat.has_value(), any) << f.to_string();
            if (sat) {
                EXPECT_TRUE(f.evaluate(*sat));
            }
        }
    }
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; i++) {
        BoolExpr f = oracle::with_vars(oracle::random_formula(4, rng, 4), 4);
        bool any = false;
        for (uint64_t a = 0; a < 16; a++) any |= f.evaluate(a);
        EXPECT_EQ(brute_sat(f).has_value(), any);
    }
}

TEST(BoolFnProperty, WitnessNoneIffConstant) {
    for (uint32_t v = 1; v <= 3; v++) {
        for (const BoolExpr &f : oracle::all_tables(v)) {
            auto tt = truth_table(f);
            auto w = find_witness_pair(f);
            EXPECT_EQ(std::holds_alternative<ConstantFunction>(w), tt.is_constant());
            if (auto *p = std::get_if<WitnessPair>(&w)) {
                EXPECT_TRUE(f.evaluate(p->z1));
                EXPECT_FALSE(f.evaluate(p->z2));
            }
        }
    }
}

TEST(BoolFn, AssignmentBitsLittleEndian) {
    EXPECT_EQ(assignment_bits(6, 3), (std::vector<uint8_t>{0, 1, 1}));
    EXPECT_EQ(assignment_index(std::vector<uint8_t>{0, 1, 1}), 6u);
}

}  // namespace
