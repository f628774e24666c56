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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qhard {

/// Largest variable count accepted by the exhaustive analyses (truth tables, brute force).
inline constexpr uint32_t kMaxTableVars = 20;
/// Variable indices at or above this are rejected by the parsers.
inline constexpr uint32_t kMaxVariableIndex = 1u << 16;

/// Syntax error raised by the formula and DIMACS parsers. `position()` is a byte offset.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &message, size_t position);
    size_t position() const noexcept {
        return position_;
    }

   private:
    size_t position_;
};

/// Immutable Boolean formula. Nodes are shared between copies.
///
/// Assignments are little-endian throughout the project: bit i of an assignment index is the value of
/// variable x_i.
class BoolExpr {
   public:
    enum class Kind { Var, Const, Not, And, Or, Xor };

    static BoolExpr variable(uint32_t index);
    static BoolExpr constant(bool value);
    static BoolExpr negation(BoolExpr operand);
    static BoolExpr conjunction(std::vector<BoolExpr> operands);
    static BoolExpr disjunction(std::vector<BoolExpr> operands);
    static BoolExpr exclusive_or(std::vector<BoolExpr> operands);

    Kind kind() const;
    /// Variable index; only meaningful for Kind::Var.
    uint32_t index() const;
    /// Constant value; only meaningful for Kind::Const.
    bool value() const;
    std::span<const BoolExpr> children() const;

    /// v: one more than the largest variable index, or the declared count if larger.
    uint32_t num_vars() const {
        return num_vars_;
    }
    /// Same expression with an explicitly declared (not smaller) variable count.
    BoolExpr with_num_vars(uint32_t num_vars) const;

    bool evaluate(uint64_t assignment) const;
    bool evaluate(std::span<const uint8_t> bits) const;

    /// Re-parseable text in the formula grammar.
    std::string to_string() const;

   private:
    struct Node;
    BoolExpr(std::shared_ptr<const Node> node, uint32_t num_vars);

    std::shared_ptr<const Node> node_;
    uint32_t num_vars_ = 0;
};

struct TruthTable {
    uint32_t num_vars = 0;
    /// bits[i] = f(assignment i); size is exactly 2^num_vars.
    std::vector<uint8_t> bits;

    bool is_constant() const;
    bool operator==(const TruthTable &other) const = default;
};

struct WitnessPair {
    std::vector<uint8_t> z1;  // f(z1) = 1
    std::vector<uint8_t> z2;  // f(z2) = 0
};

/// Returned by find_witness_pair when f has no witness pair.
struct ConstantFunction {
    bool value;
};

BoolExpr parse_expr(std::string_view text);
BoolExpr parse_dimacs(std::string_view text);

TruthTable truth_table(const BoolExpr &f);

/// Least satisfying assignment by little-endian index, or nullopt when f is unsatisfiable.
std::optional<std::vector<uint8_t>> brute_sat(const BoolExpr &f);

/// z1 is the least index with f = 1 and z2 the least index with f = 0.
std::variant<WitnessPair, ConstantFunction> find_witness_pair(const BoolExpr &f);

/// Bit vector of length `num_bits` holding the little-endian digits of `index`.
std::vector<uint8_t> assignment_bits(uint64_t index, uint32_t num_bits);
uint64_t assignment_index(std::span<const uint8_t> bits);

}  // namespace qhard
