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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qhard/boolfn.hpp"
#include "qhard/circuit.hpp"
#include "qhard/sk.hpp"

namespace qhard {

inline constexpr uint32_t kMaxAnfVars = 12;
inline constexpr uint32_t kMaxOracleVars = 4;

/// f(x) = constant ^ XOR over monomials of AND_{i in m} x_i. Monomials are listed by ascending bit mask.
struct Anf {
    uint32_t num_vars = 0;
    bool constant = false;
    std::vector<std::vector<uint32_t>> monomials;
};

Anf anf(const BoolExpr &f);

/// Multi-controlled X with 0 to 4 controls. Three or more controls need `borrowed`, a wire outside the
/// controls and target whose value is arbitrary and is restored.
void append_mcx(Circuit &circuit, std::span<const uint32_t> controls, uint32_t target,
                std::optional<uint32_t> borrowed = std::nullopt);

/// U_f |x, y, w> = |x, y ^ f(x), w> for every value of the borrowed wires w.
struct OracleCircuit {
    Circuit circuit;
    std::vector<uint32_t> inputs;
    uint32_t target = 0;
    std::vector<uint32_t> borrowed;
};

/// Oracle on wires 0..v-1 (inputs) and v (target); wire v + 1 is added as a borrowed wire only when some
/// monomial covers every input and has at least three variables.
OracleCircuit synth_oracle(const BoolExpr &f);

enum class Variant { T, TOF, ENT, H, G };

std::string_view variant_name(Variant variant);
/// Accepts "t", "tof", "ent", "h", "g".
Variant parse_variant(std::string_view name);

/// Inputs for the G variant: the Clifford+G net (which carries the gate definition) and the error budget.
struct GVariantOptions {
    const BaseNet *net = nullptr;
    double epsilon = 0;
};

struct ReductionInstance {
    Variant variant = Variant::T;
    Circuit circuit;
    std::vector<uint32_t> inputs;
    /// The wire y.
    uint32_t target = 0;
    /// TOF variant: oracle target a and output z.
    std::optional<uint32_t> oracle_target;
    std::optional<uint32_t> output;
    std::vector<uint32_t> borrowed;
    std::variant<WitnessPair, ConstantFunction> witness;
    /// G variant only.
    std::optional<double> epsilon;
    std::optional<GateDefinition> gate;
    /// G variant: the Clifford+T circuit that was translated, and the summed per-word error.
    std::optional<Circuit> clifford_t_circuit;
    std::optional<double> translation_error;

    /// {schema, variant, roles, witness, epsilon}.
    nlohmann::json sidecar() const;
};

ReductionInstance build_reduction(const BoolExpr &f, Variant variant, const GVariantOptions *g = nullptr);

/// Answers "does C_f have zero cost" for the variant's cost measure.
using ZeroCostOracle = std::function<bool(const ReductionInstance &, nlohmann::json &evidence)>;

/// The built-in oracle per variant: exact Cliffordness (T, TOF, ENT), generalized-permutation test (H) and
/// the approximate Clifford test at the instance's epsilon (G).
ZeroCostOracle default_oracle(Variant variant);

struct SatDecision {
    bool satisfiable = false;
    /// Ordered steps with their inputs and outcomes.
    nlohmann::json trace;
};

SatDecision decide_sat(const BoolExpr &f, Variant variant, const GVariantOptions *g = nullptr);
SatDecision decide_sat(const BoolExpr &f, Variant variant, const ZeroCostOracle &oracle,
                       const GVariantOptions *g = nullptr);

}  // namespace qhard
