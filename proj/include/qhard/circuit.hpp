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

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qhard {

enum class GateKind : uint8_t { X, H, S, SDG, T, TDG, CX, CZ, CCX, G, GDG };

inline constexpr size_t kNumGateKinds = 11;

std::string_view mnemonic(GateKind kind);
size_t arity(GateKind kind);
GateKind inverse(GateKind kind);

/// Bit set of gate kinds, used by the as-written cost metrics.
class GateSet {
   public:
    constexpr GateSet() = default;
    constexpr GateSet(std::initializer_list<GateKind> kinds) {
        for (GateKind k : kinds) bits_ |= 1u << static_cast<unsigned>(k);
    }
    constexpr bool contains(GateKind kind) const {
        return (bits_ >> static_cast<unsigned>(kind)) & 1;
    }
    static constexpr GateSet all() {
        GateSet s;
        s.bits_ = (1u << kNumGateKinds) - 1;
        return s;
    }

   private:
    uint32_t bits_ = 0;
};

inline constexpr GateSet kTGates{GateKind::T, GateKind::TDG};
inline constexpr GateSet kHadamardGates{GateKind::H};
inline constexpr GateSet kEntanglingGates{GateKind::CX, GateKind::CZ, GateKind::CCX};
inline constexpr GateSet kToffoliGates{GateKind::CCX};
inline constexpr GateSet kNonCliffordResourceGates{GateKind::G, GateKind::GDG};

struct Gate {
    GateKind kind;
    std::array<uint32_t, 3> wires{};

    Gate(GateKind kind, std::initializer_list<uint32_t> operands);
    Gate(GateKind kind, std::span<const uint32_t> operands);

    std::span<const uint32_t> operands() const {
        return {wires.data(), arity(kind)};
    }
    bool acts_on(uint32_t wire) const;
    bool operator==(const Gate &other) const;
};

enum class WireRole : uint8_t { Input, Target, AncillaBorrowed, AncillaClean };

std::string_view role_tag(WireRole role);
WireRole parse_role_tag(std::string_view tag);

/// Ordered gate list over a fixed set of wires. Wire 0 is the least significant bit of a basis index.
class Circuit {
   public:
    explicit Circuit(uint32_t num_wires = 0);

    uint32_t num_wires() const {
        return num_wires_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    size_t size() const {
        return gates_.size();
    }
    const std::vector<WireRole> &roles() const {
        return roles_;
    }
    const std::string &name() const {
        return name_;
    }

    /// Appends after validating operand range and distinctness.
    Circuit &append(const Gate &gate);
    Circuit &append(GateKind kind, std::initializer_list<uint32_t> operands);
    /// Appends every gate of `other`, relabelling its wire w to `wire_map[w]`.
    Circuit &append(const Circuit &other, std::span<const uint32_t> wire_map);
    Circuit &append(const Circuit &other);

    void set_roles(std::vector<WireRole> roles);
    void set_role(uint32_t wire, WireRole role);
    void set_name(std::string name) {
        name_ = std::move(name);
    }

    bool operator==(const Circuit &other) const;

   private:
    uint32_t num_wires_;
    std::vector<Gate> gates_;
    std::vector<WireRole> roles_;
    std::string name_;
};

Circuit parse_circuit(std::string_view text);
std::string emit_circuit(const Circuit &circuit);

/// Number of gates whose kind is in `kinds`.
size_t count(const Circuit &circuit, GateSet kinds);

/// Greedy ASAP layering over all gates; returns how many layers hold a gate from `kinds`.
size_t depth(const Circuit &circuit, GateSet kinds);

Circuit invert(const Circuit &circuit);

/// A concrete single-qubit matrix standing in for the `g` placeholder gate.
class GateDefinition {
   public:
    using Matrix2 = std::array<std::complex<double>, 4>;  // row-major

    /// Validates unitarity (1e-12) and classifies against the 24 single-qubit Cliffords.
    GateDefinition(std::string label, const Matrix2 &matrix);

    const std::string &label() const {
        return label_;
    }
    const Matrix2 &matrix() const {
        return matrix_;
    }
    Matrix2 adjoint_matrix() const;
    bool is_non_clifford() const {
        return non_clifford_;
    }
    /// Stable hex digest of label and matrix, used as a cache key.
    std::string digest() const;

    nlohmann::json to_json() const;
    static GateDefinition from_json(const nlohmann::json &j);

    /// sqrt(T) = diag(1, e^{i pi/8}).
    static GateDefinition sqrt_t();
    /// Rotation by `angle` about a fixed non-axis direction; non-Clifford for generic angles.
    static GateDefinition generic_rotation(double angle);

   private:
    std::string label_;
    Matrix2 matrix_;
    bool non_clifford_;
};

/// Phase-invariant membership test against the 24 single-qubit Cliffords.
bool is_single_qubit_clifford(const GateDefinition::Matrix2 &matrix, double tol = 1e-9);

}  // namespace qhard
