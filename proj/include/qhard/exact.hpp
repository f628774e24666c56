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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qhard/circuit.hpp"
#include "qhard/ring.hpp"

namespace qhard {

inline constexpr uint32_t kMaxExactQubits = 10;

/// Dense square matrix over Z[w, 1/sqrt(2)]. Used for circuit unitaries and for intermediate products.
class ExactUnitary {
   public:
    ExactUnitary() = default;
    /// Zero matrix of the given dimension.
    explicit ExactUnitary(size_t dim);
    static ExactUnitary identity(size_t dim);

    size_t dim() const {
        return dim_;
    }
    /// log2(dim); throws if dim is not a power of two.
    uint32_t num_qubits() const;

    const RingElement &operator()(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    RingElement &operator()(size_t row, size_t col) {
        return entries_[row * dim_ + col];
    }

    ExactUnitary operator*(const ExactUnitary &other) const;
    ExactUnitary adjoint() const;
    ExactUnitary times_omega(int k) const;
    bool operator==(const ExactUnitary &other) const = default;

    /// this <- gate * this.
    void apply_left(const Gate &gate);
    /// this <- this * gate.
    void apply_right(const Gate &gate);

    bool is_identity() const;
    bool is_diagonal() const;
    /// U^dagger U == I, exactly.
    bool is_unitary() const;

    /// Lexicographic comparison of the entries in row-major order.
    bool lex_less(const ExactUnitary &other) const;
    size_t hash() const;

    /// Rows of [a, b, c, d, k] tuples; coefficients beyond 64 bits are written as decimal strings.
    nlohmann::json to_json() const;
    static ExactUnitary from_json(const nlohmann::json &j);

   private:
    size_t dim_ = 0;
    std::vector<RingElement> entries_;
};

/// Hash adaptor for unordered containers.
struct ExactUnitaryHash {
    size_t operator()(const ExactUnitary &u) const {
        return u.hash();
    }
};

/// i^phase * X^x Z^z, with X^x Z^z |b> = (-1)^{z.b} |b xor x>.
struct PauliOperator {
    int phase = 0;
    std::vector<uint8_t> x;
    std::vector<uint8_t> z;

    static PauliOperator identity(uint32_t n);
    static PauliOperator x_on(uint32_t n, uint32_t wire);
    static PauliOperator z_on(uint32_t n, uint32_t wire);
    /// X on every wire whose bit is set in `mask`.
    static PauliOperator x_mask(uint32_t n, uint64_t mask);

    uint32_t num_qubits() const {
        return static_cast<uint32_t>(x.size());
    }
    uint64_t x_mask_bits() const;
    uint64_t z_mask_bits() const;
    ExactUnitary to_matrix() const;
    std::string to_string() const;
    bool operator==(const PauliOperator &other) const = default;
};

/// Diagonal entries w^{e(x)}; exponents mod 8 indexed by basis state.
struct PhaseProfile {
    std::vector<int> exponents;
    bool operator==(const PhaseProfile &other) const = default;
};

ExactUnitary exact_gate_matrix(const Gate &gate, uint32_t num_wires);

/// Product of the gate matrices in application order. Throws for g/gdg gates or more than 10 wires.
ExactUnitary exact_simulate(const Circuit &circuit);

/// k in [0, 8) with U = w^k V exactly, else nullopt.
std::optional<int> equal_up_to_phase(const ExactUnitary &u, const ExactUnitary &v);

/// The Pauli C^dagger P C, or nullopt when it is not a Pauli operator.
std::optional<PauliOperator> pauli_conjugate(const ExactUnitary &c, const PauliOperator &p);

/// Clifford iff every X_i and Z_i conjugates to a Pauli. Limited to 8 qubits.
bool is_clifford_exact(const ExactUnitary &c);

/// Exactly one nonzero per row and column, each an eighth root of unity.
bool is_generalized_permutation(const ExactUnitary &u);

/// Exponent vector of a diagonal unitary whose entries are eighth roots of unity.
std::optional<PhaseProfile> phase_profile(const ExactUnitary &u);

/// Diagonal Clifford test on the exponents relative to e(0): all even, mixed second differences divisible
/// by 4 and third differences divisible by 8.
bool is_clifford_phase_profile(const PhaseProfile &profile);

/// Canonical phase representative: the first nonzero entry is rotated by the power of w that makes it
/// lexicographically greatest, so for eighth roots of unity it becomes 1.
ExactUnitary phase_canonical(const ExactUnitary &u);

}  // namespace qhard
