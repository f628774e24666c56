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

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qhard/circuit.hpp"
#include "qhard/exact.hpp"
#include "qhard/numeric.hpp"

namespace qhard {

class NonCliffordGateError : public std::invalid_argument {
   public:
    NonCliffordGateError(size_t gate_index, GateKind kind);
    size_t gate_index() const {
        return gate_index_;
    }

   private:
    size_t gate_index_;
};

/// Conjugation action U P U^dagger of a Clifford U on the generators X_0..X_{n-1}, Z_0..Z_{n-1}.
///
/// Row i holds the image of X_i and row n + i the image of Z_i, each as a PauliOperator i^p X^x Z^z. Images
/// of Hermitian generators are Hermitian, so p + |x & z| is always even and the row sign is well defined.
class CliffordTableau {
   public:
    /// Identity tableau on n qubits.
    explicit CliffordTableau(uint32_t n = 0);

    /// Builds a tableau from the images of X_i and Z_i. Throws if the images are not Hermitian or violate
    /// the commutation relations.
    static CliffordTableau from_images(std::vector<PauliOperator> x_images, std::vector<PauliOperator> z_images);

    uint32_t num_qubits() const {
        return n_;
    }
    const PauliOperator &x_image(uint32_t q) const {
        return rows_[q];
    }
    const PauliOperator &z_image(uint32_t q) const {
        return rows_[n_ + q];
    }
    const PauliOperator &row(size_t r) const {
        return rows_[r];
    }
    /// Bits of row r in the (x, z) symplectic layout, plus the sign of the row written with X/Y/Z letters.
    bool x_bit(size_t r, uint32_t q) const {
        return rows_[r].x[q];
    }
    bool z_bit(size_t r, uint32_t q) const {
        return rows_[r].z[q];
    }
    bool sign(size_t r) const;

    /// Left-multiplies the represented Clifford by a Clifford gate. Throws NonCliffordGateError otherwise.
    void apply(const Gate &gate);

    /// U P U^dagger for an arbitrary Pauli P.
    PauliOperator conjugate(const PauliOperator &p) const;

    /// Tableau of next * this (this applied first).
    CliffordTableau then(const CliffordTableau &next) const;

    /// Hermitian rows with the symplectic commutation pattern of the generators.
    bool is_valid() const;

    bool operator==(const CliffordTableau &other) const = default;

   private:
    uint32_t n_;
    std::vector<PauliOperator> rows_;
};

/// Product i^{p+q} (-1)^{z_a . x_b} X^{x_a ^ x_b} Z^{z_a ^ z_b}.
PauliOperator pauli_product(const PauliOperator &a, const PauliOperator &b);

/// True when the two Paulis commute.
bool paulis_commute(const PauliOperator &a, const PauliOperator &b);

CliffordTableau tableau_simulate(const Circuit &circuit);

/// Tableau of a Clifford unitary, or nullopt when it is not Clifford.
std::optional<CliffordTableau> tableau_of_unitary(const ExactUnitary &u);

/// Gate budget of canonical_circuit is at most kCanonicalGateFactor * n^2.
inline constexpr size_t kCanonicalGateFactor = 14;

/// Circuit over {h, s, sdg, cx, x} whose tableau equals `t`. Uses at most 3n^2 + 11n gates.
Circuit canonical_circuit(const CliffordTableau &t);

/// The Clifford group on n <= 2 qubits modulo global phase, one phase-canonical representative per class.
class CliffordCatalog {
   public:
    CliffordCatalog(uint32_t n, std::vector<ExactUnitary> elements);

    uint32_t num_qubits() const {
        return n_;
    }
    const std::vector<ExactUnitary> &elements() const {
        return elements_;
    }
    size_t size() const {
        return elements_.size();
    }
    const NumericUnitary &numeric(size_t index) const {
        return numeric_[index];
    }
    /// Index of the representative phase-equivalent to u.
    std::optional<size_t> find(const ExactUnitary &u) const;
    bool contains(const ExactUnitary &u) const {
        return find(u).has_value();
    }

    nlohmann::json to_json() const;
    static CliffordCatalog from_json(const nlohmann::json &j);

   private:
    uint32_t n_;
    std::vector<ExactUnitary> elements_;
    std::vector<NumericUnitary> numeric_;
    std::unordered_map<ExactUnitary, size_t, ExactUnitaryHash> index_;
};

/// Breadth-first closure of {H_i, S_i, CX_ij}; 24 elements for n = 1 and 11520 for n = 2.
CliffordCatalog enumerate_clifford_group(uint32_t n);

/// Loads `clifford_n<n>.json` from the cache directory, building and writing it when absent.
std::shared_ptr<const CliffordCatalog> load_clifford_catalog(uint32_t n, const std::filesystem::path &cache_dir);

/// Generators of the closure, in the order used by the breadth-first search.
std::vector<Gate> clifford_generators(uint32_t n);

struct NearestClifford {
    double distance = 0;
    double alpha = 0;
    size_t index = 0;
    ExactUnitary witness;
};

/// Nearest catalog element under phase_min_distance. `accept` restricts the scan; ties keep the first
/// element in catalog order. Returns nullopt only when `accept` rejects everything.
std::optional<NearestClifford> nearest_clifford_distance(const NumericUnitary &u, const CliffordCatalog &catalog,
                                                         const std::function<bool(const ExactUnitary &)> &accept = {});

/// Decides whether W lies within eps of some global-phase multiple of a Clifford, for any qubit count.
///
/// Every Pauli generator P is pushed through W P W^dagger and rounded to the nearest signed Pauli; a
/// candidate Clifford V is resynthesized from the rounded images and the answer is
/// phase_min_distance(W, V) <= eps. Since distinct signed Paulis are at least sqrt(2) apart, any Clifford
/// within eps must have exactly those images when eps < sqrt(2) / 4, so the test is exact in that range.
struct ApproximateCliffordTest {
    bool within = false;
    /// Distance to the candidate Clifford; infinity when no candidate exists.
    double distance = 0;
    std::optional<CliffordTableau> candidate;
};
ApproximateCliffordTest approximate_clifford_test(const NumericUnitary &w, double eps);

}  // namespace qhard
