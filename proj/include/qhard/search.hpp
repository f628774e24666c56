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

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qhard/circuit.hpp"
#include "qhard/clifford.hpp"
#include "qhard/exact.hpp"

namespace qhard {

struct SearchBudget {
    uint32_t k_max = 6;
    uint64_t node_cap = 100'000'000;
    double time_cap_seconds = 300;
};

struct CountResult {
    enum class Status { Found, Exceeds, CapExhausted };
    Status status = Status::Found;
    /// Minimal count when status is Found.
    uint32_t count = 0;
    /// Canonicalized nodes processed.
    uint64_t nodes = 0;

    bool found() const {
        return status == Status::Found;
    }
};

std::string_view status_name(CountResult::Status status);

/// The rotations ((1 + w) I + (1 - w) P) / 2 over signed non-identity Paulis P: conjugates of T by Cliffords.
std::vector<ExactUnitary> pauli_rotations(uint32_t n);

/// Key of the left coset CW over the Clifford group C: the channel matrix tr(P W Q W^dagger) / 2^n with
/// each row replaced by the larger of itself and its negation, then rows sorted. Left Clifford factors only
/// permute rows and flip their signs, so the key is constant on cosets; equal keys are confirmed exactly.
std::vector<RingElement> clifford_coset_key(const ExactUnitary &w);

/// Meet-in-the-middle minimal T-count for one- and two-qubit unitaries.
///
/// Cosets with T-count up to h are tabulated breadth-first over Pauli rotations. U has T-count at most
/// a + b iff some tabulated representative r of level a puts U r^dagger in a coset of level b.
class TCountSearch {
   public:
    explicit TCountSearch(std::shared_ptr<const CliffordCatalog> catalog);

    CountResult min_tcount(const ExactUnitary &u, const SearchBudget &budget);

    /// Number of tabulated cosets per level so far.
    std::vector<size_t> level_sizes() const;

   private:
    struct Entry {
        ExactUnitary rep;
        uint32_t level;
    };
    struct KeyHash {
        size_t operator()(const std::vector<RingElement> &key) const;
    };
    /// Extends the table through `level`; false when a cap is hit first.
    bool extend_to(uint32_t level, const SearchBudget &budget, uint64_t &nodes,
                   std::chrono::steady_clock::time_point deadline);
    std::optional<uint32_t> lookup(const ExactUnitary &w, uint64_t &nodes) const;

    std::shared_ptr<const CliffordCatalog> catalog_;
    std::vector<ExactUnitary> rotations_;
    std::vector<Entry> entries_;
    std::vector<size_t> level_begin_;
    std::unordered_map<std::vector<RingElement>, std::vector<size_t>, KeyHash> table_;
};

CountResult exact_min_tcount(const ExactUnitary &u, std::shared_ptr<const CliffordCatalog> catalog,
                             const SearchBudget &budget = {});

/// Independent reference: n = 1 by breadth-first search over group elements C T C T ... C, n = 2 by
/// enumerating every product of at most k_max Pauli rotations. Intended for k_max <= 4 (n = 1) and
/// k_max <= 3 (n = 2).
CountResult naive_min_tcount(const ExactUnitary &u, const CliffordCatalog &catalog, uint32_t k_max);

/// The group generated by {T_i, S_i, CX_ij} modulo global phase, for n <= 2.
class HFreeCatalog {
   public:
    HFreeCatalog(uint32_t n, std::vector<ExactUnitary> elements);

    uint32_t num_qubits() const {
        return n_;
    }
    const std::vector<ExactUnitary> &elements() const {
        return elements_;
    }
    size_t size() const {
        return elements_.size();
    }
    bool contains(const ExactUnitary &u) const;

   private:
    uint32_t n_;
    std::vector<ExactUnitary> elements_;
    std::unordered_map<ExactUnitary, size_t, ExactUnitaryHash> index_;
};

/// Fixed-point closure from `seed` (the identity by default) under the H-free generators.
HFreeCatalog hfree_closure(uint32_t n, const std::vector<ExactUnitary> &seed = {});

/// Left-coset key over generalized permutations with eighth-root phases: rows rotated so their first
/// nonzero entry is canonical, then sorted.
std::vector<RingElement> monomial_coset_key(const ExactUnitary &w);

/// Minimal H-count over {H, T, S, CX} for n <= 2, by meet in the middle over H-free cosets.
class HCountSearch {
   public:
    explicit HCountSearch(std::shared_ptr<const HFreeCatalog> catalog);

    CountResult min_hcount(const ExactUnitary &u, const SearchBudget &budget);

   private:
    struct Entry {
        ExactUnitary rep;
        uint32_t level;
    };
    struct KeyHash {
        size_t operator()(const std::vector<RingElement> &key) const;
    };
    bool extend_to(uint32_t level, const SearchBudget &budget, uint64_t &nodes,
                   std::chrono::steady_clock::time_point deadline);
    std::optional<uint32_t> lookup(const ExactUnitary &w, uint64_t &nodes) const;

    std::shared_ptr<const HFreeCatalog> catalog_;
    /// Distinct V^dagger H_i V over V in the catalog: one step of the coset walk.
    std::vector<ExactUnitary> steps_;
    std::vector<Entry> entries_;
    std::vector<size_t> level_begin_;
    std::unordered_map<std::vector<RingElement>, std::vector<size_t>, KeyHash> table_;
};

CountResult exact_min_hcount(const ExactUnitary &u, std::shared_ptr<const HFreeCatalog> catalog,
                             const SearchBudget &budget = {});

/// perm[x] is the image of basis state x.
using Permutation = std::vector<uint32_t>;

/// Permutation of a classical circuit over {x, cx, ccx}; throws on other gates.
Permutation permutation_of(const Circuit &circuit);
/// Permutation of a 0/1 permutation matrix, or nullopt.
std::optional<Permutation> permutation_of(const ExactUnitary &u);

bool is_bijection(const Permutation &perm);

/// perm(x) = A x ^ b over GF(2), with b = perm(0) and column i of A equal to perm(e_i) ^ b.
bool is_linear_reversible(const Permutation &perm);

/// Minimal number of CCX gates in a circuit over {x, cx, ccx} realizing perm, for at most three wires.
/// Breadth-first over left cosets of the affine group; throws std::length_error for more wires.
CountResult exact_min_tofcount(const Permutation &perm, const SearchBudget &budget = {});

/// Reference: 0-1 breadth-first search over all permutations with free affine generators.
CountResult naive_min_tofcount(const Permutation &perm, uint32_t k_max);

}  // namespace qhard
