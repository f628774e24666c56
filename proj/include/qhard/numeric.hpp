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

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qhard/circuit.hpp"
#include "qhard/exact.hpp"

namespace qhard {

using NumericUnitary = Eigen::MatrixXcd;

class NonConvergenceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

NumericUnitary to_numeric(const ExactUnitary &u);

/// Dense simulation; g/gdg gates resolve against `gdef`, which must then be non-null.
NumericUnitary numeric_simulate(const Circuit &circuit, const GateDefinition *gdef = nullptr);

/// Largest singular value, from the top eigenvalue of M^dagger M. Throws NonConvergenceError when the
/// eigensolver fails to converge.
double operator_norm(const NumericUnitary &m);

struct PhaseDistance {
    double distance;
    /// Argmin of the phase, normalized to [0, 2 pi).
    double alpha;
};

/// min over alpha of ||U - e^{i alpha} V||, by a 512-point grid and golden-section refinement.
PhaseDistance phase_min_distance(const NumericUnitary &u, const NumericUnitary &v);

/// Lower bound on min_alpha ||U - e^{i alpha} V|| from entry moduli. Used to prune catalog scans.
double phase_distance_lower_bound(const NumericUnitary &u, const NumericUnitary &v);

struct ProductTest {
    /// Single-qubit factors indexed by wire, present when U is a product operator.
    std::optional<std::vector<Eigen::Matrix2cd>> factors;
    /// Largest ratio sigma_2 / sigma_1 of the per-wire operator-Schmidt decompositions.
    double max_schmidt_ratio = 0;
    /// Wire attaining that ratio.
    uint32_t worst_wire = 0;
};

/// Tests whether U is a tensor product of single-qubit unitaries, up to global phase.
ProductTest is_product_of_single_qubit(const NumericUnitary &u, double tol = 1e-7);

}  // namespace qhard
