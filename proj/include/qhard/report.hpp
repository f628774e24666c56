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
#include <optional>

#include "json.hpp"
#include "qhard/circuit.hpp"

namespace qhard {

inline constexpr int kReportSchema = 1;

struct AnalysisOptions {
    /// Resolves g/gdg gates; circuits using them get numeric fields only.
    const GateDefinition *gate = nullptr;
    std::filesystem::path cache_dir = ".cache";
    /// The catalog scan is skipped above this many qubits.
    uint32_t nearest_clifford_max_qubits = 2;
};

struct AnalysisReport {
    uint32_t qubits = 0;
    size_t t = 0, h = 0, cx = 0, cz = 0, ccx = 0;
    size_t t_depth = 0;
    /// Exact properties; absent when the circuit has placeholder gates or too many wires.
    std::optional<bool> is_clifford;
    std::optional<bool> is_identity;
    std::optional<int> phase_exponent;
    std::optional<bool> is_generalized_permutation;
    std::optional<bool> is_product;
    std::optional<double> nearest_clifford_distance;

    nlohmann::json to_json() const;
};

AnalysisReport analyze(const Circuit &circuit, const AnalysisOptions &options = {});

}  // namespace qhard
