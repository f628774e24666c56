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

#include "qhard/report.hpp"

#include "qhard/clifford.hpp"
#include "qhard/exact.hpp"
#include "qhard/numeric.hpp"

#include <stdexcept>

namespace qhard {

namespace {

constexpr uint32_t kExactWireLimit = 8;
constexpr uint32_t kNumericWireLimit = 10;

template <typename T>
nlohmann::json optional_json(const std::optional<T> &v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json AnalysisReport::to_json() const {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["qubits"] = qubits;
    j["counts"] = {{"t", t}, {"h", h}, {"cx", cx}, {"cz", cz}, {"ccx", ccx}};
    j["t_depth"] = t_depth;
    j["is_clifford"] = optional_json(is_clifford);
    j["is_identity"] = optional_json(is_identity);
    j["phase_exponent"] = optional_json(phase_exponent);
    j["is_generalized_permutation"] = optional_json(is_generalized_permutation);
    j["is_product"] = optional_json(is_product);
    j["nearest_clifford_distance"] = optional_json(nearest_clifford_distance);
    return j;
}

AnalysisReport analyze(const Circuit &circuit, const AnalysisOptions &options) {
    AnalysisReport r;
    r.qubits = circuit.num_wires();
    r.t = count(circuit, GateSet{GateKind::T, GateKind::TDG});
    r.h = count(circuit, GateSet{GateKind::H});
    r.cx = count(circuit, GateSet{GateKind::CX});
    r.cz = count(circuit, GateSet{GateKind::CZ});
    r.ccx = count(circuit, GateSet{GateKind::CCX});
    r.t_depth = depth(circuit, GateSet{GateKind::T, GateKind::TDG});

    const bool has_placeholder = count(circuit, kNonCliffordResourceGates) > 0;
    if (has_placeholder && !options.gate) throw std::invalid_argument("circuit uses g/gdg but no gate definition was given");

    if (!has_placeholder && r.qubits <= kExactWireLimit) {
        ExactUnitary u = exact_simulate(circuit);
        r.is_clifford = is_clifford_exact(u);
        r.phase_exponent = equal_up_to_phase(u, ExactUnitary::identity(u.dim()));
        r.is_identity = r.phase_exponent.has_value();
        r.is_generalized_permutation = is_generalized_permutation(u);
    }
    if (r.qubits <= kNumericWireLimit) {
        NumericUnitary u = numeric_simulate(circuit, options.gate);
        r.is_product = is_product_of_single_qubit(u).factors.has_value();
        if (r.qubits >= 1 && r.qubits <= options.nearest_clifford_max_qubits) {
            auto catalog = load_clifford_catalog(r.qubits, options.cache_dir);
            if (auto nearest = nearest_clifford_distance(u, *catalog)) r.nearest_clifford_distance = nearest->distance;
        }
    }
    return r;
}

}  // namespace qhard
