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

#include "qhard/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qhard/clifford.hpp"
#include "qhard/exact.hpp"
#include "qhard/numeric.hpp"

namespace qhard {

namespace {

void check_borrowed(std::span<const uint32_t> controls, uint32_t target, uint32_t w) {
    if (w == target || std::find(controls.begin(), controls.end(), w) != controls.end()) {
        throw std::invalid_argument("borrowed wire must differ from controls and target");
    }
}

Circuit t_sandwich(const OracleCircuit &oracle) {
    Circuit c(oracle.circuit.num_wires());
    c.append(oracle.circuit);
    c.append(GateKind::T, {oracle.target});
    c.append(oracle.circuit);
    c.append(GateKind::TDG, {oracle.target});
    return c;
}

nlohmann::json witness_json(const std::variant<WitnessPair, ConstantFunction> &w) {
    if (auto *pair = std::get_if<WitnessPair>(&w)) return {{"z1", pair->z1}, {"z2", pair->z2}};
    return {{"constant", std::get<ConstantFunction>(w).value ? 1 : 0}};
}

}  // namespace

Anf anf(const BoolExpr &f) {
    if (f.num_vars() > kMaxAnfVars) throw std::length_error("ANF supports at most 12 variables");
    TruthTable table = truth_table(f);
    std::vector<uint8_t> coeffs = table.bits;
    // Moebius transform: XOR each entry into the ones above it along every axis.
    for (uint32_t i = 0; i < table.num_vars; i++) {
        for (size_t x = 0; x < coeffs.size(); x++) {
            if (x & (size_t{1} << i)) coeffs[x] ^= coeffs[x ^ (size_t{1} << i)];
        }
    }
    Anf result;
    result.num_vars = table.num_vars;
    result.constant = coeffs[0];
    for (size_t mask = 1; mask < coeffs.size(); mask++) {
        if (!coeffs[mask]) continue;
        std::vector<uint32_t> vars;
        for (uint32_t i = 0; i < table.num_vars; i++) {
            if (mask & (size_t{1} << i)) vars.push_back(i);
        }
        result.monomials.push_back(std::move(vars));
    }
    return result;
}

void append_mcx(Circuit &circuit, std::span<const uint32_t> controls, uint32_t target,
                std::optional<uint32_t> borrowed) {
    switch (controls.size()) {
        case 0:
            circuit.append(GateKind::X, {target});
            return;
        case 1:
            circuit.append(GateKind::CX, {controls[0], target});
            return;
        case 2:
            circuit.append(GateKind::CCX, {controls[0], controls[1], target});
            return;
        case 3: {
            if (!borrowed) throw std::invalid_argument("three controls need a borrowed wire");
            const uint32_t w = *borrowed;
            check_borrowed(controls, target, w);
            // target ^= (w ^ c0 c1) c2 ^ w c2 = c0 c1 c2, and w ends where it started.
            for (int rep = 0; rep < 2; rep++) {
                circuit.append(GateKind::CCX, {controls[0], controls[1], w});
                circuit.append(GateKind::CCX, {w, controls[2], target});
            }
            return;
        }
        case 4: {
            if (!borrowed) throw std::invalid_argument("four controls need a borrowed wire");
            const uint32_t w = *borrowed;
            check_borrowed(controls, target, w);
            // Same halving with a three-control gate on (w, c2, c3); c0 is free to be borrowed there.
            const std::array<uint32_t, 3> inner{w, controls[2], controls[3]};
            for (int rep = 0; rep < 2; rep++) {
                circuit.append(GateKind::CCX, {controls[0], controls[1], w});
                append_mcx(circuit, inner, target, controls[0]);
            }
            return;
        }
        default:
            throw std::invalid_argument("multi-controlled X supports at most four controls");
    }
}

OracleCircuit synth_oracle(const BoolExpr &f) {
    const uint32_t v = f.num_vars();
    if (v > kMaxOracleVars) throw std::length_error("oracle synthesis supports at most 4 variables");
    Anf poly = anf(f);

    bool needs_dedicated = false;
    for (const auto &m : poly.monomials) {
        if (m.size() >= 3 && m.size() == v) needs_dedicated = true;
    }
    OracleCircuit oracle{Circuit(v + 1 + (needs_dedicated ? 1 : 0)), {}, v, {}};
    for (uint32_t i = 0; i < v; i++) oracle.inputs.push_back(i);
    if (needs_dedicated) oracle.borrowed.push_back(v + 1);

    if (poly.constant) append_mcx(oracle.circuit, {}, oracle.target);
    for (const auto &m : poly.monomials) {
        std::optional<uint32_t> borrowed;
        if (m.size() >= 3) {
            for (uint32_t i = 0; i < v && !borrowed; i++) {
                if (std::find(m.begin(), m.end(), i) == m.end()) borrowed = i;
            }
            if (!borrowed) borrowed = v + 1;
        }
        append_mcx(oracle.circuit, m, oracle.target, borrowed);
    }

    std::vector<WireRole> roles(oracle.circuit.num_wires(), WireRole::Input);
    roles[oracle.target] = WireRole::Target;
    for (uint32_t w : oracle.borrowed) roles[w] = WireRole::AncillaBorrowed;
    oracle.circuit.set_roles(std::move(roles));
    oracle.circuit.set_name("oracle " + f.to_string());
    return oracle;
}

std::string_view variant_name(Variant variant) {
    switch (variant) {
        case Variant::T:
            return "t";
        case Variant::TOF:
            return "tof";
        case Variant::ENT:
            return "ent";
        case Variant::H:
            return "h";
        case Variant::G:
            return "g";
    }
    return "?";
}

Variant parse_variant(std::string_view name) {
    for (Variant v : {Variant::T, Variant::TOF, Variant::ENT, Variant::H, Variant::G}) {
        if (variant_name(v) == name) return v;
    }
    throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected t, tof, ent, h or g)");
}

nlohmann::json ReductionInstance::sidecar() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["variant"] = variant_name(variant);
    j["roles"] = nlohmann::json::array();
    for (WireRole r : circuit.roles()) j["roles"].push_back(role_tag(r));
    j["witness"] = witness_json(witness);
    j["epsilon"] = epsilon ? nlohmann::json(*epsilon) : nlohmann::json(nullptr);
    return j;
}

ReductionInstance build_reduction(const BoolExpr &f, Variant variant, const GVariantOptions *g) {
    OracleCircuit oracle = synth_oracle(f);
    const uint32_t v = f.num_vars();
    ReductionInstance inst;
    inst.variant = variant;
    inst.inputs = oracle.inputs;
    inst.witness = find_witness_pair(f);

    switch (variant) {
        case Variant::T:
        case Variant::ENT:
        case Variant::H:
        case Variant::G: {
            inst.target = oracle.target;
            inst.borrowed = oracle.borrowed;
            Circuit c = t_sandwich(oracle);
            if (variant == Variant::H) {
                Circuit h(c.num_wires());
                h.append(GateKind::H, {inst.target});
                h.append(c);
                h.append(GateKind::H, {inst.target});
                c = std::move(h);
            }
            if (variant == Variant::G) {
                if (g == nullptr || g->net == nullptr) throw std::invalid_argument("the g variant needs a gate net");
                if (!(g->epsilon > 0)) throw std::invalid_argument("the g variant needs a positive epsilon");
                Translation tr = translate_circuit(c, *g->net, g->epsilon);
                inst.clifford_t_circuit = std::move(c);
                c = std::move(tr.circuit);
                inst.epsilon = g->epsilon;
                inst.gate = g->net->gate();
                inst.translation_error = tr.error_bound;
            }
            c.set_roles(oracle.circuit.roles());
            inst.circuit = std::move(c);
            break;
        }
        case Variant::TOF: {
            // Wires: inputs, a (oracle target), y, z. The oracle's borrowed wire, if any, is z: U_f restores
            // it, so the construction stays within v + 3 wires.
            const uint32_t a = v, y = v + 1, z = v + 2;
            std::vector<uint32_t> wire_map(oracle.circuit.num_wires());
            for (uint32_t i = 0; i < v; i++) wire_map[i] = i;
            wire_map[oracle.target] = a;
            if (!oracle.borrowed.empty()) wire_map[oracle.borrowed[0]] = z;
            Circuit c(v + 3);
            c.append(oracle.circuit, wire_map);
            c.append(GateKind::CCX, {a, y, z});
            c.append(oracle.circuit, wire_map);
            c.append(GateKind::CCX, {a, y, z});
            std::vector<WireRole> roles(v + 3, WireRole::Input);
            roles[a] = WireRole::AncillaBorrowed;
            roles[y] = WireRole::Target;
            roles[z] = WireRole::Target;
            c.set_roles(std::move(roles));
            inst.target = y;
            inst.oracle_target = a;
            inst.output = z;
            if (!oracle.borrowed.empty()) inst.borrowed.push_back(z);
            inst.circuit = std::move(c);
            break;
        }
    }
    inst.circuit.set_name(std::string(variant_name(variant)) + " reduction of " + f.to_string());
    return inst;
}

ZeroCostOracle default_oracle(Variant variant) {
    switch (variant) {
        case Variant::T:
        case Variant::TOF:
            return [](const ReductionInstance &inst, nlohmann::json &evidence) {
                bool clifford = is_clifford_exact(exact_simulate(inst.circuit));
                evidence["oracle"] = "is_clifford_exact";
                evidence["is_clifford"] = clifford;
                return clifford;
            };
        case Variant::ENT:
            return [](const ReductionInstance &inst, nlohmann::json &evidence) {
                ExactUnitary u = exact_simulate(inst.circuit);
                bool clifford = is_clifford_exact(u);
                ProductTest product = is_product_of_single_qubit(to_numeric(u));
                evidence["oracle"] = "is_clifford_exact";
                evidence["is_clifford"] = clifford;
                evidence["is_product"] = product.factors.has_value();
                evidence["max_schmidt_ratio"] = product.max_schmidt_ratio;
                return clifford;
            };
        case Variant::H:
            return [](const ReductionInstance &inst, nlohmann::json &evidence) {
                bool gp = is_generalized_permutation(exact_simulate(inst.circuit));
                evidence["oracle"] = "is_generalized_permutation";
                evidence["is_generalized_permutation"] = gp;
                return gp;
            };
        case Variant::G:
            return [](const ReductionInstance &inst, nlohmann::json &evidence) {
                if (!inst.epsilon || !inst.gate) throw std::invalid_argument("g-variant instance lacks epsilon or gate");
                NumericUnitary w = numeric_simulate(inst.circuit, &*inst.gate);
                ApproximateCliffordTest test = approximate_clifford_test(w, *inst.epsilon);
                evidence["oracle"] = "approximate_clifford_test";
                evidence["epsilon"] = *inst.epsilon;
                evidence["within_epsilon"] = test.within;
                evidence["candidate_distance"] = std::isfinite(test.distance) ? nlohmann::json(test.distance)
                                                                                : nlohmann::json(nullptr);
                return test.within;
            };
    }
    throw std::logic_error("unhandled variant");
}

SatDecision decide_sat(const BoolExpr &f, Variant variant, const GVariantOptions *g) {
    return decide_sat(f, variant, default_oracle(variant), g);
}

SatDecision decide_sat(const BoolExpr &f, Variant variant, const ZeroCostOracle &oracle, const GVariantOptions *g) {
    if (variant == Variant::G && g != nullptr && !(g->epsilon < std::sin(std::numbers::pi / 16))) {
        throw std::invalid_argument("the g-variant decision needs epsilon < sin(pi/16)");
    }
    SatDecision d;
    d.trace = nlohmann::json::array();
    ReductionInstance inst = build_reduction(f, variant, g);
    nlohmann::json build{{"step", "build_reduction"},
                         {"variant", variant_name(variant)},
                         {"wires", inst.circuit.num_wires()},
                         {"gates", inst.circuit.size()}};
    if (inst.translation_error) build["translation_error_bound"] = *inst.translation_error;
    d.trace.push_back(std::move(build));

    nlohmann::json evidence;
    bool zero_cost = oracle(inst, evidence);
    evidence["step"] = "query_oracle";
    evidence["zero_cost"] = zero_cost;
    d.trace.push_back(std::move(evidence));

    if (!zero_cost) {
        d.satisfiable = true;
    } else if (variant == Variant::H) {
        // Zero H-count happens exactly for unsatisfiable f; no evaluation needed.
        d.satisfiable = false;
    } else {
        bool at_zero = f.evaluate(uint64_t{0});
        d.trace.push_back({{"step", "evaluate_f_at_zero"}, {"value", at_zero ? 1 : 0}});
        d.satisfiable = at_zero;
    }
    d.trace.push_back({{"step", "result"}, {"answer", d.satisfiable ? "SAT" : "UNSAT"}});
    return d;
}

}  // namespace qhard
