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

#include "qhard/circuit.hpp"

#include <algorithm>
#include <optional>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>



namespace qhard {

namespace {

constexpr std::array<std::string_view, kNumGateKinds> kMnemonics = {
    "x", "h", "s", "sdg", "t", "tdg", "cx", "cz", "ccx", "g", "gdg"};

}  // namespace

std::string_view mnemonic(GateKind kind) {
    return kMnemonics[static_cast<size_t>(kind)];
}

size_t arity(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CZ:
            return 2;
        case GateKind::CCX:
            return 3;
        default:
            return 1;
    }
}

GateKind inverse(GateKind kind) {
    switch (kind) {
        case GateKind::S:
            return GateKind::SDG;
        case GateKind::SDG:
            return GateKind::S;
        case GateKind::T:
            return GateKind::TDG;
        case GateKind::TDG:
            return GateKind::T;
        case GateKind::G:
            return GateKind::GDG;
        case GateKind::GDG:
            return GateKind::G;
        default:
            return kind;
    }
}

Gate::Gate(GateKind kind, std::initializer_list<uint32_t> operands)
    : Gate(kind, std::span<const uint32_t>(operands.begin(), operands.size())) {
}

Gate::Gate(GateKind kind, std::span<const uint32_t> operands) : kind(kind) {
    if (operands.size() != arity(kind)) {
        throw std::invalid_argument(
            "gate '" + std::string(mnemonic(kind)) + "' takes " + std::to_string(arity(kind)) + " operand(s)");
    }
    std::copy(operands.begin(), operands.end(), wires.begin());
}

bool Gate::acts_on(uint32_t wire) const {
    auto ops = operands();
    return std::find(ops.begin(), ops.end(), wire) != ops.end();
}

bool Gate::operator==(const Gate &other) const {
    return kind == other.kind && std::ranges::equal(operands(), other.operands());
}

std::string_view role_tag(WireRole role) {
    switch (role) {
        case WireRole::Input:
            return "input";
        case WireRole::Target:
            return "target";
        case WireRole::AncillaBorrowed:
            return "borrowed";
        case WireRole::AncillaClean:
            return "clean";
    }
    return "input";
}

WireRole parse_role_tag(std::string_view tag) {
    if (tag == "input") return WireRole::Input;
    if (tag == "target") return WireRole::Target;
    if (tag == "borrowed") return WireRole::AncillaBorrowed;
    if (tag == "clean") return WireRole::AncillaClean;
    throw std::invalid_argument("unknown wire role '" + std::string(tag) + "'");
}

Circuit::Circuit(uint32_t num_wires) : num_wires_(num_wires), roles_(num_wires, WireRole::Input) {
}

Circuit &Circuit::append(const Gate &gate) {
    auto ops = gate.operands();
    for (size_t i = 0; i < ops.size(); i++) {
        if (ops[i] >= num_wires_) {
            throw std::out_of_range(
                "gate '" + std::string(mnemonic(gate.kind)) + "' uses wire " + std::to_string(ops[i]) +
                " but the circuit has " + std::to_string(num_wires_));
        }
        for (size_t j = 0; j < i; j++) {
            if (ops[i] == ops[j]) {
                throw std::invalid_argument(
                    "gate '" + std::string(mnemonic(gate.kind)) + "' has duplicate operand " +
                    std::to_string(ops[i]));
            }
        }
    }
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(GateKind kind, std::initializer_list<uint32_t> operands) {
    return append(Gate(kind, operands));
}

Circuit &Circuit::append(const Circuit &other, std::span<const uint32_t> wire_map) {
    if (wire_map.size() != other.num_wires()) {
        throw std::invalid_argument("wire map size does not match the appended circuit");
    }
    for (const Gate &g : other.gates()) {
        Gate mapped = g;
        for (size_t i = 0; i < arity(g.kind); i++) {
            mapped.wires[i] = wire_map[g.wires[i]];
        }
        append(mapped);
    }
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_wires() > num_wires_) {
        throw std::invalid_argument("appended circuit has more wires");
    }
    for (const Gate &g : other.gates()) append(g);
    return *this;
}

void Circuit::set_roles(std::vector<WireRole> roles) {
    if (roles.size() != num_wires_) {
        throw std::invalid_argument("role list must name every wire exactly once");
    }
    roles_ = std::move(roles);
}

void Circuit::set_role(uint32_t wire, WireRole role) {
    roles_.at(wire) = role;
}

bool Circuit::operator==(const Circuit &other) const {
    return num_wires_ == other.num_wires_ && gates_ == other.gates_ && roles_ == other.roles_;
}

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        start = end + 1;
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

        std::istringstream in(line);
        std::string word;
        if (!(in >> word)) {
            if (end == text.size()) break;
            continue;
        }
        auto fail = [&](const std::string &msg) {
            return std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
        };

        if (!circuit) {
            long long n = -1;
            std::string extra;
            if (word != "qubits" || !(in >> n) || n < 0 || (in >> extra)) {
                throw fail("expected 'qubits <n>' as the first statement");
            }
            if (n > 64) throw fail("at most 64 wires are supported");
            circuit.emplace(static_cast<uint32_t>(n));
            continue;
        }
        if (word == "roles") {
            std::string list, extra;
            if (!(in >> list) || (in >> extra)) throw fail("expected 'roles <tag,...>'");
            std::vector<WireRole> roles;
            std::stringstream tags(list);
            std::string tag;
            while (std::getline(tags, tag, ',')) {
                try {
                    roles.push_back(parse_role_tag(tag));
                } catch (const std::invalid_argument &e) {
                    throw fail(e.what());
                }
            }
            if (roles.size() != circuit->num_wires()) throw fail("roles must list one tag per wire");
            circuit->set_roles(std::move(roles));
            continue;
        }

        auto it = std::find(kMnemonics.begin(), kMnemonics.end(), word);
        if (it == kMnemonics.end()) throw fail("unknown mnemonic '" + word + "'");
        auto kind = static_cast<GateKind>(it - kMnemonics.begin());
        std::vector<uint32_t> ops;
        std::string tok;
        while (in >> tok) {
            uint32_t w = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) throw fail("bad wire index '" + tok + "'");
            ops.push_back(w);
        }
        if (ops.size() != arity(kind)) {
            throw fail("'" + word + "' takes " + std::to_string(arity(kind)) + " operand(s)");
        }
        try {
            circuit->append(Gate(kind, std::span<const uint32_t>(ops)));
        } catch (const std::exception &e) {
            throw fail(e.what());
        }
    }
    if (!circuit) throw std::invalid_argument("empty circuit text: missing 'qubits <n>'");
    return std::move(*circuit);
}

std::string emit_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_wires() << "\n";
    bool trivial_roles = std::all_of(circuit.roles().begin(), circuit.roles().end(), [](WireRole r) {
        return r == WireRole::Input;
    });
    if (!trivial_roles && circuit.num_wires() > 0) {
        out << "roles ";
        for (uint32_t w = 0; w < circuit.num_wires(); w++) {
            out << (w ? "," : "") << role_tag(circuit.roles()[w]);
        }
        out << "\n";
    }
    if (!circuit.name().empty()) out << "# " << circuit.name() << "\n";
    for (const Gate &g : circuit.gates()) {
        out << mnemonic(g.kind);
        for (uint32_t w : g.operands()) out << ' ' << w;
        out << "\n";
    }
    return out.str();
}

size_t count(const Circuit &circuit, GateSet kinds) {
    return static_cast<size_t>(std::count_if(circuit.gates().begin(), circuit.gates().end(), [&](const Gate &g) {
        return kinds.contains(g.kind);
    }));
}

size_t depth(const Circuit &circuit, GateSet kinds) {
    std::vector<size_t> wire_layer(circuit.num_wires(), 0);
    std::vector<bool> layer_counts;  // index = layer - 1
    for (const Gate &g : circuit.gates()) {
        size_t layer = 0;
        for (uint32_t w : g.operands()) layer = std::max(layer, wire_layer[w]);
        layer += 1;
        for (uint32_t w : g.operands()) wire_layer[w] = layer;
        if (layer_counts.size() < layer) layer_counts.resize(layer, false);
        if (kinds.contains(g.kind)) layer_counts[layer - 1] = true;
    }
    return static_cast<size_t>(std::count(layer_counts.begin(), layer_counts.end(), true));
}

Circuit invert(const Circuit &circuit) {
    Circuit result(circuit.num_wires());
    result.set_roles(circuit.roles());
    result.set_name(circuit.name());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        Gate g = *it;
        g.kind = inverse(g.kind);
        result.append(g);
    }
    return result;
}

namespace {

using Matrix2 = GateDefinition::Matrix2;

Matrix2 mul2(const Matrix2 &a, const Matrix2 &b) {
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3]};
}

// |tr(A^dagger B)| / 2 equals 1 exactly when A and B agree up to a global phase.
double phase_overlap(const Matrix2 &a, const Matrix2 &b) {
    std::complex<double> t = std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2] +
                             std::conj(a[3]) * b[3];
    return std::abs(t) / 2.0;
}

const std::vector<Matrix2> &single_qubit_cliffords() {
    static const std::vector<Matrix2> group = [] {
        const double r = 1.0 / std::sqrt(2.0);
        const Matrix2 h{r, r, r, -r};
        const Matrix2 s{1.0, 0.0, 0.0, std::complex<double>(0, 1)};
        std::vector<Matrix2> elems{{1.0, 0.0, 0.0, 1.0}};
        for (size_t i = 0; i < elems.size(); i++) {
            for (const Matrix2 &g : {h, s}) {
                Matrix2 m = mul2(g, elems[i]);
                bool seen = std::any_of(elems.begin(), elems.end(), [&](const Matrix2 &e) {
                    return phase_overlap(e, m) > 1 - 1e-9;
                });
                if (!seen) elems.push_back(m);
            }
        }
        return elems;
    }();
    return group;
}

}  // namespace

bool is_single_qubit_clifford(const Matrix2 &matrix, double tol) {
    const auto &group = single_qubit_cliffords();
    return std::any_of(group.begin(), group.end(), [&](const Matrix2 &c) {
        return phase_overlap(c, matrix) > 1 - tol;
    });
}

GateDefinition::GateDefinition(std::string label, const Matrix2 &matrix) : label_(std::move(label)), matrix_(matrix) {
    Matrix2 product = mul2(adjoint_matrix(), matrix_);
    const Matrix2 identity{1.0, 0.0, 0.0, 1.0};
    for (size_t i = 0; i < 4; i++) {
        if (std::abs(product[i] - identity[i]) > 1e-12) {
            throw std::invalid_argument("gate definition '" + label_ + "' is not unitary within 1e-12");
        }
    }
    non_clifford_ = !is_single_qubit_clifford(matrix_);
}

Matrix2 GateDefinition::adjoint_matrix() const {
    return {std::conj(matrix_[0]), std::conj(matrix_[2]), std::conj(matrix_[1]), std::conj(matrix_[3])};
}

std::string GateDefinition::digest() const {
    // FNV-1a over the label and the matrix rounded to 1e-12.
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
        for (int i = 0; i < 8; i++) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (char c : label_) mix(static_cast<unsigned char>(c));
    for (const auto &z : matrix_) {
        mix(static_cast<uint64_t>(std::llround(z.real() * 1e12)));
        mix(static_cast<uint64_t>(std::llround(z.imag() * 1e12)));
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json GateDefinition::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto &z : matrix_) entries.push_back({z.real(), z.imag()});
    return {{"label", label_}, {"matrix", entries}};
}

GateDefinition GateDefinition::from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("label") || !j.contains("matrix")) {
        throw std::invalid_argument("gate definition JSON needs 'label' and 'matrix'");
    }
    const auto &m = j.at("matrix");
    std::vector<std::complex<double>> flat;
    auto read_entry = [&](const nlohmann::json &e) {
        if (e.is_array() && e.size() == 2) {
            flat.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else if (e.is_number()) {
            flat.emplace_back(e.get<double>(), 0.0);
        } else {
            throw std::invalid_argument("matrix entries must be [re, im] pairs");
        }
    };
    if (!m.is_array()) throw std::invalid_argument("'matrix' must be an array");
    for (const auto &e : m) {
        // Accept both the flat 4-entry form and a 2x2 nested form.
        if (e.is_array() && e.size() == 2 && e[0].is_array()) {
            read_entry(e[0]);
            read_entry(e[1]);
        } else {
            read_entry(e);
        }
    }
    if (flat.size() != 4) throw std::invalid_argument("'matrix' must hold exactly 4 complex entries");
    return GateDefinition(j.at("label").get<std::string>(), {flat[0], flat[1], flat[2], flat[3]});
}

GateDefinition GateDefinition::sqrt_t() {
    return GateDefinition("sqrt_t", {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 8)});
}

GateDefinition GateDefinition::generic_rotation(double angle) {
    // exp(-i angle/2 n.sigma) with n = (1, 2, 3)/sqrt(14).
    const double nx = 1 / std::sqrt(14.0), ny = 2 / std::sqrt(14.0), nz = 3 / std::sqrt(14.0);
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    const std::complex<double> i(0, 1);
    Matrix2 m{c - i * s * nz, -i * s * nx - s * ny, -i * s * nx + s * ny, c + i * s * nz};
    char label[48];
    std::snprintf(label, sizeof(label), "rot_%.6f", angle);
    return GateDefinition(label, m);
}

}  // namespace qhard
