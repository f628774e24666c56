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

#include "qhard/exact.hpp"

#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qhard {

namespace {

// Applies a gate to a strided vector v[offset + i * stride], i indexing basis states. All gate matrices in
// the vocabulary are symmetric, so the same routine serves both row and column actions.
void apply_to_vector(const Gate &gate, std::vector<RingElement> &data, size_t offset, size_t stride, size_t dim) {
    auto at = [&](size_t i) -> RingElement & {
        return data[offset + i * stride];
    };
    const size_t m0 = size_t{1} << gate.wires[0];
    switch (gate.kind) {
        case GateKind::X:
            for (size_t i = 0; i < dim; i++) {
                if (!(i & m0)) std::swap(at(i), at(i | m0));
            }
            return;
        case GateKind::H:
            for (size_t i = 0; i < dim; i++) {
                if (i & m0) continue;
                RingElement a = at(i);
                RingElement b = at(i | m0);
                at(i) = (a + b).scaled_down();
                at(i | m0) = (a - b).scaled_down();
            }
            return;
        case GateKind::S:
        case GateKind::SDG:
        case GateKind::T:
        case GateKind::TDG: {
            int k = gate.kind == GateKind::S ? 2 : gate.kind == GateKind::SDG ? 6 : gate.kind == GateKind::T ? 1 : 7;
            for (size_t i = 0; i < dim; i++) {
                if (i & m0) at(i) = at(i).times_omega(k);
            }
            return;
        }
        case GateKind::CX: {
            const size_t mt = size_t{1} << gate.wires[1];
            for (size_t i = 0; i < dim; i++) {
                if ((i & m0) && !(i & mt)) std::swap(at(i), at(i | mt));
            }
            return;
        }
        case GateKind::CZ: {
            const size_t m1 = size_t{1} << gate.wires[1];
            for (size_t i = 0; i < dim; i++) {
                if ((i & m0) && (i & m1)) at(i) = -at(i);
            }
            return;
        }
        case GateKind::CCX: {
            const size_t m1 = size_t{1} << gate.wires[1];
            const size_t mt = size_t{1} << gate.wires[2];
            for (size_t i = 0; i < dim; i++) {
                if ((i & m0) && (i & m1) && !(i & mt)) std::swap(at(i), at(i | mt));
            }
            return;
        }
        case GateKind::G:
        case GateKind::GDG:
            throw std::invalid_argument("g/gdg gates have no exact matrix; use numeric simulation");
    }
}

void check_wires(const Gate &gate, size_t dim) {
    for (uint32_t w : gate.operands()) {
        if ((size_t{1} << w) >= dim) throw std::out_of_range("gate wire outside the matrix dimension");
    }
}

// Canonical i^k for k mod 4, as a ring element.
RingElement i_power(int k) {
    return RingElement::omega_power(2 * k);
}

}  // namespace

ExactUnitary::ExactUnitary(size_t dim) : dim_(dim), entries_(dim * dim) {
}

ExactUnitary ExactUnitary::identity(size_t dim) {
    ExactUnitary u(dim);
    for (size_t i = 0; i < dim; i++) u(i, i) = RingElement::from_int(1);
    return u;
}

uint32_t ExactUnitary::num_qubits() const {
    if (!std::has_single_bit(dim_)) throw std::logic_error("matrix dimension is not a power of two");
    return static_cast<uint32_t>(std::countr_zero(dim_));
}

ExactUnitary ExactUnitary::operator*(const ExactUnitary &other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch in matrix product");
    ExactUnitary r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t k = 0; k < dim_; k++) {
            const RingElement &a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < dim_; j++) {
                const RingElement &b = other(k, j);
                if (b.is_zero()) continue;
                r(i, j) += a * b;
            }
        }
    }
    return r;
}

ExactUnitary ExactUnitary::adjoint() const {
    ExactUnitary r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) r(j, i) = (*this)(i, j).conjugate();
    }
    return r;
}

ExactUnitary ExactUnitary::times_omega(int k) const {
    ExactUnitary r = *this;
    for (auto &e : r.entries_) e = e.times_omega(k);
    return r;
}

void ExactUnitary::apply_left(const Gate &gate) {
    check_wires(gate, dim_);
    for (size_t col = 0; col < dim_; col++) apply_to_vector(gate, entries_, col, dim_, dim_);
}

void ExactUnitary::apply_right(const Gate &gate) {
    check_wires(gate, dim_);
    for (size_t row = 0; row < dim_; row++) apply_to_vector(gate, entries_, row * dim_, 1, dim_);
}

bool ExactUnitary::is_identity() const {
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            const RingElement &e = (*this)(i, j);
            if (i == j ? !(e == RingElement::from_int(1)) : !e.is_zero()) return false;
        }
    }
    return true;
}

bool ExactUnitary::is_diagonal() const {
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            if (i != j && !(*this)(i, j).is_zero()) return false;
        }
    }
    return true;
}

bool ExactUnitary::is_unitary() const {
    return (adjoint() * *this).is_identity();
}

bool ExactUnitary::lex_less(const ExactUnitary &other) const {
    for (size_t i = 0; i < entries_.size(); i++) {
        auto c = entries_[i] <=> other.entries_[i];
        if (c != 0) return c < 0;
    }
    return false;
}

size_t ExactUnitary::hash() const {
    size_t h = dim_;
    for (const auto &e : entries_) h ^= e.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

nlohmann::json ExactUnitary::to_json() const {
    auto coeff = [](const BigInt &v) -> nlohmann::json {
        if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
            return v.convert_to<long long>();
        }
        return v.str();
    };
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < dim_; i++) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < dim_; j++) {
            const RingElement &e = (*this)(i, j);
            row.push_back({coeff(e.coefficient(0)), coeff(e.coefficient(1)), coeff(e.coefficient(2)),
                           coeff(e.coefficient(3)), e.k()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactUnitary ExactUnitary::from_json(const nlohmann::json &j) {
    if (!j.is_array()) throw std::invalid_argument("exact matrix JSON must be an array of rows");
    ExactUnitary u(j.size());
    auto coeff = [](const nlohmann::json &v) -> BigInt {
        if (v.is_string()) return BigInt(v.get<std::string>());
        return BigInt(v.get<long long>());
    };
    for (size_t r = 0; r < j.size(); r++) {
        if (!j[r].is_array() || j[r].size() != j.size()) throw std::invalid_argument("exact matrix must be square");
        for (size_t c = 0; c < j.size(); c++) {
            const auto &t = j[r][c];
            if (!t.is_array() || t.size() != 5) throw std::invalid_argument("entries must be [a, b, c, d, k]");
            u(r, c) = RingElement(coeff(t[0]), coeff(t[1]), coeff(t[2]), coeff(t[3]), t[4].get<int>());
        }
    }
    return u;
}

PauliOperator PauliOperator::identity(uint32_t n) {
    return {0, std::vector<uint8_t>(n), std::vector<uint8_t>(n)};
}

PauliOperator PauliOperator::x_on(uint32_t n, uint32_t wire) {
    PauliOperator p = identity(n);
    p.x.at(wire) = 1;
    return p;
}

PauliOperator PauliOperator::z_on(uint32_t n, uint32_t wire) {
    PauliOperator p = identity(n);
    p.z.at(wire) = 1;
    return p;
}

PauliOperator PauliOperator::x_mask(uint32_t n, uint64_t mask) {
    PauliOperator p = identity(n);
    for (uint32_t q = 0; q < n; q++) p.x[q] = (mask >> q) & 1;
    return p;
}

uint64_t PauliOperator::x_mask_bits() const {
    uint64_t m = 0;
    for (size_t q = 0; q < x.size(); q++) m |= uint64_t{x[q] != 0} << q;
    return m;
}

uint64_t PauliOperator::z_mask_bits() const {
    uint64_t m = 0;
    for (size_t q = 0; q < z.size(); q++) m |= uint64_t{z[q] != 0} << q;
    return m;
}

ExactUnitary PauliOperator::to_matrix() const {
    const size_t dim = size_t{1} << num_qubits();
    const uint64_t xm = x_mask_bits(), zm = z_mask_bits();
    ExactUnitary m(dim);
    for (size_t b = 0; b < dim; b++) {
        int sign = std::popcount(zm & b) & 1;
        m(b ^ xm, b) = i_power(phase + 2 * sign);
    }
    return m;
}

std::string PauliOperator::to_string() const {
    static const char *kPhase[] = {"+", "+i", "-", "-i"};
    std::string s = kPhase[((phase % 4) + 4) % 4];
    for (size_t q = 0; q < x.size(); q++) {
        s += x[q] ? (z[q] ? "XZ" : "X") : (z[q] ? "Z" : "I");
        if (q + 1 < x.size()) s += ".";
    }
    return s;
}

ExactUnitary exact_gate_matrix(const Gate &gate, uint32_t num_wires) {
    ExactUnitary u = ExactUnitary::identity(size_t{1} << num_wires);
    u.apply_left(gate);
    return u;
}

ExactUnitary exact_simulate(const Circuit &circuit) {
    if (circuit.num_wires() > kMaxExactQubits) {
        throw std::length_error(
            "exact simulation is limited to " + std::to_string(kMaxExactQubits) + " wires, got " +
            std::to_string(circuit.num_wires()));
    }
    ExactUnitary u = ExactUnitary::identity(size_t{1} << circuit.num_wires());
    for (const Gate &g : circuit.gates()) u.apply_left(g);
    return u;
}

std::optional<int> equal_up_to_phase(const ExactUnitary &u, const ExactUnitary &v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
    const size_t dim = v.dim();
    for (size_t idx = 0; idx < dim * dim; idx++) {
        const RingElement &ve = v(idx / dim, idx % dim);
        if (ve.is_zero()) continue;
        const RingElement &ue = u(idx / dim, idx % dim);
        for (int k = 0; k < 8; k++) {
            if (ue == ve.times_omega(k)) {
                return u == v.times_omega(k) ? std::optional<int>(k) : std::nullopt;
            }
        }
        return std::nullopt;
    }
    return u == v ? std::optional<int>(0) : std::nullopt;
}

std::optional<PauliOperator> pauli_conjugate(const ExactUnitary &c, const PauliOperator &p) {
    const uint32_t n = c.num_qubits();
    if (p.num_qubits() != n) throw std::invalid_argument("Pauli and unitary sizes differ");
    const size_t dim = c.dim();
    const uint64_t xm = p.x_mask_bits(), zm = p.z_mask_bits();

    // PC is a signed row permutation of C.
    ExactUnitary pc(dim);
    for (size_t r = 0; r < dim; r++) {
        size_t src = r ^ xm;
        int sign = std::popcount(zm & src) & 1;
        int k = 2 * (p.phase + 2 * sign);
        for (size_t col = 0; col < dim; col++) pc(r, col) = c(src, col).times_omega(k);
    }

    // Entry (row, col) of C^dagger P C.
    auto conj_entry = [&](size_t row, size_t col) {
        RingElement acc;
        for (size_t k = 0; k < dim; k++) {
            const RingElement &a = c(k, row);
            if (a.is_zero()) continue;
            const RingElement &b = pc(k, col);
            if (b.is_zero()) continue;
            acc += a.conjugate() * b;
        }
        return acc;
    };

    // Column 0 must be monomial: it fixes the x-part and the phase.
    std::optional<size_t> x_row;
    RingElement lead;
    for (size_t r = 0; r < dim; r++) {
        RingElement e = conj_entry(r, 0);
        if (e.is_zero()) continue;
        if (x_row) return std::nullopt;
        x_row = r;
        lead = std::move(e);
    }
    if (!x_row) return std::nullopt;
    auto lead_exp = lead.omega_exponent();
    if (!lead_exp || (*lead_exp & 1)) return std::nullopt;

    PauliOperator q = PauliOperator::identity(n);
    q.phase = *lead_exp / 2;
    for (uint32_t w = 0; w < n; w++) q.x[w] = (*x_row >> w) & 1;
    for (uint32_t w = 0; w < n; w++) {
        size_t col = size_t{1} << w;
        RingElement e = conj_entry(*x_row ^ col, col);
        if (e == lead) {
            q.z[w] = 0;
        } else if (e == -lead) {
            q.z[w] = 1;
        } else {
            return std::nullopt;
        }
    }

    // C^dagger P C = Q  <=>  P C = C Q, and C Q is a signed column permutation of C.
    const uint64_t qx = q.x_mask_bits(), qz = q.z_mask_bits();
    for (size_t col = 0; col < dim; col++) {
        int sign = std::popcount(qz & col) & 1;
        int k = 2 * (q.phase + 2 * sign);
        for (size_t r = 0; r < dim; r++) {
            if (!(pc(r, col) == c(r, col ^ qx).times_omega(k))) return std::nullopt;
        }
    }
    return q;
}

bool is_clifford_exact(const ExactUnitary &c) {
    const uint32_t n = c.num_qubits();
    if (n > 8) throw std::length_error("is_clifford_exact is limited to 8 qubits");
    for (uint32_t w = 0; w < n; w++) {
        if (!pauli_conjugate(c, PauliOperator::x_on(n, w))) return false;
        if (!pauli_conjugate(c, PauliOperator::z_on(n, w))) return false;
    }
    return true;
}

bool is_generalized_permutation(const ExactUnitary &u) {
    const size_t dim = u.dim();
    std::vector<uint8_t> col_used(dim, 0);
    for (size_t r = 0; r < dim; r++) {
        int found = 0;
        for (size_t c = 0; c < dim; c++) {
            const RingElement &e = u(r, c);
            if (e.is_zero()) continue;
            if (++found > 1 || col_used[c] || !e.omega_exponent()) return false;
            col_used[c] = 1;
        }
        if (found != 1) return false;
    }
    return true;
}

std::optional<PhaseProfile> phase_profile(const ExactUnitary &u) {
    if (!u.is_diagonal()) return std::nullopt;
    PhaseProfile profile;
    profile.exponents.reserve(u.dim());
    for (size_t i = 0; i < u.dim(); i++) {
        auto k = u(i, i).omega_exponent();
        if (!k) return std::nullopt;
        profile.exponents.push_back(*k);
    }
    return profile;
}

bool is_clifford_phase_profile(const PhaseProfile &profile) {
    const size_t dim = profile.exponents.size();
    if (dim == 0 || !std::has_single_bit(dim)) return false;
    const uint32_t n = static_cast<uint32_t>(std::countr_zero(dim));
    auto e = [&](size_t x) {
        return ((profile.exponents[x] - profile.exponents[0]) % 8 + 8) % 8;
    };
    // Diagonal Cliffords are i^{linear} (-1)^{quadratic}: relative exponents even, mixed second differences
    // divisible by 4, third differences divisible by 8.
    for (size_t x = 0; x < dim; x++) {
        if (e(x) & 1) return false;
    }
    for (size_t x = 0; x < dim; x++) {
        for (uint32_t i = 0; i < n; i++) {
            for (uint32_t j = i + 1; j < n; j++) {
                size_t bi = size_t{1} << i, bj = size_t{1} << j;
                if ((x & bi) || (x & bj)) continue;
                int d2 = e(x | bi | bj) - e(x | bi) - e(x | bj) + e(x);
                if (((d2 % 4) + 4) % 4) return false;
                for (uint32_t k = j + 1; k < n; k++) {
                    size_t bk = size_t{1} << k;
                    if (x & bk) continue;
                    int d3 = e(x | bi | bj | bk) - e(x | bi | bj) - e(x | bi | bk) - e(x | bj | bk) + e(x | bi) +
                             e(x | bj) + e(x | bk) - e(x);
                    if (((d3 % 8) + 8) % 8) return false;
                }
            }
        }
    }
    return true;
}

ExactUnitary phase_canonical(const ExactUnitary &u) {
    const size_t dim = u.dim();
    for (size_t idx = 0; idx < dim * dim; idx++) {
        const RingElement &e = u(idx / dim, idx % dim);
        if (e.is_zero()) continue;
        int best = 0;
        RingElement best_val = e;
        for (int k = 1; k < 8; k++) {
            RingElement cand = e.times_omega(k);
            if (cand > best_val) {
                best_val = std::move(cand);
                best = k;
            }
        }
        return u.times_omega(best);
    }
    return u;
}

}  // namespace qhard
