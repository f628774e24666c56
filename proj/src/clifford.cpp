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

#include "qhard/clifford.hpp"

#include <bit>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace qhard {

namespace {

int mod4(int v) {
    return ((v % 4) + 4) % 4;
}

int xz_overlap(const PauliOperator &p) {
    int k = 0;
    for (size_t q = 0; q < p.x.size(); q++) k += p.x[q] & p.z[q];
    return k;
}

bool is_hermitian(const PauliOperator &p) {
    return ((p.phase - xz_overlap(p)) & 1) == 0;
}

// Conjugates one Pauli by a Clifford gate: P <- G P G^dagger.
void conjugate_by_gate(PauliOperator &p, const Gate &gate) {
    const uint32_t a = gate.wires[0];
    switch (gate.kind) {
        case GateKind::H:
            // H X Z H = Z X = -X Z.
            if (p.x[a] && p.z[a]) p.phase += 2;
            std::swap(p.x[a], p.z[a]);
            break;
        case GateKind::S:
            // S X S^dagger = i X Z.
            if (p.x[a]) {
                p.phase += 1;
                p.z[a] ^= 1;
            }
            break;
        case GateKind::SDG:
            if (p.x[a]) {
                p.phase += 3;
                p.z[a] ^= 1;
            }
            break;
        case GateKind::X:
            if (p.z[a]) p.phase += 2;
            break;
        case GateKind::CX: {
            const uint32_t t = gate.wires[1];
            p.x[t] ^= p.x[a];
            p.z[a] ^= p.z[t];
            break;
        }
        case GateKind::CZ: {
            const uint32_t b = gate.wires[1];
            if (p.x[a] && p.x[b]) p.phase += 2;
            p.z[a] ^= p.x[b];
            p.z[b] ^= p.x[a];
            break;
        }
        default:
            throw std::logic_error("conjugate_by_gate: not a Clifford gate");
    }
    p.phase = mod4(p.phase);
}

bool is_clifford_kind(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::S:
        case GateKind::SDG:
        case GateKind::CX:
        case GateKind::CZ:
            return true;
        default:
            return false;
    }
}

}  // namespace

NonCliffordGateError::NonCliffordGateError(size_t gate_index, GateKind kind)
    : std::invalid_argument("gate " + std::to_string(gate_index) + " (" + std::string(mnemonic(kind)) +
                            ") is not a Clifford gate"),
      gate_index_(gate_index) {
}

PauliOperator pauli_product(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("pauli_product: size mismatch");
    PauliOperator r = PauliOperator::identity(a.num_qubits());
    int phase = a.phase + b.phase;
    for (size_t q = 0; q < a.x.size(); q++) {
        // Z_a X_b = -X_b Z_a on the same qubit.
        phase += 2 * (a.z[q] & b.x[q]);
        r.x[q] = a.x[q] ^ b.x[q];
        r.z[q] = a.z[q] ^ b.z[q];
    }
    r.phase = mod4(phase);
    return r;
}

bool paulis_commute(const PauliOperator &a, const PauliOperator &b) {
    int s = 0;
    for (size_t q = 0; q < a.x.size(); q++) s += (a.x[q] & b.z[q]) + (a.z[q] & b.x[q]);
    return (s & 1) == 0;
}

CliffordTableau::CliffordTableau(uint32_t n) : n_(n) {
    for (uint32_t q = 0; q < n; q++) rows_.push_back(PauliOperator::x_on(n, q));
    for (uint32_t q = 0; q < n; q++) rows_.push_back(PauliOperator::z_on(n, q));
}

CliffordTableau CliffordTableau::from_images(std::vector<PauliOperator> x_images,
                                             std::vector<PauliOperator> z_images) {
    if (x_images.size() != z_images.size()) throw std::invalid_argument("tableau needs as many X as Z images");
    CliffordTableau t(static_cast<uint32_t>(x_images.size()));
    for (uint32_t q = 0; q < t.n_; q++) {
        if (x_images[q].num_qubits() != t.n_ || z_images[q].num_qubits() != t.n_) {
            throw std::invalid_argument("tableau image has the wrong qubit count");
        }
        t.rows_[q] = std::move(x_images[q]);
        t.rows_[t.n_ + q] = std::move(z_images[q]);
    }
    for (auto &r : t.rows_) r.phase = mod4(r.phase);
    if (!t.is_valid()) throw std::invalid_argument("images do not form a Clifford tableau");
    return t;
}

bool CliffordTableau::sign(size_t r) const {
    return mod4(rows_[r].phase - xz_overlap(rows_[r])) == 2;
}

void CliffordTableau::apply(const Gate &gate) {
    if (!is_clifford_kind(gate.kind)) throw NonCliffordGateError(0, gate.kind);
    for (uint32_t w : gate.operands()) {
        if (w >= n_) throw std::out_of_range("tableau gate wire out of range");
    }
    for (auto &r : rows_) conjugate_by_gate(r, gate);
}

PauliOperator CliffordTableau::conjugate(const PauliOperator &p) const {
    if (p.num_qubits() != n_) throw std::invalid_argument("Pauli size does not match tableau");
    PauliOperator r = PauliOperator::identity(n_);
    r.phase = mod4(p.phase);
    for (uint32_t q = 0; q < n_; q++) {
        if (p.x[q]) r = pauli_product(r, rows_[q]);
    }
    for (uint32_t q = 0; q < n_; q++) {
        if (p.z[q]) r = pauli_product(r, rows_[n_ + q]);
    }
    return r;
}

CliffordTableau CliffordTableau::then(const CliffordTableau &next) const {
    if (next.n_ != n_) throw std::invalid_argument("tableau size mismatch");
    CliffordTableau r(n_);
    for (size_t i = 0; i < rows_.size(); i++) r.rows_[i] = next.conjugate(rows_[i]);
    return r;
}

bool CliffordTableau::is_valid() const {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (!is_hermitian(rows_[i])) return false;
        for (size_t j = i + 1; j < rows_.size(); j++) {
            bool should_commute = !(j == i + n_);
            if (paulis_commute(rows_[i], rows_[j]) != should_commute) return false;
        }
    }
    return true;
}

CliffordTableau tableau_simulate(const Circuit &circuit) {
    CliffordTableau t(circuit.num_wires());
    for (size_t i = 0; i < circuit.size(); i++) {
        const Gate &g = circuit.gates()[i];
        if (!is_clifford_kind(g.kind)) throw NonCliffordGateError(i, g.kind);
        t.apply(g);
    }
    return t;
}

std::optional<CliffordTableau> tableau_of_unitary(const ExactUnitary &u) {
    const uint32_t n = u.num_qubits();
    const ExactUnitary dagger = u.adjoint();
    std::vector<PauliOperator> xs, zs;
    for (uint32_t q = 0; q < n; q++) {
        auto x = pauli_conjugate(dagger, PauliOperator::x_on(n, q));
        auto z = pauli_conjugate(dagger, PauliOperator::z_on(n, q));
        if (!x || !z) return std::nullopt;
        xs.push_back(std::move(*x));
        zs.push_back(std::move(*z));
    }
    return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

Circuit canonical_circuit(const CliffordTableau &t) {
    const uint32_t n = t.num_qubits();
    CliffordTableau work = t;
    std::vector<Gate> applied;
    auto apply = [&](GateKind kind, std::initializer_list<uint32_t> wires) {
        Gate g(kind, wires);
        work.apply(g);
        applied.push_back(g);
    };

    for (uint32_t i = 0; i < n; i++) {
        // The X_i image becomes +X_i: rotate every factor to X, gather an X onto wire i, clear the rest.
        const size_t xr = i;
        for (uint32_t j = i; j < n; j++) {
            bool x = work.x_bit(xr, j), z = work.z_bit(xr, j);
            if (x && z) apply(GateKind::S, {j});
            else if (z) apply(GateKind::H, {j});
        }
        if (!work.x_bit(xr, i)) {
            for (uint32_t j = i + 1; j < n; j++) {
                if (work.x_bit(xr, j)) {
                    apply(GateKind::CX, {j, i});
                    break;
                }
            }
        }
        for (uint32_t j = i + 1; j < n; j++) {
            if (work.x_bit(xr, j)) apply(GateKind::CX, {i, j});
        }

        // The Z_i image anticommutes with X_i, so it carries Z or Y on wire i. HSH turns Y into Z and fixes X.
        const size_t zr = n + i;
        if (work.x_bit(zr, i)) {
            apply(GateKind::H, {i});
            apply(GateKind::S, {i});
            apply(GateKind::H, {i});
        }
        for (uint32_t j = i + 1; j < n; j++) {
            bool x = work.x_bit(zr, j), z = work.z_bit(zr, j);
            if (x && z) {
                apply(GateKind::S, {j});
                apply(GateKind::H, {j});
            } else if (x) {
                apply(GateKind::H, {j});
            }
        }
        for (uint32_t j = i + 1; j < n; j++) {
            if (work.z_bit(zr, j)) apply(GateKind::CX, {j, i});
        }

        if (work.sign(xr)) {
            apply(GateKind::S, {i});
            apply(GateKind::S, {i});
        }
        if (work.sign(zr)) apply(GateKind::X, {i});
    }
    if (!(work == CliffordTableau(n))) throw std::logic_error("canonical_circuit: reduction did not reach identity");

    Circuit c(n);
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        Gate g = *it;
        g.kind = inverse(g.kind);
        c.append(g);
    }
    return c;
}

CliffordCatalog::CliffordCatalog(uint32_t n, std::vector<ExactUnitary> elements)
    : n_(n), elements_(std::move(elements)) {
    numeric_.reserve(elements_.size());
    for (size_t i = 0; i < elements_.size(); i++) {
        if (elements_[i].dim() != (size_t{1} << n)) throw std::invalid_argument("catalog element has wrong size");
        if (!index_.emplace(elements_[i], i).second) throw std::invalid_argument("duplicate catalog element");
        numeric_.push_back(to_numeric(elements_[i]));
    }
}

std::optional<size_t> CliffordCatalog::find(const ExactUnitary &u) const {
    if (u.dim() != (size_t{1} << n_)) return std::nullopt;
    auto it = index_.find(phase_canonical(u));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

nlohmann::json CliffordCatalog::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["qubits"] = n_;
    j["elements"] = nlohmann::json::array();
    for (const auto &e : elements_) j["elements"].push_back(e.to_json());
    return j;
}

CliffordCatalog CliffordCatalog::from_json(const nlohmann::json &j) {
    std::vector<ExactUnitary> elements;
    for (const auto &e : j.at("elements")) elements.push_back(ExactUnitary::from_json(e));
    return CliffordCatalog(j.at("qubits").get<uint32_t>(), std::move(elements));
}

std::vector<Gate> clifford_generators(uint32_t n) {
    std::vector<Gate> gens;
    for (uint32_t q = 0; q < n; q++) {
        gens.emplace_back(GateKind::H, std::initializer_list<uint32_t>{q});
        gens.emplace_back(GateKind::S, std::initializer_list<uint32_t>{q});
    }
    for (uint32_t c = 0; c < n; c++) {
        for (uint32_t t = 0; t < n; t++) {
            if (c != t) gens.emplace_back(GateKind::CX, std::initializer_list<uint32_t>{c, t});
        }
    }
    return gens;
}

CliffordCatalog enumerate_clifford_group(uint32_t n) {
    if (n < 1 || n > 2) throw std::invalid_argument("Clifford enumeration supports 1 or 2 qubits");
    const auto gens = clifford_generators(n);
    std::vector<ExactUnitary> elements{ExactUnitary::identity(size_t{1} << n)};
    std::unordered_map<ExactUnitary, size_t, ExactUnitaryHash> seen{{elements[0], 0}};
    for (size_t head = 0; head < elements.size(); head++) {
        for (const Gate &g : gens) {
            ExactUnitary next = elements[head];
            next.apply_left(g);
            next = phase_canonical(next);
            if (seen.emplace(next, elements.size()).second) elements.push_back(std::move(next));
        }
    }
    return CliffordCatalog(n, std::move(elements));
}

std::shared_ptr<const CliffordCatalog> load_clifford_catalog(uint32_t n, const std::filesystem::path &cache_dir) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, std::string>, std::shared_ptr<const CliffordCatalog>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, cache_dir.string());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::shared_ptr<const CliffordCatalog> catalog;
    const auto path = cache_dir / ("clifford_n" + std::to_string(n) + ".json");
    if (!cache_dir.empty()) {
        std::ifstream in(path);
        if (in) {
            try {
                auto parsed = std::make_shared<CliffordCatalog>(CliffordCatalog::from_json(nlohmann::json::parse(in)));
                if (parsed->num_qubits() == n) catalog = std::move(parsed);
            } catch (const std::exception &) {
                // Unreadable cache: rebuild below and overwrite it.
            }
        }
    }
    if (!catalog) {
        catalog = std::make_shared<CliffordCatalog>(enumerate_clifford_group(n));
        if (!cache_dir.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(cache_dir, ec);
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (out) out << catalog->to_json().dump() << "\n";
        }
    }
    memo[key] = catalog;
    return catalog;
}

std::optional<NearestClifford> nearest_clifford_distance(const NumericUnitary &u, const CliffordCatalog &catalog,
                                                         const std::function<bool(const ExactUnitary &)> &accept) {
    if (u.rows() != static_cast<Eigen::Index>(size_t{1} << catalog.num_qubits())) {
        throw std::invalid_argument("nearest_clifford_distance: size does not match catalog");
    }
    std::optional<NearestClifford> best;
    // Only strict improvements replace the incumbent, so the lower bound can prune ties too.
    constexpr double kSlack = 1e-12;
    for (size_t i = 0; i < catalog.size(); i++) {
        if (accept && !accept(catalog.elements()[i])) continue;
        const NumericUnitary &v = catalog.numeric(i);
        if (best && phase_distance_lower_bound(u, v) >= best->distance - kSlack) continue;
        PhaseDistance d = phase_min_distance(u, v);
        if (!best || d.distance < best->distance - kSlack) best = NearestClifford{d.distance, d.alpha, i, {}};
    }
    if (best) best->witness = catalog.elements()[best->index];
    return best;
}

ApproximateCliffordTest approximate_clifford_test(const NumericUnitary &w, double eps) {
    const size_t dim = static_cast<size_t>(w.rows());
    if (w.rows() != w.cols() || !std::has_single_bit(dim)) {
        throw std::invalid_argument("approximate_clifford_test: dimension must be a power of two");
    }
    const uint32_t n = static_cast<uint32_t>(std::countr_zero(dim));
    ApproximateCliffordTest result;
    result.distance = std::numeric_limits<double>::infinity();

    auto round_image = [&](const PauliOperator &p) -> std::optional<PauliOperator> {
        NumericUnitary m = w * to_numeric(p.to_matrix()) * w.adjoint();
        // Coefficient of X^x Z^z is tr((X^x Z^z)^dagger M) / 2^n = sum_b (-1)^{z.b} M[b ^ x][b] / 2^n.
        double best_abs = -1;
        std::complex<double> best_coeff;
        uint64_t best_x = 0, best_z = 0;
        for (uint64_t x = 0; x < dim; x++) {
            for (uint64_t z = 0; z < dim; z++) {
                std::complex<double> c = 0;
                for (uint64_t b = 0; b < dim; b++) {
                    double s = (std::popcount(z & b) & 1) ? -1.0 : 1.0;
                    c += s * m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b));
                }
                c /= static_cast<double>(dim);
                if (std::abs(c) > best_abs) {
                    best_abs = std::abs(c);
                    best_coeff = c;
                    best_x = x;
                    best_z = z;
                }
            }
        }
        PauliOperator q = PauliOperator::x_mask(n, best_x);
        for (uint32_t k = 0; k < n; k++) q.z[k] = (best_z >> k) & 1;
        double angle = std::arg(best_coeff);
        q.phase = mod4(static_cast<int>(std::lround(angle / (std::numbers::pi / 2))));
        if (operator_norm(m - to_numeric(q.to_matrix())) > 2 * eps) return std::nullopt;
        return q;
    };

    std::vector<PauliOperator> xs, zs;
    for (uint32_t q = 0; q < n; q++) {
        auto x = round_image(PauliOperator::x_on(n, q));
        auto z = round_image(PauliOperator::z_on(n, q));
        if (!x || !z) return result;
        xs.push_back(std::move(*x));
        zs.push_back(std::move(*z));
    }
    CliffordTableau candidate;
    try {
        candidate = CliffordTableau::from_images(std::move(xs), std::move(zs));
    } catch (const std::invalid_argument &) {
        return result;
    }
    NumericUnitary v = numeric_simulate(canonical_circuit(candidate));
    result.distance = phase_min_distance(w, v).distance;
    result.within = result.distance <= eps;
    result.candidate = std::move(candidate);
    return result;
}

}  // namespace qhard
