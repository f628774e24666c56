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

#include "qhard/search.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace qhard {

namespace {

using Clock = std::chrono::steady_clock;

// Hermitian Pauli i^{|x & z|} X^x Z^z for the packed index x | z << n.
PauliOperator hermitian_pauli(uint32_t n, uint64_t index) {
    PauliOperator p = PauliOperator::identity(n);
    int overlap = 0;
    for (uint32_t q = 0; q < n; q++) {
        p.x[q] = (index >> q) & 1;
        p.z[q] = (index >> (n + q)) & 1;
        overlap += p.x[q] & p.z[q];
    }
    p.phase = overlap % 4;
    return p;
}

// The nonzero entry of column c of a Pauli matrix sits in row c ^ x.
struct PauliColumns {
    uint64_t x = 0;
    std::vector<RingElement> values;
};

PauliColumns pauli_columns(const PauliOperator &p) {
    ExactUnitary m = p.to_matrix();
    PauliColumns cols{p.x_mask_bits(), {}};
    for (size_t c = 0; c < m.dim(); c++) cols.values.push_back(m(c ^ cols.x, c));
    return cols;
}

const std::vector<PauliColumns> &hermitian_paulis(uint32_t n) {
    static std::mutex mu;
    static std::vector<std::vector<PauliColumns>> cache(3);
    std::lock_guard<std::mutex> lock(mu);
    if (n > 2) throw std::invalid_argument("coset keys support at most two qubits");
    if (cache[n].empty()) {
        for (uint64_t i = 0; i < (uint64_t{1} << (2 * n)); i++) cache[n].push_back(pauli_columns(hermitian_pauli(n, i)));
    }
    return cache[n];
}

std::vector<RingElement> sorted_rows_key(std::vector<std::vector<RingElement>> rows) {
    std::sort(rows.begin(), rows.end());
    std::vector<RingElement> key;
    for (auto &r : rows) {
        for (auto &e : r) key.push_back(std::move(e));
    }
    return key;
}

size_t hash_key(const std::vector<RingElement> &key) {
    size_t h = key.size();
    for (const auto &e : key) h ^= e.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

bool out_of_budget(const SearchBudget &budget, uint64_t nodes, Clock::time_point deadline) {
    return nodes > budget.node_cap || Clock::now() > deadline;
}

Clock::time_point deadline_of(const SearchBudget &budget) {
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.time_cap_seconds));
}

ExactUnitary diag_t(uint32_t n, uint32_t q) {
    return exact_gate_matrix(Gate(GateKind::T, {q}), n);
}

}  // namespace

std::string_view status_name(CountResult::Status status) {
    switch (status) {
        case CountResult::Status::Found:
            return "found";
        case CountResult::Status::Exceeds:
            return "exceeds";
        case CountResult::Status::CapExhausted:
            return "cap_exhausted";
    }
    return "?";
}

std::vector<ExactUnitary> pauli_rotations(uint32_t n) {
    const size_t dim = size_t{1} << n;
    const RingElement plus(1, 1, 0, 0, 2);   // (1 + w) / 2
    const RingElement minus(1, -1, 0, 0, 2);  // (1 - w) / 2
    std::vector<ExactUnitary> out;
    for (uint64_t i = 1; i < (uint64_t{1} << (2 * n)); i++) {
        for (int sign = 0; sign < 2; sign++) {
            PauliOperator p = hermitian_pauli(n, i);
            p.phase = (p.phase + 2 * sign) % 4;
            ExactUnitary pm = p.to_matrix();
            ExactUnitary r(dim);
            for (size_t a = 0; a < dim; a++) {
                for (size_t b = 0; b < dim; b++) {
                    RingElement e = minus * pm(a, b);
                    if (a == b) e += plus;
                    r(a, b) = std::move(e);
                }
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<RingElement> clifford_coset_key(const ExactUnitary &w) {
    const uint32_t n = w.num_qubits();
    const size_t dim = w.dim();
    const auto &paulis = hermitian_paulis(n);
    const size_t np = paulis.size();
    const ExactUnitary wd = w.adjoint();

    std::vector<std::vector<RingElement>> rows(np, std::vector<RingElement>(np));
    for (size_t qi = 0; qi < np; qi++) {
        const PauliColumns &q = paulis[qi];
        // W Q: column c of W Q is Q's nonzero entry times column c ^ x of W.
        ExactUnitary wq(dim);
        for (size_t r = 0; r < dim; r++) {
            for (size_t c = 0; c < dim; c++) wq(r, c) = w(r, c ^ q.x) * q.values[c];
        }
        ExactUnitary m = wq * wd;
        for (size_t pi = 0; pi < np; pi++) {
            const PauliColumns &p = paulis[pi];
            RingElement tr;
            for (size_t c = 0; c < dim; c++) tr += p.values[c] * m(c, c ^ p.x);
            rows[pi][qi] = tr.scaled_down(static_cast<int>(2 * n));
        }
    }
    for (auto &row : rows) {
        std::vector<RingElement> neg;
        neg.reserve(row.size());
        for (const auto &e : row) neg.push_back(-e);
        if (neg > row) row = std::move(neg);
    }
    return sorted_rows_key(std::move(rows));
}

size_t TCountSearch::KeyHash::operator()(const std::vector<RingElement> &key) const {
    return hash_key(key);
}

TCountSearch::TCountSearch(std::shared_ptr<const CliffordCatalog> catalog) : catalog_(std::move(catalog)) {
    if (!catalog_) throw std::invalid_argument("T-count search needs a Clifford catalog");
    const uint32_t n = catalog_->num_qubits();
    rotations_ = pauli_rotations(n);
    ExactUnitary id = ExactUnitary::identity(size_t{1} << n);
    table_[clifford_coset_key(id)].push_back(0);
    entries_.push_back({std::move(id), 0});
    level_begin_ = {0, 1};
}

std::vector<size_t> TCountSearch::level_sizes() const {
    std::vector<size_t> sizes;
    for (size_t l = 0; l + 1 < level_begin_.size(); l++) sizes.push_back(level_begin_[l + 1] - level_begin_[l]);
    return sizes;
}

std::optional<uint32_t> TCountSearch::lookup(const ExactUnitary &w, uint64_t &nodes) const {
    nodes++;
    auto it = table_.find(clifford_coset_key(w));
    if (it == table_.end()) return std::nullopt;
    for (size_t idx : it->second) {
        if (catalog_->contains(w * entries_[idx].rep.adjoint())) return entries_[idx].level;
    }
    return std::nullopt;
}

bool TCountSearch::extend_to(uint32_t level, const SearchBudget &budget, uint64_t &nodes, Clock::time_point deadline) {
    while (level_begin_.size() - 1 <= level) {
        const uint32_t next_level = static_cast<uint32_t>(level_begin_.size() - 1);
        const size_t begin = level_begin_[next_level - 1], end = level_begin_[next_level];
        std::vector<Entry> fresh;
        for (size_t i = begin; i < end; i++) {
            for (const ExactUnitary &r : rotations_) {
                if (out_of_budget(budget, nodes, deadline)) return false;
                ExactUnitary child = r * entries_[i].rep;
                nodes++;
                auto key = clifford_coset_key(child);
                auto &bucket = table_[key];
                bool known = false;
                for (size_t idx : bucket) {
                    const ExactUnitary &other = idx < entries_.size() ? entries_[idx].rep : fresh[idx - entries_.size()].rep;
                    if (catalog_->contains(child * other.adjoint())) {
                        known = true;
                        break;
                    }
                }
                if (known) continue;
                bucket.push_back(entries_.size() + fresh.size());
                fresh.push_back({std::move(child), next_level});
            }
        }
        for (auto &e : fresh) entries_.push_back(std::move(e));
        level_begin_.push_back(entries_.size());
    }
    return true;
}

CountResult TCountSearch::min_tcount(const ExactUnitary &u, const SearchBudget &budget) {
    if (u.dim() != (size_t{1} << catalog_->num_qubits())) throw std::invalid_argument("unitary size does not match catalog");
    CountResult result;
    const auto deadline = deadline_of(budget);
    if (catalog_->contains(u)) return result;

    const uint32_t table_level = (budget.k_max + 1) / 2;
    const uint32_t rep_level = budget.k_max / 2;
    if (!extend_to(table_level, budget, result.nodes, deadline)) {
        result.status = CountResult::Status::CapExhausted;
        return result;
    }
    std::optional<uint32_t> best;
    const size_t rep_end = level_begin_[rep_level + 1];
    for (size_t i = 0; i < rep_end; i++) {
        const Entry &e = entries_[i];
        if (best && *best <= e.level) break;
        if (out_of_budget(budget, result.nodes, deadline)) {
            result.status = CountResult::Status::CapExhausted;
            return result;
        }
        auto rest = lookup(u * e.rep.adjoint(), result.nodes);
        if (rest && (!best || e.level + *rest < *best)) best = e.level + *rest;
    }
    if (best && *best <= budget.k_max) {
        result.count = *best;
    } else {
        result.status = CountResult::Status::Exceeds;
    }
    return result;
}

CountResult exact_min_tcount(const ExactUnitary &u, std::shared_ptr<const CliffordCatalog> catalog,
                             const SearchBudget &budget) {
    TCountSearch search(std::move(catalog));
    return search.min_tcount(u, budget);
}

CountResult naive_min_tcount(const ExactUnitary &u, const CliffordCatalog &catalog, uint32_t k_max) {
    CountResult result;
    const uint32_t n = catalog.num_qubits();
    if (catalog.contains(u)) return result;

    if (n == 1) {
        // Level m holds every C_m T C_{m-1} ... T C_0 not reachable with fewer T gates.
        const ExactUnitary t = diag_t(1, 0);
        std::unordered_map<ExactUnitary, uint32_t, ExactUnitaryHash> seen;
        std::vector<ExactUnitary> frontier;
        for (const auto &c : catalog.elements()) {
            seen.emplace(c, 0);
            frontier.push_back(c);
        }
        const ExactUnitary target = phase_canonical(u);
        for (uint32_t m = 1; m <= k_max; m++) {
            std::vector<ExactUnitary> next;
            for (const auto &g : frontier) {
                ExactUnitary tg = t * g;
                for (const auto &c : catalog.elements()) {
                    ExactUnitary h = phase_canonical(c * tg);
                    result.nodes++;
                    if (seen.emplace(h, m).second) next.push_back(std::move(h));
                }
            }
            if (seen.count(target)) {
                result.count = m;
                return result;
            }
            frontier = std::move(next);
        }
        result.status = CountResult::Status::Exceeds;
        return result;
    }

    // n = 2: U has T-count <= k iff U (R_k ... R_1)^dagger is Clifford for some rotation sequence.
    const auto rotations = pauli_rotations(n);
    std::vector<ExactUnitary> products{ExactUnitary::identity(size_t{1} << n)};
    for (uint32_t m = 1; m <= k_max; m++) {
        std::vector<ExactUnitary> next;
        next.reserve(products.size() * rotations.size());
        for (const auto &p : products) {
            for (const auto &r : rotations) {
                ExactUnitary q = r * p;
                result.nodes++;
                if (catalog.contains(u * q.adjoint())) {
                    result.count = m;
                    return result;
                }
                next.push_back(std::move(q));
            }
        }
        products = std::move(next);
    }
    result.status = CountResult::Status::Exceeds;
    return result;
}

HFreeCatalog::HFreeCatalog(uint32_t n, std::vector<ExactUnitary> elements) : n_(n), elements_(std::move(elements)) {
    for (size_t i = 0; i < elements_.size(); i++) index_.emplace(elements_[i], i);
}

bool HFreeCatalog::contains(const ExactUnitary &u) const {
    if (u.dim() != (size_t{1} << n_)) return false;
    return index_.count(phase_canonical(u)) > 0;
}

HFreeCatalog hfree_closure(uint32_t n, const std::vector<ExactUnitary> &seed) {
    if (n < 1 || n > 2) throw std::invalid_argument("H-free closure supports 1 or 2 qubits");
    std::vector<Gate> gens;
    for (uint32_t q = 0; q < n; q++) {
        gens.emplace_back(GateKind::T, std::initializer_list<uint32_t>{q});
        gens.emplace_back(GateKind::S, std::initializer_list<uint32_t>{q});
    }
    for (uint32_t c = 0; c < n; c++) {
        for (uint32_t t = 0; t < n; t++) {
            if (c != t) gens.emplace_back(GateKind::CX, std::initializer_list<uint32_t>{c, t});
        }
    }
    std::vector<ExactUnitary> elements;
    std::unordered_map<ExactUnitary, size_t, ExactUnitaryHash> seen;
    auto add = [&](ExactUnitary u) {
        u = phase_canonical(u);
        if (seen.emplace(u, elements.size()).second) elements.push_back(std::move(u));
    };
    if (seed.empty()) add(ExactUnitary::identity(size_t{1} << n));
    for (const auto &s : seed) add(s);
    for (size_t head = 0; head < elements.size(); head++) {
        for (const Gate &g : gens) {
            ExactUnitary next = elements[head];
            next.apply_left(g);
            add(std::move(next));
        }
    }
    return HFreeCatalog(n, std::move(elements));
}

std::vector<RingElement> monomial_coset_key(const ExactUnitary &w) {
    const size_t dim = w.dim();
    std::vector<std::vector<RingElement>> rows(dim);
    for (size_t r = 0; r < dim; r++) {
        ExactUnitary row(1);
        rows[r].reserve(dim);
        size_t lead = dim;
        for (size_t c = 0; c < dim; c++) {
            if (lead == dim && !w(r, c).is_zero()) lead = c;
        }
        int best = 0;
        if (lead < dim) {
            RingElement best_val = w(r, lead);
            for (int k = 1; k < 8; k++) {
                RingElement cand = w(r, lead).times_omega(k);
                if (cand > best_val) {
                    best_val = std::move(cand);
                    best = k;
                }
            }
        }
        for (size_t c = 0; c < dim; c++) rows[r].push_back(w(r, c).times_omega(best));
    }
    return sorted_rows_key(std::move(rows));
}

size_t HCountSearch::KeyHash::operator()(const std::vector<RingElement> &key) const {
    return hash_key(key);
}

HCountSearch::HCountSearch(std::shared_ptr<const HFreeCatalog> catalog) : catalog_(std::move(catalog)) {
    if (!catalog_) throw std::invalid_argument("H-count search needs an H-free catalog");
    const uint32_t n = catalog_->num_qubits();
    std::unordered_map<ExactUnitary, size_t, ExactUnitaryHash> seen;
    for (uint32_t q = 0; q < n; q++) {
        for (const auto &v : catalog_->elements()) {
            ExactUnitary step = v.adjoint();
            step.apply_right(Gate(GateKind::H, {q}));
            step = phase_canonical(step * v);
            if (seen.emplace(step, steps_.size()).second) steps_.push_back(std::move(step));
        }
    }
    ExactUnitary id = ExactUnitary::identity(size_t{1} << n);
    table_[monomial_coset_key(id)].push_back(0);
    entries_.push_back({std::move(id), 0});
    level_begin_ = {0, 1};
}

std::optional<uint32_t> HCountSearch::lookup(const ExactUnitary &w, uint64_t &nodes) const {
    nodes++;
    auto it = table_.find(monomial_coset_key(w));
    if (it == table_.end()) return std::nullopt;
    for (size_t idx : it->second) {
        if (catalog_->contains(w * entries_[idx].rep.adjoint())) return entries_[idx].level;
    }
    return std::nullopt;
}

bool HCountSearch::extend_to(uint32_t level, const SearchBudget &budget, uint64_t &nodes, Clock::time_point deadline) {
    while (level_begin_.size() - 1 <= level) {
        const uint32_t next_level = static_cast<uint32_t>(level_begin_.size() - 1);
        const size_t begin = level_begin_[next_level - 1], end = level_begin_[next_level];
        std::vector<Entry> fresh;
        for (size_t i = begin; i < end; i++) {
            for (const ExactUnitary &s : steps_) {
                if (out_of_budget(budget, nodes, deadline)) return false;
                ExactUnitary child = s * entries_[i].rep;
                nodes++;
                auto &bucket = table_[monomial_coset_key(child)];
                bool known = false;
                for (size_t idx : bucket) {
                    const ExactUnitary &other = idx < entries_.size() ? entries_[idx].rep : fresh[idx - entries_.size()].rep;
                    if (catalog_->contains(child * other.adjoint())) {
                        known = true;
                        break;
                    }
                }
                if (known) continue;
                bucket.push_back(entries_.size() + fresh.size());
                fresh.push_back({std::move(child), next_level});
            }
        }
        for (auto &e : fresh) entries_.push_back(std::move(e));
        level_begin_.push_back(entries_.size());
    }
    return true;
}

CountResult HCountSearch::min_hcount(const ExactUnitary &u, const SearchBudget &budget) {
    if (u.dim() != (size_t{1} << catalog_->num_qubits())) throw std::invalid_argument("unitary size does not match catalog");
    CountResult result;
    const auto deadline = deadline_of(budget);
    if (catalog_->contains(u)) return result;

    const uint32_t table_level = (budget.k_max + 1) / 2;
    const uint32_t rep_level = budget.k_max / 2;
    if (!extend_to(table_level, budget, result.nodes, deadline)) {
        result.status = CountResult::Status::CapExhausted;
        return result;
    }
    std::optional<uint32_t> best;
    const size_t rep_end = level_begin_[rep_level + 1];
    for (size_t i = 0; i < rep_end; i++) {
        const Entry &e = entries_[i];
        if (best && *best <= e.level) break;
        if (out_of_budget(budget, result.nodes, deadline)) {
            result.status = CountResult::Status::CapExhausted;
            return result;
        }
        auto rest = lookup(u * e.rep.adjoint(), result.nodes);
        if (rest && (!best || e.level + *rest < *best)) best = e.level + *rest;
    }
    if (best && *best <= budget.k_max) {
        result.count = *best;
    } else {
        result.status = CountResult::Status::Exceeds;
    }
    return result;
}

CountResult exact_min_hcount(const ExactUnitary &u, std::shared_ptr<const HFreeCatalog> catalog,
                             const SearchBudget &budget) {
    HCountSearch search(std::move(catalog));
    return search.min_hcount(u, budget);
}

Permutation permutation_of(const Circuit &circuit) {
    if (circuit.num_wires() > 20) throw std::length_error("permutation tables are limited to 20 wires");
    const uint32_t dim = uint32_t{1} << circuit.num_wires();
    Permutation perm(dim);
    for (uint32_t x = 0; x < dim; x++) {
        uint32_t s = x;
        for (const Gate &g : circuit.gates()) {
            switch (g.kind) {
                case GateKind::X:
                    s ^= 1u << g.wires[0];
                    break;
                case GateKind::CX:
                    if ((s >> g.wires[0]) & 1) s ^= 1u << g.wires[1];
                    break;
                case GateKind::CCX:
                    if (((s >> g.wires[0]) & 1) && ((s >> g.wires[1]) & 1)) s ^= 1u << g.wires[2];
                    break;
                default:
                    throw std::invalid_argument("not a classical reversible gate: " + std::string(mnemonic(g.kind)));
            }
        }
        perm[x] = s;
    }
    return perm;
}

std::optional<Permutation> permutation_of(const ExactUnitary &u) {
    const RingElement one = RingElement::from_int(1);
    Permutation perm(u.dim());
    for (size_t c = 0; c < u.dim(); c++) {
        std::optional<size_t> row;
        for (size_t r = 0; r < u.dim(); r++) {
            if (u(r, c).is_zero()) continue;
            if (row || !(u(r, c) == one)) return std::nullopt;
            row = r;
        }
        if (!row) return std::nullopt;
        perm[c] = static_cast<uint32_t>(*row);
    }
    if (!is_bijection(perm)) return std::nullopt;
    return perm;
}

bool is_bijection(const Permutation &perm) {
    std::vector<uint8_t> hit(perm.size(), 0);
    for (uint32_t p : perm) {
        if (p >= perm.size() || hit[p]) return false;
        hit[p] = 1;
    }
    return true;
}

bool is_linear_reversible(const Permutation &perm) {
    if (perm.empty() || !std::has_single_bit(perm.size()) || !is_bijection(perm)) {
        throw std::invalid_argument("is_linear_reversible needs a bijection on 2^n points");
    }
    const uint32_t n = static_cast<uint32_t>(std::countr_zero(perm.size()));
    const uint32_t b = perm[0];
    std::vector<uint32_t> cols(n);
    for (uint32_t i = 0; i < n; i++) cols[i] = perm[1u << i] ^ b;
    for (uint32_t x = 0; x < perm.size(); x++) {
        uint32_t y = b;
        for (uint32_t i = 0; i < n; i++) {
            if ((x >> i) & 1) y ^= cols[i];
        }
        if (y != perm[x]) return false;
    }
    return true;
}

namespace {

constexpr uint32_t kTofWires = 3;
constexpr uint32_t kTofPoints = 8;

uint32_t perm_rank(const Permutation &p) {
    // Lehmer code of a permutation of 8 points.
    uint32_t rank = 0;
    for (uint32_t i = 0; i < kTofPoints; i++) {
        uint32_t smaller = 0;
        for (uint32_t j = i + 1; j < kTofPoints; j++) smaller += p[j] < p[i];
        rank = rank * (kTofPoints - i) + smaller;
    }
    return rank;
}

Permutation compose(const Permutation &outer, const Permutation &inner) {
    Permutation r(inner.size());
    for (size_t x = 0; x < inner.size(); x++) r[x] = outer[inner[x]];
    return r;
}

std::vector<Permutation> affine_group_3() {
    std::vector<Permutation> group;
    for (uint32_t m = 0; m < 512; m++) {
        std::array<uint32_t, 3> cols{m & 7, (m >> 3) & 7, (m >> 6) & 7};
        for (uint32_t b = 0; b < kTofPoints; b++) {
            Permutation p(kTofPoints);
            for (uint32_t x = 0; x < kTofPoints; x++) {
                uint32_t y = b;
                for (uint32_t i = 0; i < kTofWires; i++) {
                    if ((x >> i) & 1) y ^= cols[i];
                }
                p[x] = y;
            }
            if (is_bijection(p)) group.push_back(std::move(p));
        }
    }
    return group;
}

std::vector<Permutation> toffoli_placements_3() {
    std::vector<Permutation> out;
    for (uint32_t t = 0; t < kTofWires; t++) {
        Circuit c(kTofWires);
        uint32_t a = (t + 1) % kTofWires, b = (t + 2) % kTofWires;
        c.append(GateKind::CCX, {std::min(a, b), std::max(a, b), t});
        out.push_back(permutation_of(c));
    }
    return out;
}

// Left cosets of the affine group in S_8: coset id per permutation rank, plus one representative each.
struct AffineCosets {
    std::vector<Permutation> affine;
    std::vector<int> coset_of_rank;
    std::vector<Permutation> reps;
};

const AffineCosets &affine_cosets() {
    static std::once_flag once;
    static AffineCosets cosets;
    std::call_once(once, [] {
        cosets.affine = affine_group_3();
        cosets.coset_of_rank.assign(40320, -1);
        Permutation p(kTofPoints);
        for (uint32_t i = 0; i < kTofPoints; i++) p[i] = i;
        do {
            if (cosets.coset_of_rank[perm_rank(p)] >= 0) continue;
            int id = static_cast<int>(cosets.reps.size());
            cosets.reps.push_back(p);
            for (const auto &a : cosets.affine) cosets.coset_of_rank[perm_rank(compose(a, p))] = id;
        } while (std::next_permutation(p.begin(), p.end()));
    });
    return cosets;
}

}  // namespace

CountResult exact_min_tofcount(const Permutation &perm, const SearchBudget &budget) {
    if (perm.empty() || !std::has_single_bit(perm.size()) || !is_bijection(perm)) {
        throw std::invalid_argument("exact_min_tofcount needs a bijection on 2^n points");
    }
    const uint32_t n = static_cast<uint32_t>(std::countr_zero(perm.size()));
    if (n > kTofWires) throw std::length_error("exact Toffoli count is limited to 3 wires");
    CountResult result;
    result.nodes = 1;
    if (is_linear_reversible(perm)) return result;
    // Only n = 3 reaches here: every bijection on at most 4 points is affine.

    const AffineCosets &cosets = affine_cosets();
    const auto placements = toffoli_placements_3();
    const auto deadline = deadline_of(budget);
    const int target = cosets.coset_of_rank[perm_rank(perm)];
    std::vector<int> level(cosets.reps.size(), -1);
    std::vector<int> frontier{cosets.coset_of_rank[perm_rank(Permutation{0, 1, 2, 3, 4, 5, 6, 7})]};
    level[frontier[0]] = 0;
    for (uint32_t k = 1; k <= budget.k_max && !frontier.empty(); k++) {
        std::vector<int> next;
        for (int c : frontier) {
            // Children of the coset A p are the cosets of T a p over placements T and affine a.
            for (const auto &a : cosets.affine) {
                Permutation ap = compose(a, cosets.reps[c]);
                for (const auto &t : placements) {
                    if (out_of_budget(budget, result.nodes, deadline)) {
                        result.status = CountResult::Status::CapExhausted;
                        return result;
                    }
                    result.nodes++;
                    int child = cosets.coset_of_rank[perm_rank(compose(t, ap))];
                    if (level[child] < 0) {
                        level[child] = static_cast<int>(k);
                        next.push_back(child);
                    }
                }
            }
        }
        if (level[target] >= 0) {
            result.count = static_cast<uint32_t>(level[target]);
            return result;
        }
        frontier = std::move(next);
    }
    result.status = CountResult::Status::Exceeds;
    return result;
}

CountResult naive_min_tofcount(const Permutation &perm, uint32_t k_max) {
    if (perm.size() != kTofPoints || !is_bijection(perm)) {
        throw std::invalid_argument("naive_min_tofcount supports bijections on 8 points");
    }
    std::vector<std::pair<Permutation, int>> gens;
    for (uint32_t q = 0; q < kTofWires; q++) {
        Circuit c(kTofWires);
        c.append(GateKind::X, {q});
        gens.emplace_back(permutation_of(c), 0);
        for (uint32_t t = 0; t < kTofWires; t++) {
            if (t == q) continue;
            Circuit cx(kTofWires);
            cx.append(GateKind::CX, {q, t});
            gens.emplace_back(permutation_of(cx), 0);
        }
    }
    for (const auto &t : toffoli_placements_3()) gens.emplace_back(t, 1);

    std::vector<int> dist(40320, -1);
    std::vector<Permutation> by_rank(40320);
    std::deque<Permutation> queue;
    Permutation id{0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<uint8_t> done(40320, 0);
    dist[perm_rank(id)] = 0;
    queue.push_back(id);
    CountResult result;
    while (!queue.empty()) {
        Permutation p = queue.front();
        queue.pop_front();
        uint32_t pr = perm_rank(p);
        if (done[pr]) continue;
        done[pr] = 1;
        result.nodes++;
        for (const auto &[g, w] : gens) {
            Permutation q = compose(g, p);
            uint32_t qr = perm_rank(q);
            int d = dist[pr] + w;
            if (dist[qr] < 0 || d < dist[qr]) {
                dist[qr] = d;
                if (w == 0) {
                    queue.push_front(std::move(q));
                } else {
                    queue.push_back(std::move(q));
                }
            }
        }
    }
    int d = dist[perm_rank(perm)];
    if (d < 0 || static_cast<uint32_t>(d) > k_max) {
        result.status = CountResult::Status::Exceeds;
    } else {
        result.count = static_cast<uint32_t>(d);
    }
    return result;
}

}  // namespace qhard
