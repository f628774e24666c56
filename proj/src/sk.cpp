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

#include "qhard/sk.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <unordered_map>

#include "qhard/numeric.hpp"

namespace qhard {

namespace {

using Complex = std::complex<double>;
using Quat = std::array<double, 4>;

constexpr std::array<GateKind, 5> kNetGenerators{GateKind::H, GateKind::S, GateKind::SDG, GateKind::G, GateKind::GDG};

// Error recursion constant in eps_{k+1} = c eps_k^{3/2}; only seeds the depth search, results are
// always measured.
constexpr double kSkConstant = 2.0;

// Unit quaternion (w, x, y, z) of U / sqrt(det U) = w I - i (x X + y Y + z Z), sign fixed so the first
// component of magnitude above 1e-12 is positive.
Quat to_quaternion(const Eigen::Matrix2cd &m) {
    Complex det = m.determinant();
    Eigen::Matrix2cd u = m / std::sqrt(det);
    Quat q{((u(0, 0) + u(1, 1)) / 2.0).real(), (Complex(0, 1) * (u(0, 1) + u(1, 0)) / 2.0).real(),
           ((u(1, 0) - u(0, 1)) / 2.0).real(), (Complex(0, 1) * (u(0, 0) - u(1, 1)) / 2.0).real()};
    double norm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    for (double &c : q) c /= norm;
    for (double c : q) {
        if (std::abs(c) > 1e-12) {
            if (c < 0) {
                for (double &d : q) d = -d;
            }
            break;
        }
    }
    return q;
}

Eigen::Matrix2cd from_quaternion(const Quat &q) {
    const Complex i(0, 1);
    Eigen::Matrix2cd m;
    m << q[0] - i * q[3], -i * q[1] - q[2], -i * q[1] + q[2], q[0] + i * q[3];
    return m;
}

double quat_distance(const Quat &a, const Quat &b) {
    double dot = std::abs(a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]);
    return 2 * std::sin(std::acos(std::min(1.0, dot)) / 2);
}

// Rotation by `angle` about the unit `axis`: cos(angle/2) I - i sin(angle/2) axis . sigma.
Eigen::Matrix2cd rotation(const std::array<double, 3> &axis, double angle) {
    double s = std::sin(angle / 2);
    return from_quaternion({std::cos(angle / 2), s * axis[0], s * axis[1], s * axis[2]});
}

struct AxisAngle {
    std::array<double, 3> axis;
    double angle;
};

AxisAngle axis_angle(const Eigen::Matrix2cd &u) {
    Quat q = to_quaternion(u);
    if (q[0] < 0) {
        for (double &c : q) c = -c;
    }
    double s = std::sqrt(q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    double angle = 2 * std::atan2(s, q[0]);
    if (s < 1e-15) return {{0, 0, 1}, 0};
    return {{q[1] / s, q[2] / s, q[3] / s}, angle};
}

// Rotation S with S (a . sigma) S^dagger = b . sigma.
Eigen::Matrix2cd align_axes(const std::array<double, 3> &a, const std::array<double, 3> &b) {
    std::array<double, 3> cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    double len = std::sqrt(cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]);
    if (len < 1e-12) {
        if (dot > 0) return Eigen::Matrix2cd::Identity();
        // Antiparallel: half turn about any axis perpendicular to a.
        std::array<double, 3> p = std::abs(a[0]) < 0.9 ? std::array<double, 3>{0, -a[2], a[1]}
                                                       : std::array<double, 3>{-a[2], 0, a[0]};
        double pl = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        return rotation({p[0] / pl, p[1] / pl, p[2] / pl}, std::numbers::pi);
    }
    return rotation({cross[0] / len, cross[1] / len, cross[2] / len}, std::atan2(len, dot));
}

// Balanced group commutator: Delta = V W V^dagger W^dagger with V, W rotations by the same angle.
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> group_commutator(const Eigen::Matrix2cd &delta) {
    AxisAngle aa = axis_angle(delta);
    double u = (1 - std::cos(aa.angle / 2)) / 2;
    double phi = 2 * std::asin(std::pow(u, 0.25));
    Eigen::Matrix2cd v = rotation({1, 0, 0}, phi);
    Eigen::Matrix2cd w = rotation({0, 1, 0}, phi);
    Eigen::Matrix2cd comm = v * w * v.adjoint() * w.adjoint();
    Eigen::Matrix2cd s = align_axes(axis_angle(comm).axis, aa.axis);
    return {s * v * s.adjoint(), s * w * s.adjoint()};
}

GateWord sk_recurse(const Eigen::Matrix2cd &target, const BaseNet &net, uint32_t depth) {
    if (depth == 0) return net.word(net.nearest(target));
    GateWord prev = sk_recurse(target, net, depth - 1);
    auto [v, w] = group_commutator(target * prev.matrix.adjoint());
    GateWord vw = sk_recurse(v, net, depth - 1);
    GateWord ww = sk_recurse(w, net, depth - 1);
    // Matrix V W V^dagger W^dagger U_prev; in application order U_prev comes first.
    return prev.then(ww.inverse()).then(vw.inverse()).then(ww).then(vw);
}

std::string label_of(GateKind kind) {
    return std::string(mnemonic(kind));
}

GateKind kind_of_label(const std::string &label) {
    for (GateKind k : kNetGenerators) {
        if (mnemonic(k) == label) return k;
    }
    throw std::invalid_argument("unknown word label '" + label + "'");
}

}  // namespace

Eigen::Matrix2cd gate_matrix_2x2(GateKind kind, const GateDefinition &gdef) {
    const double r = std::sqrt(0.5);
    const Complex i(0, 1);
    Eigen::Matrix2cd m;
    switch (kind) {
        case GateKind::X:
            m << 0, 1, 1, 0;
            return m;
        case GateKind::H:
            m << r, r, r, -r;
            return m;
        case GateKind::S:
            m << 1, 0, 0, i;
            return m;
        case GateKind::SDG:
            m << 1, 0, 0, -i;
            return m;
        case GateKind::T:
            m << 1, 0, 0, Complex(r, r);
            return m;
        case GateKind::TDG:
            m << 1, 0, 0, Complex(r, -r);
            return m;
        case GateKind::G:
        case GateKind::GDG: {
            const auto &a = kind == GateKind::G ? gdef.matrix() : gdef.adjoint_matrix();
            m << a[0], a[1], a[2], a[3];
            return m;
        }
        default:
            throw std::invalid_argument("not a single-qubit gate: " + label_of(kind));
    }
}

double projective_distance(const Eigen::Matrix2cd &u, const Eigen::Matrix2cd &v) {
    return quat_distance(to_quaternion(u), to_quaternion(v));
}

GateWord GateWord::from_gates(std::vector<GateKind> gates, const GateDefinition &gdef) {
    GateWord w;
    for (GateKind k : gates) w.matrix = gate_matrix_2x2(k, gdef) * w.matrix;
    w.gates = std::move(gates);
    return w;
}

GateWord GateWord::inverse() const {
    GateWord w;
    w.gates.assign(gates.rbegin(), gates.rend());
    for (GateKind &k : w.gates) k = qhard::inverse(k);
    w.matrix = matrix.adjoint();
    return w;
}

GateWord GateWord::then(const GateWord &other) const {
    GateWord w;
    w.gates = gates;
    w.gates.insert(w.gates.end(), other.gates.begin(), other.gates.end());
    w.matrix = other.matrix * matrix;
    return w;
}

std::string GateWord::to_string() const {
    std::string s;
    for (GateKind k : gates) {
        if (!s.empty()) s += ' ';
        s += label_of(k);
    }
    return s;
}

BaseNet::BaseNet(const GateDefinition &gdef, uint32_t max_len, size_t max_entries) : gdef_(gdef), max_len_(max_len) {
    if (!gdef.is_non_clifford()) throw std::invalid_argument("base net needs a non-Clifford gate");
    if (max_len > 16) throw std::invalid_argument("base net length is limited to 16");

    // Quaternions are bucketed on a 1e-7 grid; a duplicate lies in the same bucket or, near a bucket edge,
    // in the neighbour across that edge.
    constexpr double kBucket = 1e-7;
    constexpr double kDuplicate = 1e-10;
    using Key = std::array<long long, 4>;
    struct KeyHash {
        size_t operator()(const Key &k) const {
            size_t h = 0;
            for (long long v : k) h = h * 1000003u ^ std::hash<long long>{}(v);
            return h;
        }
    };
    std::unordered_map<Key, std::vector<size_t>, KeyHash> buckets;
    auto home = [&](const Quat &q) {
        Key k;
        for (int c = 0; c < 4; c++) k[c] = static_cast<long long>(std::floor(q[c] / kBucket));
        return k;
    };
    auto is_new = [&](const Quat &q) {
        Key base = home(q);
        Key toward;
        for (int c = 0; c < 4; c++) toward[c] = q[c] / kBucket - static_cast<double>(base[c]) < 0.5 ? -1 : 1;
        for (int mask = 0; mask < 16; mask++) {
            Key k = base;
            for (int c = 0; c < 4; c++) {
                if ((mask >> c) & 1) k[c] += toward[c];
            }
            auto it = buckets.find(k);
            if (it == buckets.end()) continue;
            for (size_t idx : it->second) {
                if (quat_distance(q, quats_[idx]) < kDuplicate) return false;
            }
        }
        return true;
    };
    auto add = [&](GateWord w) {
        Quat q = to_quaternion(w.matrix);
        if (!is_new(q)) return false;
        buckets[home(q)].push_back(words_.size());
        quats_.push_back(q);
        words_.push_back(std::move(w));
        return true;
    };

    add(GateWord{});
    size_t level_begin = 0;
    for (uint32_t len = 1; len <= max_len && words_.size() < max_entries; len++) {
        size_t level_end = words_.size();
        for (size_t i = level_begin; i < level_end && words_.size() < max_entries; i++) {
            for (GateKind k : kNetGenerators) {
                if (words_.size() >= max_entries) break;
                GateWord w = words_[i];
                w.gates.push_back(k);
                w.matrix = gate_matrix_2x2(k, gdef_) * w.matrix;
                add(std::move(w));
            }
        }
        level_begin = level_end;
    }
}

BaseNet::BaseNet(const GateDefinition &gdef, uint32_t max_len, std::vector<GateWord> words)
    : gdef_(gdef), max_len_(max_len), words_(std::move(words)) {
    index_words();
}

void BaseNet::index_words() {
    quats_.clear();
    for (const auto &w : words_) quats_.push_back(to_quaternion(w.matrix));
}

size_t BaseNet::nearest(const Eigen::Matrix2cd &target) const {
    Quat q = to_quaternion(target);
    size_t best = 0;
    double best_dot = -1;
    for (size_t i = 0; i < quats_.size(); i++) {
        const Quat &p = quats_[i];
        double dot = std::abs(p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3]);
        if (dot > best_dot) {
            best_dot = dot;
            best = i;
        }
    }
    return best;
}

double BaseNet::covering_radius_estimate(size_t samples, uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    double worst = 0;
    for (size_t s = 0; s < samples; s++) {
        // Normalized Gaussian 4-vectors are uniform on SU(2), i.e. Haar distributed.
        Quat q{normal(rng), normal(rng), normal(rng), normal(rng)};
        double norm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
        for (double &c : q) c /= norm;
        Eigen::Matrix2cd target = from_quaternion(q);
        worst = std::max(worst, projective_distance(target, words_[nearest(target)].matrix));
    }
    return worst;
}

void BaseNet::require_covering(double eps0, size_t samples, uint64_t seed) const {
    double r = covering_radius_estimate(samples, seed);
    if (r > eps0) {
        std::ostringstream msg;
        msg << "base net too coarse: covering radius estimate " << r << " exceeds " << eps0;
        throw NetTooCoarseError(msg.str());
    }
}

nlohmann::json BaseNet::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["gate"] = gdef_.digest();
    j["max_len"] = max_len_;
    j["words"] = nlohmann::json::array();
    for (const auto &w : words_) j["words"].push_back(w.to_string());
    return j;
}

BaseNet BaseNet::from_json(const GateDefinition &gdef, const nlohmann::json &j) {
    if (j.at("gate").get<std::string>() != gdef.digest()) throw std::invalid_argument("net was built for another gate");
    std::vector<GateWord> words;
    for (const auto &text : j.at("words")) {
        std::istringstream in(text.get<std::string>());
        std::vector<GateKind> gates;
        std::string label;
        while (in >> label) gates.push_back(kind_of_label(label));
        words.push_back(GateWord::from_gates(std::move(gates), gdef));
    }
    return BaseNet(gdef, j.at("max_len").get<uint32_t>(), std::move(words));
}

std::shared_ptr<const BaseNet> load_base_net(const GateDefinition &gdef, uint32_t max_len,
                                             const std::filesystem::path &cache_dir) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const BaseNet>> memo;
    std::lock_guard<std::mutex> lock(mu);
    const std::string key = gdef.digest() + "_" + std::to_string(max_len);
    const std::string memo_key = cache_dir.string() + "|" + key;
    if (auto it = memo.find(memo_key); it != memo.end()) return it->second;

    std::shared_ptr<const BaseNet> net;
    const auto path = cache_dir / ("net_" + key + ".json");
    if (!cache_dir.empty()) {
        std::ifstream in(path);
        if (in) {
            try {
                net = std::make_shared<BaseNet>(BaseNet::from_json(gdef, nlohmann::json::parse(in)));
            } catch (const std::exception &) {
                net.reset();
            }
        }
    }
    if (!net) {
        net = std::make_shared<BaseNet>(gdef, max_len);
        if (!cache_dir.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(cache_dir, ec);
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (out) out << net->to_json().dump() << "\n";
        }
    }
    memo[memo_key] = net;
    return net;
}

SkResult sk_at_depth(const Eigen::Matrix2cd &target, const BaseNet &net, uint32_t depth) {
    if (depth > kMaxSkDepth) throw std::invalid_argument("Solovay-Kitaev depth is limited to 5");
    std::optional<SkResult> best;
    for (uint32_t d = 0; d <= depth; d++) {
        GateWord w = sk_recurse(target, net, d);
        double err = phase_min_distance(target, w.matrix).distance;
        if (!best || err < best->error) best = SkResult{std::move(w), err, d};
        if (best->error == 0) break;
    }
    return *best;
}

SkResult sk_approximate(const Eigen::Matrix2cd &target, const BaseNet &net, double eps, std::optional<uint32_t> depth) {
    if (!(eps > 0)) throw std::invalid_argument("epsilon must be positive");
    uint32_t start = 0;
    if (depth) {
        start = *depth;
    } else {
        double e = net.covering_radius_estimate(200, 1);
        while (e > eps && start < kMaxSkDepth && kSkConstant * std::pow(e, 1.5) < e) {
            e = kSkConstant * std::pow(e, 1.5);
            start++;
        }
    }
    SkResult result = sk_at_depth(target, net, start);
    uint32_t limit = depth ? *depth : kMaxSkDepth;
    for (uint32_t d = start + 1; result.error > eps && d <= limit; d++) {
        SkResult deeper = sk_at_depth(target, net, d);
        if (deeper.error < result.error) result = std::move(deeper);
    }
    if (result.error > eps) {
        std::ostringstream msg;
        msg << "cannot certify epsilon " << eps << ": best measured error " << result.error << " at depth "
            << result.depth;
        throw BudgetExceededError(msg.str());
    }
    return result;
}

Translation translate_circuit(const Circuit &circuit, const BaseNet &net, double eps_total) {
    Translation out{Circuit(circuit.num_wires()), {}, 0};
    out.circuit.set_roles(circuit.roles());
    out.circuit.set_name(circuit.name());
    const size_t t_count = count(circuit, kTGates);
    std::optional<SkResult> t_word;
    if (t_count > 0) {
        t_word = sk_approximate(gate_matrix_2x2(GateKind::T, net.gate()), net, eps_total / static_cast<double>(t_count));
    }
    for (const Gate &g : circuit.gates()) {
        if (g.kind != GateKind::T && g.kind != GateKind::TDG) {
            out.circuit.append(g);
            continue;
        }
        // The adjoint word approximates T^dagger with the same error.
        GateWord w = g.kind == GateKind::T ? t_word->word : t_word->word.inverse();
        for (GateKind k : w.gates) out.circuit.append(k, {g.wires[0]});
        out.gate_errors.push_back(t_word->error);
        out.error_bound += t_word->error;
    }
    return out;
}

}  // namespace qhard
