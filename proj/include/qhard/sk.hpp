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

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qhard/circuit.hpp"

namespace qhard {

class BudgetExceededError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NetTooCoarseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A single-qubit word over {h, s, sdg, g, gdg} in application order, with its cached matrix product.
struct GateWord {
    std::vector<GateKind> gates;
    Eigen::Matrix2cd matrix = Eigen::Matrix2cd::Identity();

    static GateWord from_gates(std::vector<GateKind> gates, const GateDefinition &gdef);
    GateWord inverse() const;
    /// `other` applied after this word.
    GateWord then(const GateWord &other) const;
    /// Space-separated mnemonics, e.g. "h g s".
    std::string to_string() const;
};

Eigen::Matrix2cd gate_matrix_2x2(GateKind kind, const GateDefinition &gdef);

/// Phase-invariant distance min_alpha ||U - e^{i alpha} V|| for 2x2 unitaries, in closed form.
double projective_distance(const Eigen::Matrix2cd &u, const Eigen::Matrix2cd &v);

/// All words up to a length bound, deduplicated modulo global phase, with nearest-neighbour lookup.
class BaseNet {
   public:
    /// Words are generated breadth-first by length; the first word reaching each element (to within
    /// 1e-10) is kept. Generation stops early once `max_entries` elements are stored.
    BaseNet(const GateDefinition &gdef, uint32_t max_len, size_t max_entries = kDefaultMaxEntries);

    static constexpr size_t kDefaultMaxEntries = 60000;

    const GateDefinition &gate() const {
        return gdef_;
    }
    uint32_t max_len() const {
        return max_len_;
    }
    size_t size() const {
        return words_.size();
    }
    const GateWord &word(size_t i) const {
        return words_[i];
    }
    /// Index of the element nearest to `target` (first in generation order on ties).
    size_t nearest(const Eigen::Matrix2cd &target) const;

    /// Largest nearest-neighbour distance over `samples` Haar-random targets drawn from `seed`.
    double covering_radius_estimate(size_t samples, uint64_t seed) const;
    /// Throws NetTooCoarseError when the covering estimate exceeds `eps0`.
    void require_covering(double eps0, size_t samples, uint64_t seed) const;

    nlohmann::json to_json() const;
    static BaseNet from_json(const GateDefinition &gdef, const nlohmann::json &j);

   private:
    BaseNet(const GateDefinition &gdef, uint32_t max_len, std::vector<GateWord> words);
    void index_words();

    GateDefinition gdef_;
    uint32_t max_len_;
    std::vector<GateWord> words_;
    std::vector<std::array<double, 4>> quats_;
};

/// Loads the net for (gate digest, max_len) from the cache directory, building and writing it on a miss.
std::shared_ptr<const BaseNet> load_base_net(const GateDefinition &gdef, uint32_t max_len,
                                             const std::filesystem::path &cache_dir);

struct SkResult {
    GateWord word;
    /// Measured phase_min_distance between the word product and the target.
    double error = 0;
    /// Recursion depth of the returned word.
    uint32_t depth = 0;
};

inline constexpr uint32_t kMaxSkDepth = 5;

/// Solovay-Kitaev approximation at a fixed recursion depth. Returns the best verified word over depths
/// 0..depth, so the error never grows with depth.
SkResult sk_at_depth(const Eigen::Matrix2cd &target, const BaseNet &net, uint32_t depth);

/// Approximates `target` within eps. Without an explicit depth, the depth follows the schedule
/// eps_{k+1} = c eps_k^{3/2} from the net's covering estimate and is raised until the measured error meets
/// eps or kMaxSkDepth is reached. Throws BudgetExceededError when no word within eps is found.
SkResult sk_approximate(const Eigen::Matrix2cd &target, const BaseNet &net, double eps,
                        std::optional<uint32_t> depth = std::nullopt);

struct Translation {
    Circuit circuit;
    /// Measured error of each substituted word, in gate order.
    std::vector<double> gate_errors;
    /// Sum of gate_errors; bounds the operator-norm distance of the whole circuit.
    double error_bound = 0;
};

/// Replaces every t/tdg gate by a Clifford+G word, each within eps_total / t_count of its target.
Translation translate_circuit(const Circuit &circuit, const BaseNet &net, double eps_total);

}  // namespace qhard
