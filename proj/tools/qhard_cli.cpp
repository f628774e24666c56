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

// Command-line front end. Exit codes: 0 success or SAT, 1 property false / UNSAT / count exceeds k-max,
// 2 input error, 3 resource cap.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhard/boolfn.hpp"
#include "qhard/circuit.hpp"
#include "qhard/clifford.hpp"
#include "qhard/exact.hpp"
#include "qhard/numeric.hpp"
#include "qhard/report.hpp"
#include "qhard/search.hpp"
#include "qhard/sk.hpp"
#include "qhard/synth.hpp"

namespace {

using namespace qhard;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

struct Common {
    std::string cache_dir = ".cache";
    uint64_t seed = 20260101;
    uint32_t net_len = 12;
};

struct FormulaArgs {
    std::string formula;
    std::string dimacs;
    std::string variant = "t";
    std::string gate;
    double epsilon = 0.1;
};

BoolExpr load_formula(const FormulaArgs &a) {
    if (a.formula.empty() == a.dimacs.empty()) throw InputError("give exactly one of --formula and --dimacs");
    return a.formula.empty() ? parse_dimacs(read_file(a.dimacs)) : parse_expr(a.formula);
}

GateDefinition load_gate(const std::string &spec) {
    if (spec.empty() || spec == "sqrt_t") return GateDefinition::sqrt_t();
    return GateDefinition::from_json(json::parse(read_file(spec)));
}

void add_formula_options(CLI::App *cmd, FormulaArgs &a) {
    cmd->add_option("--variant", a.variant, "t, tof, ent, h or g")->check(CLI::IsMember({"t", "tof", "ent", "h", "g"}));
    cmd->add_option("--formula", a.formula, "formula over x0, x1, ... with ~ & | ^ and parentheses");
    cmd->add_option("--dimacs", a.dimacs, "DIMACS CNF file");
    cmd->add_option("--gate", a.gate, "gate definition JSON for the g variant (default: sqrt_t)");
    cmd->add_option("--epsilon", a.epsilon, "error budget for the g variant")->check(CLI::PositiveNumber);
}

// Keeps the net alive alongside the options that point at it.
struct GContext {
    std::shared_ptr<const BaseNet> net;
    GVariantOptions options;
};

std::optional<GContext> g_context(const FormulaArgs &a, const Common &c) {
    if (a.variant != "g") return std::nullopt;
    GContext ctx;
    ctx.net = load_base_net(load_gate(a.gate), c.net_len, c.cache_dir);
    ctx.options = {ctx.net.get(), a.epsilon};
    return ctx;
}

int run_reduce(const FormulaArgs &a, const Common &c, const std::string &out) {
    BoolExpr f = load_formula(a);
    auto g = g_context(a, c);
    ReductionInstance inst = build_reduction(f, parse_variant(a.variant), g ? &g->options : nullptr);
    std::string text = emit_circuit(inst.circuit);
    if (out.empty()) {
        std::cout << text;
    } else {
        write_file(out, text);
        write_file(out + ".json", inst.sidecar().dump(2) + "\n");
    }
    return kExitOk;
}

int run_decide(const FormulaArgs &a, const Common &c) {
    BoolExpr f = load_formula(a);
    auto g = g_context(a, c);
    SatDecision d = decide_sat(f, parse_variant(a.variant), g ? &g->options : nullptr);
    std::cout << (d.satisfiable ? "SAT" : "UNSAT") << "\n" << d.trace.dump(2) << "\n";
    return d.satisfiable ? kExitOk : kExitFalse;
}

int run_analyze(const std::string &path, const std::string &gate, const Common &c) {
    Circuit circuit = parse_circuit(read_file(path));
    std::optional<GateDefinition> gdef;
    if (count(circuit, kNonCliffordResourceGates) > 0) gdef = load_gate(gate);
    AnalysisOptions opts;
    opts.gate = gdef ? &*gdef : nullptr;
    opts.cache_dir = c.cache_dir;
    std::cout << analyze(circuit, opts).to_json().dump(2) << "\n";
    return kExitOk;
}

int run_mincount(const std::string &kind, const std::string &path, const SearchBudget &budget, const Common &c) {
    Circuit circuit = parse_circuit(read_file(path));
    CountResult r;
    if (kind == "tof") {
        r = exact_min_tofcount(permutation_of(circuit), budget);
    } else {
        const uint32_t n = circuit.num_wires();
        if (n < 1 || n > 2) throw InputError("t and h counts support one or two qubits");
        ExactUnitary u = exact_simulate(circuit);
        if (kind == "t") {
            r = exact_min_tcount(u, load_clifford_catalog(n, c.cache_dir), budget);
        } else {
            r = exact_min_hcount(u, std::make_shared<const HFreeCatalog>(hfree_closure(n)), budget);
        }
    }
    json j{{"schema", kReportSchema},
           {"kind", kind},
           {"k_max", budget.k_max},
           {"status", status_name(r.status)},
           {"count", r.found() ? json(r.count) : json(nullptr)},
           {"nodes", r.nodes}};
    std::cout << j.dump(2) << "\n";
    switch (r.status) {
        case CountResult::Status::Found:
            return kExitOk;
        case CountResult::Status::Exceeds:
            return kExitFalse;
        case CountResult::Status::CapExhausted:
            return kExitCap;
    }
    return kExitCap;
}

GateKind parse_target(const std::string &name) {
    for (GateKind k : {GateKind::X, GateKind::H, GateKind::S, GateKind::SDG, GateKind::T, GateKind::TDG}) {
        if (mnemonic(k) == name) return k;
    }
    throw InputError("unknown single-qubit target: " + name);
}

int run_sk(const std::string &gate, const std::string &target, double eps, std::optional<uint32_t> depth,
           const Common &c) {
    GateDefinition gdef = load_gate(gate);
    auto net = load_base_net(gdef, c.net_len, c.cache_dir);
    Eigen::Matrix2cd m = gate_matrix_2x2(parse_target(target), gdef);
    SkResult r = sk_approximate(m, *net, eps, depth);
    json j{{"schema", kReportSchema},
           {"gate", gdef.label()},
           {"target", target},
           {"epsilon", eps},
           {"word", r.word.to_string()},
           {"length", r.word.gates.size()},
           {"error", r.error},
           {"depth", r.depth},
           {"net_size", net->size()},
           {"covering_estimate", net->covering_radius_estimate(1000, c.seed)}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_distance(const std::string &p1, const std::string &p2, const std::string &gate) {
    Circuit a = parse_circuit(read_file(p1));
    Circuit b = parse_circuit(read_file(p2));
    if (a.num_wires() != b.num_wires()) throw InputError("circuits have different wire counts");
    std::optional<GateDefinition> gdef;
    if (count(a, kNonCliffordResourceGates) + count(b, kNonCliffordResourceGates) > 0) gdef = load_gate(gate);
    const GateDefinition *g = gdef ? &*gdef : nullptr;
    PhaseDistance d = phase_min_distance(numeric_simulate(a, g), numeric_simulate(b, g));
    json j{{"schema", kReportSchema}, {"distance", d.distance}, {"alpha", d.alpha}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qhard: reductions from satisfiability to circuit optimization, with exact and numeric checks"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--cache-dir", common.cache_dir, "directory for catalog and net caches");
    app.add_option("--seed", common.seed, "seed for sampling steps");
    app.add_option("--net-length", common.net_len, "maximal word length of the base net")
        ->check(CLI::Range(1, 16));

    FormulaArgs reduce_args, decide_args;
    std::string out;
    auto *reduce = app.add_subcommand("reduce", "build the reduction circuit for a formula");
    add_formula_options(reduce, reduce_args);
    reduce->add_option("--out", out, "circuit file to write; FILE.json receives the sidecar");

    auto *decide = app.add_subcommand("decide-sat", "decide satisfiability through the zero-cost oracle");
    add_formula_options(decide, decide_args);

    std::string analyze_path, analyze_gate;
    auto *an = app.add_subcommand("analyze", "report exact and numeric properties of a circuit");
    an->add_option("circuit", analyze_path)->required();
    an->add_option("--gate", analyze_gate, "gate definition for g/gdg");

    std::string count_kind, count_path;
    SearchBudget budget;
    auto *mc = app.add_subcommand("mincount", "minimal t, h or tof count");
    mc->add_option("kind", count_kind)->required()->check(CLI::IsMember({"t", "h", "tof"}));
    mc->add_option("circuit", count_path)->required();
    mc->add_option("--k-max", budget.k_max, "largest count searched");
    mc->add_option("--node-cap", budget.node_cap, "node budget");
    mc->add_option("--time-cap", budget.time_cap_seconds, "time budget in seconds");

    std::string sk_gate, sk_target = "t";
    double sk_eps = 0.01;
    std::optional<uint32_t> sk_depth;
    auto *skc = app.add_subcommand("sk", "approximate a single-qubit gate over Clifford+G");
    skc->add_option("--gate", sk_gate, "gate definition JSON (default: sqrt_t)");
    skc->add_option("--target", sk_target, "x, h, s, sdg, t or tdg");
    skc->add_option("--epsilon", sk_eps)->check(CLI::PositiveNumber);
    skc->add_option("--depth", sk_depth, "fixed recursion depth");

    std::string d1, d2, d_gate;
    auto *dist = app.add_subcommand("distance", "phase-minimized operator-norm distance of two circuits");
    dist->add_option("first", d1)->required();
    dist->add_option("second", d2)->required();
    dist->add_option("--gate", d_gate, "gate definition for g/gdg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*reduce) return run_reduce(reduce_args, common, out);
        if (*decide) return run_decide(decide_args, common);
        if (*an) return run_analyze(analyze_path, analyze_gate, common);
        if (*mc) return run_mincount(count_kind, count_path, budget, common);
        if (*skc) return run_sk(sk_gate, sk_target, sk_eps, sk_depth, common);
        if (*dist) return run_distance(d1, d2, d_gate);
    } catch (const BudgetExceededError &e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const NetTooCoarseError &e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
