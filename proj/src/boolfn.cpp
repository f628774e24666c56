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

#include "qhard/boolfn.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace qhard {

ParseError::ParseError(const std::string &message, size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"), position_(position) {
}

struct BoolExpr::Node {
    Kind kind;
    uint32_t index = 0;
    bool value = false;
    std::vector<BoolExpr> children;
};

BoolExpr::BoolExpr(std::shared_ptr<const Node> node, uint32_t num_vars) : node_(std::move(node)), num_vars_(num_vars) {
}

BoolExpr BoolExpr::variable(uint32_t index) {
    if (index >= kMaxVariableIndex) {
        throw std::out_of_range("variable index x" + std::to_string(index) + " is too large");
    }
    return BoolExpr(std::make_shared<const Node>(Node{Kind::Var, index, false, {}}), index + 1);
}

BoolExpr BoolExpr::constant(bool value) {
    return BoolExpr(std::make_shared<const Node>(Node{Kind::Const, 0, value, {}}), 0);
}

BoolExpr BoolExpr::negation(BoolExpr operand) {
    uint32_t v = operand.num_vars_;
    return BoolExpr(std::make_shared<const Node>(Node{Kind::Not, 0, false, {std::move(operand)}}), v);
}

namespace {

BoolExpr::Kind check_nary(BoolExpr::Kind kind, const std::vector<BoolExpr> &operands) {
    if (operands.empty()) {
        throw std::invalid_argument("n-ary Boolean operator needs at least one operand");
    }
    return kind;
}

}  // namespace

BoolExpr BoolExpr::conjunction(std::vector<BoolExpr> operands) {
    if (operands.size() == 1) {
        return operands[0];
    }
    uint32_t v = 0;
    for (const auto &e : operands) {
        v = std::max(v, e.num_vars_);
    }
    auto kind = check_nary(Kind::And, operands);
    return BoolExpr(std::make_shared<const Node>(Node{kind, 0, false, std::move(operands)}), v);
}

BoolExpr BoolExpr::disjunction(std::vector<BoolExpr> operands) {
    if (operands.size() == 1) {
        return operands[0];
    }
    uint32_t v = 0;
    for (const auto &e : operands) {
        v = std::max(v, e.num_vars_);
    }
    auto kind = check_nary(Kind::Or, operands);
    return BoolExpr(std::make_shared<const Node>(Node{kind, 0, false, std::move(operands)}), v);
}

BoolExpr BoolExpr::exclusive_or(std::vector<BoolExpr> operands) {
    if (operands.size() == 1) {
        return operands[0];
    }
    uint32_t v = 0;
    for (const auto &e : operands) {
        v = std::max(v, e.num_vars_);
    }
    auto kind = check_nary(Kind::Xor, operands);
    return BoolExpr(std::make_shared<const Node>(Node{kind, 0, false, std::move(operands)}), v);
}

BoolExpr::Kind BoolExpr::kind() const {
    return node_->kind;
}

uint32_t BoolExpr::index() const {
    return node_->index;
}

bool BoolExpr::value() const {
    return node_->value;
}

std::span<const BoolExpr> BoolExpr::children() const {
    return node_->children;
}

BoolExpr BoolExpr::with_num_vars(uint32_t num_vars) const {
    if (num_vars < num_vars_) {
        throw std::invalid_argument(
            "declared variable count " + std::to_string(num_vars) + " is smaller than the formula's " +
            std::to_string(num_vars_));
    }
    return BoolExpr(node_, num_vars);
}

bool BoolExpr::evaluate(uint64_t assignment) const {
    const Node &n = *node_;
    switch (n.kind) {
        case Kind::Var:
            return n.index < 64 && ((assignment >> n.index) & 1);
        case Kind::Const:
            return n.value;
        case Kind::Not:
            return !n.children[0].evaluate(assignment);
        case Kind::And:
            return std::all_of(n.children.begin(), n.children.end(), [&](const BoolExpr &c) {
                return c.evaluate(assignment);
            });
        case Kind::Or:
            return std::any_of(n.children.begin(), n.children.end(), [&](const BoolExpr &c) {
                return c.evaluate(assignment);
            });
        case Kind::Xor: {
            bool acc = false;
            for (const auto &c : n.children) {
                acc ^= c.evaluate(assignment);
            }
            return acc;
        }
    }
    return false;
}

bool BoolExpr::evaluate(std::span<const uint8_t> bits) const {
    if (bits.size() < num_vars_) {
        throw std::invalid_argument("assignment shorter than the variable count");
    }
    if (bits.size() > 64) {
        throw std::invalid_argument("assignments longer than 64 bits are not supported");
    }
    return evaluate(assignment_index(bits));
}

namespace {

// Binding strength used when emitting; larger binds tighter.
int precedence(BoolExpr::Kind kind) {
    switch (kind) {
        case BoolExpr::Kind::Or:
            return 1;
        case BoolExpr::Kind::Xor:
            return 2;
        case BoolExpr::Kind::And:
            return 3;
        default:
            return 4;
    }
}

void emit(const BoolExpr &e, std::ostream &out) {
    switch (e.kind()) {
        case BoolExpr::Kind::Var:
            out << 'x' << e.index();
            return;
        case BoolExpr::Kind::Const:
            out << (e.value() ? '1' : '0');
            return;
        case BoolExpr::Kind::Not: {
            out << '~';
            const BoolExpr &c = e.children()[0];
            bool paren = precedence(c.kind()) < 4;
            if (paren) out << '(';
            emit(c, out);
            if (paren) out << ')';
            return;
        }
        default:
            break;
    }
    const char *op = e.kind() == BoolExpr::Kind::And ? " & " : e.kind() == BoolExpr::Kind::Or ? " | " : " ^ ";
    bool first = true;
    for (const auto &c : e.children()) {
        if (!first) out << op;
        first = false;
        bool paren = precedence(c.kind()) <= precedence(e.kind());
        if (paren) out << '(';
        emit(c, out);
        if (paren) out << ')';
    }
}

class FormulaParser {
   public:
    explicit FormulaParser(std::string_view text) : text_(text) {
    }

    BoolExpr parse() {
        BoolExpr e = parse_or();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        }
        return e;
    }

   private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BoolExpr parse_or() {
        std::vector<BoolExpr> terms{parse_xor()};
        while (accept('|')) {
            terms.push_back(parse_xor());
        }
        return BoolExpr::disjunction(std::move(terms));
    }

    BoolExpr parse_xor() {
        std::vector<BoolExpr> terms{parse_and()};
        while (accept('^')) {
            terms.push_back(parse_and());
        }
        return BoolExpr::exclusive_or(std::move(terms));
    }

    BoolExpr parse_and() {
        std::vector<BoolExpr> terms{parse_unary()};
        while (accept('&')) {
            terms.push_back(parse_unary());
        }
        return BoolExpr::conjunction(std::move(terms));
    }

    BoolExpr parse_unary() {
        if (accept('~')) {
            return BoolExpr::negation(parse_unary());
        }
        return parse_atom();
    }

    BoolExpr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
            throw ParseError("unexpected end of formula", pos_);
        }
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            BoolExpr inner = parse_or();
            if (!accept(')')) {
                throw ParseError("expected ')'", pos_);
            }
            return inner;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            return BoolExpr::constant(c == '1');
        }
        if (c == 'x') {
            size_t start = pos_++;
            size_t digits_begin = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (pos_ == digits_begin) {
                throw ParseError("expected variable index after 'x'", pos_);
            }
            uint64_t index = 0;
            auto [ptr, ec] = std::from_chars(text_.data() + digits_begin, text_.data() + pos_, index);
            (void)ptr;
            if (ec != std::errc() || index >= kMaxVariableIndex) {
                throw ParseError("variable index overflow", start);
            }
            return BoolExpr::variable(static_cast<uint32_t>(index));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

std::string BoolExpr::to_string() const {
    std::ostringstream out;
    emit(*this, out);
    return out.str();
}

BoolExpr parse_expr(std::string_view text) {
    return FormulaParser(text).parse();
}

BoolExpr parse_dimacs(std::string_view text) {
    std::optional<uint32_t> num_vars;
    uint64_t declared_clauses = 0;
    std::vector<BoolExpr> clauses;
    std::vector<BoolExpr> current;
    bool clause_open = false;
    size_t pos = 0;
    size_t line_start = 0;

    while (line_start < text.size()) {
        size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        size_t offset = line_start;
        line_start = line_end + 1;

        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        char lead = line[first];
        if (lead == 'c') continue;
        if (lead == '%') break;  // SATLIB trailer
        if (lead == 'p') {
            if (num_vars) throw ParseError("duplicate problem line", offset);
            std::istringstream header{std::string(line.substr(first))};
            std::string p, fmt;
            int64_t v = -1, c = -1;
            header >> p >> fmt >> v >> c;
            std::string rest;
            if (!header || p != "p" || fmt != "cnf" || v < 0 || c < 0 || (header >> rest)) {
                throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'", offset);
            }
            if (static_cast<uint64_t>(v) > kMaxVariableIndex) {
                throw ParseError("variable index overflow", offset);
            }
            num_vars = static_cast<uint32_t>(v);
            declared_clauses = static_cast<uint64_t>(c);
            continue;
        }
        if (!num_vars) throw ParseError("clause before the 'p cnf' header", offset);

        pos = first;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos >= line.size()) break;
            size_t tok_begin = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            std::string_view tok = line.substr(tok_begin, pos - tok_begin);
            int64_t lit = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw ParseError("invalid literal '" + std::string(tok) + "'", offset + tok_begin);
            }
            if (lit == 0) {
                clauses.push_back(current.empty() ? BoolExpr::constant(false) : BoolExpr::disjunction(current));
                current.clear();
                clause_open = false;
                continue;
            }
            uint64_t var = static_cast<uint64_t>(lit < 0 ? -lit : lit);
            if (var > *num_vars) {
                throw ParseError("literal " + std::string(tok) + " out of range", offset + tok_begin);
            }
            BoolExpr x = BoolExpr::variable(static_cast<uint32_t>(var - 1));
            current.push_back(lit < 0 ? BoolExpr::negation(std::move(x)) : std::move(x));
            clause_open = true;
        }
    }
    if (!num_vars) throw ParseError("missing 'p cnf' header", 0);
    if (clause_open) throw ParseError("missing clause terminator '0'", text.size());
    if (clauses.size() != declared_clauses) {
        throw ParseError(
            "header declares " + std::to_string(declared_clauses) + " clauses but " +
                std::to_string(clauses.size()) + " were given",
            text.size());
    }
    BoolExpr f = clauses.empty() ? BoolExpr::constant(true) : BoolExpr::conjunction(std::move(clauses));
    return f.with_num_vars(std::max(*num_vars, f.num_vars()));
}

bool TruthTable::is_constant() const {
    return std::all_of(bits.begin(), bits.end(), [&](uint8_t b) {
        return b == bits.front();
    });
}

TruthTable truth_table(const BoolExpr &f) {
    if (f.num_vars() > kMaxTableVars) {
        throw std::length_error(
            "truth table over " + std::to_string(f.num_vars()) + " variables exceeds the limit of " +
            std::to_string(kMaxTableVars));
    }
    TruthTable table{f.num_vars(), std::vector<uint8_t>(size_t{1} << f.num_vars())};
    for (size_t i = 0; i < table.bits.size(); i++) {
        table.bits[i] = f.evaluate(static_cast<uint64_t>(i));
    }
    return table;
}

std::optional<std::vector<uint8_t>> brute_sat(const BoolExpr &f) {
    if (f.num_vars() > kMaxTableVars) {
        throw std::length_error("brute force limited to " + std::to_string(kMaxTableVars) + " variables");
    }
    uint64_t n = uint64_t{1} << f.num_vars();
    for (uint64_t i = 0; i < n; i++) {
        if (f.evaluate(i)) {
            return assignment_bits(i, f.num_vars());
        }
    }
    return std::nullopt;
}

std::variant<WitnessPair, ConstantFunction> find_witness_pair(const BoolExpr &f) {
    TruthTable table = truth_table(f);
    auto one = std::find(table.bits.begin(), table.bits.end(), 1);
    auto zero = std::find(table.bits.begin(), table.bits.end(), 0);
    if (one == table.bits.end()) return ConstantFunction{false};
    if (zero == table.bits.end()) return ConstantFunction{true};
    return WitnessPair{
        assignment_bits(static_cast<uint64_t>(one - table.bits.begin()), f.num_vars()),
        assignment_bits(static_cast<uint64_t>(zero - table.bits.begin()), f.num_vars())};
}

std::vector<uint8_t> assignment_bits(uint64_t index, uint32_t num_bits) {
    std::vector<uint8_t> bits(num_bits);
    for (uint32_t i = 0; i < num_bits && i < 64; i++) {
        bits[i] = (index >> i) & 1;
    }
    return bits;
}

uint64_t assignment_index(std::span<const uint8_t> bits) {
    uint64_t index = 0;
    for (size_t i = 0; i < bits.size() && i < 64; i++) {
        if (bits[i]) index |= uint64_t{1} << i;
    }
    return index;
}

}  // namespace qhard
