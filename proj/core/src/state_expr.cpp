// Copyright 2026 The Cheshire Simulator Authors
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

#include "cheshire/state_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <variant>
#include <vector>

#include "cheshire/errors.hpp"

namespace cheshire {

namespace {

struct Token {
    enum Type { Word, Number, Plus, Minus, Star, Slash, LParen, RParen, Tensor, End };
    Type type;
    std::string text;
    double number = 0;
    int column = 0;
};

std::vector<Token> lex(std::string_view text, int line, int column_offset) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < text.size()) {
        char c = text[k];
        int col = column_offset + static_cast<int>(k) + 1;
        if (c == ' ' || c == '\t') {
            k++;
            continue;
        }
        if (c == '(' && k + 2 < text.size() && text[k + 1] == 'x' && text[k + 2] == ')') {
            out.push_back({Token::Tensor, "(x)", 0, col});
            k += 3;
            continue;
        }
        switch (c) {
            case '(':
                out.push_back({Token::LParen, "(", 0, col});
                k++;
                continue;
            case ')':
                out.push_back({Token::RParen, ")", 0, col});
                k++;
                continue;
            case '+':
                out.push_back({Token::Plus, "+", 0, col});
                k++;
                continue;
            case '-':
                out.push_back({Token::Minus, "-", 0, col});
                k++;
                continue;
            case '*':
                out.push_back({Token::Star, "*", 0, col});
                k++;
                continue;
            case '/':
                out.push_back({Token::Slash, "/", 0, col});
                k++;
                continue;
            default:
                break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = k;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                k++;
            }
            if (k < text.size() && text[k] == '.') {
                k++;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                    k++;
                }
            }
            if (k < text.size() && (text[k] == 'e' || text[k] == 'E')) {
                std::size_t mark = k;
                k++;
                if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
                    k++;
                }
                if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                        k++;
                    }
                } else {
                    k = mark;  // not an exponent after all
                }
            }
            std::string word(text.substr(start, k - start));
            out.push_back({Token::Number, word, std::strtod(word.c_str(), nullptr), col});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = k;
            while (k < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) {
                k++;
            }
            out.push_back({Token::Word, std::string(text.substr(start, k - start)), 0, col});
            continue;
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::End, "", 0, column_offset + static_cast<int>(text.size()) + 1});
    return out;
}

using Value = std::variant<Complex, LabeledState>;

bool is_scalar(const Value &v) {
    return std::holds_alternative<Complex>(v);
}

class ExprParser {
   public:
    ExprParser(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

    LabeledState parse() {
        Value v = parse_expr();
        if (peek().type != Token::End) {
            throw ParseError(line_, peek().column, "unexpected token '" + peek().text + "'");
        }
        if (is_scalar(v)) {
            throw ParseError(line_, tokens_.front().column,
                             "expression is a plain scalar, expected a state");
        }
        return std::get<LabeledState>(std::move(v));
    }

   private:
    const Token &peek() const { return tokens_[pos_]; }
    const Token &advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(line_, peek().column, msg);
    }

    Value parse_expr() {
        Value left = parse_term();
        while (peek().type == Token::Plus || peek().type == Token::Minus) {
            bool minus = advance().type == Token::Minus;
            Value right = parse_term();
            if (is_scalar(left) && is_scalar(right)) {
                Complex r = std::get<Complex>(right);
                left = std::get<Complex>(left) + (minus ? -r : r);
            } else if (!is_scalar(left) && !is_scalar(right)) {
                const LabeledState &l = std::get<LabeledState>(left);
                const LabeledState &r = std::get<LabeledState>(right);
                if (l.space() != r.space()) {
                    fail("cannot add states over different factors (" + l.space().str() +
                         " vs " + r.space().str() + ")");
                }
                left = minus ? l - r : l + r;
            } else {
                fail("cannot add a scalar and a state");
            }
        }
        return left;
    }

    Value parse_term() {
        Value left = parse_unary();
        while (peek().type == Token::Star || peek().type == Token::Tensor) {
            bool is_tensor = advance().type == Token::Tensor;
            Value right = parse_unary();
            if (is_tensor) {
                if (is_scalar(left) || is_scalar(right)) {
                    fail("(x) needs a state on both sides");
                }
                left = tensor(std::get<LabeledState>(left), std::get<LabeledState>(right));
            } else if (is_scalar(left) && is_scalar(right)) {
                left = std::get<Complex>(left) * std::get<Complex>(right);
            } else if (is_scalar(left)) {
                left = std::get<LabeledState>(right).scaled(std::get<Complex>(left));
            } else if (is_scalar(right)) {
                left = std::get<LabeledState>(left).scaled(std::get<Complex>(right));
            } else {
                fail("use (x) for tensor products of states");
            }
        }
        return left;
    }

    Value parse_unary() {
        if (peek().type == Token::Minus) {
            advance();
            Value v = parse_unary();
            if (is_scalar(v)) {
                return -std::get<Complex>(v);
            }
            return std::get<LabeledState>(v).scaled(Complex{-1, 0});
        }
        return parse_postfix();
    }

    Value parse_postfix() {
        Value v = parse_primary();
        while (peek().type == Token::Slash) {
            advance();
            double divisor = parse_divisor();
            Complex factor{1.0 / divisor, 0};
            if (is_scalar(v)) {
                v = std::get<Complex>(v) * factor;
            } else {
                v = std::get<LabeledState>(v).scaled(factor);
            }
        }
        return v;
    }

    double parse_divisor() {
        const Token &t = peek();
        if (t.type == Token::Number) {
            advance();
            if (t.number == 0) {
                fail("division by zero");
            }
            return t.number;
        }
        if (t.type == Token::Word) {
            double root = sqrt_word(t.text);
            if (root > 0) {
                advance();
                return root;
            }
        }
        fail("expected a number or sqrtN after '/'");
    }

    static double sqrt_word(const std::string &word) {
        if (word.size() < 5 || word.compare(0, 4, "sqrt") != 0) {
            return -1;
        }
        for (std::size_t k = 4; k < word.size(); k++) {
            if (!std::isdigit(static_cast<unsigned char>(word[k]))) {
                return -1;
            }
        }
        double n = std::strtod(word.c_str() + 4, nullptr);
        return n > 0 ? std::sqrt(n) : -1;
    }

    Value parse_primary() {
        const Token &t = peek();
        if (t.type == Token::Number) {
            advance();
            return Complex{t.number, 0};
        }
        if (t.type == Token::LParen) {
            advance();
            Value v = parse_expr();
            if (peek().type != Token::RParen) {
                fail("expected ')'");
            }
            advance();
            return v;
        }
        if (t.type == Token::Word) {
            advance();
            if (t.text == "i") {
                return Complex{0, 1};
            }
            if (t.text == "L" || t.text == "R") {
                BasisLabel label;
                label.path = (t.text == "L") ? Arm::L : Arm::R;
                return LabeledState::basis(Space::path(), Kind::Ket, label);
            }
            if (t.text == "H" || t.text == "V") {
                BasisLabel label;
                label.pol = (t.text == "H") ? Pol::H : Pol::V;
                return LabeledState::basis(Space::pol(), Kind::Ket, label);
            }
            if (t.text == "AH" || t.text == "AV") {
                BasisLabel label;
                label.ancilla = (t.text == "AH") ? Pol::H : Pol::V;
                return LabeledState::basis(Space::of(false, false, true), Kind::Ket, label);
            }
            double root = sqrt_word(t.text);
            if (root > 0) {
                return Complex{root, 0};
            }
            throw ParseError(line_, t.column, "unknown symbol '" + t.text + "'");
        }
        fail("expected a state or scalar");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int line_;
};

std::string format_coefficient_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string atoms_of(const BasisLabel &label) {
    std::string out;
    auto push = [&out](const std::string &atom) {
        if (!out.empty()) {
            out += " (x) ";
        }
        out += atom;
    };
    if (label.path.has_value()) {
        push(std::string(1, arm_name(*label.path)));
    }
    if (label.pol.has_value()) {
        push(std::string(1, pol_name(*label.pol)));
    }
    if (label.ancilla.has_value()) {
        push(std::string("A") + pol_name(*label.ancilla));
    }
    return out;
}

}  // namespace

LabeledState parse_state_expr(std::string_view text, int line, int column_offset) {
    std::vector<Token> tokens = lex(text, line, column_offset);
    if (tokens.size() == 1) {
        throw ParseError(line, column_offset + 1, "expected an expression");
    }
    return ExprParser(std::move(tokens), line).parse();
}

std::string serialize_state_expr(const LabeledState &ket) {
    std::string out;
    const Space &space = ket.space();
    for (std::size_t k = 0; k < space.dim(); k++) {
        Complex a = ket.amplitude(k);
        if (a == Complex{0, 0}) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        std::string atoms = atoms_of(space.label(k));
        if (a == Complex{1, 0}) {
            out += atoms;
        } else if (a.imag() == 0) {
            out += format_coefficient_number(a.real()) + " * " + atoms;
        } else {
            out += "(" + format_coefficient_number(a.real()) +
                   (a.imag() >= 0 ? " + " : " - ") +
                   format_coefficient_number(std::abs(a.imag())) + "*i) * " + atoms;
        }
    }
    if (out.empty()) {
        // A zero state still needs a parseable form.
        out = "0 * " + atoms_of(space.label(0));
    }
    return out;
}

}  // namespace cheshire
