// Copyright 2026 The Oracle Reals Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ORACLES_EXPR_HPP
#define ORACLES_EXPR_HPP

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "oracles/combinators.hpp"
#include "oracles/constructors.hpp"

namespace oracles::expr {

// Expression trees over the oracle constructors and combinators.
//
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | atom
//   atom   := RATIONAL | "(" expr ")"
//           | "sqrt" "(" RATIONAL ")"
//           | "root" "(" INT "," RATIONAL ")"
//           | "polyzero" "(" RATIONAL {"," RATIONAL} ";" RATIONAL "," RATIONAL ")"
//           | "recip" "(" expr ";" RATIONAL ":" RATIONAL ")"
//
// A literal "p/q" is one token only when written without spaces; otherwise
// "/" is division, which must have a rational literal on its right. The
// Unicode minus sign is accepted wherever "-" is.

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Literal {
    Rational value;
};
struct Root {
    long index;
    Rational radicand;
};
struct PolyZero {
    std::vector<Rational> coeffs;
    Rational a;
    Rational b;
};
struct Neg {
    NodePtr child;
};
struct Add {
    NodePtr lhs, rhs;
};
struct Sub {
    NodePtr lhs, rhs;
};
struct Mul {
    NodePtr lhs, rhs;
};
struct Recip {
    NodePtr child;
    Interval witness;
};

struct Node {
    std::variant<Literal, Root, PolyZero, Neg, Add, Sub, Mul, Recip> v;
};

bool operator==(const Node& a, const Node& b);

inline bool same(const NodePtr& a, const NodePtr& b) { return a && b ? *a == *b : a == b; }

inline bool operator==(const Literal& a, const Literal& b) { return a.value == b.value; }
inline bool operator==(const Root& a, const Root& b) { return a.index == b.index && a.radicand == b.radicand; }
inline bool operator==(const PolyZero& a, const PolyZero& b)
{
    return a.coeffs == b.coeffs && a.a == b.a && a.b == b.b;
}
inline bool operator==(const Neg& a, const Neg& b) { return same(a.child, b.child); }
inline bool operator==(const Add& a, const Add& b) { return same(a.lhs, b.lhs) && same(a.rhs, b.rhs); }
inline bool operator==(const Sub& a, const Sub& b) { return same(a.lhs, b.lhs) && same(a.rhs, b.rhs); }
inline bool operator==(const Mul& a, const Mul& b) { return same(a.lhs, b.lhs) && same(a.rhs, b.rhs); }
inline bool operator==(const Recip& a, const Recip& b) { return same(a.child, b.child) && a.witness == b.witness; }

inline bool operator==(const Node& a, const Node& b) { return a.v == b.v; }

template <typename T>
NodePtr make(T node)
{
    return std::make_shared<const Node>(Node{std::move(node)});
}

class SyntaxError : public ParseError {
public:
    SyntaxError(std::size_t position, std::string expected)
        : ParseError("syntax error at offset " + std::to_string(position) + ": expected " + expected),
          position_(position), expected_(std::move(expected))
    {
    }
    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

class SemanticError : public ParseError {
public:
    SemanticError(std::size_t position, const std::string& what)
        : ParseError("at offset " + std::to_string(position) + ": " + what), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

enum class Tok { number, ident, plus, minus, star, slash, lparen, rparen, comma, semicolon, colon, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    const auto digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (digit(i)) {
            while (digit(i)) {
                ++i;
            }
            if (i < s.size() && s[i] == '/' && digit(i + 1)) {
                ++i;
                while (digit(i)) {
                    ++i;
                }
            }
            out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) {
                ++i;
            }
            out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (s.substr(i, 3) == "\xE2\x88\x92") {
            out.push_back({Tok::minus, "-", start});
            i += 3;
            continue;
        }
        Tok kind;
        switch (c) {
        case '+':
            kind = Tok::plus;
            break;
        case '-':
            kind = Tok::minus;
            break;
        case '*':
            kind = Tok::star;
            break;
        case '/':
            kind = Tok::slash;
            break;
        case '(':
            kind = Tok::lparen;
            break;
        case ')':
            kind = Tok::rparen;
            break;
        case ',':
            kind = Tok::comma;
            break;
        case ';':
            kind = Tok::semicolon;
            break;
        case ':':
            kind = Tok::colon;
            break;
        default:
            throw SyntaxError(start, "a number, name, operator or parenthesis");
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    NodePtr parse()
    {
        NodePtr e = expr();
        expect(Tok::end, "end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[at_]; }

    bool accept(Tok k)
    {
        if (peek().kind == k) {
            ++at_;
            return true;
        }
        return false;
    }

    const Token& expect(Tok k, const char* what)
    {
        if (peek().kind != k) {
            throw SyntaxError(peek().pos, what);
        }
        return toks_[at_++];
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        while (true) {
            if (accept(Tok::plus)) {
                lhs = make(Add{lhs, term()});
            } else if (accept(Tok::minus)) {
                lhs = make(Sub{lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr term()
    {
        NodePtr lhs = factor();
        while (true) {
            if (accept(Tok::star)) {
                lhs = make(Mul{lhs, factor()});
            } else if (peek().kind == Tok::slash) {
                const std::size_t pos = toks_[++at_].pos;
                const NodePtr rhs = factor();
                const auto* lit = std::get_if<Literal>(&rhs->v);
                if (!lit) {
                    throw SemanticError(pos, "'/' needs a rational literal on its right; use recip(expr; lo:hi) "
                                             "with a witness interval to divide by an expression");
                }
                if (lit->value.sign() == 0) {
                    throw SemanticError(pos, "division by zero");
                }
                lhs = make(Mul{lhs, make(Literal{Rational(1) / lit->value})});
            } else {
                return lhs;
            }
        }
    }

    NodePtr factor()
    {
        if (accept(Tok::minus)) {
            NodePtr child = factor();
            if (const auto* lit = std::get_if<Literal>(&child->v)) {
                return make(Literal{-lit->value});
            }
            return make(Neg{child});
        }
        return atom();
    }

    Rational number()
    {
        const Token& t = expect(Tok::number, "a rational literal");
        try {
            return Rational::parse(t.text);
        } catch (const ZeroInDenominator&) {
            throw SemanticError(t.pos, "zero denominator in " + t.text);
        }
    }

    Rational signed_number()
    {
        const bool negative = accept(Tok::minus);
        const Rational v = number();
        return negative ? -v : v;
    }

    NodePtr atom()
    {
        const Token& t = peek();
        if (t.kind == Tok::number) {
            return make(Literal{number()});
        }
        if (accept(Tok::lparen)) {
            NodePtr inner = expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (t.kind != Tok::ident) {
            throw SyntaxError(t.pos, "a number, '(', sqrt, root, polyzero or recip");
        }
        ++at_;
        if (t.text == "sqrt") {
            expect(Tok::lparen, "'('");
            const std::size_t pos = peek().pos;
            const Rational r = signed_number();
            expect(Tok::rparen, "')'");
            return root_node(2, r, pos);
        }
        if (t.text == "root") {
            expect(Tok::lparen, "'('");
            const std::size_t ipos = peek().pos;
            const Rational n = signed_number();
            if (!n.is_integer()) {
                throw SyntaxError(ipos, "an integer root index");
            }
            expect(Tok::comma, "','");
            const std::size_t pos = peek().pos;
            const Rational r = signed_number();
            expect(Tok::rparen, "')'");
            if (n.sign() <= 0 || !n.num().fits_slong_p()) {
                throw SemanticError(ipos, "root index must be a positive integer");
            }
            return root_node(n.num().get_si(), r, pos);
        }
        if (t.text == "polyzero") {
            expect(Tok::lparen, "'('");
            PolyZero pz;
            pz.coeffs.push_back(signed_number());
            while (accept(Tok::comma)) {
                pz.coeffs.push_back(signed_number());
            }
            expect(Tok::semicolon, "',' or ';'");
            const std::size_t pos = peek().pos;
            pz.a = signed_number();
            expect(Tok::comma, "','");
            pz.b = signed_number();
            expect(Tok::rparen, "')'");
            const Polynomial p(pz.coeffs);
            if (p(pz.a).sign() * p(pz.b).sign() > 0) {
                throw SemanticError(pos, "polynomial has the same strict sign at both bracket ends");
            }
            return make(std::move(pz));
        }
        if (t.text == "recip") {
            expect(Tok::lparen, "'('");
            NodePtr child = expr();
            expect(Tok::semicolon, "';' and a witness interval");
            const std::size_t pos = peek().pos;
            const Rational lo = signed_number();
            expect(Tok::colon, "':'");
            const Rational hi = signed_number();
            expect(Tok::rparen, "')'");
            const Interval w = Interval::make(lo, hi);
            if (contains(w, Rational(0))) {
                throw SemanticError(pos, "reciprocal witness " + w.to_string() + " contains zero");
            }
            return make(Recip{child, w});
        }
        throw SyntaxError(t.pos, "sqrt, root, polyzero or recip");
    }

    static NodePtr root_node(long n, const Rational& r, std::size_t pos)
    {
        if (r.sign() <= 0) {
            throw SemanticError(pos, "root of a non-positive number " + r.to_string());
        }
        return make(Root{n, r});
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

} // namespace detail

inline NodePtr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

// Canonical text that parses back to the same tree.
inline std::string print(const Node& n)
{
    const auto is_sum = [](const NodePtr& p) {
        return std::holds_alternative<Add>(p->v) || std::holds_alternative<Sub>(p->v);
    };
    const auto is_product = [&](const NodePtr& p) { return is_sum(p) || std::holds_alternative<Mul>(p->v); };
    const auto wrap = [](const NodePtr& p, bool parens) {
        return parens ? "(" + print(*p) + ")" : print(*p);
    };
    const auto list = [](const std::vector<Rational>& xs) {
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            out += (i ? ", " : "") + xs[i].to_string();
        }
        return out;
    };
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Literal>) {
                return x.value.to_string();
            } else if constexpr (std::is_same_v<T, Root>) {
                if (x.index == 2) {
                    return "sqrt(" + x.radicand.to_string() + ")";
                }
                return "root(" + std::to_string(x.index) + ", " + x.radicand.to_string() + ")";
            } else if constexpr (std::is_same_v<T, PolyZero>) {
                return "polyzero(" + list(x.coeffs) + "; " + x.a.to_string() + ", " + x.b.to_string() + ")";
            } else if constexpr (std::is_same_v<T, Neg>) {
                return "-" + wrap(x.child, is_product(x.child));
            } else if constexpr (std::is_same_v<T, Add>) {
                return print(*x.lhs) + " + " + wrap(x.rhs, is_sum(x.rhs));
            } else if constexpr (std::is_same_v<T, Sub>) {
                return print(*x.lhs) + " - " + wrap(x.rhs, is_sum(x.rhs));
            } else if constexpr (std::is_same_v<T, Mul>) {
                return wrap(x.lhs, is_sum(x.lhs)) + " * " + wrap(x.rhs, is_product(x.rhs));
            } else {
                return "recip(" + print(*x.child) + "; " + x.witness.lo().to_string() + ":" +
                       x.witness.hi().to_string() + ")";
            }
        },
        n.v);
}

// Builds the oracle for a tree. Reciprocal witnesses are certified with
// `certify`.
inline Oracle evaluate(const Node& n, Budget certify = default_witness_budget)
{
    return std::visit(
        [&](const auto& x) -> Oracle {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Literal>) {
                return rational_oracle(x.value);
            } else if constexpr (std::is_same_v<T, Root>) {
                return nth_root_oracle(x.index, x.radicand);
            } else if constexpr (std::is_same_v<T, PolyZero>) {
                return ivt_oracle(polynomial_sign(Polynomial(x.coeffs)), x.a, x.b);
            } else if constexpr (std::is_same_v<T, Neg>) {
                return o_neg(evaluate(*x.child, certify));
            } else if constexpr (std::is_same_v<T, Add>) {
                return o_add(evaluate(*x.lhs, certify), evaluate(*x.rhs, certify));
            } else if constexpr (std::is_same_v<T, Sub>) {
                return o_sub(evaluate(*x.lhs, certify), evaluate(*x.rhs, certify));
            } else if constexpr (std::is_same_v<T, Mul>) {
                return o_mul(evaluate(*x.lhs, certify), evaluate(*x.rhs, certify));
            } else {
                return o_recip(evaluate(*x.child, certify), x.witness, certify);
            }
        },
        n.v);
}

} // namespace oracles::expr

#endif
