#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "milnor/poly.hpp"

namespace milnor {

// Expression grammar for polynomial text, also used by the printer:
//
//   expr    := [ '+' | '-' ] term { ('+' | '-') term }
//   term    := factor { '*' factor }
//   factor  := primary [ '^' natural ]
//   primary := rational | name | '(' expr ')'
//   rational:= natural [ '/' natural ]
//
// Implicit multiplication is not allowed; '/' only forms rational literals.

namespace detail {

enum class TokKind { Number, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;  // 1-based offset
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t pos = i_ + 1;
        if (i_ >= s_.size()) return {TokKind::End, "", pos};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{TokKind::Number, s_.substr(i_, j - i_), pos};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            Token t{TokKind::Name, s_.substr(i_, j - i_), pos};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {TokKind::Plus, "+", pos};
            case '-': return {TokKind::Minus, "-", pos};
            case '*': return {TokKind::Star, "*", pos};
            case '^': return {TokKind::Caret, "^", pos};
            case '/': return {TokKind::Slash, "/", pos};
            case '(': return {TokKind::LParen, "(", pos};
            case ')': return {TokKind::RParen, ")", pos};
            default: throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : lex_(text), ring_(std::move(ring)) { advance(); }

    Polynomial parse() {
        Polynomial p = parse_expr();
        if (cur_.kind != TokKind::End) throw ParseError("trailing input", cur_.pos);
        return p;
    }

private:
    void advance() { cur_ = lex_.next(); }

    bool accept(TokKind k) {
        if (cur_.kind != k) return false;
        advance();
        return true;
    }

    Polynomial parse_expr() {
        bool negate = false;
        if (accept(TokKind::Minus))
            negate = true;
        else
            accept(TokKind::Plus);
        Polynomial p = parse_term();
        if (negate) p = -p;
        for (;;) {
            if (accept(TokKind::Plus))
                p = p + parse_term();
            else if (accept(TokKind::Minus))
                p = p - parse_term();
            else
                break;
        }
        return p;
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (accept(TokKind::Star)) p = p * parse_factor();
        return p;
    }

    Polynomial parse_factor() {
        Polynomial p = parse_primary();
        if (accept(TokKind::Caret)) {
            if (cur_.kind != TokKind::Number)
                throw ParseError("exponent must be a non-negative integer", cur_.pos);
            long e = std::stol(cur_.text);
            advance();
            Polynomial r = Polynomial::constant(ring_, 1);
            for (long i = 0; i < e; ++i) r = r * p;
            return r;
        }
        return p;
    }

    Polynomial parse_primary() {
        if (cur_.kind == TokKind::Number) {
            Integer num(cur_.text);
            advance();
            if (accept(TokKind::Slash)) {
                if (cur_.kind != TokKind::Number)
                    throw ParseError("expected denominator after '/'", cur_.pos);
                Integer den(cur_.text);
                if (den == 0) throw ParseError("zero denominator", cur_.pos);
                advance();
                return Polynomial::constant(ring_, make_rational(num, den));
            }
            return Polynomial::constant(ring_, Rational(num));
        }
        if (cur_.kind == TokKind::Name) {
            int idx = ring_->var_index(cur_.text);
            if (idx < 0) throw UnknownVariable(cur_.text, cur_.pos);
            advance();
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        if (cur_.kind == TokKind::LParen) {
            std::size_t open_pos = cur_.pos;
            advance();
            Polynomial p = parse_expr();
            if (!accept(TokKind::RParen)) throw ParseError("missing ')' for '(' ", open_pos);
            return p;
        }
        throw ParseError("expected a number, variable or '('", cur_.pos);
    }

    Lexer lex_;
    RingPtr ring_;
    Token cur_{TokKind::End, "", 0};
};

inline std::string coeff_string(const Rational& c) {
    Integer n = numerator(c), d = denominator(c);
    std::string s = n.str();
    if (d != 1) s += "/" + d.str();
    return s;
}

}  // namespace detail

inline Polynomial parse_poly(const std::string& text, RingPtr ring) {
    return detail::Parser(text, std::move(ring)).parse();
}

// Canonical text form, terms in decreasing order under ord. parse(to_string(p)) == p.
inline std::string to_string(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) return "0";
    std::vector<Term> terms = p.terms();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    std::string out;
    bool first = true;
    for (const Term& t : terms) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) c = -c;
        std::vector<std::string> parts;
        if (c != 1 || mono_is_one(t.mono)) parts.push_back(detail::coeff_string(c));
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            std::string v = p.ring()->vars[i];
            if (t.mono[i] > 1) v += "^" + std::to_string(t.mono[i]);
            parts.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += "*";
            out += parts[i];
        }
    }
    return out;
}

// Default print uses the storage order (terms are already sorted by it).
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) c = -c;
        std::vector<std::string> parts;
        if (c != 1 || mono_is_one(t.mono)) parts.push_back(detail::coeff_string(c));
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            std::string v = p.ring()->vars[i];
            if (t.mono[i] > 1) v += "^" + std::to_string(t.mono[i]);
            parts.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += "*";
            out += parts[i];
        }
    }
    return out;
}

}  // namespace milnor
