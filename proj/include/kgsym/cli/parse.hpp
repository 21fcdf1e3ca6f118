#pragma once

#include "kgsym/jet/reduced_jet.hpp"
#include "kgsym/opalg/td_operator.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kgsym {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

enum class Tok { number, ident, lparen, rparen, lbracket, rbracket, plus, minus, star, slash, caret, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case '[': kind = Tok::lbracket; break;
        case ']': kind = Tok::rbracket; break;
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '^': kind = Tok::caret; break;
        default: throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

/// Largest exponent accepted after `^`.
inline constexpr int max_exponent = 64;

/// Recursive-descent parser shared by both grammars; `Sem` supplies atoms and products.
template <class Sem>
class ExpressionParser {
public:
    using Value = typename Sem::Value;

    explicit ExpressionParser(std::string_view text) : tokens_(tokenize(text)) {}

    Value parse()
    {
        Value v = expr();
        if (peek().kind != Tok::end) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    const Token& next() { return tokens_[at_++]; }
    bool accept(Tok k)
    {
        if (peek().kind != k) return false;
        ++at_;
        return true;
    }
    const Token& expect(Tok k, const char* what)
    {
        if (peek().kind != k)
            throw ParseError(peek().pos, std::string("expected ") + what + (peek().kind == Tok::end ? " before end of input" : ", found '" + peek().text + "'"));
        return next();
    }

    Value expr()
    {
        Value v = term();
        for (;;) {
            if (accept(Tok::plus))
                v = v + term();
            else if (accept(Tok::minus))
                v = v - term();
            else
                return v;
        }
    }

    Value term()
    {
        Value v = unary();
        while (accept(Tok::star)) v = Sem::multiply(v, unary());
        return v;
    }

    Value unary()
    {
        if (accept(Tok::minus)) return -unary();
        return power();
    }

    Value power()
    {
        Value base = primary();
        if (!accept(Tok::caret)) return base;
        if (peek().kind == Tok::minus) throw ParseError(peek().pos, "negative exponent");
        const Token& e = expect(Tok::number, "exponent");
        if (e.text.size() > 3 || std::stoi(e.text) > max_exponent)
            throw ParseError(e.pos, "exponent exceeds " + std::to_string(max_exponent));
        const int n = std::stoi(e.text);
        Value r = Sem::one();
        for (int i = 0; i < n; ++i) r = Sem::multiply(r, base);
        return r;
    }

    Value primary()
    {
        const Token& t = next();
        switch (t.kind) {
        case Tok::number: {
            Rational value(Integer(t.text));
            if (accept(Tok::slash)) {
                const Token& d = expect(Tok::number, "denominator");
                const Integer den(d.text);
                if (den == 0) throw ParseError(d.pos, "zero denominator");
                value /= den;
            }
            return Sem::scalar(value);
        }
        case Tok::ident: {
            if (accept(Tok::lbracket)) {
                const bool negative = accept(Tok::minus);
                const Token& idx = expect(Tok::number, "jet index");
                if (idx.text.size() > 6) throw ParseError(idx.pos, "jet index too large");
                expect(Tok::rbracket, "']'");
                return Sem::indexed(t.text, negative ? -std::stoi(idx.text) : std::stoi(idx.text), t.pos);
            }
            return Sem::symbol(t.text, t.pos);
        }
        case Tok::lparen: {
            Value v = expr();
            expect(Tok::rparen, "')'");
            return v;
        }
        case Tok::end: throw ParseError(t.pos, "unexpected end of input");
        default: throw ParseError(t.pos, "unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t at_ = 0;
};

struct OperatorSemantics {
    using Value = TDOperator;
    static Value one() { return TDOperator::one(); }
    static Value scalar(const Rational& r) { return TDOperator::mul(XYPoly(r)); }
    static Value multiply(const Value& a, const Value& b) { return compose(a, b); }
    static Value symbol(const std::string& name, std::size_t pos)
    {
        if (name == "Dx") return TDOperator::dx();
        if (name == "Dy") return TDOperator::dy();
        if (name == "J") return TDOperator::j();
        if (name == "x") return TDOperator::mul(XYPoly::x());
        if (name == "y") return TDOperator::mul(XYPoly::y());
        throw ParseError(pos, "unknown operator atom '" + name + "'");
    }
    static Value indexed(const std::string& name, int, std::size_t pos)
    {
        throw ParseError(pos, "jet variable '" + name + "[...]' is not an operator");
    }
};

struct JetSemantics {
    using Value = ReducedJetPoly;
    static Value one() { return ReducedJetPoly(1); }
    static Value scalar(const Rational& r) { return ReducedJetPoly(XYPoly(r)); }
    static Value multiply(const Value& a, const Value& b) { return a * b; }
    static Value symbol(const std::string& name, std::size_t pos)
    {
        if (name == "x") return ReducedJetPoly(XYPoly::x());
        if (name == "y") return ReducedJetPoly(XYPoly::y());
        throw ParseError(pos, "unknown symbol '" + name + "' (jet variables are written like u[0])");
    }
    static Value indexed(const std::string& name, int k, std::size_t pos)
    {
        if (name == "x" || name == "y") throw ParseError(pos, "'" + name + "' is a coordinate, not a field");
        return jet_var(FieldId{name}, k);
    }
};

} // namespace detail

/// Parses an operator expression; `*` is composition.
inline TDOperator parse_operator(std::string_view text) { return detail::ExpressionParser<detail::OperatorSemantics>(text).parse(); }

/// Parses a reduced jet polynomial; `*` is ordinary multiplication.
inline ReducedJetPoly parse_jet(std::string_view text) { return detail::ExpressionParser<detail::JetSemantics>(text).parse(); }

} // namespace kgsym
