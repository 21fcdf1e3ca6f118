#pragma once

#include "kgsym/arith/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace kgsym {

enum class XYVar { x, y };

/// Exponent pair of a monomial x^x_deg * y^y_deg.
struct XYExponent {
    int x_deg = 0;
    int y_deg = 0;

    int total() const { return x_deg + y_deg; }
    friend bool operator==(const XYExponent&, const XYExponent&) = default;
};

/// Degree-lexicographic order, highest first: larger total degree, then larger x exponent.
struct DegLexDescending {
    bool operator()(const XYExponent& a, const XYExponent& b) const
    {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.x_deg > b.x_deg;
    }
};

/// Sparse polynomial in x and y with exact rational coefficients.
///
/// No zero coefficient is ever stored, so two polynomials are equal iff their
/// term maps are equal. Iteration order is the canonical printing order.
class XYPoly {
public:
    using TermMap = std::map<XYExponent, Rational, DegLexDescending>;

    XYPoly() = default;
    XYPoly(const Rational& c) { add_term({0, 0}, c); }
    XYPoly(long c) : XYPoly(Rational(c)) {}

    static XYPoly monomial(const Rational& c, int x_deg, int y_deg)
    {
        XYPoly p;
        p.add_term({x_deg, y_deg}, c);
        return p;
    }
    static XYPoly x() { return monomial(1, 1, 0); }
    static XYPoly y() { return monomial(1, 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0); }
    std::size_t size() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }

    Rational coefficient(int x_deg, int y_deg) const
    {
        auto it = terms_.find({x_deg, y_deg});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c * x^i y^j in place, dropping the term if it cancels.
    void add_term(const XYExponent& e, const Rational& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    XYPoly& operator+=(const XYPoly& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    XYPoly& operator-=(const XYPoly& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    XYPoly& operator*=(const Rational& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend XYPoly operator+(XYPoly a, const XYPoly& b) { return a += b; }
    friend XYPoly operator-(XYPoly a, const XYPoly& b) { return a -= b; }
    friend XYPoly operator-(XYPoly a)
    {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend XYPoly operator*(XYPoly a, const Rational& s) { return a *= s; }
    friend XYPoly operator*(const Rational& s, XYPoly a) { return a *= s; }
    friend XYPoly operator*(const XYPoly& a, const XYPoly& b)
    {
        XYPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea.x_deg + eb.x_deg, ea.y_deg + eb.y_deg}, ca * cb);
        return r;
    }
    XYPoly& operator*=(const XYPoly& o) { return *this = *this * o; }

    friend bool operator==(const XYPoly& a, const XYPoly& b) { return a.terms_ == b.terms_; }

    /// Exact partial derivative.
    XYPoly derivative(XYVar v) const
    {
        XYPoly r;
        for (const auto& [e, c] : terms_) {
            const int n = v == XYVar::x ? e.x_deg : e.y_deg;
            if (n == 0) continue;
            XYExponent d = e;
            (v == XYVar::x ? d.x_deg : d.y_deg) -= 1;
            r.add_term(d, c * n);
        }
        return r;
    }

    /// Mixed partial derivative d^i/dx^i d^j/dy^j.
    XYPoly derivative(int i, int j) const
    {
        XYPoly r = *this;
        for (int s = 0; s < i && !r.is_zero(); ++s) r = r.derivative(XYVar::x);
        for (int s = 0; s < j && !r.is_zero(); ++s) r = r.derivative(XYVar::y);
        return r;
    }

    XYPoly pow(int n) const
    {
        XYPoly r(1);
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    /// Canonical text, e.g. `3/2*x^2*y - y + 1`.
    std::string to_string() const;

private:
    TermMap terms_;
};

namespace detail {

inline std::string xy_monomial_text(const XYExponent& e)
{
    std::string s;
    auto append = [&](const char* name, int n) {
        if (n == 0) return;
        if (!s.empty()) s += "*";
        s += name;
        if (n > 1) s += "^" + std::to_string(n);
    };
    append("x", e.x_deg);
    append("y", e.y_deg);
    return s;
}

/// Joins signed terms as `a - b + c`; `first` controls the leading sign form.
inline void append_signed(std::string& out, bool negative, const std::string& body)
{
    if (out.empty())
        out = negative ? "-" + body : body;
    else
        out += (negative ? " - " : " + ") + body;
}

} // namespace detail

inline std::string XYPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        const std::string mono = detail::xy_monomial_text(e);
        std::string body;
        if (mono.empty())
            body = kgsym::to_string(mag);
        else if (mag == 1)
            body = mono;
        else
            body = kgsym::to_string(mag) + "*" + mono;
        detail::append_signed(out, negative, body);
    }
    return out;
}

enum class PolyOp { add, sub, mul };

inline XYPoly poly_arith(const XYPoly& a, const XYPoly& b, PolyOp op)
{
    switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
    }
    return {};
}

inline XYPoly poly_diff(const XYPoly& a, XYVar v) { return a.derivative(v); }

} // namespace kgsym
