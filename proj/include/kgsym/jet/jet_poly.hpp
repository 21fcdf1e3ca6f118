#pragma once

#include "kgsym/arith/xy_poly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kgsym {

/// Product of jet variables with positive exponents, sorted by variable.
template <class Var>
using JetMonomial = std::vector<std::pair<Var, int>>;

template <class Var>
int jet_degree(const JetMonomial<Var>& m)
{
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

/// Higher jet degree first, then lexicographic in the variable order.
template <class Var>
struct JetMonomialOrder {
    bool operator()(const JetMonomial<Var>& a, const JetMonomial<Var>& b) const
    {
        const int da = jet_degree(a);
        const int db = jet_degree(b);
        if (da != db) return da > db;
        return a < b;
    }
};

/// Polynomial in jet variables of type `Var` with XYPoly coefficients.
///
/// `Var` must be totally ordered and provide `std::string to_string() const`.
/// Zero coefficients are never stored.
template <class Var>
class JetPoly {
public:
    using Monomial = JetMonomial<Var>;
    using TermMap = std::map<Monomial, XYPoly, JetMonomialOrder<Var>>;

    JetPoly() = default;
    JetPoly(const XYPoly& c) { add_term({}, c); }
    JetPoly(long c) : JetPoly(XYPoly(c)) {}

    static JetPoly variable(const Var& v, int exponent = 1)
    {
        JetPoly p;
        if (exponent == 0)
            p.add_term({}, XYPoly(1));
        else
            p.add_term({{v, exponent}}, XYPoly(1));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const XYPoly& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    XYPoly coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? XYPoly() : it->second;
    }

    std::set<Var> variables() const
    {
        std::set<Var> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) out.insert(v);
        return out;
    }

    /// Highest jet degree among the terms; 0 for constants and for zero.
    int degree() const { return terms_.empty() ? 0 : jet_degree(terms_.begin()->first); }

    /// True iff every term is exactly one jet variable to the first power.
    bool is_linear_homogeneous() const
    {
        for (const auto& [m, c] : terms_)
            if (m.size() != 1 || m.front().second != 1) return false;
        return true;
    }

    JetPoly& operator+=(const JetPoly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    JetPoly& operator-=(const JetPoly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    JetPoly& operator*=(const XYPoly& s)
    {
        TermMap scaled;
        if (!s.is_zero())
            for (const auto& [m, c] : terms_) {
                XYPoly t = c * s;
                if (!t.is_zero()) scaled.emplace(m, std::move(t));
            }
        terms_ = std::move(scaled);
        return *this;
    }

    friend JetPoly operator+(JetPoly a, const JetPoly& b) { return a += b; }
    friend JetPoly operator-(JetPoly a, const JetPoly& b) { return a -= b; }
    friend JetPoly operator-(JetPoly a) { return a *= XYPoly(-1); }
    friend JetPoly operator*(JetPoly a, const XYPoly& s) { return a *= s; }
    friend JetPoly operator*(const XYPoly& s, JetPoly a) { return a *= s; }
    friend JetPoly operator*(const JetPoly& a, const JetPoly& b)
    {
        JetPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(multiply(ma, mb), ca * cb);
        return r;
    }
    friend bool operator==(const JetPoly& a, const JetPoly& b) { return a.terms_ == b.terms_; }

    JetPoly pow(int n) const
    {
        JetPoly r(1);
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    /// Partial derivative with respect to one jet variable.
    JetPoly partial(const Var& v) const
    {
        JetPoly r;
        for (const auto& [m, c] : terms_) {
            auto it = std::find_if(m.begin(), m.end(), [&](const auto& ve) { return ve.first == v; });
            if (it == m.end()) continue;
            Monomial reduced = m;
            auto& slot = reduced[static_cast<std::size_t>(it - m.begin())];
            const int e = slot.second;
            if (--slot.second == 0) reduced.erase(reduced.begin() + (it - m.begin()));
            r.add_term(reduced, c * Rational(e));
        }
        return r;
    }

    /// Partial derivative of the coefficients in x or y, jet variables held fixed.
    JetPoly coefficient_derivative(XYVar w) const
    {
        JetPoly r;
        for (const auto& [m, c] : terms_) r.add_term(m, c.derivative(w));
        return r;
    }

    /// Chain-rule derivation: coefficient derivative plus sum over v of (d/dv) * shift(v).
    template <class Shift>
    JetPoly derivation(XYVar w, Shift shift) const
    {
        JetPoly r = coefficient_derivative(w);
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 0; i < m.size(); ++i) {
                const auto& [v, e] = m[i];
                Monomial lowered = m;
                if (--lowered[i].second == 0) lowered.erase(lowered.begin() + static_cast<std::ptrdiff_t>(i));
                r.add_term(multiply(lowered, {{shift(v), 1}}), c * Rational(e));
            }
        return r;
    }

    /// Replaces every variable by a polynomial of a possibly different jet type.
    template <class OutPoly, class Image>
    OutPoly substitute(Image image) const
    {
        OutPoly out;
        for (const auto& [m, c] : terms_) {
            OutPoly t(c);
            for (const auto& [v, e] : m) t = t * image(v).pow(e);
            out += t;
        }
        return out;
    }

    std::string to_string() const;

    static Monomial multiply(const Monomial& a, const Monomial& b)
    {
        Monomial out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
                out.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first)
                out.push_back(b[j++]);
            else {
                out.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i;
                ++j;
            }
        }
        return out;
    }

private:
    TermMap terms_;
};

template <class Var>
std::string monomial_text(const JetMonomial<Var>& m)
{
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty()) s += "*";
        s += v.to_string();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

template <class Var>
std::string JetPoly<Var>::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const std::string mono = monomial_text<Var>(m);
        if (mono.empty()) {
            // constant part: splice its own signed terms
            const std::string s = c.to_string();
            if (out.empty())
                out = s;
            else if (c.size() == 1 && s.front() == '-')
                out += " - " + s.substr(1);
            else if (c.size() == 1)
                out += " + " + s;
            else
                out += " + (" + s + ")";
            continue;
        }
        if (c.size() == 1) {
            const auto& [e, r] = *c.terms().begin();
            const bool negative = r < 0;
            const XYPoly mag = negative ? -c : c;
            const std::string cs = mag == XYPoly(1) ? std::string() : mag.to_string() + "*";
            detail::append_signed(out, negative, cs + mono);
        } else {
            detail::append_signed(out, false, "(" + c.to_string() + ")*" + mono);
        }
    }
    return out;
}

} // namespace kgsym
