#pragma once

#include "kgsym/arith/xy_poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace kgsym {

/// Derivation multi-index of the word D_x^dx D_y^dy.
struct DerivIndex {
    int dx = 0;
    int dy = 0;

    int order() const { return dx + dy; }
    friend bool operator==(const DerivIndex&, const DerivIndex&) = default;
};

/// Higher order first, then more D_x.
struct DerivIndexDescending {
    bool operator()(const DerivIndex& a, const DerivIndex& b) const
    {
        if (a.order() != b.order()) return a.order() > b.order();
        return a.dx > b.dx;
    }
};

/// Linear operator in total derivatives, sum of a_pq(x,y) * D_x^p * D_y^q.
///
/// Held in normal form with every coefficient to the left of every derivation,
/// so operator equality is term-map equality. The zero operator has no terms.
class TDOperator {
public:
    using TermMap = std::map<DerivIndex, XYPoly, DerivIndexDescending>;

    TDOperator() = default;

    static TDOperator term(const XYPoly& coeff, int dx, int dy)
    {
        TDOperator a;
        a.add_term({dx, dy}, coeff);
        return a;
    }
    static TDOperator one() { return term(XYPoly(1), 0, 0); }
    static TDOperator dx() { return term(XYPoly(1), 1, 0); }
    static TDOperator dy() { return term(XYPoly(1), 0, 1); }
    static TDOperator mul(const XYPoly& a) { return term(a, 0, 0); }
    /// J = x D_x - y D_y.
    static TDOperator j() { return term(XYPoly::x(), 1, 0) + term(-XYPoly::y(), 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Highest p+q present; -1 for the zero operator.
    int order() const { return terms_.empty() ? -1 : terms_.begin()->first.order(); }

    XYPoly coefficient(int dx, int dy) const
    {
        auto it = terms_.find({dx, dy});
        return it == terms_.end() ? XYPoly() : it->second;
    }

    void add_term(const DerivIndex& d, const XYPoly& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TDOperator& operator+=(const TDOperator& o)
    {
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    TDOperator& operator-=(const TDOperator& o)
    {
        for (const auto& [d, c] : o.terms_) add_term(d, -c);
        return *this;
    }
    TDOperator& operator*=(const Rational& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [d, c] : terms_) c *= s;
        return *this;
    }

    friend TDOperator operator+(TDOperator a, const TDOperator& b) { return a += b; }
    friend TDOperator operator-(TDOperator a, const TDOperator& b) { return a -= b; }
    friend TDOperator operator-(TDOperator a) { return a *= Rational(-1); }
    friend TDOperator operator*(TDOperator a, const Rational& s) { return a *= s; }
    friend TDOperator operator*(const Rational& s, TDOperator a) { return a *= s; }
    friend bool operator==(const TDOperator& a, const TDOperator& b) { return a.terms_ == b.terms_; }

    /// Canonical text, e.g. `(x)*Dx^2 + (-y)*Dx*Dy + Dx`.
    std::string to_string() const;

private:
    TermMap terms_;
};

/// Normal-ordered product a∘b.
///
/// Moves each derivation word of `a` past the coefficient of `b` with the
/// Leibniz rule, the closed form of D_x∘c = c·D_x + c_x applied repeatedly.
inline TDOperator compose(const TDOperator& a, const TDOperator& b)
{
    TDOperator out;
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms())
            for (int i = 0; i <= da.dx; ++i) {
                const Rational bx = binomial(da.dx, i);
                for (int j = 0; j <= da.dy; ++j) {
                    XYPoly c = cb.derivative(i, j);
                    if (c.is_zero()) continue;
                    c = ca * c;
                    c *= bx * binomial(da.dy, j);
                    out.add_term({da.dx - i + db.dx, da.dy - j + db.dy}, c);
                }
            }
    return out;
}

inline TDOperator operator*(const TDOperator& a, const TDOperator& b) { return compose(a, b); }

inline TDOperator commutator(const TDOperator& a, const TDOperator& b) { return compose(a, b) - compose(b, a); }

/// k-fold composition of `a` with itself; a^0 is the identity.
inline TDOperator power(const TDOperator& a, int k)
{
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    TDOperator r = TDOperator::one();
    for (int i = 0; i < k; ++i) r = compose(r, a);
    return r;
}

/// Formal adjoint: (c D_x^p D_y^q)† = (-1)^{p+q} D_x^p D_y^q ∘ c.
inline TDOperator adjoint(const TDOperator& a)
{
    TDOperator out;
    for (const auto& [d, c] : a.terms()) {
        const Rational sign = d.order() % 2 == 0 ? 1 : -1;
        for (int i = 0; i <= d.dx; ++i)
            for (int j = 0; j <= d.dy; ++j) {
                XYPoly t = c.derivative(i, j);
                if (t.is_zero()) continue;
                t *= sign * binomial(d.dx, i) * binomial(d.dy, j);
                out.add_term({d.dx - i, d.dy - j}, t);
            }
    }
    return out;
}

/// The Klein-Gordon operator D_x D_y - 1.
inline TDOperator klein_gordon_operator() { return TDOperator::term(XYPoly(1), 1, 1) - TDOperator::one(); }

enum class BasisKind { Q, Qbar };
enum class Side { X, Y };

/// (J + l/2)^k ∘ D_x^l for Q, (J - l/2)^k ∘ D_y^l for Qbar (l >= 1).
inline TDOperator basis_op(BasisKind kind, int k, int l)
{
    if (k < 0 || l < 0) throw std::invalid_argument("basis_op: negative index");
    if (kind == BasisKind::Qbar && l == 0)
        throw std::invalid_argument("basis_op: Qbar requires l >= 1");
    const Rational shift = Rational(l, 2);
    const bool is_q = kind == BasisKind::Q;
    const TDOperator shifted = TDOperator::j() + TDOperator::mul(XYPoly(is_q ? shift : Rational(-shift)));
    const TDOperator deriv = is_q ? TDOperator::dx() : TDOperator::dy();
    return compose(power(shifted, k), power(deriv, l));
}

/// J^k ∘ D_x^l (side X) or J^k ∘ D_y^l (side Y).
inline TDOperator monomial_op(Side side, int k, int l)
{
    if (k < 0 || l < 0) throw std::invalid_argument("monomial_op: negative index");
    return compose(power(TDOperator::j(), k), power(side == Side::X ? TDOperator::dx() : TDOperator::dy(), l));
}

/// Splits `a` into its skew-adjoint and self-adjoint parts, in that order.
inline std::pair<TDOperator, TDOperator> skew_self_split(const TDOperator& a)
{
    const TDOperator adj = adjoint(a);
    const Rational half(1, 2);
    return {(a - adj) * half, (a + adj) * half};
}

inline bool is_skew_adjoint(const TDOperator& a) { return adjoint(a) == -a; }
inline bool is_self_adjoint(const TDOperator& a) { return adjoint(a) == a; }

inline std::string TDOperator::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : terms_) {
        std::string word;
        auto append = [&](const char* name, int n) {
            if (n == 0) return;
            if (!word.empty()) word += "*";
            word += name;
            if (n > 1) word += "^" + std::to_string(n);
        };
        append("Dx", d.dx);
        append("Dy", d.dy);
        std::string body;
        if (word.empty())
            body = "(" + c.to_string() + ")";
        else if (c == XYPoly(1))
            body = word;
        else
            body = "(" + c.to_string() + ")*" + word;
        if (out.empty())
            out = body;
        else
            out += " + " + body;
    }
    return out;
}

} // namespace kgsym
