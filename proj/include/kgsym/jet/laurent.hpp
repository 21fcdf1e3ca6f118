#pragma once

#include "kgsym/jet/reduced_jet.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace kgsym {

/// Exponents of x^x_deg y^y_deg λ^lambda_deg; the λ exponent may be negative.
struct LaurentExponent {
    int x_deg = 0;
    int y_deg = 0;
    int lambda_deg = 0;

    friend auto operator<=>(const LaurentExponent&, const LaurentExponent&) = default;
};

/// Polynomial in x, y, λ, 1/λ over the rationals.
///
/// Stands for the scalar factor multiplying e^{λx + y/λ} after substituting
/// the exponential solution family into a jet polynomial.
class LaurentEval {
public:
    using TermMap = std::map<LaurentExponent, Rational>;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const LaurentExponent& e, const Rational& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static LaurentEval from_xy(const XYPoly& p, int lambda_deg)
    {
        LaurentEval r;
        for (const auto& [e, c] : p.terms()) r.add_term({e.x_deg, e.y_deg, lambda_deg}, c);
        return r;
    }

    LaurentEval& operator+=(const LaurentEval& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    friend LaurentEval operator+(LaurentEval a, const LaurentEval& b) { return a += b; }
    friend LaurentEval operator-(LaurentEval a, const LaurentEval& b)
    {
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    friend LaurentEval operator*(const LaurentEval& a, const LaurentEval& b)
    {
        LaurentEval r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea.x_deg + eb.x_deg, ea.y_deg + eb.y_deg, ea.lambda_deg + eb.lambda_deg}, ca * cb);
        return r;
    }
    friend bool operator==(const LaurentEval&, const LaurentEval&) = default;

    /// Multiplies by λ^k.
    LaurentEval shift_lambda(int k) const
    {
        LaurentEval r;
        for (const auto& [e, c] : terms_) r.add_term({e.x_deg, e.y_deg, e.lambda_deg + k}, c);
        return r;
    }

    LaurentEval derivative(XYVar w) const
    {
        LaurentEval r;
        for (const auto& [e, c] : terms_) {
            const int n = w == XYVar::x ? e.x_deg : e.y_deg;
            if (n == 0) continue;
            LaurentExponent d = e;
            (w == XYVar::x ? d.x_deg : d.y_deg) -= 1;
            r.add_term(d, c * n);
        }
        return r;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono = detail::xy_monomial_text({e.x_deg, e.y_deg});
            if (e.lambda_deg != 0) {
                if (!mono.empty()) mono += "*";
                mono += "lambda";
                if (e.lambda_deg != 1) mono += "^" + std::to_string(e.lambda_deg);
            }
            const bool negative = c < 0;
            const Rational mag = negative ? Rational(-c) : c;
            std::string body = mono.empty() ? kgsym::to_string(mag)
                               : mag == 1    ? mono
                                             : kgsym::to_string(mag) + "*" + mono;
            detail::append_signed(out, negative, body);
        }
        return out;
    }

private:
    TermMap terms_;
};

/// Substitutes u_k -> λ^k e^{λx + y/λ} and drops the exponential from each monomial.
///
/// For a linear characteristic this is e^{-λx - y/λ} times its value on the
/// exponential solution.
inline LaurentEval eval_exp_family(const ReducedJetPoly& p)
{
    if (fields_of(p).size() > 1) throw std::invalid_argument("eval_exp_family: polynomial mixes distinct fields");
    LaurentEval out;
    for (const auto& [m, c] : p.terms()) {
        int lambda_deg = 0;
        for (const auto& [v, e] : m) lambda_deg += v.index * e;
        out += LaurentEval::from_xy(c, lambda_deg);
    }
    return out;
}

} // namespace kgsym
