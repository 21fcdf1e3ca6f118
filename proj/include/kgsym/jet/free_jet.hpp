#pragma once

#include "kgsym/jet/reduced_jet.hpp"

#include <compare>
#include <string>

namespace kgsym {

/// Off-shell coordinate u_(a,b) = D_x^a D_y^b u.
struct FreeVar {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const FreeVar&, const FreeVar&) = default;

    std::string to_string() const { return "u(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

using FreeJetPoly = JetPoly<FreeVar>;

inline FreeJetPoly free_u(int a, int b, int exponent = 1) { return FreeJetPoly::variable({a, b}, exponent); }

/// Highest a+b over the variables present; -1 when none appear.
inline int free_order(const FreeJetPoly& p)
{
    int order = -1;
    for (const auto& v : p.variables()) order = std::max(order, v.a + v.b);
    return order;
}

/// Full total derivative with no on-shell substitution.
inline FreeJetPoly free_total_derivative(const FreeJetPoly& p, XYVar w)
{
    if (w == XYVar::x) return p.derivation(w, [](const FreeVar& v) { return FreeVar{v.a + 1, v.b}; });
    return p.derivation(w, [](const FreeVar& v) { return FreeVar{v.a, v.b + 1}; });
}

inline FreeJetPoly free_total_derivative(const FreeJetPoly& p, int nx, int ny)
{
    FreeJetPoly r = p;
    for (int i = 0; i < nx && !r.is_zero(); ++i) r = free_total_derivative(r, XYVar::x);
    for (int i = 0; i < ny && !r.is_zero(); ++i) r = free_total_derivative(r, XYVar::y);
    return r;
}

/// Euler operator E_u(p) = sum over (a,b) of (-1)^{a+b} D_x^a D_y^b (dp/du_(a,b)).
inline FreeJetPoly euler_operator(const FreeJetPoly& p)
{
    FreeJetPoly out;
    for (const auto& v : p.variables()) {
        FreeJetPoly term = free_total_derivative(p.partial(v), v.a, v.b);
        if ((v.a + v.b) % 2 != 0) term = -term;
        out += term;
    }
    return out;
}

/// On-shell reduction u_(a,b) -> u_{a-b}.
inline ReducedJetPoly reduce(const FreeJetPoly& p)
{
    return p.substitute<ReducedJetPoly>([](const FreeVar& v) { return u_(v.a - v.b); });
}

/// Identifies u_k with a pure derivative: u_(k,0) for k >= 0, u_(0,-k) for k < 0.
inline FreeJetPoly lift_pure(const ReducedJetPoly& p)
{
    require_single_field(p, field_u, "lift_pure");
    return p.substitute<FreeJetPoly>([](const ReducedVar& v) {
        return v.index >= 0 ? free_u(v.index, 0) : free_u(0, -v.index);
    });
}

/// The operator applied to u off shell: sum a_pq u_(p,q).
inline FreeJetPoly apply_operator_free(const TDOperator& a)
{
    FreeJetPoly out;
    for (const auto& [d, c] : a.terms()) out.add_term({{FreeVar{d.dx, d.dy}, 1}}, c);
    return out;
}

/// u_xy - u, the equation as a free jet polynomial.
inline FreeJetPoly klein_gordon_expression() { return free_u(1, 1) - free_u(0, 0); }

/// The Lagrangian -(u_x u_y + u^2)/2.
inline FreeJetPoly klein_gordon_lagrangian()
{
    return XYPoly(Rational(-1, 2)) * (free_u(1, 0) * free_u(0, 1) + free_u(0, 0, 2));
}

} // namespace kgsym
