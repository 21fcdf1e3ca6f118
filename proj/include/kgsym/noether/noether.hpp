#pragma once

#include "kgsym/jet/free_jet.hpp"
#include "kgsym/jet/reduced_jet.hpp"
#include "kgsym/opalg/td_operator.hpp"
#include "kgsym/symmetry/symmetry.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgsym {

/// Operator criterion for a linear variational symmetry: a†L + L†a = 0 with L = D_xD_y - 1.
inline bool is_variational_linear(const TDOperator& a)
{
    const TDOperator L = klein_gordon_operator();
    return (compose(adjoint(a), L) + compose(adjoint(L), a)).is_zero();
}

/// Re-lifts the reduced characteristic of `a` to an operator in pure D_x / D_y powers.
inline TDOperator reduced_lift(const TDOperator& a) { return lift_to_operator(apply_operator_reduced(a, field_u)); }

/// Order of a reduced jet polynomial, with -1 standing for "no jet variables".
inline int order_or_minus_one(const ReducedJetPoly& p) { return jet_order(p).value_or(-1); }

enum class CurrentFamily { C0, C0bar, Ctilde, C1, C1bar, C2, C2bar, GEN };

inline std::string to_string(CurrentFamily f)
{
    switch (f) {
    case CurrentFamily::C0: return "C0";
    case CurrentFamily::C0bar: return "C0bar";
    case CurrentFamily::Ctilde: return "Ctilde";
    case CurrentFamily::C1: return "C1";
    case CurrentFamily::C1bar: return "C1bar";
    case CurrentFamily::C2: return "C2";
    case CurrentFamily::C2bar: return "C2bar";
    case CurrentFamily::GEN: return "GEN";
    }
    return "?";
}

inline std::optional<CurrentFamily> parse_family(const std::string& s)
{
    for (auto f : {CurrentFamily::C0, CurrentFamily::C0bar, CurrentFamily::Ctilde, CurrentFamily::C1,
                   CurrentFamily::C1bar, CurrentFamily::C2, CurrentFamily::C2bar, CurrentFamily::GEN})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

/// 𝒟_x T + 𝒟_y X on the reduced jet.
inline ReducedJetPoly on_shell_divergence(const ReducedJetPoly& t, const ReducedJetPoly& x)
{
    return reduced_total_derivative(t, XYVar::x) + reduced_total_derivative(x, XYVar::y);
}

/// A pair (T, X) whose on-shell divergence vanishes identically.
///
/// Constructors check the divergence and the order before returning, so every
/// instance satisfies both invariants. The off-shell form is kept where the
/// current was built off shell.
struct ConservedCurrent {
    CurrentFamily family = CurrentFamily::GEN;
    ReducedJetPoly t;
    ReducedJetPoly x;
    std::optional<FreeJetPoly> t_free;
    std::optional<FreeJetPoly> x_free;
    int declared_order = 0;
    /// Operator whose action on u gives the associated characteristic, when known.
    std::optional<TDOperator> characteristic_operator;
    /// Reduced associated characteristic, when known.
    std::optional<ReducedJetPoly> characteristic;

    ReducedJetPoly divergence() const { return on_shell_divergence(t, x); }
    int reduced_order() const { return std::max(order_or_minus_one(t), order_or_minus_one(x)); }
};

namespace detail {

inline ConservedCurrent checked(ConservedCurrent c, std::optional<int> expected_order = std::nullopt)
{
    if (!c.divergence().is_zero())
        throw std::logic_error(to_string(c.family) + ": on-shell divergence is " + c.divergence().to_string());
    if (!expected_order) c.declared_order = c.reduced_order();
    if (c.reduced_order() != c.declared_order)
        throw std::logic_error(to_string(c.family) + ": order " + std::to_string(c.reduced_order()) + " != declared " +
                               std::to_string(c.declared_order));
    return c;
}

inline ConservedCurrent from_free(CurrentFamily family, FreeJetPoly t_free, FreeJetPoly x_free)
{
    ConservedCurrent c;
    c.family = family;
    c.t = reduce(t_free);
    c.x = reduce(x_free);
    c.t_free = std::move(t_free);
    c.x_free = std::move(x_free);
    return c;
}

} // namespace detail

/// C⁰_f = (f u_y, -f_x u) for a symbolic solution field f.
inline ConservedCurrent current_C0(const FieldId& f)
{
    if (f == field_u) throw std::invalid_argument("current_C0: parameter field must differ from u");
    ConservedCurrent c;
    c.family = CurrentFamily::C0;
    c.t = jet_var(f, 0) * u_(-1);
    c.x = -(jet_var(f, 1) * u_(0));
    c.declared_order = 1;
    return detail::checked(std::move(c), 1);
}

/// C̄⁰_f = (-f_y u, f u_x).
inline ConservedCurrent current_C0bar(const FieldId& f)
{
    if (f == field_u) throw std::invalid_argument("current_C0bar: parameter field must differ from u");
    ConservedCurrent c;
    c.family = CurrentFamily::C0bar;
    c.t = -(jet_var(f, -1) * u_(0));
    c.x = jet_var(f, 0) * u_(1);
    c.declared_order = 1;
    return detail::checked(std::move(c), 1);
}

/// C̃_a = (-u D_y a u, u_x a u) for skew-adjoint a; characteristic 2 a u.
inline ConservedCurrent current_Ctilde(const TDOperator& a)
{
    if (!is_skew_adjoint(a)) {
        const TDOperator residue = skew_self_split(a).second;
        throw std::invalid_argument("current_Ctilde: operator is not skew-adjoint; self-adjoint part is " +
                                    residue.to_string());
    }
    FreeJetPoly t_free = -(free_u(0, 0) * apply_operator_free(compose(TDOperator::dy(), a)));
    FreeJetPoly x_free = free_u(1, 0) * apply_operator_free(a);
    ConservedCurrent c = detail::from_free(CurrentFamily::Ctilde, std::move(t_free), std::move(x_free));
    c.characteristic_operator = Rational(2) * a;
    c.characteristic = apply_operator_reduced(*c.characteristic_operator, field_u);
    return detail::checked(std::move(c));
}

/// Basis operator whose characteristic the minimal current of (family, kp, lp) carries.
inline TDOperator minimal_current_characteristic_operator(CurrentFamily family, int kp, int lp)
{
    switch (family) {
    case CurrentFamily::C1: return basis_op(BasisKind::Q, 2 * kp + 1, 2 * lp);
    case CurrentFamily::C2: return basis_op(BasisKind::Q, 2 * kp, 2 * lp + 1);
    case CurrentFamily::C1bar:
        // l = 0 falls back to J^k, which both families share
        return lp == 0 ? basis_op(BasisKind::Q, 2 * kp + 1, 0) : basis_op(BasisKind::Qbar, 2 * kp + 1, 2 * lp);
    case CurrentFamily::C2bar: return basis_op(BasisKind::Qbar, 2 * kp, 2 * lp + 1);
    default: throw std::invalid_argument("minimal_current_characteristic_operator: not a minimal-order family");
    }
}

/// Minimal-order currents C¹, C̄¹, C², C̄² of order kp + lp + 1.
inline ConservedCurrent current_minimal(CurrentFamily family, int kp, int lp)
{
    if (kp < 0 || lp < 0) throw std::invalid_argument("current_minimal: negative index");
    if (family == CurrentFamily::C1 && lp == 0) throw std::invalid_argument("current_minimal: C1 requires lp >= 1");

    const TDOperator J = TDOperator::j();
    const TDOperator Dx = TDOperator::dx();
    const TDOperator Dy = TDOperator::dy();
    const XYPoly x = XYPoly::x();
    const XYPoly y = XYPoly::y();
    auto sq = [](const TDOperator& word) { return apply_operator_free(word).pow(2); };

    FreeJetPoly t_free, x_free;
    switch (family) {
    case CurrentFamily::C1: {
        const TDOperator w = compose(power(J, kp), power(Dx, lp));
        t_free = -(y * sq(compose(Dy, w))) - x * sq(w);
        x_free = x * sq(compose(Dx, w)) + y * sq(w);
        break;
    }
    case CurrentFamily::C1bar: {
        const TDOperator w = compose(power(J, kp), power(Dy, lp));
        t_free = y * sq(compose(Dy, w)) + x * sq(w);
        x_free = -(x * sq(compose(Dx, w))) - y * sq(w);
        break;
    }
    case CurrentFamily::C2: {
        const TDOperator w = compose(power(J - TDOperator::mul(Rational(1, 2)), kp), power(Dx, lp));
        t_free = -sq(w);
        x_free = sq(compose(Dx, w));
        break;
    }
    case CurrentFamily::C2bar: {
        const TDOperator w = compose(power(J + TDOperator::mul(Rational(1, 2)), kp), power(Dy, lp));
        t_free = sq(compose(Dy, w));
        x_free = -sq(w);
        break;
    }
    default: throw std::invalid_argument("current_minimal: family must be C1, C1bar, C2 or C2bar");
    }
    ConservedCurrent c = detail::from_free(family, std::move(t_free), std::move(x_free));
    c.declared_order = kp + lp + 1;
    c.characteristic_operator = minimal_current_characteristic_operator(family, kp, lp);
    c.characteristic = apply_operator_reduced(*c.characteristic_operator, field_u);
    const int order = c.declared_order;
    return detail::checked(std::move(c), order);
}

/// The current (-u², u_x²) that generates every conservation law under the symmetry action.
inline ConservedCurrent generating_current()
{
    ConservedCurrent c = current_minimal(CurrentFamily::C2, 0, 0);
    c.family = CurrentFamily::GEN;
    return c;
}

/// Conservation-law characteristic test: E_u(η·(u_xy - u)) vanishes identically,
/// with u_k lifted to pure derivatives.
inline bool is_cl_characteristic(const ReducedJetPoly& eta)
{
    require_single_field(eta, field_u, "is_cl_characteristic");
    return euler_operator(lift_pure(eta) * klein_gordon_expression()).is_zero();
}

/// Result of acting on a current; conserved iff the divergence is zero.
struct CurrentCandidate {
    ReducedJetPoly t;
    ReducedJetPoly x;
    ReducedJetPoly divergence;

    bool conserved() const { return divergence.is_zero(); }
};

/// Prolonged evolutionary action of η ∂_u on a reduced jet polynomial.
inline ReducedJetPoly evolutionary_action(const ReducedJetPoly& eta, const ReducedJetPoly& p)
{
    ReducedJetPoly out;
    for (const auto& v : p.variables())
        if (v.field == field_u.name) out += p.partial(v) * shifted_total_derivative(eta, v.index);
    return out;
}

inline CurrentCandidate symmetry_action_on_current(const ReducedJetPoly& eta, const ConservedCurrent& c)
{
    CurrentCandidate out;
    out.t = evolutionary_action(eta, c.t);
    out.x = evolutionary_action(eta, c.x);
    out.divergence = on_shell_divergence(out.t, out.x);
    return out;
}

/// Every minimal-order current of order n together with its verification outcome.
struct OrderNCensus {
    int order = 0;
    std::vector<ConservedCurrent> currents;
    std::size_t verified = 0;
    std::size_t characteristic_rank = 0;
};

/// Members with kp + lp = n - 1, in (family, kp, lp) order; C1 needs lp >= 1.
inline std::vector<std::tuple<CurrentFamily, int, int>> order_n_members(int n)
{
    std::vector<std::tuple<CurrentFamily, int, int>> out;
    for (auto f : {CurrentFamily::C1, CurrentFamily::C1bar, CurrentFamily::C2, CurrentFamily::C2bar})
        for (int kp = 0; kp <= n - 1; ++kp) {
            const int lp = n - 1 - kp;
            if (f == CurrentFamily::C1 && lp == 0) continue;
            out.emplace_back(f, kp, lp);
        }
    return out;
}

inline OrderNCensus census_order_n_currents(int n)
{
    if (n < 2) throw std::invalid_argument("count_order_n_currents: requires n >= 2");
    OrderNCensus census;
    census.order = n;
    std::vector<ReducedJetPoly> characteristics;
    for (const auto& [family, kp, lp] : order_n_members(n)) {
        ConservedCurrent c = current_minimal(family, kp, lp);
        const bool ok = c.divergence().is_zero() && c.reduced_order() == n && is_cl_characteristic(*c.characteristic);
        if (ok) ++census.verified;
        characteristics.push_back(*c.characteristic);
        census.currents.push_back(std::move(c));
    }
    census.characteristic_rank = independence_rank(characteristics);
    return census;
}

/// Number of order-n members that pass verification; independent characteristics are required.
inline std::size_t count_order_n_currents(int n)
{
    const OrderNCensus census = census_order_n_currents(n);
    if (census.characteristic_rank != census.currents.size())
        throw std::logic_error("count_order_n_currents: characteristics are linearly dependent");
    return census.verified;
}

} // namespace kgsym
