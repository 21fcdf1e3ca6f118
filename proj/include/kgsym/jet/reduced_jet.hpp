#pragma once

#include "kgsym/jet/jet_poly.hpp"
#include "kgsym/opalg/td_operator.hpp"

#include <compare>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace kgsym {

/// Name of a dependent variable. Every field is taken to satisfy w_xy = w on shell.
struct FieldId {
    std::string name;

    friend auto operator<=>(const FieldId&, const FieldId&) = default;
};

inline const FieldId field_u{"u"};

/// On-shell jet coordinate w_k: D_x^k w for k >= 0, D_y^{-k} w for k < 0.
struct ReducedVar {
    std::string field;
    int index = 0;

    /// Field name ascending, then index descending.
    friend std::strong_ordering operator<=>(const ReducedVar& a, const ReducedVar& b)
    {
        if (auto c = a.field <=> b.field; c != 0) return c;
        return b.index <=> a.index;
    }
    friend bool operator==(const ReducedVar&, const ReducedVar&) = default;

    std::string to_string() const { return field + "[" + std::to_string(index) + "]"; }
};

using ReducedJetPoly = JetPoly<ReducedVar>;

/// The on-shell coordinate field_k as a polynomial.
inline ReducedJetPoly jet_var(const FieldId& f, int k, int exponent = 1)
{
    return ReducedJetPoly::variable({f.name, k}, exponent);
}
inline ReducedJetPoly u_(int k) { return jet_var(field_u, k); }

/// Order: max |k| over the variables present, nullopt when none appear.
inline std::optional<int> jet_order(const ReducedJetPoly& p)
{
    std::optional<int> order;
    for (const auto& v : p.variables()) order = std::max(order.value_or(0), std::abs(v.index));
    return order;
}

/// Reduced total derivative; the jet index shifts by +1 for x and -1 for y, per field.
inline ReducedJetPoly reduced_total_derivative(const ReducedJetPoly& p, XYVar w)
{
    const int step = w == XYVar::x ? 1 : -1;
    return p.derivation(w, [step](const ReducedVar& v) { return ReducedVar{v.field, v.index + step}; });
}

/// Applies the reduced total derivative n times.
inline ReducedJetPoly reduced_total_derivative(const ReducedJetPoly& p, XYVar w, int n)
{
    ReducedJetPoly r = p;
    for (int i = 0; i < n; ++i) r = reduced_total_derivative(r, w);
    return r;
}

/// x 𝒟_x p - y 𝒟_y p.
inline ReducedJetPoly reduced_J(const ReducedJetPoly& p)
{
    return XYPoly::x() * reduced_total_derivative(p, XYVar::x) - XYPoly::y() * reduced_total_derivative(p, XYVar::y);
}

/// Applies the operator to the field and reduces on shell: D_x^p D_y^q w -> w_{p-q}.
inline ReducedJetPoly apply_operator_reduced(const TDOperator& a, const FieldId& w)
{
    ReducedJetPoly out;
    for (const auto& [d, c] : a.terms()) out.add_term({{ReducedVar{w.name, d.dx - d.dy}, 1}}, c);
    return out;
}

/// Re-lifts a reduced linear characteristic sum c_k w_k to the operator sum c_k D_x^k / c_k D_y^{-k}.
inline TDOperator lift_to_operator(const ReducedJetPoly& p)
{
    if (!p.is_linear_homogeneous())
        throw std::invalid_argument("lift_to_operator: characteristic is not linear homogeneous in jets");
    TDOperator out;
    std::optional<std::string> field;
    for (const auto& [m, c] : p.terms()) {
        const ReducedVar& v = m.front().first;
        if (field && *field != v.field) throw std::invalid_argument("lift_to_operator: mixes distinct fields");
        field = v.field;
        out.add_term(v.index >= 0 ? DerivIndex{v.index, 0} : DerivIndex{0, -v.index}, c);
    }
    return out;
}

/// Distinct field names occurring in p.
inline std::set<std::string> fields_of(const ReducedJetPoly& p)
{
    std::set<std::string> out;
    for (const auto& v : p.variables()) out.insert(v.field);
    return out;
}

inline void require_single_field(const ReducedJetPoly& p, const FieldId& f, const char* what)
{
    for (const auto& name : fields_of(p))
        if (name != f.name) throw std::invalid_argument(std::string(what) + ": expected only field " + f.name + ", found " + name);
}

} // namespace kgsym
