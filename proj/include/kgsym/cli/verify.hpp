#pragma once

#include "kgsym/cli/parse.hpp"
#include "kgsym/noether/noether.hpp"
#include "kgsym/symmetry/symmetry.hpp"

#include <random>
#include <string>
#include <vector>

namespace kgsym {

struct CheckResult {
    CheckResult(std::string id_, std::string title_) : id(std::move(id_)), title(std::move(title_)) {}

    std::string id;
    std::string title;
    bool passed = true;
    std::string detail;

    /// Records a failing sub-check; the first failure message is kept as the detail.
    void require(bool ok, const std::string& what)
    {
        if (ok) return;
        if (passed) detail = what;
        passed = false;
    }
};

namespace verify {

inline CheckResult dimensions(int max_order)
{
    CheckResult r{"dims", "graded dimension 2n+1 and cumulative (n+1)^2, saturated in the degree bound"};
    for (int n = 0; n <= max_order; ++n) {
        const int d = n + 2;
        const std::size_t cumulative = solve_linear_determining(n, d).dim();
        const std::size_t saturated = solve_linear_determining(n, d + 1).dim();
        const std::size_t graded = graded_dimension(n, d);
        const std::string at = " at n=" + std::to_string(n);
        r.require(graded == static_cast<std::size_t>(2 * n + 1), "graded dimension " + std::to_string(graded) + at);
        r.require(cumulative == static_cast<std::size_t>((n + 1) * (n + 1)), "cumulative dimension " + std::to_string(cumulative) + at);
        r.require(saturated == cumulative, "degree bound not saturated" + at);
    }
    return r;
}

inline CheckResult adjoint_parity(int max_index)
{
    CheckResult r{"adjoint-parity", "adjoint of a basis operator is (-1)^(k+l) times itself"};
    for (auto kind : {BasisKind::Q, BasisKind::Qbar})
        for (int k = 0; k <= max_index; ++k)
            for (int l = kind == BasisKind::Qbar ? 1 : 0; l <= max_index; ++l) {
                const TDOperator q = basis_op(kind, k, l);
                const Rational sign = (k + l) % 2 == 0 ? 1 : -1;
                r.require(adjoint(q) == sign * q, "parity broken at k=" + std::to_string(k) + ", l=" + std::to_string(l));
            }
    return r;
}

inline CheckResult centrality(int max_total)
{
    CheckResult r{"centrality", "L = DxDy - 1 commutes with every J^k D^l"};
    const TDOperator L = klein_gordon_operator();
    for (auto side : {Side::X, Side::Y})
        for (int k = 0; k <= max_total; ++k)
            for (int l = 0; k + l <= max_total; ++l)
                r.require(commutator(L, monomial_op(side, k, l)).is_zero(),
                          "[L, J^" + std::to_string(k) + " D^" + std::to_string(l) + "] != 0");
    return r;
}

inline CheckResult structure_constants()
{
    CheckResult r{"structure", "reduced brackets of the essential generators"};
    const EssentialGenerators e;
    r.require(reduced_bracket(e.e1, e.e2).is_zero(), "[e1,e2] != 0");
    r.require(reduced_bracket(e.e1, e.e3) == e.e1, "[e1,e3] != e1");
    r.require(reduced_bracket(e.e2, e.e3) == -e.e2, "[e2,e3] != -e2");
    for (const auto* ei : {&e.e1, &e.e2, &e.e3}) r.require(reduced_bracket(e.e0, *ei).is_zero(), "e0 not central");
    return r;
}

inline CheckResult variational_parity(int max_total)
{
    CheckResult r{"variational-parity", "basis operator is variational iff k+l is odd"};
    for (auto kind : {BasisKind::Q, BasisKind::Qbar})
        for (int k = 0; k <= max_total; ++k)
            for (int l = kind == BasisKind::Qbar ? 1 : 0; k + l <= max_total; ++l)
                r.require(is_variational_linear(basis_op(kind, k, l)) == ((k + l) % 2 == 1),
                          "parity mismatch at k=" + std::to_string(k) + ", l=" + std::to_string(l));
    return r;
}

inline CheckResult reduced_counterexample()
{
    CheckResult r{"reduced-j3", "J^3 is variational, its reduced lift is not, they differ by 3xy J L"};
    const TDOperator J = TDOperator::j();
    const TDOperator j3 = power(J, 3);
    const TDOperator lifted = reduced_lift(j3);
    r.require(is_variational_linear(j3), "J^3 is not variational");
    r.require(lifted - j3 == compose(TDOperator::mul(XYPoly::monomial(3, 1, 1)), compose(J, klein_gordon_operator())),
              "lifted - J^3 != 3xy J L");
    r.require(!is_variational_linear(lifted), "reduced lift of J^3 passes the variational criterion");
    return r;
}

/// Skew basis operators with k + l <= max_total, Q family first.
inline std::vector<TDOperator> skew_basis(int max_total)
{
    std::vector<TDOperator> out;
    for (auto kind : {BasisKind::Q, BasisKind::Qbar})
        for (int k = 0; k <= max_total; ++k)
            for (int l = kind == BasisKind::Qbar ? 1 : 0; k + l <= max_total; ++l)
                if ((k + l) % 2 == 1) out.push_back(basis_op(kind, k, l));
    return out;
}

inline CheckResult conservation(int tilde_max, int minimal_max)
{
    CheckResult r{"conservation", "every constructed current is divergence-free with its stated order"};
    const FieldId f{"f"};
    for (const auto& c : {current_C0(f), current_C0bar(f)})
        r.require(c.divergence().is_zero() && c.declared_order == 1, to_string(c.family) + " failed");
    for (const auto& a : skew_basis(tilde_max)) {
        const ConservedCurrent c = current_Ctilde(a);
        r.require(c.divergence().is_zero(), "Ctilde divergence for " + a.to_string());
        r.require(c.declared_order >= (a.order() + 1) / 2, "Ctilde order below minimum for " + a.to_string());
        r.require(is_cl_characteristic(*c.characteristic), "Ctilde characteristic rejected for " + a.to_string());
    }
    for (auto family : {CurrentFamily::C1, CurrentFamily::C1bar, CurrentFamily::C2, CurrentFamily::C2bar})
        for (int kp = 0; kp <= minimal_max; ++kp)
            for (int lp = family == CurrentFamily::C1 ? 1 : 0; kp + lp <= minimal_max; ++lp) {
                const ConservedCurrent c = current_minimal(family, kp, lp);
                const std::string tag = to_string(family) + "(" + std::to_string(kp) + "," + std::to_string(lp) + ")";
                r.require(c.divergence().is_zero(), tag + " divergence");
                r.require(c.reduced_order() == kp + lp + 1, tag + " order");
                r.require(is_cl_characteristic(*c.characteristic), tag + " characteristic rejected");
            }
    return r;
}

inline CheckResult generating_set(int max_total)
{
    CheckResult r{"generating", "symmetry action on (-u^2, u_x^2) reproduces Ctilde and C0bar"};
    const ConservedCurrent gen = generating_current();
    const Rational half(1, 2);
    for (const auto& a : skew_basis(max_total)) {
        const ReducedJetPoly eta = XYPoly(half) * reduced_total_derivative(apply_operator_reduced(a, field_u), XYVar::y);
        const CurrentCandidate acted = symmetry_action_on_current(eta, gen);
        const ConservedCurrent tilde = current_Ctilde(a);
        r.require(acted.t == tilde.t && acted.x == tilde.x, "action mismatch for " + a.to_string());
        r.require(acted.conserved(), "acted current not conserved for " + a.to_string());
    }
    const FieldId f{"f"};
    const CurrentCandidate acted = symmetry_action_on_current(XYPoly(half) * jet_var(f, -1), gen);
    const ConservedCurrent bar = current_C0bar(f);
    r.require(acted.t == bar.t && acted.x == bar.x, "action by f_y/2 does not give C0bar");
    return r;
}

inline CheckResult counting(int max_order)
{
    CheckResult r{"counting", "4n-1 independent conservation laws of order n"};
    for (int n = 2; n <= max_order; ++n) {
        const OrderNCensus census = census_order_n_currents(n);
        const auto expected = static_cast<std::size_t>(4 * n - 1);
        r.require(census.verified == expected, "verified count " + std::to_string(census.verified) + " at n=" + std::to_string(n));
        r.require(census.characteristic_rank == expected, "characteristic rank deficit at n=" + std::to_string(n));
    }
    return r;
}

inline CheckResult independence(int max_order)
{
    CheckResult r{"independence", "monomial characteristics of order n have rank 2n+1"};
    for (int n = 0; n <= max_order; ++n) {
        const auto basis = order_n_monomial_characteristics(n);
        r.require(independence_rank(basis) == static_cast<std::size_t>(2 * n + 1), "rank deficit at n=" + std::to_string(n));
        for (const auto& eta : basis) r.require(is_generalized_symmetry(eta), "not a symmetry: " + eta.to_string());
    }
    return r;
}

/// Fixed-seed print/parse round trips.
inline CheckResult parser_round_trip(int samples)
{
    CheckResult r{"round-trip", "parse(print(e)) = e for random operators and jet polynomials"};
    std::mt19937 rng(20240607u);
    auto small = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto poly = [&](int max_deg) {
        XYPoly p;
        for (int t = small(0, 3); t > 0; --t) {
            const XYExponent e{small(0, max_deg), small(0, max_deg)};
            const int num = small(-9, 9);
            const int den = small(1, 4);
            p.add_term(e, Rational(num, den));
        }
        return p;
    };
    for (int s = 0; s < samples; ++s) {
        TDOperator a;
        for (int t = small(0, 4); t > 0; --t) {
            const int dx = small(0, 3);
            const int dy = small(0, 3 - dx);
            a.add_term({dx, dy}, poly(2));
        }
        r.require(parse_operator(a.to_string()) == a, "operator round trip: " + a.to_string());

        ReducedJetPoly p;
        for (int t = small(0, 4); t > 0; --t) {
            ReducedJetPoly m(poly(2));
            for (int e = small(0, 2); e > 0; --e) {
                const FieldId field{small(0, 3) == 0 ? "f" : "u"};
                m = m * jet_var(field, small(-4, 4));
            }
            p += m;
        }
        r.require(parse_jet(p.to_string()) == p, "jet round trip: " + p.to_string());
    }
    return r;
}

/// The full suite. `max_order` caps the dimension, independence and counting sweeps.
inline std::vector<CheckResult> verify_all(int max_order)
{
    return {dimensions(max_order),
            adjoint_parity(4),
            centrality(6),
            structure_constants(),
            variational_parity(7),
            reduced_counterexample(),
            conservation(5, 3),
            generating_set(3),
            counting(std::max(2, max_order)),
            independence(max_order),
            parser_round_trip(1000)};
}

} // namespace verify
} // namespace kgsym
