// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "kgsym/kgsym.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace kgsym;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> body;
};

std::vector<std::pair<BasisKind, std::pair<int, int>>> basis_indices(int max_k, int max_l, int max_total)
{
    std::vector<std::pair<BasisKind, std::pair<int, int>>> out;
    for (auto kind : {BasisKind::Q, BasisKind::Qbar})
        for (int k = 0; k <= max_k; ++k)
            for (int l = kind == BasisKind::Qbar ? 1 : 0; l <= max_l && k + l <= max_total; ++l)
                out.push_back({kind, {k, l}});
    return out;
}

std::string label(BasisKind kind, int k, int l)
{
    return std::string(kind == BasisKind::Q ? "Q" : "Qbar") + "(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

Outcome dimension_tables()
{
    Outcome o;
    for (int n = 0; n <= 5; ++n) {
        const int d = n + 2;
        const std::size_t cumulative = solve_linear_determining(n, d).dim();
        o.require(solve_linear_determining(n, d + 1).dim() == cumulative, "not saturated at n=" + std::to_string(n));
        o.require(graded_dimension(n, d) == static_cast<std::size_t>(2 * n + 1), "graded dim at n=" + std::to_string(n));
        o.require(cumulative == static_cast<std::size_t>((n + 1) * (n + 1)), "cumulative dim at n=" + std::to_string(n));
    }
    return o;
}

Outcome adjoint_parity()
{
    Outcome o;
    for (const auto& [kind, kl] : basis_indices(4, 4, 8)) {
        const auto [k, l] = kl;
        const TDOperator q = basis_op(kind, k, l);
        o.require(adjoint(q) == Rational((k + l) % 2 == 0 ? 1 : -1) * q, label(kind, k, l));
    }
    return o;
}

Outcome centrality()
{
    Outcome o;
    const TDOperator L = klein_gordon_operator();
    for (auto side : {Side::X, Side::Y})
        for (int k = 0; k <= 6; ++k)
            for (int l = 0; k + l <= 6; ++l)
                o.require(commutator(L, monomial_op(side, k, l)).is_zero(),
                          "k=" + std::to_string(k) + " l=" + std::to_string(l));
    return o;
}

Outcome structure_constants()
{
    Outcome o;
    const EssentialGenerators e;
    o.require(reduced_bracket(e.e1, e.e2).is_zero(), "[e1,e2]");
    o.require(reduced_bracket(e.e1, e.e3) == e.e1, "[e1,e3]");
    o.require(reduced_bracket(e.e2, e.e3) == -e.e2, "[e2,e3]");
    for (const auto& g : {e.e1, e.e2, e.e3}) o.require(reduced_bracket(e.e0, g).is_zero(), "e0 not central");
    return o;
}

Outcome variational_parity()
{
    Outcome o;
    for (const auto& [kind, kl] : basis_indices(7, 7, 7)) {
        const auto [k, l] = kl;
        o.require(is_variational_linear(basis_op(kind, k, l)) == ((k + l) % 2 == 1), label(kind, k, l));
    }
    return o;
}

Outcome reduced_j3_counterexample()
{
    Outcome o;
    const TDOperator j3 = power(TDOperator::j(), 3);
    const TDOperator lifted = reduced_lift(j3);
    o.require(is_variational_linear(j3), "J^3 fails the variational criterion");
    o.require(lifted - j3 ==
                  compose(TDOperator::mul(XYPoly::monomial(3, 1, 1)), compose(TDOperator::j(), klein_gordon_operator())),
              "lifted - J^3 is not 3xy J L");
    o.require(!is_variational_linear(lifted),
              "operator lifted from reduced J^3 u passes the variational criterion (3xy J L is variational since J(xy) = 0)");
    return o;
}

Outcome conservation()
{
    Outcome o;
    const FieldId f{"f"};
    for (const auto& c : {current_C0(f), current_C0bar(f)})
        o.require(c.divergence().is_zero() && c.reduced_order() == 1, to_string(c.family));
    for (const auto& [kind, kl] : basis_indices(5, 5, 5)) {
        const auto [k, l] = kl;
        if ((k + l) % 2 == 0) continue;
        const ConservedCurrent c = current_Ctilde(basis_op(kind, k, l));
        o.require(c.divergence().is_zero(), "Ctilde " + label(kind, k, l));
        o.require(c.reduced_order() == c.declared_order, "Ctilde order " + label(kind, k, l));
        o.require(is_cl_characteristic(*c.characteristic), "Ctilde characteristic " + label(kind, k, l));
    }
    for (auto family : {CurrentFamily::C1, CurrentFamily::C1bar, CurrentFamily::C2, CurrentFamily::C2bar})
        for (int kp = 0; kp <= 3; ++kp)
            for (int lp = family == CurrentFamily::C1 ? 1 : 0; kp + lp <= 3; ++lp) {
                const ConservedCurrent c = current_minimal(family, kp, lp);
                const std::string name = to_string(family) + "(" + std::to_string(kp) + "," + std::to_string(lp) + ")";
                o.require(c.divergence().is_zero(), name);
                o.require(c.reduced_order() == kp + lp + 1, name + " order");
                o.require(is_cl_characteristic(*c.characteristic), name + " characteristic");
            }
    return o;
}

Outcome generating_set()
{
    Outcome o;
    const ConservedCurrent gen = generating_current();
    const XYPoly half(Rational(1, 2));
    for (const auto& [kind, kl] : basis_indices(3, 3, 3)) {
        const auto [k, l] = kl;
        if ((k + l) % 2 == 0) continue;
        const TDOperator a = basis_op(kind, k, l);
        const CurrentCandidate acted =
            symmetry_action_on_current(half * reduced_total_derivative(apply_operator_reduced(a, field_u), XYVar::y), gen);
        const ConservedCurrent tilde = current_Ctilde(a);
        o.require(acted.t == tilde.t && acted.x == tilde.x, label(kind, k, l));
    }
    const FieldId f{"f"};
    const CurrentCandidate acted = symmetry_action_on_current(half * jet_var(f, -1), gen);
    o.require(acted.t == current_C0bar(f).t && acted.x == current_C0bar(f).x, "f_y/2");
    return o;
}

Outcome counting()
{
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
        const OrderNCensus census = census_order_n_currents(n);
        const auto expected = static_cast<std::size_t>(4 * n - 1);
        o.require(census.currents.size() == expected && census.verified == expected, "n=" + std::to_string(n));
        o.require(census.characteristic_rank == expected, "rank at n=" + std::to_string(n));
        o.require(count_order_n_currents(n) == expected, "count at n=" + std::to_string(n));
    }
    return o;
}

Outcome independence()
{
    Outcome o;
    for (int n = 0; n <= 5; ++n) {
        const auto basis = order_n_monomial_characteristics(n);
        o.require(basis.size() == static_cast<std::size_t>(2 * n + 1), "size at n=" + std::to_string(n));
        o.require(independence_rank(basis) == basis.size(), "rank at n=" + std::to_string(n));
    }
    return o;
}

Outcome round_trip()
{
    Outcome o;
    std::mt19937 rng(7);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto poly = [&] {
        XYPoly p;
        for (int t = pick(0, 3); t > 0; --t) {
            const int i = pick(0, 2);
            const int j = pick(0, 2);
            const int num = pick(-12, 12);
            const int den = pick(1, 6);
            p.add_term({i, j}, Rational(num, den));
        }
        return p;
    };
    for (int s = 0; s < 1000; ++s) {
        TDOperator a;
        for (int t = pick(0, 4); t > 0; --t) {
            const int dx = pick(0, 3);
            const int dy = pick(0, 3 - dx);
            a.add_term({dx, dy}, poly());
        }
        o.require(parse_operator(a.to_string()) == a, "operator " + a.to_string());
    }
    for (int s = 0; s < 1000; ++s) {
        ReducedJetPoly p;
        for (int t = pick(0, 4); t > 0; --t) {
            ReducedJetPoly m(poly());
            for (int e = pick(0, 2); e > 0; --e) {
                const int k = pick(-4, 4);
                m = m * u_(k);
            }
            p += m;
        }
        o.require(parse_jet(p.to_string()) == p, "jet " + p.to_string());
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "dimension tables", 60, dimension_tables},
        {2, "adjoint parity", 5, adjoint_parity},
        {3, "centrality", 10, centrality},
        {4, "structure constants", 1, structure_constants},
        {5, "variational parity", 5, variational_parity},
        {6, "reduced J^3 counterexample", 2, reduced_j3_counterexample},
        {7, "conservation", 60, conservation},
        {8, "generating conservation law", 10, generating_set},
        {9, "counting 4n-1", 30, counting},
        {10, "independence", 10, independence},
        {11, "parser round trip", 10, round_trip},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(elapsed <= c.budget_s, "over time budget");
        if (!o.ok) ++failures;
        std::printf("%s %2d %s (%.3f s / %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, elapsed, c.budget_s,
                    o.ok ? "" : ": ", o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
