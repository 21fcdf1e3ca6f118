#pragma once

#include "kgsym/arith/rational_matrix.hpp"
#include "kgsym/jet/laurent.hpp"
#include "kgsym/jet/reduced_jet.hpp"
#include "kgsym/opalg/td_operator.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace kgsym {

/// Invariance criterion on the reduced jet: 𝒟_x 𝒟_y η = η.
inline bool is_generalized_symmetry(const ReducedJetPoly& eta)
{
    require_single_field(eta, field_u, "is_generalized_symmetry");
    return reduced_total_derivative(reduced_total_derivative(eta, XYVar::y), XYVar::x) == eta;
}

/// Unknown slot: coefficient of x^x_deg y^y_deg in η^jet_index.
struct AnsatzSlot {
    int jet_index = 0;
    int x_deg = 0;
    int y_deg = 0;
};

/// Linear determining system for characteristics sum over |k| <= n of η^k(x,y) u_k,
/// each η^k a polynomial of total degree at most `degree`.
///
/// Row (m, a, b) is the coefficient of x^a y^b in
/// η^m_xy + η^{m-1}_y + η^{m+1}_x = 0, for m = -n-1 .. n+1.
struct DeterminingSystem {
    int order = 0;
    int degree = 0;
    std::vector<AnsatzSlot> unknowns;
    RationalMatrix matrix;

    static DeterminingSystem assemble(int order, int degree)
    {
        if (order < 0 || degree < 0) throw std::invalid_argument("DeterminingSystem: negative order or degree");
        DeterminingSystem sys;
        sys.order = order;
        sys.degree = degree;
        for (int k = -order; k <= order; ++k)
            for (int t = 0; t <= degree; ++t)
                for (int i = t; i >= 0; --i) sys.unknowns.push_back({k, i, t - i});

        using RowKey = std::tuple<int, int, int>;
        std::map<RowKey, std::size_t> row_of;
        struct Entry {
            std::size_t row, col;
            long value;
        };
        std::vector<Entry> entries;
        auto emit = [&](int m, int a, int b, std::size_t col, long value) {
            if (value == 0) return;
            auto [it, inserted] = row_of.try_emplace({m, a, b}, row_of.size());
            entries.push_back({it->second, col, value});
        };
        for (std::size_t col = 0; col < sys.unknowns.size(); ++col) {
            const auto [k, i, j] = sys.unknowns[col];
            emit(k, i - 1, j - 1, col, static_cast<long>(i) * j); // η^k_xy in Δ_k
            emit(k + 1, i, j - 1, col, j);                        // η^k_y in Δ_{k+1}
            emit(k - 1, i - 1, j, col, i);                        // η^k_x in Δ_{k-1}
        }
        sys.matrix = RationalMatrix(row_of.size(), sys.unknowns.size());
        for (const auto& e : entries) sys.matrix(e.row, e.col) += e.value;
        return sys;
    }

    /// Characteristic encoded by a coefficient vector over the unknowns.
    ReducedJetPoly characteristic(const RationalVector& v) const
    {
        ReducedJetPoly eta;
        for (std::size_t c = 0; c < unknowns.size(); ++c) {
            if (v[c].is_zero()) continue;
            const auto& s = unknowns[c];
            eta += XYPoly::monomial(v[c], s.x_deg, s.y_deg) * u_(s.jet_index);
        }
        return eta;
    }
};

struct SymmetryBasis {
    int order = 0;
    int degree = 0;
    std::vector<ReducedJetPoly> elements;

    std::size_t dim() const { return elements.size(); }
};

/// Solves the linear determining equations exactly at order n with coefficient degree bound d.
inline SymmetryBasis solve_linear_determining(int n, int d)
{
    if (d < n) throw std::invalid_argument("solve_linear_determining: degree bound must be at least the order");
    const DeterminingSystem sys = DeterminingSystem::assemble(n, d);
    SymmetryBasis basis{n, d, {}};
    for (const auto& v : nullspace(sys.matrix)) basis.elements.push_back(sys.characteristic(v));
    return basis;
}

/// Dimension of the order-exactly-n quotient: dim at order n minus dim at order n-1.
inline std::size_t graded_dimension(int n, int d)
{
    if (d < n) throw std::invalid_argument("graded_dimension: degree bound must be at least the order");
    const std::size_t upper = solve_linear_determining(n, d).dim();
    const std::size_t lower = n == 0 ? 0 : solve_linear_determining(n - 1, d).dim();
    return upper - lower;
}

/// 𝒟_x^k for k >= 0, 𝒟_y^{-k} for k < 0.
inline ReducedJetPoly shifted_total_derivative(const ReducedJetPoly& p, int k)
{
    return k >= 0 ? reduced_total_derivative(p, XYVar::x, k) : reduced_total_derivative(p, XYVar::y, -k);
}

/// Reduced Lie bracket of evolutionary fields η1 ∂_u and η2 ∂_u.
inline ReducedJetPoly reduced_bracket(const ReducedJetPoly& eta1, const ReducedJetPoly& eta2)
{
    require_single_field(eta1, field_u, "reduced_bracket");
    require_single_field(eta2, field_u, "reduced_bracket");
    ReducedJetPoly out;
    for (const auto& v : eta2.variables()) out += eta2.partial(v) * shifted_total_derivative(eta1, v.index);
    for (const auto& v : eta1.variables()) out -= eta1.partial(v) * shifted_total_derivative(eta2, v.index);
    return out;
}

/// Rank of the coefficient matrix of the exponential-family evaluations.
///
/// Equal to the list length iff no nontrivial combination vanishes on every
/// exponential solution, hence iff none is a trivial symmetry.
inline std::size_t independence_rank(const std::vector<ReducedJetPoly>& basis)
{
    std::vector<LaurentEval> evals;
    std::map<LaurentExponent, std::size_t> col_of;
    for (const auto& p : basis) {
        if (!p.is_linear_homogeneous() && !p.is_zero())
            throw std::invalid_argument("independence_rank: element is not linear in jets");
        evals.push_back(eval_exp_family(p));
        for (const auto& [e, c] : evals.back().terms()) col_of.try_emplace(e, col_of.size());
    }
    RationalMatrix m(evals.size(), col_of.size());
    for (std::size_t r = 0; r < evals.size(); ++r)
        for (const auto& [e, c] : evals[r].terms()) m(r, col_of.at(e)) = c;
    return rank(m);
}

/// The 2n+1 characteristics J^n u, J^k D_x^{n-k} u, J^k D_y^{n-k} u (k < n), reduced.
inline std::vector<ReducedJetPoly> order_n_monomial_characteristics(int n)
{
    std::vector<ReducedJetPoly> out{apply_operator_reduced(monomial_op(Side::X, n, 0), field_u)};
    for (int k = 0; k < n; ++k) {
        out.push_back(apply_operator_reduced(monomial_op(Side::X, k, n - k), field_u));
        out.push_back(apply_operator_reduced(monomial_op(Side::Y, k, n - k), field_u));
    }
    return out;
}

/// Characteristics of the essential Lie symmetries u∂_u, ∂_x, ∂_y, x∂_x - y∂_y in evolutionary form.
struct EssentialGenerators {
    ReducedJetPoly e0 = u_(0);
    ReducedJetPoly e1 = -u_(1);
    ReducedJetPoly e2 = -u_(-1);
    ReducedJetPoly e3 = -reduced_J(u_(0));
};

} // namespace kgsym
