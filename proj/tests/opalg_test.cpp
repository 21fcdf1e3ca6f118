#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace kgsym;

namespace {

const XYPoly x = XYPoly::x();
const XYPoly y = XYPoly::y();
const TDOperator Dx = TDOperator::dx();
const TDOperator Dy = TDOperator::dy();
const TDOperator J = TDOperator::j();
const TDOperator One = TDOperator::one();
const TDOperator L = klein_gordon_operator();

// Oracle 1: an operator acting on a polynomial function.
XYPoly act(const TDOperator& a, const XYPoly& g)
{
    XYPoly out;
    for (const auto& [d, c] : a.terms()) out += c * g.derivative(d.dx, d.dy);
    return out;
}

// Oracle 2: the single-step rewriting rules D_x∘(c D^α) = c D_x D^α + c_x D^α (same for D_y).
TDOperator left_d(const TDOperator& a, XYVar v)
{
    TDOperator out;
    for (const auto& [d, c] : a.terms()) {
        out.add_term(v == XYVar::x ? DerivIndex{d.dx + 1, d.dy} : DerivIndex{d.dx, d.dy + 1}, c);
        out.add_term(d, c.derivative(v));
    }
    return out;
}

TDOperator rewrite_compose(const TDOperator& a, const TDOperator& b)
{
    TDOperator out;
    for (const auto& [d, c] : a.terms()) {
        TDOperator t = b;
        for (int i = 0; i < d.dy; ++i) t = left_d(t, XYVar::y);
        for (int i = 0; i < d.dx; ++i) t = left_d(t, XYVar::x);
        for (const auto& [dt, ct] : t.terms()) out.add_term(dt, c * ct);
    }
    return out;
}

TDOperator rewrite_adjoint(const TDOperator& a)
{
    TDOperator out;
    for (const auto& [d, c] : a.terms()) {
        TDOperator t = TDOperator::mul(c);
        for (int i = 0; i < d.dy; ++i) t = left_d(t, XYVar::y);
        for (int i = 0; i < d.dx; ++i) t = left_d(t, XYVar::x);
        out += d.order() % 2 == 0 ? t : -t;
    }
    return out;
}

std::vector<XYPoly> probe_functions()
{
    std::vector<XYPoly> out;
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j) out.push_back(XYPoly::monomial(1, i, j));
    return out;
}

TEST(Generators, Examples)
{
    EXPECT_EQ(J.coefficient(1, 0), x);
    EXPECT_EQ(J.coefficient(0, 1), -y);
    EXPECT_EQ(J.terms().size(), 2u);
    EXPECT_EQ(One.terms().size(), 1u);
    EXPECT_EQ(One.coefficient(0, 0), XYPoly(1));
    EXPECT_EQ(TDOperator::mul(x * x).coefficient(0, 0), x * x);
}

TEST(Compose, DxJEqualsJPlusOneDx)
{
    const TDOperator expected = TDOperator::term(x, 2, 0) + TDOperator::term(-y, 1, 1) + Dx;
    EXPECT_EQ(compose(Dx, J), expected);
    EXPECT_EQ(compose(Dx, J), compose(J + One, Dx));
    EXPECT_EQ(compose(Dx, J).to_string(), "(x)*Dx^2 + (-y)*Dx*Dy + Dx");
}

TEST(Compose, DyJEqualsJMinusOneDy)
{
    const TDOperator expected = TDOperator::term(x, 1, 1) + TDOperator::term(-y, 0, 2) - Dy;
    EXPECT_EQ(compose(Dy, J), expected);
    EXPECT_EQ(compose(Dy, J), compose(J - One, Dy));
}

TEST(Compose, IdentityAndOracles)
{
    kgsym::testing::Gen g(31);
    const auto probes = probe_functions();
    for (int i = 0; i < 100; ++i) {
        const TDOperator a = g.op(), b = g.op();
        EXPECT_EQ(compose(One, a), a);
        EXPECT_EQ(compose(a, One), a);
        const TDOperator ab = compose(a, b);
        EXPECT_EQ(ab, rewrite_compose(a, b));
        for (const auto& p : probes) EXPECT_EQ(act(ab, p), act(a, act(b, p)));
    }
}

TEST(Compose, Associative)
{
    kgsym::testing::Gen g(32);
    for (int i = 0; i < 60; ++i) {
        const TDOperator a = g.op(), b = g.op(), c = g.op();
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    }
}

TEST(Commutator, Examples)
{
    EXPECT_EQ(commutator(Dx, J), Dx);
    EXPECT_TRUE(commutator(Dx, Dy).is_zero());
    EXPECT_TRUE(commutator(compose(Dx, Dy) - One, J).is_zero());
}

TEST(Commutator, EnvelopingAlgebraRelations)
{
    // e1 = Dx, e2 = Dy, e3 = J
    EXPECT_TRUE(commutator(Dx, Dy).is_zero());
    EXPECT_EQ(commutator(Dx, J), Dx);
    EXPECT_EQ(commutator(Dy, J), -Dy);
}

TEST(Adjoint, Examples)
{
    EXPECT_EQ(adjoint(Dx), -Dx);
    EXPECT_EQ(adjoint(Dy), -Dy);
    EXPECT_EQ(adjoint(J), -J);
    EXPECT_EQ(adjoint(TDOperator::mul(x * y)), TDOperator::mul(x * y));
    EXPECT_EQ(adjoint(L), L);
}

TEST(Adjoint, InvolutiveAntiHomomorphism)
{
    kgsym::testing::Gen g(33);
    for (int i = 0; i < 100; ++i) {
        const TDOperator a = g.op(), b = g.op();
        EXPECT_EQ(adjoint(a), rewrite_adjoint(a));
        EXPECT_EQ(adjoint(adjoint(a)), a);
        EXPECT_EQ(adjoint(compose(a, b)), compose(adjoint(b), adjoint(a)));
    }
}

TEST(BasisOp, Examples)
{
    EXPECT_EQ(basis_op(BasisKind::Q, 0, 0), One);
    EXPECT_EQ(basis_op(BasisKind::Q, 1, 1), compose(J + TDOperator::mul(Rational(1, 2)), Dx));
    EXPECT_EQ(basis_op(BasisKind::Q, 1, 1),
              TDOperator::term(x, 2, 0) + TDOperator::term(-y, 1, 1) + Rational(1, 2) * Dx);
    EXPECT_EQ(adjoint(basis_op(BasisKind::Q, 2, 1)), -basis_op(BasisKind::Q, 2, 1));
    EXPECT_EQ(basis_op(BasisKind::Qbar, 2, 1),
              compose(power(J - TDOperator::mul(Rational(1, 2)), 2), Dy));
}

TEST(BasisOp, RejectsQbarWithoutDerivative)
{
    EXPECT_THROW(basis_op(BasisKind::Qbar, 2, 0), std::invalid_argument);
    EXPECT_THROW(basis_op(BasisKind::Q, -1, 0), std::invalid_argument);
}

TEST(BasisOp, AdjointParity)
{
    for (auto kind : {BasisKind::Q, BasisKind::Qbar})
        for (int k = 0; k <= 4; ++k)
            for (int l = kind == BasisKind::Qbar ? 1 : 0; l <= 4; ++l) {
                const TDOperator q = basis_op(kind, k, l);
                EXPECT_EQ(adjoint(q), (k + l) % 2 == 0 ? q : -q) << "k=" << k << " l=" << l;
            }
}

TEST(MonomialOp, Examples)
{
    EXPECT_EQ(monomial_op(Side::X, 0, 1), Dx);
    EXPECT_EQ(monomial_op(Side::X, 3, 0), compose(J, compose(J, J)));
    for (const auto& p : probe_functions()) EXPECT_EQ(act(monomial_op(Side::X, 3, 0), p), act(J, act(J, act(J, p))));
}

TEST(MonomialOp, KleinGordonOperatorIsCentral)
{
    for (auto side : {Side::X, Side::Y})
        for (int k = 0; k <= 6; ++k)
            for (int l = 0; k + l <= 6; ++l)
                EXPECT_TRUE(commutator(L, monomial_op(side, k, l)).is_zero()) << "k=" << k << " l=" << l;
}

TEST(MonomialOp, CentralityFailsForGenericCoefficients)
{
    EXPECT_FALSE(commutator(L, TDOperator::mul(x)).is_zero());
}

TEST(SkewSelfSplit, Examples)
{
    EXPECT_EQ(skew_self_split(Dx), std::make_pair(Dx, TDOperator()));
    EXPECT_EQ(skew_self_split(One), std::make_pair(TDOperator(), One));
    // k + l = 2 is even, so Q(1,1) is self-adjoint
    const TDOperator q11 = basis_op(BasisKind::Q, 1, 1);
    EXPECT_EQ(skew_self_split(q11), std::make_pair(TDOperator(), q11));
}

TEST(SkewSelfSplit, PartsHaveTheirSymmetry)
{
    kgsym::testing::Gen g(34);
    for (int i = 0; i < 100; ++i) {
        const TDOperator a = g.op();
        const auto [skew, self] = skew_self_split(a);
        EXPECT_EQ(skew + self, a);
        EXPECT_TRUE(is_skew_adjoint(skew));
        EXPECT_TRUE(is_self_adjoint(self));
    }
}

TEST(Power, ZeroIsIdentityAndNegativeRejected)
{
    EXPECT_EQ(power(J, 0), One);
    EXPECT_THROW(power(J, -1), std::invalid_argument);
}

} // namespace
