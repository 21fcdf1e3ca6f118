#include "test_support.hpp"

#include "kgsym/cli/commands.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace kgsym;

namespace {

std::size_t error_position(const std::function<void()>& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error";
    return std::string::npos;
}

TEST(ParseOperator, Examples)
{
    EXPECT_EQ(parse_operator("(J + 1/2)^1 * Dx"), basis_op(BasisKind::Q, 1, 1));
    EXPECT_EQ(parse_operator("Dx*Dy - 1"), klein_gordon_operator());
    EXPECT_EQ(parse_operator("J^0"), TDOperator::one());
    EXPECT_EQ(parse_operator("x*Dx - y*Dy"), TDOperator::j());
    // composition, not multiplication
    EXPECT_EQ(parse_operator("Dx*x"), TDOperator::mul(XYPoly::x()) * TDOperator::dx() + TDOperator::one());
}

TEST(ParseOperator, Errors)
{
    EXPECT_EQ(error_position([] { parse_operator("Dx + * Dy"); }), 5u);
    EXPECT_EQ(error_position([] { parse_operator("Dz"); }), 0u);
    EXPECT_EQ(error_position([] { parse_operator("(Dx"); }), 3u);
    try {
        parse_operator("J^-1");
        FAIL() << "negative exponent accepted";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("negative exponent"), std::string::npos);
    }
    EXPECT_THROW(parse_operator("u[1]"), ParseError);
}

TEST(ParseJet, Examples)
{
    const XYPoly x = XYPoly::x(), y = XYPoly::y();
    EXPECT_EQ(parse_jet("x*u[1] - y*u[-1]"), x * u_(1) - y * u_(-1));
    EXPECT_EQ(parse_jet("u[0]^2 + 3/2"), u_(0).pow(2) + ReducedJetPoly(XYPoly(Rational(3, 2))));
    EXPECT_EQ(parse_jet("f[2]*u[0]"), jet_var(FieldId{"f"}, 2) * u_(0));
    EXPECT_THROW(parse_jet("Dx"), ParseError);
    EXPECT_THROW(parse_jet("u[1"), ParseError);
}

TEST(Parser, OperatorRoundTrip)
{
    kgsym::testing::Gen g(71);
    for (int i = 0; i < 1000; ++i) {
        const TDOperator a = g.op(3, 4, 2);
        EXPECT_EQ(parse_operator(a.to_string()), a) << a.to_string();
    }
}

TEST(Parser, JetRoundTrip)
{
    kgsym::testing::Gen g(72);
    for (int i = 0; i < 1000; ++i) {
        const ReducedJetPoly p = g.jet(4, 2, i % 3 == 0);
        EXPECT_EQ(parse_jet(p.to_string()), p) << p.to_string();
    }
}

TEST(Serialize, JsonTextRoundTrips)
{
    kgsym::testing::Gen g(73);
    for (int i = 0; i < 100; ++i) {
        const TDOperator a = g.op();
        const Json ja = Json::parse(to_json(a).dump());
        EXPECT_EQ(parse_operator(ja.at("text").get<std::string>()), a);
        const ReducedJetPoly p = g.jet();
        const Json jp = Json::parse(to_json(p).dump());
        EXPECT_EQ(parse_jet(jp.at("text").get<std::string>()), p);
    }
}

TEST(Run, Dims)
{
    Command c{"dims", {}, 3, {}, {}};
    const Report r = run(c);
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.exit_code(), exit_ok);
    const Json& rows = r.json.at("result").at("rows");
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[3].at("cumulative"), "16");
    EXPECT_EQ(rows[3].at("graded"), "7");
    EXPECT_EQ(r.json.at("exact"), true);
}

TEST(Run, CurrentC2)
{
    const Report r = run(Command{"current", {"C2", "0", "0"}, {}, {}, {}});
    EXPECT_TRUE(r.verified);
    EXPECT_NE(r.text.find("T = -u[0]^2"), std::string::npos) << r.text;
    EXPECT_NE(r.text.find("X = u[1]^2"), std::string::npos) << r.text;
}

TEST(Run, UsageErrors)
{
    EXPECT_THROW(run(Command{"frobnicate", {}, {}, {}, {}}), UsageError);
    EXPECT_THROW(run(Command{"dims", {}, {}, {}, {}}), UsageError);
    EXPECT_THROW(run(Command{"current", {"C1", "x", "0"}, {}, {}, {}}), UsageError);
    EXPECT_THROW(run(Command{"current", {"Ctilde", "1"}, {}, {}, {}}), std::invalid_argument);
}

TEST(Run, CheckSymmetryAndVariational)
{
    EXPECT_EQ(run(Command{"check-symmetry", {"x*u[1] - y*u[-1]"}, {}, {}, {}}).json.at("result").at("symmetry"), true);
    EXPECT_EQ(run(Command{"check-symmetry", {"x*u[0]"}, {}, {}, {}}).json.at("result").at("symmetry"), false);
    const Report v = run(Command{"variational", {"Dx + 1"}, {}, {}, {}});
    EXPECT_EQ(v.json.at("result").at("variational"), false);
    EXPECT_EQ(v.json.at("result").at("self_adjoint_part").at("text"), "(1)");
}

TEST(Run, VerifyAllIsDeterministic)
{
    const Command c{"verify-all", {}, 2, {}, {}};
    const Report a = run(c), b = run(c);
    EXPECT_EQ(a.render(OutputFormat::json), b.render(OutputFormat::json));
    EXPECT_EQ(a.render(OutputFormat::text), b.render(OutputFormat::text));
}

} // namespace
