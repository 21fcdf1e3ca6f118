#pragma once

#include "kgsym/cli/parse.hpp"
#include "kgsym/cli/serialize.hpp"
#include "kgsym/cli/verify.hpp"
#include "kgsym/noether/noether.hpp"
#include "kgsym/symmetry/symmetry.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgsym {

enum class OutputFormat { text, json };

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2 };

/// A validated command: its name, positional arguments and numeric options.
struct Command {
    std::string name;
    std::vector<std::string> args;
    std::optional<int> max_order;
    std::optional<int> order;
    std::optional<int> degree;
};

struct Report {
    Json json;
    std::string text;
    bool verified = true;

    int exit_code() const { return verified ? exit_ok : exit_verification_failed; }
    std::string render(OutputFormat f) const { return f == OutputFormat::json ? json.dump(2) + "\n" : text; }
};

/// Thrown for malformed arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string echo(const Command& c)
{
    std::string s = c.name;
    if (c.max_order) s += " --max-order " + std::to_string(*c.max_order);
    if (c.order) s += " --order " + std::to_string(*c.order);
    if (c.degree) s += " --degree " + std::to_string(*c.degree);
    for (const auto& a : c.args) s += " " + a;
    return s;
}

inline void need_args(const Command& c, std::size_t n)
{
    if (c.args.size() != n)
        throw UsageError(c.name + ": expected " + std::to_string(n) + " argument(s), got " + std::to_string(c.args.size()));
}

inline int need_option(const std::optional<int>& v, const char* flag, int min_value)
{
    if (!v) throw UsageError(std::string("missing ") + flag);
    if (*v < min_value) throw UsageError(std::string(flag) + " must be at least " + std::to_string(min_value));
    return *v;
}

inline Report make_report(const Command& c, Json result, std::string text, bool verified)
{
    Report r;
    r.json = Json{{"command", echo(c)}, {"exact", true}, {"verified", verified}, {"result", std::move(result)}};
    r.text = std::move(text);
    r.verified = verified;
    return r;
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline Report run_dims(const Command& c)
{
    const int max_order = need_option(c.max_order, "--max-order", 0);
    Json rows = Json::array();
    std::ostringstream text;
    text << "n  graded  2n+1  cumulative  (n+1)^2  saturated\n";
    bool ok = true;
    for (int n = 0; n <= max_order; ++n) {
        const int d = n + 2;
        const std::size_t cumulative = solve_linear_determining(n, d).dim();
        const bool saturated = solve_linear_determining(n, d + 1).dim() == cumulative;
        const std::size_t graded = graded_dimension(n, d);
        const bool row_ok = saturated && graded == static_cast<std::size_t>(2 * n + 1) &&
                            cumulative == static_cast<std::size_t>((n + 1) * (n + 1));
        ok = ok && row_ok;
        rows.push_back({{"n", std::to_string(n)},
                        {"degree_bound", std::to_string(d)},
                        {"graded", std::to_string(graded)},
                        {"expected_graded", std::to_string(2 * n + 1)},
                        {"cumulative", std::to_string(cumulative)},
                        {"expected_cumulative", std::to_string((n + 1) * (n + 1))},
                        {"saturated", saturated}});
        text << n << "  " << graded << "  " << 2 * n + 1 << "  " << cumulative << "  " << (n + 1) * (n + 1) << "  "
             << yes_no(saturated) << "\n";
    }
    return make_report(c, Json{{"rows", rows}}, text.str(), ok);
}

inline Report run_basis(const Command& c)
{
    const int n = need_option(c.order, "--order", 0);
    const int d = c.degree.value_or(n + 2);
    if (d < n) throw UsageError("--degree must be at least --order");
    const SymmetryBasis basis = solve_linear_determining(n, d);
    Json elements = Json::array();
    std::ostringstream text;
    text << "order " << n << ", degree bound " << d << ", dim " << basis.dim() << "\n";
    bool ok = true;
    for (const auto& eta : basis.elements) {
        ok = ok && is_generalized_symmetry(eta);
        elements.push_back(to_json(eta));
        text << "  " << eta.to_string() << "\n";
    }
    Json result{{"order", std::to_string(n)}, {"degree_bound", std::to_string(d)}, {"dim", std::to_string(basis.dim())}, {"elements", elements}};
    return make_report(c, result, text.str(), ok);
}

inline Report run_check_symmetry(const Command& c)
{
    need_args(c, 1);
    const ReducedJetPoly eta = parse_jet(c.args[0]);
    const bool sym = is_generalized_symmetry(eta);
    return make_report(c, Json{{"characteristic", to_json(eta)}, {"symmetry", sym}},
                       std::string("symmetry: ") + yes_no(sym) + "\n", true);
}

inline Report run_bracket(const Command& c)
{
    need_args(c, 2);
    const ReducedJetPoly b = reduced_bracket(parse_jet(c.args[0]), parse_jet(c.args[1]));
    return make_report(c, to_json(b), b.to_string() + "\n", true);
}

inline Report run_adjoint(const Command& c)
{
    need_args(c, 1);
    const TDOperator a = adjoint(parse_operator(c.args[0]));
    return make_report(c, to_json(a), a.to_string() + "\n", true);
}

inline Report run_commutator(const Command& c)
{
    need_args(c, 2);
    const TDOperator a = commutator(parse_operator(c.args[0]), parse_operator(c.args[1]));
    return make_report(c, to_json(a), a.to_string() + "\n", true);
}

inline Report run_variational(const Command& c)
{
    need_args(c, 1);
    const TDOperator a = parse_operator(c.args[0]);
    const bool var = is_variational_linear(a);
    const auto [skew, self] = skew_self_split(a);
    Json result{{"operator", to_json(a)}, {"variational", var}, {"skew_part", to_json(skew)}, {"self_adjoint_part", to_json(self)}};
    return make_report(c, result, std::string("variational: ") + yes_no(var) + "\n", true);
}

inline Report run_variational_basis(const Command& c)
{
    const int n = need_option(c.order, "--order", 0);
    Json rows = Json::array();
    std::ostringstream text;
    bool ok = true;
    auto emit = [&](BasisKind kind, int k, int l) {
        const TDOperator q = basis_op(kind, k, l);
        const bool skew = is_skew_adjoint(q);
        const bool var = is_variational_linear(q);
        ok = ok && var == skew && skew == ((k + l) % 2 == 1);
        const char* name = kind == BasisKind::Q ? "Q" : "Qbar";
        rows.push_back({{"kind", name}, {"k", std::to_string(k)}, {"l", std::to_string(l)}, {"operator", to_json(q)},
                        {"skew_adjoint", skew}, {"variational", var}});
        text << name << "(" << k << "," << l << ")  variational: " << yes_no(var) << "  " << q.to_string() << "\n";
    };
    for (int k = n; k >= 0; --k) emit(BasisKind::Q, k, n - k);
    for (int k = n - 1; k >= 0; --k) emit(BasisKind::Qbar, k, n - k);
    return make_report(c, Json{{"order", std::to_string(n)}, {"basis", rows}}, text.str(), ok);
}

inline std::string current_text(const ConservedCurrent& cc)
{
    std::ostringstream text;
    text << to_string(cc.family) << "\n  T = " << cc.t.to_string() << "\n  X = " << cc.x.to_string() << "\n  order "
         << cc.declared_order << ", divergence-free: " << yes_no(cc.divergence().is_zero()) << "\n";
    return text.str();
}

inline int parse_index(const std::string& s, const char* what)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + s + "'");
    }
    if (used != s.size() || v < 0) throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + s + "'");
    return v;
}

inline Report run_current(const Command& c)
{
    if (c.args.empty()) throw UsageError("current: missing family");
    const auto family = parse_family(c.args[0]);
    if (!family || *family == CurrentFamily::GEN) throw UsageError("current: unknown family '" + c.args[0] + "'");
    ConservedCurrent cc;
    switch (*family) {
    case CurrentFamily::C0:
    case CurrentFamily::C0bar: {
        if (c.args.size() > 2) throw UsageError("current C0: expected at most a field name");
        const FieldId f{c.args.size() == 2 ? c.args[1] : "f"};
        cc = *family == CurrentFamily::C0 ? current_C0(f) : current_C0bar(f);
        break;
    }
    case CurrentFamily::Ctilde:
        need_args(c, 2);
        cc = current_Ctilde(parse_operator(c.args[1]));
        break;
    default:
        need_args(c, 3);
        cc = current_minimal(*family, parse_index(c.args[1], "KP"), parse_index(c.args[2], "LP"));
    }
    return make_report(c, to_json(cc), current_text(cc), cc.divergence().is_zero());
}

inline Report run_verify_all(const Command& c)
{
    const int max_order = need_option(c.max_order, "--max-order", 0);
    const auto results = verify::verify_all(max_order);
    Json checks = Json::array();
    std::ostringstream text;
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed;
        checks.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        text << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.title;
        if (!r.passed) text << " -- " << r.detail;
        text << "\n";
    }
    return make_report(c, Json{{"checks", checks}}, text.str(), ok);
}

} // namespace detail

/// Executes a command. Parse errors and precondition violations propagate as exceptions.
inline Report run(const Command& c)
{
    using namespace detail;
    if (c.name == "dims") return run_dims(c);
    if (c.name == "basis") return run_basis(c);
    if (c.name == "check-symmetry") return run_check_symmetry(c);
    if (c.name == "bracket") return run_bracket(c);
    if (c.name == "adjoint") return run_adjoint(c);
    if (c.name == "commutator") return run_commutator(c);
    if (c.name == "variational") return run_variational(c);
    if (c.name == "variational-basis") return run_variational_basis(c);
    if (c.name == "current") return run_current(c);
    if (c.name == "verify-all") return run_verify_all(c);
    throw UsageError("unknown command '" + c.name + "'");
}

} // namespace kgsym
