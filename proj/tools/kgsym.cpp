// kgsym: exact symmetry and conservation-law engine for u_xy = u.

#include "kgsym/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct Options {
    std::string format = "text";
    std::string out;
    kgsym::Command command;
};

CLI::App* add_command(CLI::App& app, Options& opt, const std::string& name, const std::string& help)
{
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&opt, name] { opt.command.name = name; });
    return sub;
}

void add_int(CLI::App* sub, const std::string& flag, std::optional<int>& target, const std::string& help, bool required)
{
    auto* o = sub->add_option(flag, target, help);
    if (required) o->required();
}

} // namespace

int main(int argc, char** argv)
{
    Options opt;
    kgsym::Command& cmd = opt.command;

    CLI::App app{"Exact generalized symmetries, variational symmetries and conservation laws of u_xy = u"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", opt.out, "Write the report to FILE instead of stdout");

    add_int(add_command(app, opt, "dims", "Dimension table of linear symmetries up to an order"), "--max-order",
            cmd.max_order, "Highest order", true);

    auto* basis = add_command(app, opt, "basis", "Exact basis of order-<=n linear symmetry characteristics");
    add_int(basis, "--order", cmd.order, "Order n", true);
    add_int(basis, "--degree", cmd.degree, "Coefficient degree bound (default n+2)", false);

    add_command(app, opt, "check-symmetry", "Test a reduced characteristic, e.g. 'x*u[1] - y*u[-1]'")
        ->add_option("expr", cmd.args, "Jet expression")->required();
    add_command(app, opt, "bracket", "Reduced Lie bracket of two characteristics")
        ->add_option("exprs", cmd.args, "Two jet expressions")->required()->expected(2);
    add_command(app, opt, "adjoint", "Formal adjoint of an operator, e.g. 'J^2*Dx'")
        ->add_option("op", cmd.args, "Operator expression")->required();
    add_command(app, opt, "commutator", "Commutator of two operators")
        ->add_option("ops", cmd.args, "Two operator expressions")->required()->expected(2);
    add_command(app, opt, "variational", "Variational-symmetry test for a linear operator")
        ->add_option("op", cmd.args, "Operator expression")->required();
    add_int(add_command(app, opt, "variational-basis", "Basis operators of one order with their adjoint parity"),
            "--order", cmd.order, "Order k+l", true);
    add_command(app, opt, "current", "Conserved current: C1|C1bar|C2|C2bar KP LP, C0|C0bar [FIELD], Ctilde OP")
        ->add_option("args", cmd.args, "Family and parameters")->required()->expected(1, 3);
    add_int(add_command(app, opt, "verify-all", "Run every verification check"), "--max-order", cmd.max_order,
            "Highest order for the order sweeps", true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kgsym::exit_ok : kgsym::exit_usage;
    }

    try {
        const kgsym::Report report = kgsym::run(cmd);
        const auto format = opt.format == "json" ? kgsym::OutputFormat::json : kgsym::OutputFormat::text;
        const std::string rendered = report.render(format);
        if (opt.out.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream f(opt.out, std::ios::binary);
            if (!f) {
                std::cerr << "kgsym: cannot open " << opt.out << "\n";
                return kgsym::exit_usage;
            }
            f << rendered;
        }
        return report.exit_code();
    } catch (const kgsym::ParseError& e) {
        std::cerr << "kgsym: " << e.what() << "\n";
    } catch (const kgsym::UsageError& e) {
        std::cerr << "kgsym: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "kgsym: " << e.what() << "\n";
    }
    return kgsym::exit_usage;
}
