// hsos: command-line front end for the Hermitian sums-of-squares library.

#include <hsos/cli/commands.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace hsos::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Exact ranks and isometry identities for Hermitian sums of squares"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok, 1 check failed, 2 parse/precondition error, 3 f(0) != 0, 4 f not minimal.\n"
               "ensemble CSV columns: n,d,degree,m,lower,upper,in_gap (upper empty when one-sided).");

    std::string input, h_input, lambda = "7", format = "text", theorem;
    long a = 1, b = 1, c = 1, t = 1, n = 1;
    NamedInts named;
    EnsembleConfig ens;

    auto read = [](const std::string& path) { return read_text(path); };

    auto* rank = app.add_subcommand("rank", "Rank, inertia of ||F||^2 and minimality of a map (or inertia of a form)");
    rank->add_option("--input", input, "map or form document (- for stdin)")->required();

    auto* solve = app.add_subcommand("solve-h", "Minimal h with (1+|z|^2)^b (1+|f|^2)^c = 1+|h|^2");
    solve->add_option("--input", input, "map document for f")->required();
    solve->add_option("--b", b, "power of 1+|z|^2")->capture_default_str();
    solve->add_option("--c", c, "power of 1+|f|^2")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Check (1+|z|^2)^b (1+|f|^2)^c = (1+|h|^2)^a exactly");
    verify->add_option("--input", input, "map document for f")->required();
    verify->add_option("--h-input", h_input, "map document for h")->required();
    verify->add_option("--a", a)->capture_default_str();
    verify->add_option("--b", b)->capture_default_str();
    verify->add_option("--c", c)->capture_default_str();

    auto* trank = app.add_subcommand("tensor-rank", "e with rank((1,f)^{(x)c}) = e+1");
    trank->add_option("--input", input, "map document for f")->required();
    trank->add_option("--c", c)->capture_default_str();

    auto* gaps = app.add_subcommand("gaps", "Gap intervals of impossible target dimensions m");
    gaps->add_option("--n", n)->required();
    gaps->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}))->capture_default_str();

    auto* bounds = app.add_subcommand("bounds", "Evaluate a rank bound on supplied integers");
    bounds->add_option("--theorem", theorem, "thm1.1 cor1.3 thm1.4 prop2.1 thm2.2 thm2.4 prop2.5 rem1.6")
        ->required();
    for (const char* key : {"n", "p", "d", "e", "m", "r", "R", "a", "b", "c", "t"})
        bounds->add_option_function<long>(std::string("--") + key, [&named, key](long v) { named[key] = v; });
    bounds->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}))->capture_default_str();

    auto* primes = app.add_subcommand("primes", "Exponents making z^alpha -> zeta^{<a,alpha>} injective on degree <= t");
    primes->add_option("--n", n)->required();
    primes->add_option("--t", t)->required();

    auto* divide = app.add_subcommand("divide", "Divide a bihomogeneous form by ||Z||^2");
    divide->add_option("--input", input, "form document")->required();

    auto* ex1 = app.add_subcommand("example1", "R_lambda = (1+|z|^2)^4 - lambda|z|^4 and its identities");
    ex1->add_option("--lambda", lambda, "rational P/Q")->capture_default_str();

    auto* ens_cmd = app.add_subcommand("ensemble", "Random 1-modifications: CSV of ranks against bounds and gaps");
    ens_cmd->add_option("--n", ens.n)->capture_default_str();
    ens_cmd->add_option("--d-max", ens.d_max)->capture_default_str();
    ens_cmd->add_option("--degree-max", ens.degree_max)->capture_default_str();
    ens_cmd->add_option("--count", ens.count)->capture_default_str();
    ens_cmd->add_option("--seed", ens.seed)->capture_default_str();
    ens_cmd->add_option("--height", ens.coefficient_height, "bound on |numerator| and denominator")
        ->capture_default_str();
    ens_cmd->add_option("--threads", ens.threads)->capture_default_str();
    ens_cmd->add_option("--format", format)->check(CLI::IsMember({"csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    auto& out = std::cout;
    auto& err = std::cerr;
    try {
        if (*rank)
            return cmd_rank(read(input), out, err);
        if (*solve)
            return cmd_solve_h(read(input), b, c, out, err);
        if (*verify)
            return cmd_verify(read(input), read(h_input), a, b, c, out, err);
        if (*trank)
            return cmd_tensor_rank(read(input), c, out, err);
        if (*gaps)
            return cmd_gaps(n, format, out, err);
        if (*bounds)
            return cmd_bounds(theorem, named, format, out, err);
        if (*primes)
            return cmd_primes(n, t, out, err);
        if (*divide)
            return cmd_divide(read(input), out, err);
        if (*ex1)
            return cmd_example1(lambda, out, err);
        if (*ens_cmd)
            return cmd_ensemble(ens, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
