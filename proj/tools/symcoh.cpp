// symcoh: command-line front end to the cohomology engine.
#include "symcoh/symcoh.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

int cmd_eval(const std::string& space_text, const std::string& expr, bool json, bool raw) {
    using namespace symcoh;
    SpaceSpec space = parse_space(space_text);
    Value v = evaluate(expr, space);
    if (json) {
        nlohmann::json j;
        if (auto r = std::get_if<Rational>(&v)) j = {{"space", space.str()}, {"scalar", r->str()}};
        else j = to_json(std::get<CohClass>(v));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << value_to_string(v, !raw) << "\n";
    }
    return kOk;
}

int cmd_basis(int g, int n, int k) {
    using namespace symcoh;
    SpaceSpec s{FactorSpec::sym(g, n)};
    auto b = basis(g, n, k);
    for (const auto& fm : b) {
        Monomial m(1);
        m[0] = fm;
        std::cout << to_raw_string(CohClass::monomial(s, m)) << "\n";
    }
    std::cerr << b.size() << " monomials\n";
    return kOk;
}

int cmd_verify(const std::vector<std::string>& suites, const std::string& json_path, bool oracle) {
    using namespace symcoh;
    VerifyOptions opt;
    opt.oracle = oracle;
    VerifyReport rep = run_verify(suites, opt);
    std::cout << rep.text();
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << rep.to_json().dump(2) << "\n";
    }
    return rep.ok() ? kOk : kCheckFailure;
}

int cmd_table(const std::string& which) {
    using namespace symcoh;
    if (which != "strata") throw std::invalid_argument("unknown table '" + which + "' (available: strata)");
    std::printf("%-7s", "");
    for (int k = 0; k < 9; ++k) std::printf("%6s", ("h" + std::to_string(k)).c_str());
    std::printf("\n");
    for (const auto& row : strata_table()) {
        std::printf("%-7s", row.name.c_str());
        for (long long v : row.betti) std::printf("%6lld", v);
        std::printf("\n");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symcoh: exact cohomology calculus on symmetric products of curves"};
    app.require_subcommand(1);

    std::string space, expr;
    bool json = false, raw = false;
    auto* eval = app.add_subcommand("eval", "evaluate an expression on a space");
    eval->add_option("--space", space, "space, e.g. \"sym(5,3)\" or \"sym(5,2) x sym(5,2)\"")->required();
    eval->add_option("expr", expr, "expression")->required();
    eval->add_flag("--json", json, "print the term list as JSON");
    eval->add_flag("--raw", raw, "print the Macdonald normal form with xi(i) indices only");

    int g = 0, n = 0, k = 0;
    auto* basis = app.add_subcommand("basis", "list the normal-form basis of H^K(C^(N)) for genus G");
    basis->add_option("G", g)->required()->check(CLI::Range(1, 12));
    basis->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
    basis->add_option("K", k)->required()->check(CLI::NonNegativeNumber);

    std::vector<std::string> suites;
    std::string json_path;
    bool oracle = false;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suites", suites, "ring gysin chern hilbert cycle aj degeneration all")
        ->check(CLI::IsMember({"ring", "gysin", "chern", "hilbert", "cycle", "aj", "degeneration", "all"}));
    verify->add_option("--json", json_path, "write a JSON report to this path");
    verify->add_flag("--oracle", oracle, "add randomized checks against the Cartesian-power oracle");

    std::string table_name;
    auto* table = app.add_subcommand("table", "print a table");
    table->add_option("name", table_name, "strata")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*eval) return cmd_eval(space, expr, json, raw);
        if (*basis) return cmd_basis(g, n, k);
        if (*verify) return cmd_verify(suites, json_path, oracle);
        if (*table) return cmd_table(table_name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
