#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zcocycle/cocycle.hpp"
#include "zcocycle/dedekind.hpp"
#include "zcocycle/ehrhart.hpp"
#include "zcocycle/verify.hpp"

namespace {

using namespace zcy;

int run(int argc, char** argv) {
    CLI::App app{"Exact evaluation of a zeta cocycle at s=0, Dedekind-Rademacher sums, "
                 "and Ehrhart quasi-polynomials of a triangle family"};
    app.require_subcommand(1);

    std::string gamma_str, gamma_prime_str, x_str = "0,0", tau_str = "sqrt(2)", out_fmt = "json";
    std::string a_str = "0", c_str = "1", ell_str = "1", suite, kind;
    long m_max = 5, m_val = 1, trials = 200;
    std::uint64_t seed = 42;
    long max_entry = 50;

    auto* eval_zeta0 = app.add_subcommand("eval-zeta0", "Evaluate the cocycle at (gamma, x, tau)");
    eval_zeta0->add_option("--gamma", gamma_str, "matrix a,b,c,d")->required();
    eval_zeta0->add_option("--x", x_str, "point p/q,r/s")->required();
    eval_zeta0->add_option("--tau", tau_str, "irrational like sqrt(3) or 1/2+1/2*sqrt(5)")->required();

    auto* eval_rat = app.add_subcommand("eval-zeta0-rational",
                                        "Rational special value for hyperbolic gamma fixing x");
    eval_rat->add_option("--gamma", gamma_str)->required();
    eval_rat->add_option("--x", x_str)->required();

    auto* eval_dede = app.add_subcommand("eval-dedekind", "Dedekind-Rademacher sum S(a,c;x)");
    eval_dede->add_option("--a", a_str)->required();
    eval_dede->add_option("--c", c_str)->required();
    eval_dede->add_option("--x", x_str)->required();

    auto* ehrhart_cmd = app.add_subcommand("ehrhart", "Lattice counts and fitted coefficients");
    ehrhart_cmd->add_option("--gamma", gamma_str)->required();
    ehrhart_cmd->add_option("--ell", ell_str, "dilation denominator");
    ehrhart_cmd->add_option("--m-max", m_max);
    ehrhart_cmd->add_option("--out", out_fmt, "json|csv");

    auto* hayes_cmd = app.add_subcommand("hayes", "Both sides of the lattice-count identity");
    hayes_cmd->add_option("--gamma", gamma_str)->required();
    hayes_cmd->add_option("--m", m_val)->required();
    hayes_cmd->add_option("--tau", tau_str);
    hayes_cmd->add_option("--out", out_fmt, "json|csv");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite)->required();
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--max-entry", max_entry);

    auto* table_cmd = app.add_subcommand("table", "Emit a result table");
    table_cmd->add_option("--kind", kind, "theorem3|ehrhart|hayes")->required();
    table_cmd->add_option("--gamma", gamma_str)->required();
    table_cmd->add_option("--gamma-prime", gamma_prime_str);
    table_cmd->add_option("--ell", ell_str);
    table_cmd->add_option("--m", m_val);
    table_cmd->add_option("--m-max", m_max);
    table_cmd->add_option("--tau", tau_str);
    table_cmd->add_option("--out", out_fmt, "json|csv");

    CLI11_PARSE(app, argc, argv);

    if (eval_zeta0->parsed()) {
        QuadraticReal v = zeta0(parse_matrix(gamma_str), parse_point(x_str), parse_quadratic(tau_str));
        nlohmann::ordered_json j;
        j["value"] = render_quadratic(v);
        j["is_rational"] = v.is_rational();
        std::cout << j.dump() << "\n";
    } else if (eval_rat->parsed()) {
        Rational v = zeta0_rational_case(parse_matrix(gamma_str), parse_point(x_str));
        nlohmann::ordered_json j;
        j["value"] = render_rational(v);
        j["is_rational"] = true;
        std::cout << j.dump() << "\n";
    } else if (eval_dede->parsed()) {
        Rational v = dedekind_rademacher(Int(a_str, 10), Int(c_str, 10), parse_point(x_str));
        nlohmann::ordered_json j;
        j["value"] = render_rational(v);
        std::cout << j.dump() << "\n";
    } else if (ehrhart_cmd->parsed()) {
        Table t = emit_table_ehrhart(parse_matrix(gamma_str), Int(ell_str, 10), m_max);
        std::cout << (out_fmt == "csv" ? t.to_csv() : t.to_json() + "\n");
    } else if (hayes_cmd->parsed()) {
        Table t = emit_table_hayes(parse_matrix(gamma_str), Int(m_val), parse_quadratic(tau_str));
        std::cout << (out_fmt == "csv" ? t.to_csv() : t.to_json() + "\n");
    } else if (verify_cmd->parsed()) {
        SuiteBounds bounds;
        bounds.max_entry = max_entry;
        SuiteReport r = run_suite(suite, trials, seed, bounds);
        std::cout << report_json(r) << "\n";
        std::cerr << r.suite << ": " << r.passed << "/" << r.attempted << " in " << r.wall_ms
                  << " ms\n";
        return r.ok() ? 0 : 1;
    } else if (table_cmd->parsed()) {
        Table t;
        if (kind == "theorem3") {
            if (gamma_prime_str.empty()) gamma_prime_str = gamma_str;
            t = emit_table_theorem3(parse_matrix(gamma_str), parse_matrix(gamma_prime_str), m_max);
        } else if (kind == "ehrhart") {
            t = emit_table_ehrhart(parse_matrix(gamma_str), Int(ell_str, 10), m_max);
        } else if (kind == "hayes") {
            t = emit_table_hayes(parse_matrix(gamma_str), Int(m_val), parse_quadratic(tau_str));
        } else {
            std::cerr << "unknown table kind '" << kind << "'\n";
            return 2;
        }
        std::cout << (out_fmt == "csv" ? t.to_csv() : t.to_json() + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
