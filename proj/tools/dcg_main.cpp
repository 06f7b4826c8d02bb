// Command-line front end: verification suites plus small evaluators for
// spinor and Chow-class expressions.
//
// Exit codes: 0 all checks passed, 1 a check or computation failed,
// 2 usage or syntax error.

#include "dcg/chow.hpp"
#include "dcg/clifford.hpp"
#include "dcg/dg.hpp"
#include "dcg/parse.hpp"
#include "dcg/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

namespace {

using nlohmann::ordered_json;

int run_verify(const std::string& suite, const dcg::SuiteOptions& opts, bool json) {
    std::vector<dcg::Report> reports;
    try {
        reports = dcg::run_suites(suite, opts);
    } catch (const dcg::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    bool all_pass = true;
    for (const dcg::Report& r : reports) {
        if (json) std::cout << r.json_string();
        else std::cout << r.text(opts.quiet);
        all_pass = all_pass && r.passed();
    }
    return all_pass ? 0 : 1;
}

std::string subspace_lines(const dcg::Subspace14& s) {
    std::string out;
    for (const dcg::Vector14& v : s.basis()) {
        if (!out.empty()) out += ", ";
        out += dcg::to_string(v);
    }
    return out.empty() ? "(zero subspace)" : out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for spinor geometry and Schubert calculus"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    dcg::SuiteOptions opts;
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--kmax", opts.kmax, "largest twist in the Hilbert sweep")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", opts.seed, "seed for the property checks");
    verify->add_flag("--quiet", opts.quiet, "print failing checks only");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate an expression");
    std::string kind, expr, as_mode;
    eval->add_option("kind", kind, "'spinor' or 'chow'")->required();
    eval->add_option("expr", expr, "expression text")->required();
    eval->add_option("--as", as_mode, "interpretation override ('vector')");

    auto* ann = app.add_subcommand("annihilator", "annihilator of an even spinor");
    std::string ann_expr;
    ann->add_option("expr", ann_expr, "spinor expression")->required();

    auto* member = app.add_subcommand("member", "membership test for an even spinor");
    std::string member_expr;
    member->add_option("expr", member_expr, "spinor expression")->required();

    auto* orbit = app.add_subcommand("orbit-type", "orbit type of a point of the section");
    std::string orbit_expr;
    orbit->add_option("expr", orbit_expr, "spinor expression")->required();

    // allow global flags like --json after a subcommand name
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(suite, opts, json);

        if (eval->parsed()) {
            if (!as_mode.empty() && as_mode != "vector") {
                std::cerr << "error: --as only supports 'vector'\n";
                return 2;
            }
            const bool as_vector = as_mode == "vector";
            if (kind == "spinor") {
                if (as_vector) {
                    const dcg::Vector14 v = dcg::parse_vector14(expr);
                    if (json) {
                        ordered_json j;
                        j["vector"] = dcg::to_string(v);
                        std::cout << j.dump(2) << "\n";
                    } else {
                        std::cout << dcg::to_string(v) << "\n";
                    }
                } else {
                    const dcg::ExteriorElement x = dcg::parse_spinor(expr);
                    if (json) {
                        ordered_json j;
                        j["spinor"] = dcg::to_string(x);
                        const auto par = x.parity();
                        j["parity"] = par ? (*par ? "odd" : "even") : "mixed";
                        std::cout << j.dump(2) << "\n";
                    } else {
                        std::cout << dcg::to_string(x) << "\n";
                    }
                }
                return 0;
            }
            if (kind == "chow") {
                const dcg::ChowClass c = dcg::parse_chow(expr);
                if (json) {
                    ordered_json j;
                    j["class"] = c.str();
                    j["grade"] = c.grade();
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << c.str() << "  (grade " << c.grade() << ")\n";
                }
                return 0;
            }
            std::cerr << "error: eval kind must be 'spinor' or 'chow'\n";
            return 2;
        }

        if (ann->parsed()) {
            const dcg::ExteriorElement x = dcg::parse_spinor(ann_expr);
            const dcg::Subspace14 a = dcg::annihilator(x);
            const bool even = x.parity() == std::optional<int>(0);
            const bool pure = even && a.dimension() == 7;
            if (json) {
                ordered_json j;
                j["spinor"] = dcg::to_string(x);
                j["dimension"] = a.dimension();
                j["pure"] = pure;
                j["basis"] = ordered_json::array();
                for (const dcg::Vector14& v : a.basis()) j["basis"].push_back(dcg::to_string(v));
                if (pure) j["f_intersection_dim"] = dcg::f_intersection_dim(x);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "annihilator dimension " << a.dimension() << "\n";
                std::cout << "basis: " << subspace_lines(a) << "\n";
                std::cout << "pure: " << (pure ? "true" : "false") << "\n";
                if (pure)
                    std::cout << "f-intersection dimension: " << dcg::f_intersection_dim(x)
                              << "\n";
            }
            return 0;
        }

        if (member->parsed()) {
            const dcg::ExteriorElement x = dcg::parse_spinor(member_expr);
            const bool pure = dcg::is_pure(x);
            const bool orth = dcg::in_Dz(x);
            const bool in = pure && orth;
            if (json) {
                ordered_json j;
                j["spinor"] = dcg::to_string(x);
                j["pure"] = pure;
                j["orthogonal_to_Lz"] = orth;
                j["member"] = in;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "pure: " << (pure ? "true" : "false")
                          << ", orthogonal to L_z: " << (orth ? "true" : "false")
                          << ", member: " << (in ? "true" : "false") << "\n";
            }
            return 0;
        }

        if (orbit->parsed()) {
            const dcg::ExteriorElement x = dcg::parse_spinor(orbit_expr);
            const auto [k, kp] = dcg::orbit_type(x);
            if (json) {
                ordered_json j;
                j["spinor"] = dcg::to_string(x);
                j["orbit_type"] = {k, kp};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "orbit type (" << k << "," << kp << ")\n";
            }
            return 0;
        }
    } catch (const dcg::ParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const dcg::ParityError& e) {
        // wrong-parity input to an operation that requires it
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dcg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
