// lgpot: exact arithmetic for Landau-Ginzburg potentials on the command line.
//
// Exit codes: 0 = success / check passed, 1 = check failed or the input is
// mathematically inconsistent, 2 = usage or parse error. Structured output
// is JSON on stdout; diagnostics go to stderr.

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgpot/algebra.hpp"
#include "lgpot/expr.hpp"
#include "lgpot/json_io.hpp"
#include "lgpot/koszul.hpp"
#include "lgpot/laurent.hpp"
#include "lgpot/struct_const.hpp"
#include "lgpot/wallcross.hpp"

using namespace lgpot;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> parse_vars(const std::string& arg) {
    auto vars = split(arg, ',');
    for (auto& v : vars) {
        if (v.empty()) throw DomainError("empty variable name in --vars");
    }
    return vars;
}

std::vector<Scalar> parse_scalar_list(const std::string& arg) {
    std::vector<Scalar> out;
    for (const auto& item : split(arg, ',')) out.push_back(parse_scalar(item));
    return out;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what(), 0);
    }
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int emit_check(bool ok) {
    Json j;
    j["ok"] = ok;
    emit(j);
    return ok ? kOk : kCheckFailed;
}

struct ExprArgs {
    std::string vars;
    std::string expr;
};

int run_eval(const ExprArgs& ea, const std::string& at, bool approx) {
    auto vars = parse_vars(ea.vars);
    LaurentPoly f = parse_poly(ea.expr, vars);
    std::vector<Scalar> entries = parse_scalar_list(at);
    Json j;
    if (approx) {
        std::vector<std::complex<double>> rho;
        rho.reserve(entries.size());
        for (const auto& s : entries) rho.push_back(s.to_complex());
        std::complex<double> v = f.eval_approx(rho);
        j["value"] = Json{{"re", v.real()}, {"im", v.imag()}};
    } else {
        Scalar v = f.eval(TwistData(std::move(entries)));
        j["value"] = v.to_string();
    }
    emit(j);
    return kOk;
}

int run_pow(const ExprArgs& ea, std::uint32_t k) {
    auto vars = parse_vars(ea.vars);
    emit(poly_to_json(parse_poly(ea.expr, vars).pow(k)));
    return kOk;
}

int run_change_basis(const ExprArgs& ea, const std::string& matrix) {
    auto vars = parse_vars(ea.vars);
    LaurentPoly f = parse_poly(ea.expr, vars);
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : split(matrix, ';')) {
        std::vector<std::int64_t> r;
        for (const auto& item : split(row, ',')) {
            try {
                r.push_back(std::stoll(item));
            } catch (const std::exception&) {
                throw DomainError("malformed matrix entry '" + item + "'");
            }
        }
        rows.push_back(std::move(r));
    }
    emit(poly_to_json(f.change_basis(UnimodularMatrix(rows))));
    return kOk;
}

int run_struct_const(const std::string& family_path, std::uint32_t k) {
    PotentialFamily fam = family_from_json(load_json(family_path));
    StructureConstants c = extract_structure_constants(fam, k);
    Json j;
    j["k"] = c.k;
    Json arr = Json::array();
    for (const auto& s : c.c) arr.push_back(s.to_string());
    j["c"] = std::move(arr);
    emit(j);
    return kOk;
}

int run_twisted_ranks(std::size_t n, const std::string& lambda) {
    KoszulComplex c(n, TwistData(parse_scalar_list(lambda)));
    BettiVector b = c.betti_numbers();
    Json j;
    j["betti"] = b;
    j["acyclic"] = c.is_acyclic();
    emit(j);
    return kOk;
}

int run_hom_check(const std::string& alg_path, const std::string& hom_path) {
    LocalizedAlgebra alg = algebra_from_json(load_json(alg_path));
    AlgebraHom h = hom_from_json(alg, load_json(hom_path));
    return emit_check(hom_check(alg, h));
}

int run_bs_check(const std::string& alg_path, const std::string& hom_path,
                 const std::string& bs, std::uint32_t d,
                 const std::string& potential) {
    LocalizedAlgebra alg = algebra_from_json(load_json(alg_path));
    AlgebraHom h = hom_from_json(alg, load_json(hom_path));
    AlgebraElement e = make_element(alg, parse_poly(bs, alg.gens()), 0);
    LaurentPoly w = parse_poly(potential, h.target_vars);
    return emit_check(closed_open_bs_check(alg, h, e, d, w));
}

int run_wallcross(const std::string& w0, const std::string& w1,
                  const std::string& phi_path) {
    SubstitutionMap phi = substitution_from_json(load_json(phi_path));
    LaurentPoly p0 = parse_poly(w0, phi.target_vars());
    LaurentPoly p1 = parse_poly(w1, phi.source_vars());
    return emit_check(wall_crossing_check(p0, p1, phi));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for Landau-Ginzburg potentials of monotone "
                 "Lagrangians"};
    app.require_subcommand(1);

    ExprArgs ea;
    std::string at, matrix, family, lambda, alg_path, hom_path, bs, potential;
    std::string w0, w1, phi_path;
    std::uint32_t k = 1, d = 1;
    std::size_t n = 1;
    bool approx = false;

    auto add_expr_opts = [&](CLI::App* cmd) {
        cmd->add_option("--vars", ea.vars, "Comma-separated variable list")->required();
        cmd->add_option("--expr", ea.expr, "Laurent polynomial expression")->required();
    };

    CLI::App* eval = app.add_subcommand("eval", "Evaluate at a local system");
    add_expr_opts(eval);
    eval->add_option("--at", at, "Comma-separated monodromies")->required();
    eval->add_flag("--approx", approx, "Evaluate in double-precision complex");

    CLI::App* powc = app.add_subcommand("pow", "Raise to a nonnegative power");
    add_expr_opts(powc);
    powc->add_option("--k", k, "Exponent")->required();

    CLI::App* cb = app.add_subcommand("change-basis", "Apply a GL(m,Z) substitution");
    add_expr_opts(cb);
    cb->add_option("--matrix", matrix, "Rows 'a,b;c,d' of a unimodular matrix")
        ->required();

    CLI::App* sc = app.add_subcommand("struct-const",
                                      "Extract structure constants from a family");
    sc->add_option("--family", family, "Family JSON file")->required();
    sc->add_option("--k", k, "Level")->required();

    CLI::App* tr = app.add_subcommand("twisted-ranks",
                                      "Betti numbers of the twisted Koszul complex");
    tr->add_option("--n", n, "Torus dimension")->required();
    tr->add_option("--lambda", lambda, "Comma-separated monodromies")->required();

    CLI::App* hc = app.add_subcommand("hom-check", "Validate an algebra hom");
    hc->add_option("--alg", alg_path, "Algebra JSON file")->required();
    hc->add_option("--hom", hom_path, "Hom JSON file")->required();

    CLI::App* bc = app.add_subcommand("bs-check",
                                      "Check CO(bs) = d * W for a hom");
    bc->add_option("--alg", alg_path, "Algebra JSON file")->required();
    bc->add_option("--hom", hom_path, "Hom JSON file")->required();
    bc->add_option("--bs", bs, "Element of the algebra (polynomial expression)")
        ->required();
    bc->add_option("--d", d, "Divisor degree")->required();
    bc->add_option("--potential", potential, "Expected potential")->required();

    CLI::App* wc = app.add_subcommand("wallcross", "Verify a wall-crossing identity");
    wc->add_option("--w0", w0, "Potential in the target chart")->required();
    wc->add_option("--w1", w1, "Potential in the source chart")->required();
    wc->add_option("--phi", phi_path, "Substitution JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kUsage;
    }

    try {
        if (app.got_subcommand(eval)) return run_eval(ea, at, approx);
        if (app.got_subcommand(powc)) return run_pow(ea, k);
        if (app.got_subcommand(cb)) return run_change_basis(ea, matrix);
        if (app.got_subcommand(sc)) return run_struct_const(family, k);
        if (app.got_subcommand(tr)) return run_twisted_ranks(n, lambda);
        if (app.got_subcommand(hc)) return run_hom_check(alg_path, hom_path);
        if (app.got_subcommand(bc)) return run_bs_check(alg_path, hom_path, bs, d, potential);
        if (app.got_subcommand(wc)) return run_wallcross(w0, w1, phi_path);
        std::cerr << "error: no subcommand\n";
        return kUsage;
    } catch (const SolveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
