#include "opcal/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "opcal/dendriform.hpp"
#include "opcal/homotopy.hpp"
#include "opcal/operad.hpp"
#include "opcal/parse.hpp"
#include "opcal/preshuffle.hpp"
#include "opcal/render.hpp"

namespace opcal::cli {

namespace {

FormalGroupLaw parse_law(const std::string& spec)
{
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "additive") return FormalGroupLaw::additive();
    if (name == "theta") return FormalGroupLaw::theta(parse_rational(params));
    if (name == "jacobi") {
        std::istringstream in(params);
        std::string d, e, t;
        if (!std::getline(in, d, ',') || !std::getline(in, e, ',') ||
            !std::getline(in, t))
            throw std::invalid_argument("jacobi law needs jacobi:<delta>,<eps>,<trunc>");
        return FormalGroupLaw::jacobi(parse_rational(d), parse_rational(e),
                                      static_cast<unsigned>(std::stoul(t)));
    }
    if (name == "bch")
        return FormalGroupLaw::bch(static_cast<unsigned>(std::stoul(params)));
    throw std::invalid_argument("unknown law '" + spec +
                                "' (additive | theta:<q> | jacobi:<d>,<e>,<t> | bch:<t>)");
}

struct ComposeOptions {
    std::string realization = "asder";
    std::string lambda = "0";
    std::string law = "additive";
    std::string format = "text";
    std::vector<unsigned> arities;
};

Realization make_realization(const ComposeOptions& opt)
{
    if (opt.realization == "asder")
        return Realization::asder(parse_rational(opt.lambda));
    if (opt.realization == "ratfct") return Realization::ratfct(parse_law(opt.law));
    throw std::invalid_argument("realization must be asder or ratfct");
}

OperadElement parse_element(const Realization& r, const std::string& text,
                            unsigned min_arity)
{
    if (r.kind() == Realization::Kind::AsDer)
        return OperadElement::asder(r.lambda(), parse_polynomial(text, min_arity));
    return OperadElement::ratfct(r.law(), parse_ratfn(text, min_arity));
}

std::string render_element(const OperadElement& e, Format f)
{
    return e.holds_polynomial() ? render(e.poly(), f) : render(e.ratfn(), f);
}

void print_confluence_report(const ConfluenceReport& rep, std::ostream& out)
{
    for (const auto& m : rep.monomials) {
        out << "critical monomial " << m.monomial.str() << ":\n";
        out << "  outermost reduction:\n";
        for (const auto& s : m.chain_outermost) out << "    " << gen_sum_str(s) << "\n";
        out << "  innermost reduction:\n";
        for (const auto& s : m.chain_innermost) out << "    " << gen_sum_str(s) << "\n";
        out << "  normal form: " << gen_sum_str(m.normal_form_outermost) << "\n";
        out << "  " << (m.confluent ? "confluent" : "NOT confluent") << "\n";
    }
}

struct CheckStatus {
    bool ok = true;
    void report(std::ostream& out, const std::string& what, bool passed)
    {
        out << (passed ? "ok   " : "FAIL ") << what << "\n";
        ok = ok && passed;
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact operadic calculus on polynomials, rational functions and "
                 "noncommutative series"};
    app.require_subcommand(1);
    int exit_code = 0;

    ComposeOptions copt;
    std::uint64_t seed = 1;
    unsigned trials = 50;
    unsigned trunc = 6;
    unsigned max_arity = 4;
    std::string lambda_opt = "0";
    std::string law_opt = "additive";
    std::string format_opt = "text";

    // ---- compose / gamma -------------------------------------------------
    auto add_compose_options = [&](CLI::App* cmd) {
        cmd->add_option("--realization", copt.realization, "asder or ratfct")
            ->check(CLI::IsMember({"asder", "ratfct"}));
        cmd->add_option("--lambda", copt.lambda, "derivation parameter (asder)");
        cmd->add_option("--law", copt.law,
                        "additive | theta:<q> | jacobi:<d>,<e>,<t> (ratfct)");
        cmd->add_option("--format", copt.format, "text | latex | json");
        cmd->add_option("--arity", copt.arities,
                        "minimum arities for the operands, in order");
    };

    std::string arg_p, arg_q;
    unsigned arg_i = 1;
    std::vector<std::string> arg_qs;

    CLI::App* compose = app.add_subcommand("compose", "partial composition P o_i Q");
    add_compose_options(compose);
    compose->add_option("P", arg_p)->required();
    compose->add_option("i", arg_i)->required();
    compose->add_option("Q", arg_q)->required();
    compose->callback([&] {
        Realization r = make_realization(copt);
        unsigned ap = copt.arities.size() > 0 ? copt.arities[0] : 0;
        unsigned aq = copt.arities.size() > 1 ? copt.arities[1] : 0;
        OperadElement result = partial_compose(parse_element(r, arg_p, ap), arg_i,
                                               parse_element(r, arg_q, aq));
        out << render_element(result, parse_format(copt.format)) << "\n";
    });

    CLI::App* gammac = app.add_subcommand("gamma", "full composition gamma(P; Q1..Qk)");
    add_compose_options(gammac);
    gammac->add_option("P", arg_p)->required();
    gammac->add_option("Qs", arg_qs, "inner operations")->required()->expected(-1);
    gammac->callback([&] {
        Realization r = make_realization(copt);
        unsigned ap = copt.arities.empty() ? static_cast<unsigned>(arg_qs.size())
                                           : copt.arities[0];
        OperadElement p = parse_element(r, arg_p, ap);
        std::vector<OperadElement> qs;
        for (std::size_t j = 0; j < arg_qs.size(); ++j) {
            unsigned a = copt.arities.size() > j + 1 ? copt.arities[j + 1] : 0;
            qs.push_back(parse_element(r, arg_qs[j], a));
        }
        out << render_element(gamma(p, qs), parse_format(copt.format)) << "\n";
    });

    // ---- pcompose ---------------------------------------------------------
    CLI::App* pcompose = app.add_subcommand("pcompose", "pre-shuffle composition P .i Q");
    pcompose->add_option("--law", law_opt, "additive | bch:<d>");
    pcompose->add_option("--format", format_opt, "text | latex | json");
    pcompose->add_option("--arity", copt.arities, "minimum arities of P and Q");
    pcompose->add_option("P", arg_p)->required();
    pcompose->add_option("i", arg_i)->required();
    pcompose->add_option("Q", arg_q)->required();
    pcompose->callback([&] {
        FormalGroupLaw law = parse_law(law_opt);
        unsigned ap = copt.arities.size() > 0 ? copt.arities[0] : 0;
        unsigned aq = copt.arities.size() > 1 ? copt.arities[1] : 0;
        auto element = [&](const std::string& text, unsigned min_arity) {
            NCPolynomial p = parse_ncpoly(text, min_arity);
            if (law.kind() == LawKind::NCSeries)
                return PreShuffleElement::with_law(law,
                                                   NCSeries(p, law.truncation_degree()));
            return PreShuffleElement::additive(std::move(p));
        };
        PreShuffleElement result =
            bullet_compose(element(arg_p, ap), arg_i, element(arg_q, aq));
        Format f = parse_format(format_opt);
        out << (result.holds_polynomial() ? render(result.poly(), f)
                                          : render(result.series(), f))
            << "\n";
    });

    // ---- phi / eval / shift-check / bch / fgl-check / shriek-table --------
    std::string arg_tree;
    CLI::App* phic = app.add_subcommand("phi", "dendriform embedding of a tree");
    phic->add_option("--format", format_opt, "text | latex | json");
    phic->add_option("tree", arg_tree, "'|' is a leaf, (L^R) a graft")->required();
    phic->callback([&] {
        out << render(phi(parse_tree(arg_tree)), parse_format(format_opt)) << "\n";
    });

    std::vector<std::string> arg_args;
    CLI::App* evalc =
        app.add_subcommand("eval", "evaluate an AsDer operation on K[x] elements");
    evalc->add_option("--format", format_opt, "text | latex | json");
    evalc->add_option("--arity", copt.arities, "minimum arity of the operation");
    evalc->add_option("OP", arg_p, "operation, a polynomial")->required();
    evalc->add_option("ARGS", arg_args, "univariate polynomials in x1")
        ->required()
        ->expected(-1);
    evalc->callback([&] {
        unsigned ap = copt.arities.empty() ? static_cast<unsigned>(arg_args.size())
                                           : copt.arities[0];
        OperadElement op =
            OperadElement::asder(Rational(0), parse_polynomial(arg_p, ap));
        std::vector<Polynomial> values;
        for (const auto& a : arg_args) values.push_back(parse_polynomial(a, 1));
        out << render(evaluate_asder(op, values), parse_format(format_opt)) << "\n";
    });

    CLI::App* shiftc = app.add_subcommand("shift-check",
                                          "exp(y d/dx) p(x) == p(x+y) up to --trunc");
    shiftc->add_option("--trunc", trunc, "truncation order (>= deg p)");
    shiftc->add_option("P", arg_p, "univariate polynomial in x1")->required();
    shiftc->callback([&] {
        bool ok = shift_formula_check(parse_polynomial(arg_p, 1), trunc);
        out << (ok ? "OK" : "FAIL") << "\n";
        exit_code = ok ? 0 : 1;
    });

    CLI::App* bchc = app.add_subcommand("bch", "Baker-Campbell-Hausdorff series");
    bchc->add_option("--trunc", trunc, "truncation degree")->required();
    bchc->add_option("--format", format_opt, "text | latex | json");
    bchc->callback([&] {
        out << render(FormalGroupLaw::bch(trunc).two_variable_nc(),
                      parse_format(format_opt))
            << "\n";
    });

    CLI::App* fglc = app.add_subcommand("fgl-check",
                                        "unit axioms and associativity of a law");
    fglc->add_option("--law", law_opt, "additive | theta:<q> | jacobi:<d>,<e>,<t> | bch:<t>")
        ->required();
    fglc->callback([&] {
        FormalGroupLaw law = parse_law(law_opt);
        CheckStatus status;
        status.report(out, law.name() + ": unit axioms", law.unit_axioms_hold());
        bool assoc = law.kind() == LawKind::NCSeries
                         ? law.associativity_defect_nc().is_zero()
                         : law.associativity_defect().is_zero();
        std::string scope = law.kind() == LawKind::Polynomial
                                ? "exact"
                                : "up to degree " + std::to_string(law.truncation_degree());
        status.report(out, law.name() + ": associativity defect is zero (" + scope + ")",
                      assoc);
        exit_code = status.ok ? 0 : 1;
    });

    unsigned arg_m = 2, arg_n = 2;
    CLI::App* shriekc = app.add_subcommand("shriek-table",
                                           "Koszul-dual products mu_m o_i mu_n");
    shriekc->add_option("m", arg_m)->required();
    shriekc->add_option("i", arg_i)->required();
    shriekc->add_option("n", arg_n)->required();
    shriekc->callback([&] {
        auto mu_m = ShriekElement::basis_mu(arg_m);
        auto dmu_m = ShriekElement::basis_dmu(arg_m);
        auto mu_n = ShriekElement::basis_mu(arg_n);
        auto dmu_n = ShriekElement::basis_dmu(arg_n);
        out << "mu" << arg_m << " o" << arg_i << " mu" << arg_n << " = "
            << shriek_compose(mu_m, arg_i, mu_n).str() << "\n";
        out << "dmu" << arg_m << " o" << arg_i << " mu" << arg_n << " = "
            << shriek_compose(dmu_m, arg_i, mu_n).str() << "\n";
        out << "mu" << arg_m << " o" << arg_i << " dmu" << arg_n << " = "
            << shriek_compose(mu_m, arg_i, dmu_n).str() << "\n";
        out << "dmu" << arg_m << " o" << arg_i << " dmu" << arg_n << " = "
            << shriek_compose(dmu_m, arg_i, dmu_n).str() << "\n";
    });

    // ---- check ------------------------------------------------------------
    CLI::App* check = app.add_subcommand("check", "verification suites");
    check->require_subcommand(1);

    CLI::App* axioms = check->add_subcommand("axioms", "operad axioms I and II");
    axioms->add_option("--realization", copt.realization, "asder or ratfct")
        ->check(CLI::IsMember({"asder", "ratfct"}));
    axioms->add_option("--lambda", copt.lambda, "derivation parameter");
    axioms->add_option("--law", copt.law, "law for the ratfct realization");
    axioms->add_option("--seed", seed, "RNG seed");
    axioms->add_option("--trials", trials, "number of random triples");
    axioms->callback([&] {
        Realization r = make_realization(copt);
        CheckStatus status;
        status.report(out, r.name() + ": axioms I and II on random triples",
                      operad_axioms_random_check(r, seed, trials));
        status.report(out, r.name() + ": unit axioms",
                      operad_unit_check(r, seed, trials));
        status.report(out, r.name() + ": gamma matches nested compositions",
                      gamma_matches_nested_check(r, seed, trials));
        exit_code = status.ok ? 0 : 1;
    });

    CLI::App* dialgebra = check->add_subcommand("dialgebra",
                                                "the two dialgebra-style relations");
    dialgebra->add_option("--lambda", lambda_opt, "derivation parameter");
    dialgebra->callback([&] {
        Rational lambda = parse_rational(lambda_opt);
        for (const auto& [label, value] : dialgebra_table(lambda))
            out << label << " = " << value.str() << "\n";
        auto [first, second] = dialgebra_relations(lambda);
        out << "x2 o1 x1 == x1 o2 x2: " << (first ? "holds" : "fails") << "\n";
        out << "x1 o1 x2 + x2 o1 x2 == x1 o2 x1 + x2 o2 x1: "
            << (second ? "holds" : "fails") << "\n";
        if (lambda == 0) exit_code = (first && second) ? 0 : 1;
    });

    CLI::App* dendriform = check->add_subcommand(
        "dendriform", "embedding into rational functions and the three axioms");
    dendriform->add_option("--max-arity", max_arity, "largest tree arity checked");
    dendriform->callback([&] {
        CheckStatus status;
        status.report(out, "proof-table compositions, axioms, grafting rule",
                      phi_is_morphism_check(max_arity));
        for (unsigned n = 1; n <= max_arity; ++n) {
            std::ostringstream what;
            what << "rank of the phi images at arity " << n << " is Catalan(" << n
                 << ") = " << catalan(n).str();
            status.report(out, what.str(), phi_linear_independence(n));
        }
        exit_code = status.ok ? 0 : 1;
    });

    CLI::App* tridendriform =
        check->add_subcommand("tridendriform", "the seven relations");
    tridendriform->add_option("--lambda", lambda_opt, "parameter");
    tridendriform->callback([&] {
        Rational lambda = parse_rational(lambda_opt);
        CheckStatus status;
        status.report(out, "tridendriform relations at lambda = " + lambda.str(),
                      tridendriform_check(lambda));
        exit_code = status.ok ? 0 : 1;
    });

    CLI::App* mould = check->add_subcommand("mould-iso",
                                            "transport between compositions");
    mould->add_option("--seed", seed, "RNG seed");
    mould->add_option("--trials", trials, "number of random pairs");
    mould->callback([&] {
        std::mt19937_64 rng(seed);
        CheckStatus status;
        status.report(out, "M(P o_i Q) == M(P) ou_i M(Q) and M is invertible",
                      mould_transport_check(rng, trials, 3));
        auto rep = mould_polynomial_closure_witness();
        out << "mould unit: " << rep.unit.str() << "\n";
        status.report(out, "compositions of polynomials stay polynomial",
                      rep.compositions_stay_polynomial);
        status.report(out, "the unit is not a polynomial (no polynomial suboperad)",
                      !rep.unit_is_polynomial && !rep.polynomial_unit_exists);
        exit_code = status.ok ? 0 : 1;
    });

    CLI::App* star = check->add_subcommand("star-assoc",
                                           "associativity of * = > + <");
    star->callback([&] {
        out << render(star_composed(1), Format::Text) << "\n";
        out << render(star_composed(2), Format::Text) << "\n";
        bool ok = star_associativity_check();
        out << (ok ? "OK" : "FAIL") << "\n";
        exit_code = ok ? 0 : 1;
    });

    CLI::App* preshuffle = check->add_subcommand("preshuffle",
                                                 "axiom I and the defining relations");
    preshuffle->add_option("--law", law_opt, "additive | bch:<d>");
    preshuffle->callback([&] {
        FormalGroupLaw law = parse_law(law_opt);
        CheckStatus status;
        if (law.kind() == LawKind::NCSeries) {
            status.report(out,
                          law.name() + ": axiom I up to degree " +
                              std::to_string(law.truncation_degree()),
                          preshuffle_axiom_I_exhaustive(law, 2, 2));
        } else {
            status.report(out, "additive: axiom I, arities <= 3, words <= 2",
                          preshuffle_axiom_I_exhaustive(law, 3, 2));
            status.report(out, "defining relations", check_defining_relations());
            auto witness = axiom_II_failure_witness();
            out << "axiom II witness: " << witness.description << "\n";
            status.report(out, "axiom II fails as expected", witness.fails);
        }
        exit_code = status.ok ? 0 : 1;
    });

    CLI::App* confluence = check->add_subcommand("confluence",
                                                 "critical monomials of the rewriting system");
    confluence->callback([&] {
        auto rep = critical_monomial_confluence(asder_rewrite_rules());
        print_confluence_report(rep, out);
        CheckStatus status;
        status.report(out, "both critical monomials confluent",
                      rep.all_confluent && rep.terminated);
        auto broken = critical_monomial_confluence(sign_broken_rules());
        status.report(out, "sign-broken rule set detected as non-confluent",
                      !broken.all_confluent);
        exit_code = status.ok ? 0 : 1;
    });

    CLI::App* dsquared = check->add_subcommand("dsquared",
                                               "the boundary squares to zero");
    dsquared->add_option("--max-arity", max_arity, "largest generator arity");
    dsquared->callback([&] {
        CheckStatus status;
        status.report(out,
                      "d(d(g)) == 0 for all generators up to arity " +
                          std::to_string(max_arity),
                      d_squared_check(max_arity));
        exit_code = status.ok ? 0 : 1;
    });

    try {
        std::vector<const char*> argv;
        argv.push_back("opcal");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace opcal::cli
