// spoisson: command-line front end for the superpoisson verification kernel.
//
// Exit codes: 0 verified / solution, 1 verified false, 2 input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superpoisson/superpoisson.hpp"

namespace {

using namespace superpoisson;
namespace sio = superpoisson::io;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

std::string read_text(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw sio::InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

sio::Document load(const std::string& path) {
    try {
        return sio::parse(read_text(path));
    } catch (const sio::InputError& e) {
        throw sio::InputError(path + ": " + e.what());
    }
}

SuperAlgebra load_algebra(const std::string& path) { return sio::decode_algebra(load(path)); }

Representation load_rep(const std::string& path, const std::string& algebra_path) {
    std::optional<SuperAlgebra> alg;
    if (!algebra_path.empty())
        alg = load_algebra(algebra_path);
    return sio::decode_representation(load(path), alg);
}

std::vector<Scalar> parse_grid(const std::string& text) {
    std::vector<Scalar> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        grid.push_back(parse_scalar(item));
    if (grid.empty())
        throw sio::InputError("empty grid");
    return grid;
}

Parity parse_parity(const std::string& s) {
    if (s == "even" || s == "0")
        return Parity::even;
    if (s == "odd" || s == "1")
        return Parity::odd;
    throw sio::InputError("parity must be 'even' or 'odd', got '" + s + "'");
}

void print_doc(const sio::Document& d) { std::cout << sio::serialize(d); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string form_summary(const FormClassification& c) {
    std::ostringstream os;
    os << "even: " << yes_no(c.even) << "\n"
       << "odd: " << yes_no(c.odd) << "\n"
       << "supersymmetric: " << yes_no(c.supersymmetric) << "\n"
       << "skew-supersymmetric: " << yes_no(c.skew_supersymmetric) << "\n"
       << "non-degenerate: " << yes_no(c.non_degenerate) << "\n";
    if (c.invariant)
        os << "invariant: " << yes_no(*c.invariant) << "\n";
    if (c.cocycle)
        os << "2-cocycle: " << yes_no(*c.cocycle) << "\n";
    return os.str();
}

std::string matrix_rows(const Matrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Poisson superalgebra identities, O-operators and the PYBE"};
    app.require_subcommand(1);
    int exit_code = kOk;

    std::string file, algebra_path, rep_path, ambient_out;
    std::string parity_text = "even", grid_text = "-1,0,1", k_text = "1";
    std::size_t max_dim = kOperatorSearchMaxDim;
    std::uint64_t seed = 0;
    std::size_t count = 1000;
    int family = 0;
    std::size_t gl_m = 1, gl_n = 1;
    bool require_coherent = false;

    // verify ------------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Check axioms of an object")->require_subcommand(1);

    auto* v_alg = verify->add_subcommand("algebra", "Poisson superalgebra axioms and coherence");
    v_alg->add_option("file", file, "algebra document ('-' for stdin)")->required();
    v_alg->add_flag("--require-coherent", require_coherent, "also fail when the coherence identity fails");
    v_alg->callback([&] {
        const auto a = load_algebra(file);
        bool ok = true;
        for (const auto& r : verify_poisson(a)) {
            std::cout << report::format(r, {a.space(), a.space(), a.space()});
            ok = ok && r.holds();
        }
        const auto coh = verify_coherence(a);
        std::cout << report::format(coh, {a.space(), a.space(), a.space()});
        if (require_coherent)
            ok = ok && coh.holds();
        std::cout << "verdict: " << (ok ? "Poisson superalgebra" : "not a Poisson superalgebra") << "\n";
        exit_code = ok ? kOk : kFalse;
    });

    auto* v_rep = verify->add_subcommand("rep", "Representation axioms");
    v_rep->add_option("file", file, "representation document")->required();
    v_rep->add_option("--algebra", algebra_path, "algebra document, if not embedded");
    v_rep->callback([&] {
        const auto r = load_rep(file, algebra_path);
        const auto rep = verify_representation(r);
        const auto& s = r.algebra().space();
        std::cout << report::format(rep, {s, s, r.module()});
        std::cout << report::format(verify_dualizable(r), {s, s});
        std::cout << blocks(r);
        std::cout << "verdict: " << (rep.holds() ? "representation" : "not a representation") << "\n";
        exit_code = rep.holds() ? kOk : kFalse;
    });

    auto* v_op = verify->add_subcommand("operator", "O-operator equations (Rota-Baxter with --algebra only)");
    v_op->add_option("file", file, "linear map document")->required();
    v_op->add_option("--rep", rep_path, "representation document");
    v_op->add_option("--algebra", algebra_path, "algebra document");
    v_op->callback([&] {
        const auto t = sio::decode_linear_map(load(file));
        DefectReport rep;
        if (!rep_path.empty()) {
            const auto r = load_rep(rep_path, algebra_path);
            rep = verify_o_operator(t, r);
        } else if (!algebra_path.empty()) {
            rep = verify_rota_baxter(t, load_algebra(algebra_path));
        } else {
            throw sio::InputError("need --rep, or --algebra for a Rota-Baxter check");
        }
        std::cout << "parity: " << to_string(t.parity()) << "\n";
        std::cout << report::format(rep, {t.domain(), t.domain()});
        std::cout << "verdict: " << (rep.holds() ? "" : "not ") << (rep_path.empty() ? "Rota-Baxter operator" : "O-operator")
                  << "\n";
        exit_code = rep.holds() ? kOk : kFalse;
    });

    // check -------------------------------------------------------------------
    auto* check = app.add_subcommand("check", "Yang-Baxter and form checks")->require_subcommand(1);

    auto* c_pybe = check->add_subcommand("pybe", "Poisson Yang-Baxter equation");
    c_pybe->add_option("file", file, "tensor document")->required();
    c_pybe->add_option("--algebra", algebra_path, "algebra document")->required();
    c_pybe->callback([&] {
        const auto a = load_algebra(algebra_path);
        const auto r = sio::decode_tensor(load(file));
        const auto rep = check_pybe(a, r);
        std::cout << "parity: " << to_string(r.parity()) << "\n"
                  << "symmetry: " << to_string(symmetry_class(r)) << "\n"
                  << report::format(rep);
        exit_code = rep.is_solution ? kOk : kFalse;
    });

    auto* c_tr = check->add_subcommand("theorem-tr", "PYBE solution versus co-regular O-operator of T_r");
    c_tr->add_option("file", file, "tensor document (random graded-skew tensors when omitted)");
    c_tr->add_option("--algebra", algebra_path, "algebra document")->required();
    c_tr->add_option("--seed", seed, "random seed")->capture_default_str();
    c_tr->add_option("--count", count, "number of random tensors")->capture_default_str();
    c_tr->callback([&] {
        const auto a = load_algebra(algebra_path);
        if (!file.empty()) {
            const auto d = check_theorem_tr(a, sio::decode_tensor(load(file)));
            std::cout << "PYBE solution: " << yes_no(d.pybe_solution) << "\n"
                      << "co-regular O-operator: " << yes_no(d.o_operator) << "\n"
                      << "agreement: " << yes_no(d.agree()) << "\n";
            exit_code = !d.agree() ? kFalse : (d.pybe_solution ? kOk : kFalse);
            return;
        }
        if (!is_coherent(a))
            throw PreconditionFailed("algebra is not coherent");
        std::mt19937_64 rng(seed);
        std::size_t solutions = 0, disagreements = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const Parity p = (rng() & 1) ? Parity::odd : Parity::even;
            const auto d = check_theorem_tr(a, random_graded_skew_tensor(a.space(), p, rng));
            solutions += d.pybe_solution;
            if (!d.agree()) {
                ++disagreements;
                std::cout << "disagreement at instance " << i << "\n";
            }
        }
        std::cout << "seed: " << seed << "\n"
                  << "instances: " << count << "\n"
                  << "solutions: " << solutions << "\n"
                  << "disagreements: " << disagreements << "\n";
        exit_code = disagreements == 0 ? kOk : kFalse;
    });

    auto* c_form = check->add_subcommand("form", "Classify a bilinear form");
    c_form->add_option("file", file, "form document")->required();
    c_form->add_option("--algebra", algebra_path, "algebra document for invariance and 2-cocycle tests");
    c_form->callback([&] {
        const auto b = sio::decode_form(load(file));
        if (algebra_path.empty())
            std::cout << form_summary(classify_form(b));
        else
            std::cout << form_summary(classify_form(b, load_algebra(algebra_path)));
    });

    // build -------------------------------------------------------------------
    auto* build = app.add_subcommand("build", "Construct derived objects")->require_subcommand(1);

    auto* b_sdp = build->add_subcommand("semidirect", "Semi-direct product algebra");
    b_sdp->add_option("--rep", rep_path, "representation document")->required();
    b_sdp->add_option("--algebra", algebra_path, "algebra document, if not embedded");
    b_sdp->callback([&] { print_doc(sio::encode(semidirect_product(load_rep(rep_path, algebra_path)))); });

    auto* b_reg = build->add_subcommand("regular", "Regular representation");
    b_reg->add_option("--algebra", algebra_path, "algebra document")->required();
    b_reg->callback([&] { print_doc(sio::encode(regular_rep(load_algebra(algebra_path)))); });

    auto* b_co = build->add_subcommand("coregular", "Co-regular representation");
    b_co->add_option("--algebra", algebra_path, "algebra document")->required();
    b_co->callback([&] { print_doc(sio::encode(coregular_rep(load_algebra(algebra_path)))); });

    auto* b_dual = build->add_subcommand("dual", "Dual representation");
    b_dual->add_option("--rep", rep_path, "representation document")->required();
    b_dual->add_option("--algebra", algebra_path, "algebra document, if not embedded");
    b_dual->callback([&] { print_doc(sio::encode(dual_rep(load_rep(rep_path, algebra_path)))); });

    auto* b_rev = build->add_subcommand("parity-reversed", "Parity-reversed representation");
    b_rev->add_option("--rep", rep_path, "representation document")->required();
    b_rev->add_option("--algebra", algebra_path, "algebra document, if not embedded");
    b_rev->callback([&] { print_doc(sio::encode(parity_reversed_rep(load_rep(rep_path, algebra_path)))); });

    auto* b_sol = build->add_subcommand("solution", "PYBE solution T - (-1)^{|T|} sigma(T) in P ⋉ V*");
    b_sol->add_option("file", file, "linear map document")->required();
    b_sol->add_option("--rep", rep_path, "representation document")->required();
    b_sol->add_option("--algebra", algebra_path, "algebra document, if not embedded");
    b_sol->add_option("--ambient", ambient_out, "also write the ambient algebra document here");
    b_sol->callback([&] {
        const auto r = load_rep(rep_path, algebra_path);
        const auto t = sio::decode_linear_map(load(file));
        const auto bundle = build_solution(r.algebra(), r, t);
        if (!ambient_out.empty()) {
            std::ofstream out(ambient_out);
            if (!out)
                throw sio::InputError("cannot write '" + ambient_out + "'");
            out << sio::serialize(sio::encode(bundle.ambient));
        }
        print_doc(sio::encode(bundle.tensor));
        exit_code = bundle.report.is_solution ? kOk : kFalse;
    });

    // search ------------------------------------------------------------------
    auto* search = app.add_subcommand("search", "Enumerative searches")->require_subcommand(1);
    auto* s_ops = search->add_subcommand("operators", "All grid O-operators of one parity");
    s_ops->add_option("--rep", rep_path, "representation document")->required();
    s_ops->add_option("--algebra", algebra_path, "algebra document, if not embedded");
    s_ops->add_option("--parity", parity_text, "even or odd")->capture_default_str();
    s_ops->add_option("--grid", grid_text, "comma-separated rationals")->capture_default_str();
    s_ops->add_option("--max-dim", max_dim, "module dimension cap")->capture_default_str();
    s_ops->callback([&] {
        const auto r = load_rep(rep_path, algebra_path);
        const auto found = search_o_operators(r, parse_parity(parity_text), parse_grid(grid_text), max_dim);
        std::cout << "operators found: " << found.size() << "\n";
        for (const auto& t : found)
            std::cout << "  " << matrix_rows(t.matrix()) << "\n";
    });

    // fixtures ----------------------------------------------------------------
    auto* fixtures = app.add_subcommand("fixtures", "Built-in fixture algebras")->require_subcommand(1);
    auto* f_fam = fixtures->add_subcommand("family", "1|1-dimensional family N (1..5)");
    f_fam->add_option("n", family, "family number")->required();
    f_fam->add_option("--k", k_text, "parameter k (nonzero rational)")->capture_default_str();
    f_fam->callback([&] { print_doc(sio::encode(family_1dim1(family, parse_scalar(k_text)))); });
    auto* f_gl = fixtures->add_subcommand("gl", "gl(m|n) with supercommutator bracket");
    f_gl->add_option("m", gl_m, "even dimension")->required();
    f_gl->add_option("n", gl_n, "odd dimension")->required();
    f_gl->callback([&] { print_doc(sio::encode(general_linear(gl_m, gl_n))); });

    // pipeline ----------------------------------------------------------------
    auto* pipeline = app.add_subcommand("pipeline", "Multi-step equivalence checks")->require_subcommand(1);
    auto* p_cor = pipeline->add_subcommand("corollary", "Four equivalent verdicts for T");
    p_cor->add_option("file", file, "linear map document")->required();
    p_cor->add_option("--rep", rep_path, "representation document")->required();
    p_cor->add_option("--algebra", algebra_path, "algebra document, if not embedded");
    p_cor->callback([&] {
        const auto r = load_rep(rep_path, algebra_path);
        const auto t = sio::decode_linear_map(load(file));
        const auto v = corollary_pipeline(r.algebra(), r, t);
        std::cout << "T is an O-operator: " << yes_no(v.o_operator) << "\n"
                  << "T^s is an O-operator of the parity-reversed representation: "
                  << yes_no(v.suspended_o_operator) << "\n"
                  << "r is a PYBE solution in P ⋉ V*: " << yes_no(v.solution) << "\n"
                  << "r^s is a PYBE solution in P ⋉ (sV)*: " << yes_no(v.suspended_solution) << "\n"
                  << "agreement: " << yes_no(v.agree()) << "\n";
        exit_code = v.agree() && v.o_operator ? kOk : kFalse;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    } catch (const superpoisson::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return exit_code;
}
