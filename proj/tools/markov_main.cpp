// Command-line front end: enumeration, spectrum rows, approximation
// experiments, form minima, flip trajectories, SVG rendering, and the
// verification suites.  Exit codes: 0 ok, 1 verification failure, 2 usage.

#include "markovgeo/cf.hpp"
#include "markovgeo/exact.hpp"
#include "markovgeo/forms.hpp"
#include "markovgeo/hypgeo.hpp"
#include "markovgeo/markov.hpp"
#include "markovgeo/svg.hpp"
#include "markovgeo/teich.hpp"
#include "markovgeo/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace markovgeo;
using nlohmann::json;

namespace {

unsigned working_bits() {
    const char* env = std::getenv("MARKOV_PRECISION_BITS");
    if (!env) return 64;
    long v = std::strtol(env, nullptr, 10);
    if (v < 16) v = 16;
    if (v > 8192) v = 8192;
    return unsigned(v);
}

// floats are printed to 10 significant digits, computed at the working
// precision; exact values always travel alongside
std::string fl(const QuadExt& x) { return to_float(x, working_bits()).str(10); }
double fd(const QuadExt& x) { return to_float(x, working_bits()).to_double(); }

std::string ex(const QuadExt& x) { return to_string(x); }
std::string ex(const Rational& r) { return to_string(QuadExt(r)); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

Rational parse_rational(const std::string& s) {
    QuadExt v = parse_quadext(s);
    if (!v.is_rational()) throw std::invalid_argument("expected a rational, got " + s);
    return v.rat();
}

Integer parse_integer(const std::string& s) {
    Rational r = parse_rational(s);
    if (denominator(r) != 1) throw std::invalid_argument("expected an integer, got " + s);
    return numerator(r);
}

MarkovTriple parse_triple(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 3) throw std::invalid_argument("triple must be a,b,c");
    return {parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2])};
}

std::string triple_str(const MarkovTriple& t) {
    std::ostringstream os;
    os << "(" << t.a << ", " << t.b << ", " << t.c << ")";
    return os.str();
}

std::string form_coeffs(const BinaryQuadraticForm& f) {
    return "[" + ex(f.A) + ", " + ex(Rational(2 * f.B)) + ", " + ex(f.C) + "]";
}

struct TreeRow {
    MarkovTriple t;
    QuadExt lambda, lagrange, minimum, x;
    BinaryQuadraticForm f;
};

TreeRow tree_row(const MarkovTriple& t) {
    QuadExt x = markov_x(t);
    BinaryQuadraticForm f = markov_form(t);
    return {t, markov_lambda(t), lagrange_number(x), indefinite_min(f).m_exact, x, f};
}

json dual(const QuadExt& v) { return json{{"exact", ex(v)}, {"float", fd(v)}}; }

int cmd_tree(long cmax, bool as_json, bool as_csv) {
    std::vector<TreeRow> rows;
    for (const MarkovTriple& t : enumerate_triples(Integer(cmax))) rows.push_back(tree_row(t));

    if (as_json) {
        json out{{"cmax", cmax}, {"rows", json::array()}};
        for (const TreeRow& r : rows)
            out["rows"].push_back(
                {{"triple", {r.t.a.str(), r.t.b.str(), r.t.c.str()}},
                 {"lambda", dual(r.lambda)},
                 {"lagrange", dual(r.lagrange)},
                 {"minimum", dual(r.minimum)},
                 {"x", dual(r.x)},
                 {"form", {ex(r.f.A), ex(Rational(2 * r.f.B)), ex(r.f.C)}}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (as_csv) {
        std::cout << "a,b,c,lambda,lambda_float,lagrange,lagrange_float,"
                     "minimum,minimum_float,x,x_float,form_a,form_b,form_c\n";
        for (const TreeRow& r : rows)
            std::cout << r.t.a << ',' << r.t.b << ',' << r.t.c << ',' << ex(r.lambda) << ','
                      << fl(r.lambda) << ',' << ex(r.lagrange) << ',' << fl(r.lagrange) << ','
                      << ex(r.minimum) << ',' << fl(r.minimum) << ',' << ex(r.x) << ','
                      << fl(r.x) << ',' << ex(r.f.A) << ',' << ex(Rational(2 * r.f.B)) << ','
                      << ex(r.f.C) << "\n";
        return 0;
    }
    for (const TreeRow& r : rows)
        std::cout << triple_str(r.t) << "  lambda = " << ex(r.lambda) << " (" << fl(r.lambda)
                  << ")  L = " << ex(r.lagrange) << " (" << fl(r.lagrange)
                  << ")  M = " << ex(r.minimum) << " (" << fl(r.minimum) << ")  x = " << ex(r.x)
                  << " (" << fl(r.x) << ")  f = " << form_coeffs(r.f) << "\n";
    return 0;
}

int cmd_spectrum(long cmax) {
    for (const MarkovTriple& t : enumerate_triples(Integer(cmax))) {
        QuadExt x = markov_x(t);
        QuadExt L = lagrange_number(x);
        std::cout << triple_str(t) << "  x = " << ex(x) << " (" << fl(x) << ")  L = " << ex(L)
                  << " (" << fl(L) << ")\n";
    }
    return 0;
}

int cmd_approx(const std::string& triple, const std::string& lambda_str, long qmax,
               bool as_json) {
    MarkovTriple t = parse_triple(triple);
    QuadExt x = markov_x(t);
    QuadExt lambda = parse_quadext(lambda_str);
    if (!(QuadExt(0) < lambda)) throw std::invalid_argument("lambda must be positive");

    std::vector<Convergent> sols = approximations(x, lambda, Integer(qmax));
    if (as_json) {
        json out{{"triple", {t.a.str(), t.b.str(), t.c.str()}},
                 {"x", dual(x)},
                 {"lambda", dual(lambda)},
                 {"q_max", qmax},
                 {"count", sols.size()},
                 {"solutions", json::array()}};
        for (const Convergent& s : sols)
            out["solutions"].push_back({{"p", s.p.str()}, {"q", s.q.str()}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "x = " << ex(x) << " (" << fl(x) << ")\n";
    std::cout << "lambda = " << ex(lambda) << " (" << fl(lambda) << ")\n";
    std::cout << "q_max = " << qmax << "\n";
    for (const Convergent& s : sols) std::cout << "  " << s.p << "/" << s.q << "\n";
    std::cout << "count = " << sols.size() << "\n";
    return 0;
}

int cmd_forms_min(const std::string& form_str, long bound) {
    auto parts = split(form_str, ',');
    if (parts.size() != 3) throw std::invalid_argument("form must be A,2B,C");
    BinaryQuadraticForm f{parse_rational(parts[0]), Rational(parse_rational(parts[1]) / 2),
                          parse_rational(parts[2])};
    LatticeMin lm = lattice_min(f, bound);
    std::cout << "f = " << form_coeffs(f) << "\n";
    std::cout << "det = " << ex(f.det()) << "\n";
    std::cout << "min |f| = " << ex(lm.min_value) << " at (" << lm.witness.first << ", "
              << lm.witness.second << ")\n";
    std::cout << "M = " << ex(lm.m_exact) << " (" << fl(lm.m_exact) << ")\n";
    return 0;
}

int cmd_teich_flip(const std::string& start, const std::string& moves_str) {
    auto parts = split(start, ',');
    if (parts.size() != 3) throw std::invalid_argument("start must be three weights a,b,c");
    TorusTriangulation T{parse_rational(parts[0]), parse_rational(parts[1]),
                         parse_rational(parts[2])};
    std::cout << "(" << ex(T.a) << ", " << ex(T.b) << ", " << ex(T.c) << ")\n";
    if (!moves_str.empty())
        for (const std::string& m : split(moves_str, ',')) {
            int k = int(parse_integer(m).convert_to<long>());
            T = torus_flip(T, k);
            std::cout << "flip " << k << " -> (" << ex(T.a) << ", " << ex(T.b) << ", " << ex(T.c)
                      << ")\n";
        }
    return 0;
}

int cmd_render(long qmax, const std::string& window, const std::string& out_path, long scale,
               const std::vector<std::string>& geodesic_strs) {
    auto parts = split(window, ',');
    if (parts.size() != 2) throw std::invalid_argument("window must be x_min,x_max");
    RenderSpec spec;
    spec.x_min = parse_rational(parts[0]);
    spec.x_max = parse_rational(parts[1]);
    spec.q_max = qmax;
    spec.scale = scale;
    for (const std::string& g : geodesic_strs) {
        auto ends = split(g, ',');
        if (ends.size() != 2) throw std::invalid_argument("geodesic must be e1,e2");
        spec.geodesics.emplace_back(parse_quadext(ends[0]), parse_quadext(ends[1]));
    }
    std::string svg = render_svg(spec);
    if (out_path.empty()) {
        std::cout << svg;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + out_path);
    out << svg;
    return 0;
}

int cmd_verify(const std::string& suite) {
    bool all_passed = true;
    for (const CheckResult& r : run_criteria(suite_ids(suite))) {
        std::printf("[%s] criterion %d: %s (%.0f ms)\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.millis);
        if (!r.passed) {
            std::printf("       %s\n", r.detail.c_str());
            all_passed = false;
        }
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for the Markov spectrum, forms, and the decorated torus"};
    app.require_subcommand(1);

    long tree_cmax = 29;
    bool tree_json = false, tree_csv = false;
    CLI::App* tree = app.add_subcommand("tree", "enumerate sorted triples with spectrum columns");
    tree->add_option("--cmax", tree_cmax, "largest allowed maximum")->check(CLI::PositiveNumber);
    tree->add_flag("--json", tree_json, "JSON output");
    tree->add_flag("--csv", tree_csv, "CSV output");
    tree->callback([&] {
        if (tree_json && tree_csv) throw CLI::ValidationError("--json and --csv are exclusive");
    });

    long spectrum_cmax = 29;
    CLI::App* spectrum = app.add_subcommand("spectrum", "spectrum rows below 3");
    spectrum->add_option("--cmax", spectrum_cmax, "largest allowed maximum")
        ->check(CLI::PositiveNumber);

    std::string approx_triple, approx_lambda;
    long approx_qmax = 100;
    bool approx_json = false;
    CLI::App* approx = app.add_subcommand("approx", "good rational approximations");
    approx->add_option("--triple", approx_triple, "sorted triple a,b,c")->required();
    approx->add_option("--lambda", approx_lambda, "threshold, e.g. \"sqrt(5) - 1/100\"")
        ->required();
    approx->add_option("--qmax", approx_qmax, "denominator bound")->check(CLI::PositiveNumber);
    approx->add_flag("--json", approx_json, "JSON output");

    CLI::App* forms = app.add_subcommand("forms", "binary quadratic form utilities");
    forms->require_subcommand(1);
    std::string form_str;
    long form_bound = 100;
    CLI::App* forms_min = forms->add_subcommand("min", "lattice minimum by exhaustive scan");
    forms_min->add_option("--form", form_str, "coefficients A,2B,C")->required();
    forms_min->add_option("--bound", form_bound, "scan |p|,|q| up to this bound")
        ->check(CLI::PositiveNumber);

    CLI::App* teich = app.add_subcommand("teich", "decorated torus utilities");
    teich->require_subcommand(1);
    std::string flip_start, flip_moves;
    CLI::App* flip = teich->add_subcommand("flip", "replay edge flips and print weights");
    flip->add_option("--start", flip_start, "starting weights a,b,c")->required();
    flip->add_option("--moves", flip_moves, "edge indices, e.g. 1,2,1,3");

    long render_qmax = 5, render_scale = 400;
    std::string render_window = "0,1", render_out;
    std::vector<std::string> render_geodesics;
    CLI::App* render = app.add_subcommand("render", "SVG of Ford circles and Farey edges");
    render->add_option("--qmax", render_qmax, "largest Ford circle denominator")
        ->check(CLI::PositiveNumber);
    render->add_option("--window", render_window, "x_min,x_max");
    render->add_option("--svg", render_out, "output path (stdout when absent)");
    render->add_option("--scale", render_scale, "pixels per unit")->check(CLI::PositiveNumber);
    render->add_option("--geodesic", render_geodesics, "endpoint pair e1,e2 (repeatable)");

    std::string verify_suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", verify_suite, "all, tables, flips, hurwitz, equivariance, "
                                                "crossing, geodesics, uniqueness, definite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(tree)) return cmd_tree(tree_cmax, tree_json, tree_csv);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(spectrum_cmax);
        if (app.got_subcommand(approx))
            return cmd_approx(approx_triple, approx_lambda, approx_qmax, approx_json);
        if (app.got_subcommand(forms)) return cmd_forms_min(form_str, form_bound);
        if (app.got_subcommand(teich)) return cmd_teich_flip(flip_start, flip_moves);
        if (app.got_subcommand(render))
            return cmd_render(render_qmax, render_window, render_out, render_scale,
                              render_geodesics);
        if (app.got_subcommand(verify)) return cmd_verify(verify_suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
