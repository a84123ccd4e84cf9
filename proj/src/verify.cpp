#include "markovgeo/verify.hpp"

#include "markovgeo/cf.hpp"
#include "markovgeo/exact.hpp"
#include "markovgeo/forms.hpp"
#include "markovgeo/hypgeo.hpp"
#include "markovgeo/markov.hpp"
#include "markovgeo/moebius.hpp"
#include "markovgeo/teich.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace markovgeo {

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& what) {
        if (ok) {
            ok = false;
            detail = what;
        }
    }
    void require(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
};

long rand_long(std::mt19937_64& rng, long lo, long hi) {
    return lo + long(rng() % (unsigned long long)(hi - lo + 1));
}

Rational rand_rational(std::mt19937_64& rng, long num, long den) {
    return Rational(Integer(rand_long(rng, -num, num)), Integer(rand_long(rng, 1, den)));
}

double rand_uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = double(rng() >> 11) * 0x1p-53;
    return lo + (hi - lo) * u;
}

std::string row_label(const MarkovTriple& t) {
    std::ostringstream os;
    os << "triple (" << t.a << ", " << t.b << ", " << t.c << ")";
    return os.str();
}

// ---------------------------------------------------------------- 1

// the five spectrum rows below 3: exact quadratic values, exact Lagrange
// numbers, and the printed decimals to their displayed precision
void spectrum_rows(Check& c) {
    struct Row {
        MarkovTriple t;
        QuadExt x, L;
        double printed, tol;
    };
    const Row rows[] = {
        {{1, 1, 1}, QuadExt(Rational(1, 2), Rational(1, 2), 5), QuadExt(0, 1, 5), 2.2, 0.05},
        {{1, 1, 2}, QuadExt(0, 1, 2), QuadExt(0, 2, 2), 2.8, 0.05},
        {{1, 2, 5}, QuadExt(Rational(9, 10), Rational(1, 10), 221),
         QuadExt(0, Rational(1, 5), 221), 2.97, 0.005},
        {{1, 5, 13}, QuadExt(Rational(23, 26), Rational(1, 26), 1517),
         QuadExt(0, Rational(1, 13), 1517), 2.996, 0.0005},
        {{2, 5, 29}, QuadExt(Rational(5, 58), Rational(1, 58), 7565),
         QuadExt(0, Rational(1, 29), 7565), 2.9992, 0.00005},
    };

    std::vector<MarkovTriple> expect;
    for (const Row& row : rows) expect.push_back(row.t);
    c.require(enumerate_triples(29) == expect, "enumeration below 29 is not the five rows");

    for (const Row& row : rows) {
        c.require(markov_x(row.t) == row.x, row_label(row.t) + ": quadratic value mismatch");
        c.require(markov_lambda(row.t) == row.L, row_label(row.t) + ": lambda mismatch");
        c.require(lagrange_number(row.x) == row.L,
                  row_label(row.t) + ": lagrange number mismatch");
        double got = to_float(row.L, 64).to_double();
        c.require(std::fabs(got - row.printed) <= row.tol + 5e-5,
                  row_label(row.t) + ": printed decimal off");
    }
}

// ---------------------------------------------------------------- 2

// the five extremal forms: equal to the classical integer forms up to a
// positive scalar after a recorded unimodular change of basis, and the
// lattice scan reproduces the normalized minima exactly
void extremal_forms(Check& c) {
    struct Row {
        MarkovTriple t;
        BinaryQuadraticForm printed;
        Mat2 basis;
        QuadExt M;
    };
    const Mat2 I = Mat2::identity();
    const Row rows[] = {
        {{1, 1, 1}, {1, Rational(-1, 2), -1}, I, QuadExt(0, Rational(2, 5), 5)},
        {{1, 1, 2}, {1, 0, -2}, I, QuadExt(0, Rational(1, 2), 2)},
        {{1, 2, 5}, {5, Rational(1, 2), -11}, {1, 1, 0, 1}, QuadExt(0, Rational(10, 221), 221)},
        {{1, 5, 13}, {13, Rational(23, 2), -19}, {-1, 0, 0, 1},
         QuadExt(0, Rational(26, 1517), 1517)},
        {{2, 5, 29}, {29, Rational(-5, 2), -65}, I, QuadExt(0, Rational(58, 7565), 7565)},
    };

    for (const Row& row : rows) {
        BinaryQuadraticForm f = markov_form(row.t);
        BinaryQuadraticForm g = act(f, row.basis);
        c.require(g.proportional_to(row.printed),
                  row_label(row.t) + ": form not proportional to the classical one");
        c.require(Rational(row.printed.A / g.A).sign() > 0,
                  row_label(row.t) + ": proportionality scalar not positive");

        for (const BinaryQuadraticForm& h : {f, row.printed}) {
            LatticeMin lm = lattice_min(h, 1000);
            c.require(lm.m_exact == row.M, row_label(row.t) + ": normalized minimum mismatch");
            Rational at = h(Rational(lm.witness.first), Rational(lm.witness.second));
            c.require(abs(at) == lm.min_value, row_label(row.t) + ": witness does not attain");
        }
        c.require(lattice_min(f, 1000).min_value == 1,
                  row_label(row.t) + ": minimum of the monic form is not 1");
    }
}

// ---------------------------------------------------------------- 3

// edge flips on the decorated torus agree with the triple involutions, and
// every flip is an involution itself
void flips_match_involutions(Check& c) {
    auto torus_of = [](const MarkovTriple& t) {
        return TorusTriangulation{Rational(t.a), Rational(t.b), Rational(t.c)};
    };
    for (const MarkovTriple& t : enumerate_triples(433))
        for (int k = 1; k <= 3; ++k) {
            TorusTriangulation T = torus_of(t);
            TorusTriangulation flipped = torus_flip(T, k);
            c.require(flipped == torus_of(involution(t, k)),
                      row_label(t) + ": flip disagrees with involution");
            c.require(torus_flip(flipped, k) == T, row_label(t) + ": flip twice not identity");
        }

    std::mt19937_64 rng(0x666c6970u);
    for (int i = 0; i < 30; ++i) {
        TorusTriangulation T{Rational(Integer(rand_long(rng, 1, 40)), Integer(rand_long(rng, 1, 8))),
                             Rational(Integer(rand_long(rng, 1, 40)), Integer(rand_long(rng, 1, 8))),
                             Rational(Integer(rand_long(rng, 1, 40)), Integer(rand_long(rng, 1, 8)))};
        int k = 1 + int(rng() % 3);
        c.require(torus_flip(torus_flip(T, k), k) == T, "random flip twice not identity");
    }
}

// ---------------------------------------------------------------- 4

// counting good approximations of the golden ratio: below sqrt(5) the count
// keeps growing with the denominator bound, above sqrt(5) it freezes
void approximation_dichotomy(Check& c) {
    QuadExt phi(Rational(1, 2), Rational(1, 2), 5);
    QuadExt lam_minus(Rational(-1, 100), 1, 5);   // sqrt(5) - 1/100
    QuadExt lam_plus(Rational(1, 100), 1, 5);     // sqrt(5) + 1/100

    size_t n2 = approximations(phi, lam_minus, Integer(100)).size();
    size_t n3 = approximations(phi, lam_minus, Integer(1000)).size();
    size_t n4 = approximations(phi, lam_minus, Integer(10000)).size();
    c.require(n2 >= 1, "no approximations below the threshold at q <= 100");
    c.require(n2 < n3 && n3 < n4, "counts below sqrt(5) do not keep growing");

    size_t m3 = approximations(phi, lam_plus, Integer(1000)).size();
    size_t m4 = approximations(phi, lam_plus, Integer(10000)).size();
    c.require(m3 == m4, "count above sqrt(5) still grows");
}

// ---------------------------------------------------------------- 5

// the golden-ratio geodesic keeps distance exactly log(sqrt(5)/2) below
// zero to the three horocycles of the base triangle
void golden_ratio_distances(Check& c) {
    Geodesic g(QuadExt(Rational(1, 2), Rational(-1, 2), 5),
               QuadExt(Rational(1, 2), Rational(1, 2), 5));
    SignedDistance want = SignedDistance::from_log_argument(QuadExt(0, Rational(2, 5), 5));
    c.require(want.to_double() < 0, "expected distance not negative");
    c.require(std::fabs(want.to_double() + std::log(std::sqrt(5.0) / 2)) < 1e-12,
              "expected distance is not -log(sqrt(5)/2)");

    const std::pair<int, int> vecs[] = {{0, 1}, {1, 1}, {1, 0}};
    for (auto [p, q] : vecs) {
        SignedDistance d = dist_horo_geodesic(Horocycle(Rational(p), Rational(q)), g);
        std::ostringstream os;
        os << "distance to h(" << p << "," << q << ") is off";
        c.require(d == want, os.str());
    }
}

// ---------------------------------------------------------------- 6

// unimodular matrices preserve pair determinants and horocycle distances,
// and the form action is substitution
void unimodular_equivariance(Check& c) {
    std::mt19937_64 rng(0x65717569u);
    auto rand_unimodular = [&rng]() {
        Mat2 m = Mat2::identity();
        int steps = int(rand_long(rng, 1, 6));
        for (int i = 0; i < steps; ++i) {
            Rational k(Integer(rand_long(rng, -4, 4)));
            if (rng() & 1)
                m = m * Mat2{1, k, 0, 1};
            else
                m = m * Mat2{1, 0, k, 1};
        }
        if (rng() & 1) m = m * Mat2{1, 0, 0, -1};
        return m;
    };
    auto rand_vec = [&](long num, long den) {
        Vec2 v{0, 0};
        while (v.p.is_zero() && v.q.is_zero())
            v = Vec2{rand_rational(rng, num, den), rand_rational(rng, num, den)};
        return v;
    };

    for (int i = 0; i < 1000; ++i) {
        Mat2 m = rand_unimodular();
        if (!m.is_unimodular()) {
            c.fail("generated matrix is not unimodular");
            return;
        }
        Vec2 v1 = rand_vec(12, 6), v2 = rand_vec(12, 6);
        Vec2 w1 = act_on_vector(m, v1), w2 = act_on_vector(m, v2);
        Rational det_before = v1.p * v2.q - v2.p * v1.q;
        Rational det_after = w1.p * w2.q - w2.p * w1.q;
        c.require(abs(det_before) == abs(det_after), "pair determinant magnitude changed");
        c.require(dist_horo_horo(Horocycle(v1), Horocycle(v2)) ==
                      dist_horo_horo(Horocycle(w1), Horocycle(w2)),
                  "horocycle distance changed under the action");
    }

    for (int i = 0; i < 1000; ++i) {
        Mat2 m = rand_unimodular();
        BinaryQuadraticForm f{rand_rational(rng, 9, 5), rand_rational(rng, 9, 5),
                              rand_rational(rng, 9, 5)};
        Vec2 v = rand_vec(20, 1);
        Vec2 w = act_on_vector(m, v);
        c.require(act(f, m)(v.p, v.q) == f(w.p, w.q), "form action is not substitution");
    }
}

// ---------------------------------------------------------------- 7

// numeric grid oracle for the leg-crossing optimization; mirrors the test
// oracle: for fixed left end the inner problem is unimodal in the right
// end, so nested 1-D refinement is reliable where a 2-D grid stalls
double crossing_min_distance(double a1, double a2, double v1, double v2, double e1, double e2) {
    double w = e2 - e1;
    double u1 = 2.0 * a2 * a2 * std::fabs((v1 - e1) * (v1 - e2)) / w;
    double u2 = 2.0 * a1 * a1 * std::fabs((v2 - e1) * (v2 - e2)) / w;
    double u3 = 2.0 / w;
    return std::min({std::log(u1), std::log(u2), std::log(u3)});
}

double crossing_best_right_end(double a1, double a2, double v1, double v2, double e1,
                               double lo, double hi) {
    double best_e = hi, best_v = -1e300;
    for (int round = 0; round < 14; ++round) {
        double step = (hi - lo) / 32;
        best_v = -1e300;
        for (int j = 0; j <= 32; ++j) {
            double e2 = lo + step * j;
            if (!(e2 > v2)) continue;
            double val = crossing_min_distance(a1, a2, v1, v2, e1, e2);
            if (val > best_v) { best_v = val; best_e = e2; }
        }
        lo = std::max(v2, best_e - 2 * step);
        hi = best_e + 2 * step;
    }
    return best_v;
}

double crossing_grid_value(double a1, double a2, double a3, double v1, double v2) {
    double delta = a1 / (a2 * a3) + a2 / (a3 * a1) + a3 / (a1 * a2);
    double reach = 2.0 * (delta + 1.0 / a1 + 1.0 / a2 + 1.0);
    double lo = v1 - reach, hi = v1;
    double best_v = -1e300, best_e1 = lo;
    for (int round = 0; round < 28; ++round) {
        double step = (hi - lo) / 48;
        best_v = -1e300;
        for (int i = 0; i <= 48; ++i) {
            double e1 = lo + step * i;
            if (!(e1 < v1)) continue;
            double val = crossing_best_right_end(a1, a2, v1, v2, e1, v2, v2 + reach);
            if (val > best_v) { best_v = val; best_e1 = e1; }
        }
        lo = std::max(v1 - reach, best_e1 - 2 * step);
        hi = std::min(v1, best_e1 + 2 * step);
    }
    return best_v;
}

// random decorated triangles: the classified optimum matches the grid
// oracle, and the crossing relation vanishes at the optimal geodesic
void crossing_vs_grid(Check& c) {
    std::mt19937_64 rng(0x63726f73u);
    for (int i = 0; i < 50; ++i) {
        Rational w[3];
        for (Rational& x : w) {
            double e = std::exp(rand_uniform(rng, -2.0, 2.0));
            x = Rational(Integer(std::lround(e * 720)), Integer(720));
        }
        DecoratedTriangle t{w[0], w[1], w[2]};
        ArcLengths arcs = arc_lengths(t);
        Rational v1 = rand_rational(rng, 6, 6);
        Rational v2 = Rational(v1 + arcs.c3);

        CrossingSolution sol = crossing_optimum(t, v1, v2);
        double grid = crossing_grid_value(w[0].convert_to<double>(), w[1].convert_to<double>(),
                                          w[2].convert_to<double>(), v1.convert_to<double>(),
                                          v2.convert_to<double>());
        c.require(std::fabs(grid - sol.distance.to_double()) <= 1e-6,
                  "grid oracle disagrees with the classified optimum");

        if (!sol.geometry) {
            c.fail("optimum came without geometry");
            return;
        }
        Geodesic g(sol.geometry->x0 - sol.geometry->r, sol.geometry->x0 + sol.geometry->r);
        QuadExt u[3];
        for (int k = 1; k <= 3; ++k)
            u[k - 1] = dist_horo_geodesic(crossing_horocycle(t, v1, v2, k), g).log_argument();
        QuadExt lhs = QuadExt(arcs.c1) * u[0] + QuadExt(arcs.c2) * u[1] + QuadExt(arcs.c3) * u[2];
        QuadExt residual =
            lhs * lhs - QuadExt(4 * arcs.c1 * arcs.c2) * u[0] * u[1] - QuadExt(4);
        BigFloat res = to_float(residual, 256);
        c.require(abs(res) < BigFloat::of(1e-30, 256), "crossing relation residual too large");
    }
}

// ---------------------------------------------------------------- 8

// Ford circles near the extremal geodesics: the distance never drops below
// -log r, with exact equality at the attaining circles
void distance_floor(Check& c) {
    for (const MarkovTriple& t : enumerate_triples(29)) {
        QuadExt x0(markov_x0(t));
        QuadExt r = markov_r(t);
        Geodesic g(x0 - r, x0 + r);
        QuadExt floor_arg = QuadExt(1) / r;

        long attained = 0;
        for (const Horocycle& h : ford_circles(200, Rational(-1), Rational(2))) {
            QuadExt arg = dist_horo_geodesic(h, g).log_argument();
            if (arg == floor_arg)
                ++attained;
            else
                c.require(arg > floor_arg, row_label(t) + ": distance below the floor");
        }
        c.require(attained >= 1, row_label(t) + ": no circle attains the floor");
        c.require(dist_horo_geodesic(Horocycle(Rational(1), Rational(0)), g).log_argument() ==
                      floor_arg,
                  row_label(t) + ": the line at infinity misses the floor");
    }
}

// ---------------------------------------------------------------- 9

// largest triple members stay unique through one million
void uniqueness_to_a_million(Check& c) {
    UniquenessReport rep = uniqueness_scan(Integer(1000000));
    c.require(rep.duplicates.empty(), "duplicate maxima found");
    c.require(rep.max_values.size() > 30, "suspiciously few triples enumerated");
}

// ---------------------------------------------------------------- 10

// definite forms: normalized minimum never beats the hexagonal bound, the
// hexagonal form attains it, and triangle location matches a brute-force
// nearest-three scan
void definite_bound_and_location(Check& c) {
    std::mt19937_64 rng(0x64656669u);
    for (int i = 0; i < 100; ++i) {
        Rational A(Integer(rand_long(rng, 1, 40)), Integer(rand_long(rng, 1, 8)));
        Rational B = rand_rational(rng, 30, 8);
        Rational bump(Integer(rand_long(rng, 1, 50)), Integer(rand_long(rng, 1, 8)));
        BinaryQuadraticForm f{A, B, Rational((B * B + bump) / A)};

        LatticeMin lm = definite_min(f);
        c.require(Rational(3 * lm.min_value * lm.min_value) <= Rational(4 * f.det()),
                  "normalized minimum beats the hexagonal bound");
        c.require(lm.m_float <= 2 / std::sqrt(3.0) + 1e-12, "float minimum beats the bound");
        Rational at = f(Rational(lm.witness.first), Rational(lm.witness.second));
        c.require(at == lm.min_value, "witness does not attain the definite minimum");
    }

    BinaryQuadraticForm hexagonal{1, Rational(-1, 2), 1};
    c.require(definite_min(hexagonal).m_exact == QuadExt(0, Rational(2, 3), 3),
              "hexagonal form does not attain 2/sqrt(3)");

    auto pool = ford_circles(50, Rational(-1), Rational(4));
    auto vertex_horo = [](const BoundaryPoint& v) {
        if (v.is_infinity()) return Horocycle(Rational(1), Rational(0));
        Rational r = v.value().rat();
        return Horocycle(Rational(numerator(r)), Rational(denominator(r)));
    };
    int tested = 0;
    while (tested < 100) {
        Rational x(Integer(rand_long(rng, 1, 899)), Integer(300));
        Rational y(Integer(rand_long(rng, 1, 450)), Integer(300));
        HPoint z{QuadExt(x), QuadExt(y)};
        FareyTriangle tri;
        try {
            tri = farey_triangle_of(z);
        } catch (const OnEdgeError&) {
            continue;
        }
        ++tested;
        Horocycle h1 = vertex_horo(tri.v1), h2 = vertex_horo(tri.v2), h3 = vertex_horo(tri.v3);
        SignedDistance worst = dist_horo_point(h1, z);
        for (const Horocycle& h : {h2, h3}) {
            SignedDistance d = dist_horo_point(h, z);
            if (d > worst) worst = d;
        }
        for (const Horocycle& h : pool) {
            if (h == h1 || h == h2 || h == h3) continue;
            c.require(dist_horo_point(h, z) >= worst,
                      "a circle outside the located triangle is closer");
        }
    }
}

// ----------------------------------------------------------------

struct Criterion {
    int id;
    const char* name;
    void (*run)(Check&);
};

const Criterion criteria[criterion_count] = {
    {1, "spectrum rows", spectrum_rows},
    {2, "extremal forms and minima", extremal_forms},
    {3, "flips match involutions", flips_match_involutions},
    {4, "approximation dichotomy", approximation_dichotomy},
    {5, "golden ratio distances", golden_ratio_distances},
    {6, "unimodular equivariance", unimodular_equivariance},
    {7, "crossing optimum vs grid", crossing_vs_grid},
    {8, "ford circle distance floor", distance_floor},
    {9, "uniqueness scan", uniqueness_to_a_million},
    {10, "definite bound and location", definite_bound_and_location},
};

} // namespace

CheckResult run_criterion(int id) {
    for (const Criterion& cr : criteria) {
        if (cr.id != id) continue;
        Check check;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.fail(std::string("unexpected exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
        return {id, cr.name, check.ok, ms, check.detail};
    }
    throw std::invalid_argument("unknown criterion id");
}

std::vector<CheckResult> run_criteria(const std::vector<int>& ids) {
    std::vector<CheckResult> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(run_criterion(id));
    return out;
}

std::vector<int> suite_ids(const std::string& name) {
    if (name == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    if (name == "tables") return {1, 2};
    if (name == "flips") return {3};
    if (name == "hurwitz") return {4, 5};
    if (name == "equivariance") return {6};
    if (name == "crossing") return {7};
    if (name == "geodesics") return {8};
    if (name == "uniqueness") return {9};
    if (name == "definite") return {10};
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::string> suite_names() {
    return {"all",      "tables",      "flips",    "hurwitz",    "equivariance",
            "crossing", "geodesics",   "uniqueness", "definite"};
}

} // namespace markovgeo
