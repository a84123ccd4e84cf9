#include "markovgeo/teich.hpp"
#include "markovgeo/forms.hpp"
#include "markovgeo/markov.hpp"

#include "crossing_oracle.hpp"
#include "testutil.hpp"

#include <doctest.h>

#include <cmath>

using namespace markovgeo;

namespace {

DecoratedTriangle triangle_of(const MarkovTriple& t) {
    return {Rational(t.a), Rational(t.b), Rational(t.c)};
}

TorusTriangulation torus_of(const MarkovTriple& t) {
    return {Rational(t.a), Rational(t.b), Rational(t.c)};
}

Rational rational_arg(const SignedDistance& d) {
    REQUIRE(d.log_argument().is_rational());
    return d.log_argument().rat();
}

} // namespace

TEST_SUITE("teich") {

TEST_CASE("arc lengths of decorated triangles") {
    ArcLengths unit = arc_lengths({1, 1, 1});
    CHECK(unit.c1 == 1);
    CHECK(unit.c2 == 1);
    CHECK(unit.c3 == 1);
    CHECK(unit.delta() == 3);

    ArcLengths two = arc_lengths({1, 1, 2});
    CHECK(two.c1 == Rational(1, 2));
    CHECK(two.c2 == Rational(1, 2));
    CHECK(two.c3 == 2);
    CHECK(two.delta() == 3);

    ArcLengths mixed = arc_lengths({2, 3, 6});
    CHECK(mixed.c1 == Rational(1, 9));
    CHECK(mixed.c2 == Rational(1, 4));
    CHECK(mixed.c3 == 1);

    CHECK_THROWS_AS(arc_lengths({0, 1, 1}), NonPositiveWeightError);
    CHECK_THROWS_AS(arc_lengths({1, -2, 1}), NonPositiveWeightError);
}

TEST_CASE("ptolemy flip of a quadrilateral diagonal") {
    CHECK(ptolemy_flip(1, 1, 1, 1, 1) == 2);
    CHECK(ptolemy_flip(2, 3, 2, 3, 1) == 13);
    // torus quadrilateral (b, c, b, c) with diagonal a
    CHECK(ptolemy_flip(2, 5, 2, 5, 1) == 29);
    CHECK(Rational(ptolemy_flip(2, 5, 2, 5, 1) * 1) == Rational(2 * 2 + 5 * 5));
    CHECK(ptolemy_flip(Rational(1, 2), 3, Rational(1, 2), 3, Rational(5, 4)) ==
          Rational(37, 5));
    CHECK_THROWS_AS(ptolemy_flip(1, 1, 1, 1, 0), NonPositiveWeightError);
}

TEST_CASE("torus flips replace one edge weight") {
    TorusTriangulation root{1, 1, 1};
    CHECK(torus_flip(root, 1) == TorusTriangulation{2, 1, 1});
    CHECK(torus_flip(root, 2) == TorusTriangulation{1, 2, 1});
    CHECK(torus_flip(root, 3) == TorusTriangulation{1, 1, 2});

    TorusTriangulation t125{1, 2, 5};
    CHECK(torus_flip(t125, 1) == TorusTriangulation{29, 2, 5});
    CHECK(torus_flip(t125, 2) == TorusTriangulation{1, 13, 5});
    CHECK(torus_flip(t125, 3) == TorusTriangulation{1, 2, 1});

    CHECK_THROWS_AS(torus_flip(root, 0), std::invalid_argument);
    CHECK_THROWS_AS(torus_flip(root, 4), std::invalid_argument);

    // flips are involutions for arbitrary positive weights
    testutil::Rng rng(41);
    for (int i = 0; i < 30; ++i) {
        TorusTriangulation T{testutil::rand_positive_rational(rng, 9, 5),
                             testutil::rand_positive_rational(rng, 9, 5),
                             testutil::rand_positive_rational(rng, 9, 5)};
        for (int edge : {1, 2, 3})
            CHECK(torus_flip(torus_flip(T, edge), edge) == T);
    }
}

TEST_CASE("flips agree with the triple involutions") {
    for (const MarkovTriple& t : enumerate_triples(433)) {
        TorusTriangulation T = torus_of(t);
        CHECK(is_markov_decorated(T));
        for (int k : {1, 2, 3}) {
            MarkovTriple s = involution(t, k);
            TorusTriangulation S = torus_flip(T, k);
            CHECK(S == torus_of(s));
            CHECK(is_markov_decorated(S));
        }
    }
}

TEST_CASE("horocycle length detects markov decorations") {
    CHECK(horocycle_length({1, 1, 1}) == 6);
    CHECK(horocycle_length({1, 2, 5}) == 6);
    CHECK(horocycle_length({1, 1, 3}) == Rational(22, 3));
    CHECK_FALSE(is_markov_decorated({2, 2, 2}));

    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b)
            for (long c = 1; c <= 6; ++c) {
                bool six = horocycle_length({Rational(a), Rational(b), Rational(c)}) == 6;
                CHECK(six == is_markov(Integer(a), Integer(b), Integer(c)));
            }
}

TEST_CASE("arc length sum is 3 on markov decorations") {
    for (const MarkovTriple& t : enumerate_triples(433))
        CHECK(arc_lengths(triangle_of(t)).delta() == 3);
}

TEST_CASE("crossing radius reproduces the triple's r") {
    for (const MarkovTriple& t : enumerate_triples(433))
        CHECK(crossing_radius(triangle_of(t)) == markov_r(t));
}

TEST_CASE("crossing optimum classification") {
    CrossingSolution farey = crossing_optimum({1, 1, 1});
    CHECK(farey.kind == CrossingKind::Bisecting);
    CHECK(farey.distance.log_argument() == QuadExt(0, Rational(2, 5), 5));
    CHECK(farey.distance.to_double() ==
          doctest::Approx(-std::log(std::sqrt(5.0) / 2)).epsilon(1e-12));
    CHECK_FALSE(farey.geometry.has_value());

    CrossingSolution two = crossing_optimum({1, 1, 2});
    CHECK(two.kind == CrossingKind::Bisecting);
    CHECK(two.distance.log_argument() == QuadExt(0, Rational(1, 2), 2));
    CHECK(two.distance.to_double() ==
          doctest::Approx(-0.5 * std::log(2.0)).epsilon(1e-12));

    CrossingSolution long1 = crossing_optimum({3, 1, 1});
    CHECK(long1.kind == CrossingKind::PerpBisectorOfA2);
    CHECK(long1.distance.log_argument() == QuadExt(1));
    CHECK(long1.distance.sign() == 0);

    CrossingSolution long2 = crossing_optimum({1, 3, 1});
    CHECK(long2.kind == CrossingKind::PerpBisectorOfA1);
    CHECK(long2.distance.log_argument() == QuadExt(1));

    CrossingSolution wide = crossing_optimum({5, 2, 1});
    CHECK(wide.kind == CrossingKind::PerpBisectorOfA2);
    CHECK(rational_arg(wide.distance) == 2);

    // boundary a1^2 = a2^2 + a3^2: both solutions coincide
    CrossingSolution edge = crossing_optimum({5, 4, 3});
    CHECK(edge.kind == CrossingKind::Bisecting);
    CHECK(rational_arg(edge.distance) == 4);   // equals log a2

    CrossingSolution edge2 = crossing_optimum({4, 5, 3});
    CHECK(edge2.kind == CrossingKind::Bisecting);
    CHECK(rational_arg(edge2.distance) == 4);  // equals log a1

    CHECK_THROWS_AS(crossing_optimum({1, 0, 1}), NonPositiveWeightError);

    testutil::Rng rng(53);
    for (int i = 0; i < 40; ++i) {
        DecoratedTriangle t{testutil::rand_positive_rational(rng, 9, 4),
                            testutil::rand_positive_rational(rng, 9, 4),
                            testutil::rand_positive_rational(rng, 9, 4)};
        Rational s1(t.a1 * t.a1), s2(t.a2 * t.a2), s3(t.a3 * t.a3);
        CrossingSolution sol = crossing_optimum(t);
        if (s1 <= s2 + s3 && s2 <= s1 + s3) {
            CHECK(sol.kind == CrossingKind::Bisecting);
            CHECK(sol.distance.log_argument() * crossing_radius(t) == QuadExt(1));
        } else if (s1 > s2 + s3) {
            CHECK(sol.kind == CrossingKind::PerpBisectorOfA2);
            CHECK(rational_arg(sol.distance) == t.a2);
        } else {
            CHECK(sol.kind == CrossingKind::PerpBisectorOfA1);
            CHECK(rational_arg(sol.distance) == t.a1);
        }
    }
}

TEST_CASE("crossing geometry on concrete vertices") {
    CrossingGeometry farey = crossing_geometry({1, 1, 1}, 0, 1);
    CHECK(farey.x0 == QuadExt(Rational(1, 2)));
    CHECK(farey.r == QuadExt(0, Rational(1, 2), 5));

    CrossingGeometry two = crossing_geometry({1, 1, 2}, -1, 1);
    CHECK(two.x0 == QuadExt(0));
    CHECK(two.r == QuadExt(0, 1, 2));

    CrossingGeometry five = crossing_geometry({1, 2, 5}, Rational(-1, 2), 2);
    CHECK(five.x0 == QuadExt(Rational(9, 10)));
    CHECK(five.r == QuadExt(0, Rational(1, 10), 221));

    CHECK_THROWS_AS(crossing_geometry({1, 1, 1}, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(crossing_geometry({1, 1, 1}, 0, 2), std::invalid_argument);

    // realized on the vertices p1/b and p2/a, the bisecting geodesic has the
    // ends of the triple's geodesic
    for (const MarkovTriple& t : enumerate_triples(433)) {
        auto [p1, p2] = solve_p1p2(t);
        Rational v1(p1, t.b), v2(p2, t.a);
        CrossingGeometry geom = crossing_geometry(triangle_of(t), v1, v2);
        CHECK(geom.x0 == QuadExt(markov_x0(t)));
        CHECK(geom.r == markov_r(t));
        Geodesic realized(geom.x0 - geom.r, geom.x0 + geom.r);
        CHECK(realized == geodesic_of(markov_form(t)));

        CrossingSolution sol = crossing_optimum(triangle_of(t), v1, v2);
        CHECK(sol.kind == CrossingKind::Bisecting);
        REQUIRE(sol.geometry.has_value());
        CHECK(sol.geometry->x0 == geom.x0);
        CHECK(sol.geometry->r == geom.r);
    }
}

TEST_CASE("perpendicular bisector geometry and distances") {
    DecoratedTriangle t{3, 1, 1};
    Rational v1(0), v2(1, 3);
    CrossingSolution sol = crossing_optimum(t, v1, v2);
    CHECK(sol.kind == CrossingKind::PerpBisectorOfA2);
    REQUIRE(sol.geometry.has_value());
    CHECK(sol.geometry->x0 == QuadExt(0));
    CHECK(sol.geometry->r == QuadExt(1));

    Geodesic g(sol.geometry->x0 - sol.geometry->r, sol.geometry->x0 + sol.geometry->r);
    Horocycle h1 = crossing_horocycle(t, v1, v2, 1);
    Horocycle h2 = crossing_horocycle(t, v1, v2, 2);
    Horocycle h3 = crossing_horocycle(t, v1, v2, 3);
    CHECK(h1 == Horocycle(0, 1));
    CHECK(h2 == Horocycle(1, 3));
    CHECK(h3 == Horocycle(1, 0));

    // minimal distance log a2 = 0 attained at h1 and h3, exceeded at h2
    CHECK(dist_horo_geodesic(h1, g).log_argument() == QuadExt(1));
    CHECK(dist_horo_geodesic(h3, g).log_argument() == QuadExt(1));
    CHECK(dist_horo_geodesic(h2, g).log_argument() == QuadExt(8));

    DecoratedTriangle wide{5, 2, 1};
    Rational w1(0), w2(1, 10);
    CrossingSolution wsol = crossing_optimum(wide, w1, w2);
    REQUIRE(wsol.geometry.has_value());
    CHECK(wsol.geometry->x0 == QuadExt(0));
    CHECK(wsol.geometry->r == QuadExt(Rational(1, 2)));
    Geodesic wg(wsol.geometry->x0 - wsol.geometry->r, wsol.geometry->x0 + wsol.geometry->r);
    CHECK(dist_horo_geodesic(crossing_horocycle(wide, w1, w2, 1), wg).log_argument() ==
          QuadExt(2));
    CHECK(dist_horo_geodesic(crossing_horocycle(wide, w1, w2, 3), wg).log_argument() ==
          QuadExt(2));
    CHECK(dist_horo_geodesic(crossing_horocycle(wide, w1, w2, 2), wg).log_argument() ==
          QuadExt(12));
}

TEST_CASE("u relation holds exactly for crossing geodesics") {
    testutil::Rng rng(67);
    for (int i = 0; i < 60; ++i) {
        DecoratedTriangle t{testutil::rand_positive_rational(rng, 8, 3),
                            testutil::rand_positive_rational(rng, 8, 3),
                            testutil::rand_positive_rational(rng, 8, 3)};
        ArcLengths c = arc_lengths(t);
        Rational v1 = testutil::rand_rational(rng, 4, 3);
        Rational v2(v1 + c.c3);
        Rational e1(v1 - testutil::rand_positive_rational(rng, 5, 3));
        Rational e2(v2 + testutil::rand_positive_rational(rng, 5, 3));
        Geodesic g{QuadExt(e1), QuadExt(e2)};

        Rational u1 = rational_arg(dist_horo_geodesic(crossing_horocycle(t, v1, v2, 1), g));
        Rational u2 = rational_arg(dist_horo_geodesic(crossing_horocycle(t, v1, v2, 2), g));
        Rational u3 = rational_arg(dist_horo_geodesic(crossing_horocycle(t, v1, v2, 3), g));

        Rational lhs(c.c1 * u1 + c.c2 * u2 + c.c3 * u3);
        CHECK(Rational(lhs * lhs - 4 * c.c1 * c.c2 * u1 * u2 - 4) == 0);
    }
}

TEST_CASE("u relation residual vanishes at the optimum") {
    testutil::Rng rng(71);
    for (int i = 0; i < 40; ++i) {
        DecoratedTriangle t{testutil::rand_positive_rational(rng, 8, 3),
                            testutil::rand_positive_rational(rng, 8, 3),
                            testutil::rand_positive_rational(rng, 8, 3)};
        ArcLengths c = arc_lengths(t);
        QuadExt u = QuadExt(1) / crossing_radius(t);
        QuadExt lhs = QuadExt(c.delta()) * u;
        CHECK(lhs * lhs - QuadExt(Rational(4 * c.c1 * c.c2)) * u * u - QuadExt(4) ==
              QuadExt(0));

        // the same residual computed in 256-bit floats
        BigFloat uf = to_float(u, 256);
        BigFloat sum = BigFloat::of(c.delta(), 256) * uf;
        BigFloat residual = sum * sum -
                            BigFloat::of(Rational(4 * c.c1 * c.c2), 256) * uf * uf -
                            BigFloat::of(Rational(4), 256);
        CHECK(abs(residual) < BigFloat::of(1e-30, 256));
    }
}

TEST_CASE("grid oracle confirms the classified optimum") {
    testutil::Rng rng(2718);
    std::vector<MarkovTriple> triples = enumerate_triples(1000);
    for (int i = 0; i < 50; ++i) {
        DecoratedTriangle t{0, 0, 0};
        if (i % 2 == 0) {
            const MarkovTriple& m = triples[size_t(i / 2) % triples.size()];
            t = triangle_of(m);
        } else {
            for (;;) {
                t = {testutil::rand_positive_rational(rng, 9, 4),
                     testutil::rand_positive_rational(rng, 9, 4),
                     testutil::rand_positive_rational(rng, 9, 4)};
                Rational s1(t.a1 * t.a1), s2(t.a2 * t.a2), s3(t.a3 * t.a3);
                Rational gap1(s1 - s2 - s3), gap2(s2 - s1 - s3);
                Rational margin((s1 + s2 + s3) / 20);
                if (abs(gap1) > margin && abs(gap2) > margin) break;
            }
        }
        ArcLengths c = arc_lengths(t);
        Rational v1 = testutil::rand_rational(rng, 3, 2);
        Rational v2(v1 + c.c3);

        CrossingSolution sol = crossing_optimum(t, v1, v2);
        REQUIRE(sol.geometry.has_value());
        double expect_value = sol.distance.to_double();
        double expect_e1 = to_float(sol.geometry->x0 - sol.geometry->r, 64).to_double();
        double expect_e2 = to_float(sol.geometry->x0 + sol.geometry->r, 64).to_double();

        testutil::CrossingOracle found = testutil::crossing_grid_oracle(
            testutil::approx(t.a1), testutil::approx(t.a2), testutil::approx(t.a3),
            testutil::approx(v1), testutil::approx(v2));

        CHECK(std::fabs(found.value - expect_value) <= 1e-6);
        CHECK(std::fabs(found.e1 - expect_e1) <= 1e-4);
        CHECK(std::fabs(found.e2 - expect_e2) <= 1e-4);
    }
}

} // TEST_SUITE
