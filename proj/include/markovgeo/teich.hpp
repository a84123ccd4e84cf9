#pragma once

// Decorated ideal triangles and once-punctured-torus triangulations:
// lambda-length weights, horocyclic arc lengths, Ptolemy flips, and the
// geodesic crossing two designated legs that stays farthest from the
// decorating horocycles.

#include "markovgeo/exact.hpp"
#include "markovgeo/hypgeo.hpp"

#include <optional>

namespace markovgeo {

struct NonPositiveWeightError : std::domain_error {
    NonPositiveWeightError() : std::domain_error("weights must be positive") {}
};

// sides a1, a2 are the legs, a3 the base; weights are lambda-lengths
struct DecoratedTriangle {
    Rational a1, a2, a3;
};

// c_k = a_k/(a_i a_j), the length of the horocyclic arc cut off at the
// vertex opposite side k
struct ArcLengths {
    Rational c1, c2, c3;
    Rational delta() const { return c1 + c2 + c3; }
};
ArcLengths arc_lengths(const DecoratedTriangle& t);   // NonPositiveWeightError

// new diagonal of the quadrilateral with sides a, b, c, d and diagonal e
Rational ptolemy_flip(const Rational& a, const Rational& b, const Rational& c,
                      const Rational& d, const Rational& e);   // NonPositiveWeightError

// the three edges of an ideal triangulation of the once punctured torus,
// indexed 1, 2, 3; a flip replaces the weight of the named edge in place,
// so flip sequences replay deterministically
struct TorusTriangulation {
    Rational a, b, c;

    friend bool operator==(const TorusTriangulation& s, const TorusTriangulation& t) {
        return s.a == t.a && s.b == t.b && s.c == t.c;
    }
    friend bool operator!=(const TorusTriangulation& s, const TorusTriangulation& t) {
        return !(s == t);
    }
};

std::ostream& operator<<(std::ostream& os, const TorusTriangulation& T);

// both triangles of the torus triangulation share all three edges, so the
// flipped quadrilateral has sides (b, c, b, c) and diagonal a
TorusTriangulation torus_flip(const TorusTriangulation& T, int edge);   // invalid_argument

// total length of the horocycle at the puncture, 2(a/bc + b/ca + c/ab)
Rational horocycle_length(const TorusTriangulation& T);   // NonPositiveWeightError

// horocycle length 6, equivalently a^2 + b^2 + c^2 = 3abc
bool is_markov_decorated(const TorusTriangulation& T);

// radius of the geodesic bisecting both legs when the triangle is drawn
// with the base vertices on the real line and h3 at height 1
QuadExt crossing_radius(const DecoratedTriangle& t);   // NonPositiveWeightError

// center and radius; the ends are x0 +- r
struct CrossingGeometry {
    QuadExt x0, r;
};

enum class CrossingKind { Bisecting, PerpBisectorOfA1, PerpBisectorOfA2 };

struct CrossingSolution {
    CrossingKind kind;
    SignedDistance distance;
    std::optional<CrossingGeometry> geometry;   // set when vertices are given
};

// the geodesic crossing both legs that maximizes the minimal signed
// distance to the three horocycles: the bisecting geodesic at distance
// -log r when a1^2 <= a2^2 + a3^2 and a2^2 <= a1^2 + a3^2 (ties included),
// else the perpendicular bisector of the shorter leg at distance log a_k
CrossingSolution crossing_optimum(const DecoratedTriangle& t);   // NonPositiveWeightError

// same, realized on vertices v1 < v2, v3 = infinity with h3 at height 1;
// fills in the geometry of the optimal geodesic
CrossingSolution crossing_optimum(const DecoratedTriangle& t, const Rational& v1,
                                  const Rational& v2);   // invalid_argument

// ends of the geodesic bisecting both legs, x0 = v2 + a2/(a3 a1) - delta/2;
// requires v2 - v1 = a3/(a1 a2), the base arc length on h3
CrossingGeometry crossing_geometry(const DecoratedTriangle& t, const Rational& v1,
                                   const Rational& v2);   // invalid_argument

// the decorating horocycles of the realized triangle: h1 at v1, h2 at v2,
// h3 the height-1 horocycle at infinity
Horocycle crossing_horocycle(const DecoratedTriangle& t, const Rational& v1,
                             const Rational& v2, int vertex);   // invalid_argument

} // namespace markovgeo
