#include "markovgeo/teich.hpp"

#include <initializer_list>
#include <stdexcept>

namespace markovgeo {

namespace {

void require_positive(std::initializer_list<const Rational*> weights) {
    for (const Rational* w : weights)
        if (w->sign() <= 0) throw NonPositiveWeightError();
}

} // namespace

ArcLengths arc_lengths(const DecoratedTriangle& t) {
    require_positive({&t.a1, &t.a2, &t.a3});
    return {Rational(t.a1 / (t.a2 * t.a3)),
            Rational(t.a2 / (t.a3 * t.a1)),
            Rational(t.a3 / (t.a1 * t.a2))};
}

Rational ptolemy_flip(const Rational& a, const Rational& b, const Rational& c,
                      const Rational& d, const Rational& e) {
    require_positive({&a, &b, &c, &d, &e});
    return Rational((a * c + b * d) / e);
}

std::ostream& operator<<(std::ostream& os, const TorusTriangulation& T) {
    return os << "(" << T.a << ", " << T.b << ", " << T.c << ")";
}

TorusTriangulation torus_flip(const TorusTriangulation& T, int edge) {
    if (edge < 1 || edge > 3) throw std::invalid_argument("edge index must be 1, 2 or 3");
    TorusTriangulation S = T;
    Rational& x = edge == 1 ? S.a : edge == 2 ? S.b : S.c;
    const Rational& y = edge == 1 ? S.b : S.a;
    const Rational& z = edge == 3 ? S.b : S.c;
    x = ptolemy_flip(y, z, y, z, x);
    return S;
}

Rational horocycle_length(const TorusTriangulation& T) {
    require_positive({&T.a, &T.b, &T.c});
    return Rational(2 * (T.a / (T.b * T.c) + T.b / (T.c * T.a) + T.c / (T.a * T.b)));
}

bool is_markov_decorated(const TorusTriangulation& T) { return horocycle_length(T) == 6; }

QuadExt crossing_radius(const DecoratedTriangle& t) {
    Rational delta = arc_lengths(t).delta();
    // delta^2/4 > c1 c2 = 1/a3^2, so the radicand is positive
    return QuadExt::sqrt_of(Rational(delta * delta / 4 - 1 / (t.a3 * t.a3)));
}

CrossingSolution crossing_optimum(const DecoratedTriangle& t) {
    require_positive({&t.a1, &t.a2, &t.a3});
    Rational s1(t.a1 * t.a1), s2(t.a2 * t.a2), s3(t.a3 * t.a3);
    if (s1 <= s2 + s3 && s2 <= s1 + s3) {
        QuadExt r = crossing_radius(t);
        return {CrossingKind::Bisecting,
                SignedDistance::from_log_argument(QuadExt(1) / r), std::nullopt};
    }
    if (s1 > s2 + s3)
        return {CrossingKind::PerpBisectorOfA2,
                SignedDistance::from_log_argument(QuadExt(t.a2)), std::nullopt};
    return {CrossingKind::PerpBisectorOfA1,
            SignedDistance::from_log_argument(QuadExt(t.a1)), std::nullopt};
}

CrossingSolution crossing_optimum(const DecoratedTriangle& t, const Rational& v1,
                                  const Rational& v2) {
    CrossingGeometry bisecting = crossing_geometry(t, v1, v2);
    CrossingSolution sol = crossing_optimum(t);
    switch (sol.kind) {
    case CrossingKind::Bisecting:
        sol.geometry = bisecting;
        break;
    case CrossingKind::PerpBisectorOfA2:
        sol.geometry = CrossingGeometry{QuadExt(v1), QuadExt(Rational(1 / t.a2))};
        break;
    case CrossingKind::PerpBisectorOfA1:
        sol.geometry = CrossingGeometry{QuadExt(v2), QuadExt(Rational(1 / t.a1))};
        break;
    }
    return sol;
}

CrossingGeometry crossing_geometry(const DecoratedTriangle& t, const Rational& v1,
                                   const Rational& v2) {
    ArcLengths c = arc_lengths(t);
    if (!(v1 < v2)) throw std::invalid_argument("vertices must satisfy v1 < v2");
    if (Rational(v2 - v1) != c.c3)
        throw std::invalid_argument("v2 - v1 must equal the base arc length a3/(a1 a2)");
    Rational x0(v2 + c.c2 - c.delta() / 2);
    return {QuadExt(x0), crossing_radius(t)};
}

Horocycle crossing_horocycle(const DecoratedTriangle& t, const Rational& v1,
                             const Rational& v2, int vertex) {
    crossing_geometry(t, v1, v2);   // validates weights and vertex spacing
    switch (vertex) {
    case 1: return Horocycle(Rational(t.a2 * v1), t.a2);
    case 2: return Horocycle(Rational(t.a1 * v2), t.a1);
    case 3: return Horocycle(1, 0);
    }
    throw std::invalid_argument("vertex index must be 1, 2 or 3");
}

} // namespace markovgeo
