#include "markovgeo/forms.hpp"

#include <map>
#include <ostream>
#include <tuple>

namespace markovgeo {

bool BinaryQuadraticForm::proportional_to(const BinaryQuadraticForm& g) const {
    bool self_zero = A.is_zero() && B.is_zero() && C.is_zero();
    bool g_zero = g.A.is_zero() && g.B.is_zero() && g.C.is_zero();
    if (self_zero || g_zero) return false;
    return A * g.B == B * g.A && A * g.C == C * g.A && B * g.C == C * g.B;
}

std::ostream& operator<<(std::ostream& os, const BinaryQuadraticForm& f) {
    return os << "[" << f.A << "," << Rational(2 * f.B) << "," << f.C << "]";
}

std::pair<BoundaryPoint, BoundaryPoint> roots(const BinaryQuadraticForm& f) {
    if (!f.is_indefinite()) throw NotIndefiniteError();
    if (f.A.is_zero()) {
        // f = q(2Bp + Cq) with B != 0
        return {BoundaryPoint(QuadExt(Rational(-f.C / (2 * f.B)))), BoundaryPoint::infinity()};
    }
    QuadExt s = QuadExt::sqrt_of(Rational(-f.det()));
    QuadExt a(f.A), b(f.B);
    return {BoundaryPoint((-b + s) / a), BoundaryPoint((-b - s) / a)};
}

Geodesic geodesic_of(const BinaryQuadraticForm& f) {
    auto r = roots(f);
    return Geodesic(r.first, r.second);
}

BinaryQuadraticForm form_of(const Geodesic& g) {
    if (g.is_vertical()) {
        const QuadExt& x = g.e1().value();
        if (!x.is_rational()) throw NonConjugateEndpointsError();
        return {Rational(0), Rational(1, 2), Rational(-x.rat())};
    }
    const QuadExt& u = g.e1().value();
    const QuadExt& v = g.e2().value();
    if (u.is_rational() && v.is_rational())
        return {Rational(1), Rational(-(u.rat() + v.rat()) / 2), Rational(u.rat() * v.rat())};
    if (u.conjugate() == v)
        return {Rational(1), Rational(-u.rat()), u.norm()};
    throw NonConjugateEndpointsError();
}

BinaryQuadraticForm act(const BinaryQuadraticForm& f, const Mat2& m) {
    Rational A2 = f(m.a, m.c);
    Rational C2 = f(m.b, m.d);
    Rational B2 = f.A * m.a * m.b + f.B * (m.a * m.d + m.b * m.c) + f.C * m.c * m.d;
    return {A2, B2, C2};
}

namespace {

// integer multiple L*f = (a, b, c) with f = A p^2 + 2B pq + C q^2 and b the
// full middle coefficient
struct IntegerForm {
    Integer a, b, c, L;
};

IntegerForm integerize(const BinaryQuadraticForm& f) {
    Integer L = lcm(lcm(denominator(f.A), denominator(Rational(2 * f.B))), denominator(f.C));
    Rational scale(L);
    return {numerator(Rational(f.A * scale)), numerator(Rational(2 * f.B * scale)),
            numerator(Rational(f.C * scale)), L};
}

LatticeMin finish(const BinaryQuadraticForm& f, Rational min_value,
                  std::pair<Integer, Integer> witness) {
    QuadExt m_exact = QuadExt(min_value) / QuadExt::sqrt_of(Rational(abs(f.det())));
    double m_float = to_float(m_exact, 64).to_double();
    return {std::move(min_value), std::move(witness), std::move(m_exact), m_float};
}

} // namespace

LatticeMin lattice_min(const BinaryQuadraticForm& f, long search_bound) {
    if (f.is_degenerate()) throw DegenerateFormError();
    if (search_bound < 1) throw std::invalid_argument("search_bound must be >= 1");
    IntegerForm g = integerize(f);
    bool have = false;
    Integer best;
    std::pair<Integer, Integer> at;
    auto consider = [&](const Integer& p, const Integer& q) {
        Integer val = abs(g.a * p * p + g.b * p * q + g.c * q * q);
        if (!have || val < best) {
            have = true;
            best = val;
            at = {p, q};
        }
    };
    for (Integer p = 1; p <= search_bound; ++p) consider(p, 0);
    for (Integer q = 1; q <= search_bound; ++q)
        for (Integer p = -search_bound; p <= search_bound; ++p) consider(p, q);
    return finish(f, Rational(best, g.L), at);
}

LatticeMin definite_min(const BinaryQuadraticForm& f) {
    if (!f.is_definite()) throw NotDefiniteError();
    BinaryQuadraticForm g = f;
    if (g.A.sign() < 0) g = {-g.A, -g.B, -g.C};   // det > 0 forces A != 0
    Mat2 M = Mat2::identity();
    // Gauss reduction to |2B| <= A <= C; each swap strictly shrinks A
    for (;;) {
        if (abs(Rational(2 * g.B)) > g.A) {
            Integer t = rational_round(Rational(g.B / g.A));
            Mat2 shear{1, Rational(-t), 0, 1};
            g = act(g, shear);
            M = M * shear;
        }
        if (g.A > g.C) {
            Mat2 swap{0, 1, 1, 0};
            g = act(g, swap);
            M = M * swap;
            continue;
        }
        break;
    }
    // minimum of a reduced positive form is its leading coefficient
    return finish(f, g.A, {numerator(M.a), numerator(M.c)});
}

LatticeMin indefinite_min(const BinaryQuadraticForm& f) {
    auto r = roots(f);   // throws NotIndefiniteError when det >= 0
    if (r.second.is_infinity())
        return finish(f, Rational(0), {Integer(1), Integer(0)});
    if (r.first.value().is_rational()) {
        Rational root = r.first.value().rat();
        return finish(f, Rational(0), {numerator(root), denominator(root)});
    }
    IntegerForm g = integerize(f);
    Integer D = g.b * g.b - 4 * g.a * g.c;   // > 0 and not a square here
    Integer s = isqrt_floor(D);
    Mat2 M = Mat2::identity();
    Integer best = abs(g.a);
    std::pair<Integer, Integer> at{Integer(1), Integer(0)};
    std::map<std::tuple<Integer, Integer, Integer>, bool> seen;
    Integer a = g.a, b = g.b, c = g.c;
    while (!seen.count({a, b, c})) {
        seen[{a, b, c}] = true;
        // rho step: next form (c, b', (b'^2 - D)/(4c)) with b' = -b (mod 2|c|)
        // in the interval (sqrt(D) - 2|c|, sqrt(D))
        Integer twoc = 2 * abs(c);
        Integer j = floor_div(s + b, twoc);
        Integer bp = -b + twoc * j;
        Integer k = c.sign() > 0 ? j : Integer(-j);
        Mat2 step{0, -1, 1, Rational(k)};
        M = M * step;
        Integer cp = (bp * bp - D) / (4 * c);
        a = c;
        b = bp;
        c = cp;
        if (abs(a) < best) {
            best = abs(a);
            at = {numerator(M.a), numerator(M.c)};
        }
    }
    return finish(f, Rational(best, g.L), at);
}

HPoint definite_point(const BinaryQuadraticForm& f) {
    if (!f.is_definite()) throw NotDefiniteError();
    Rational A = f.A, B = f.B;
    if (A.sign() < 0) {
        A = -A;
        B = -B;
    }
    return {QuadExt(Rational(-B / A)), QuadExt::sqrt_of(f.det()) / QuadExt(A)};
}

SignedDistance dist_horo_point(const Horocycle& h, const BinaryQuadraticForm& f) {
    if (!f.is_definite()) throw NotDefiniteError();
    Rational val = abs(f(h.p(), h.q()));
    return SignedDistance::from_log_argument(QuadExt(val) / QuadExt::sqrt_of(f.det()));
}

} // namespace markovgeo
