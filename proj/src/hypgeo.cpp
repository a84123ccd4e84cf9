#include "markovgeo/hypgeo.hpp"

#include <limits>
#include <ostream>

namespace markovgeo {

SignedDistance SignedDistance::from_log_argument(QuadExt arg) {
    if (arg.sign() < 0) throw std::domain_error("log-argument must be nonnegative");
    return SignedDistance(std::move(arg));
}

int SignedDistance::sign() const {
    if (is_minus_infinity()) return -1;
    return markovgeo::compare(arg_, QuadExt(1));
}

double SignedDistance::to_double() const {
    if (is_minus_infinity()) return -std::numeric_limits<double>::infinity();
    return log(markovgeo::to_float(arg_, 96)).to_double();
}

BigFloat SignedDistance::to_float(unsigned precision_bits) const {
    if (is_minus_infinity()) throw std::domain_error("distance is minus infinity");
    return log(markovgeo::to_float(arg_, precision_bits + 32)).rounded(precision_bits);
}

std::ostream& operator<<(std::ostream& os, const SignedDistance& d) {
    if (d.is_minus_infinity()) return os << "-inf";
    return os << "log(" << d.log_argument() << ")";
}

Horocycle::Horocycle(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.is_zero() && q_.is_zero()) throw ZeroVectorError();
    if (q_.sign() < 0 || (q_.is_zero() && p_.sign() < 0)) {
        p_ = -p_;
        q_ = -q_;
    }
}

BoundaryPoint Horocycle::center() const {
    if (q_.is_zero()) return BoundaryPoint::infinity();
    return BoundaryPoint(QuadExt(p_ / q_));
}

Rational Horocycle::euclidean_diameter() const {
    if (q_.is_zero()) throw HorocycleAtInfinityError();
    return Rational(1) / (q_ * q_);
}

Rational Horocycle::height() const {
    if (!q_.is_zero()) throw std::domain_error("horocycle has a finite center");
    return p_ * p_;
}

bool Horocycle::is_ford() const {
    if (denominator(p_) != 1 || denominator(q_) != 1) return false;
    return gcd(numerator(p_), numerator(q_)) == 1;
}

std::ostream& operator<<(std::ostream& os, const Horocycle& h) {
    return os << "h(" << h.p() << "," << h.q() << ")";
}

Geodesic::Geodesic(BoundaryPoint a, BoundaryPoint b) : e1_(std::move(a)), e2_(std::move(b)) {
    if (e1_ == e2_) throw DegenerateGeodesicError();
    bool flip = e1_.is_infinity() ||
                (!e2_.is_infinity() && compare(e2_.value(), e1_.value()) < 0);
    if (flip) std::swap(e1_, e2_);
}

std::ostream& operator<<(std::ostream& os, const Geodesic& g) {
    return os << "(" << g.e1() << ", " << g.e2() << ")";
}

Horocycle moebius_apply(const Mat2& m, const Horocycle& h) {
    return Horocycle(act_on_vector(m, h.vec()));
}

Geodesic moebius_apply(const Mat2& m, const Geodesic& g) {
    return Geodesic(moebius_apply(m, g.e1()), moebius_apply(m, g.e2()));
}

SignedDistance dist_horo_horo(const Horocycle& h1, const Horocycle& h2) {
    Rational det = h1.p() * h2.q() - h2.p() * h1.q();
    return SignedDistance::from_log_argument(QuadExt(Rational(det * det)));
}

Rational horo_determinant(const Horocycle& h1, const Horocycle& h2) {
    Rational det = h1.p() * h2.q() - h2.p() * h1.q();
    return abs(det);
}

SignedDistance dist_horo_vertical(const Horocycle& h, const QuadExt& x) {
    if (h.at_infinity()) throw HorocycleAtInfinityError();
    Rational two_q2 = 2 * h.q() * h.q();
    QuadExt arg = (QuadExt(two_q2) * x - QuadExt(Rational(2 * h.p() * h.q()))).abs();
    return SignedDistance::from_log_argument(arg);
}

SignedDistance dist_horo_geodesic(const Horocycle& h, const Geodesic& g) {
    QuadExt p(h.p()), q(h.q());
    if (g.is_vertical()) {
        // monic form q(p - xq) with roots x and infinity; sqrt(-det) = 1/2
        QuadExt arg = QuadExt(2) * (q * (p - g.e1().value() * q)).abs();
        return SignedDistance::from_log_argument(arg);
    }
    const QuadExt& e1 = g.e1().value();
    const QuadExt& e2 = g.e2().value();
    // |f(p,q)| / sqrt(-det f) for the monic f = (p - e1 q)(p - e2 q),
    // where sqrt(-det f) = |e1 - e2| / 2
    QuadExt num = QuadExt(2) * ((p - e1 * q) * (p - e2 * q)).abs();
    return SignedDistance::from_log_argument(num / (e1 - e2).abs());
}

SignedDistance dist_horo_point(const Horocycle& h, const HPoint& z) {
    if (z.y.sign() <= 0) throw std::domain_error("point not in the upper half-plane");
    QuadExt p(h.p()), q(h.q());
    // monic definite form with root z: f(p,q) = (p - xq)^2 + (yq)^2, det = y^2
    QuadExt u = p - z.x * q;
    QuadExt v = z.y * q;
    return SignedDistance::from_log_argument((u * u + v * v) / z.y);
}

namespace {

BoundaryPoint bp(const Rational& r) { return BoundaryPoint(QuadExt(r)); }

Rational mediant(const Rational& a, const Rational& b) {
    return Rational(Integer(numerator(a) + numerator(b)), Integer(denominator(a) + denominator(b)));
}

} // namespace

FareyTriangle farey_triangle_of(const HPoint& z) {
    if (z.y.sign() <= 0) throw std::domain_error("point not in the upper half-plane");
    QuadExt y2 = z.y * z.y;
    // < 0 inside the open half-disc over [u,v], 0 on the bounding semicircle
    auto side = [&](const Rational& u, const Rational& v) {
        return ((z.x - QuadExt(u)) * (z.x - QuadExt(v)) + y2).sign();
    };
    Integer n = z.x.floor();
    if (z.x == QuadExt(Rational(n))) {
        // on the vertical edge from n to infinity
        Geodesic edge(bp(Rational(n)), BoundaryPoint::infinity());
        FareyTriangle left{bp(Rational(n - 1)), bp(Rational(n)), BoundaryPoint::infinity()};
        FareyTriangle right{bp(Rational(n)), bp(Rational(n + 1)), BoundaryPoint::infinity()};
        throw OnEdgeError(edge, left, right);
    }
    Rational u(n), v(Integer(n + 1));
    int s = side(u, v);
    if (s > 0) return {bp(u), bp(v), BoundaryPoint::infinity()};
    if (s == 0) {
        FareyTriangle above{bp(u), bp(v), BoundaryPoint::infinity()};
        FareyTriangle below{bp(u), bp(mediant(u, v)), bp(v)};
        throw OnEdgeError(Geodesic(bp(u), bp(v)), above, below);
    }
    // invariant: z strictly inside the half-disc over [u, v], u and v Farey
    // neighbors; each step shrinks the interval, which must eventually get
    // shorter than the height of z
    for (;;) {
        Rational m = mediant(u, v);
        int s1 = side(u, m);
        if (s1 < 0) { v = m; continue; }
        int s2 = side(m, v);
        if (s2 < 0) { u = m; continue; }
        if (s1 == 0) {
            FareyTriangle outer{bp(u), bp(m), bp(v)};
            FareyTriangle inner{bp(u), bp(mediant(u, m)), bp(m)};
            throw OnEdgeError(Geodesic(bp(u), bp(m)), outer, inner);
        }
        if (s2 == 0) {
            FareyTriangle outer{bp(u), bp(m), bp(v)};
            FareyTriangle inner{bp(m), bp(mediant(m, v)), bp(v)};
            throw OnEdgeError(Geodesic(bp(m), bp(v)), outer, inner);
        }
        return {bp(u), bp(m), bp(v)};
    }
}

std::ostream& operator<<(std::ostream& os, const FareyTriangle& t) {
    return os << "(" << t.v1 << ", " << t.v2 << ", " << t.v3 << ")";
}

std::vector<Horocycle> ford_circles(long q_max, const Rational& lo, const Rational& hi) {
    if (q_max < 1) throw std::invalid_argument("q_max must be >= 1");
    if (lo > hi) throw std::invalid_argument("empty window");
    std::vector<Horocycle> out;
    for (long q = 1; q <= q_max; ++q) {
        Integer pmin = rational_ceil(Rational(lo * q));
        Integer pmax = rational_floor(Rational(hi * q));
        for (Integer p = pmin; p <= pmax; ++p)
            if (gcd(p, Integer(q)) == 1) out.emplace_back(Rational(p), Rational(q));
    }
    out.emplace_back(Rational(1), Rational(0));
    return out;
}

} // namespace markovgeo
