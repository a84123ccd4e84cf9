#pragma once

// Upper half-plane geometry: horocycles h(p,q), geodesics by their boundary
// endpoints, signed distances with exact log-arguments, Ford circles, and
// location of points inside the Farey tessellation.

#include "markovgeo/exact.hpp"
#include "markovgeo/moebius.hpp"

#include <vector>

namespace markovgeo {

struct HorocycleAtInfinityError : std::domain_error {
    HorocycleAtInfinityError()
        : std::domain_error("horocycle centered at infinity not allowed here") {}
};

struct DegenerateGeodesicError : std::domain_error {
    DegenerateGeodesicError() : std::domain_error("geodesic endpoints coincide") {}
};

// signed distance d = log(arg) with the log-argument kept exact; arg == 0
// encodes -infinity (concentric horocycles, geodesic through the center)
class SignedDistance {
public:
    static SignedDistance from_log_argument(QuadExt arg);   // pre: arg >= 0
    static SignedDistance minus_infinity() { return SignedDistance(QuadExt(0)); }

    bool is_minus_infinity() const { return arg_.is_zero(); }
    const QuadExt& log_argument() const { return arg_; }
    int sign() const;                      // sign of the distance itself
    double to_double() const;              // -inf for the minus-infinity value
    BigFloat to_float(unsigned precision_bits) const;   // pre: finite

    friend int compare(const SignedDistance& a, const SignedDistance& b) {
        return markovgeo::compare(a.arg_, b.arg_);
    }
    friend bool operator==(const SignedDistance& a, const SignedDistance& b) { return compare(a, b) == 0; }
    friend bool operator!=(const SignedDistance& a, const SignedDistance& b) { return compare(a, b) != 0; }
    friend bool operator<(const SignedDistance& a, const SignedDistance& b) { return compare(a, b) < 0; }
    friend bool operator>(const SignedDistance& a, const SignedDistance& b) { return compare(a, b) > 0; }
    friend bool operator<=(const SignedDistance& a, const SignedDistance& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const SignedDistance& a, const SignedDistance& b) { return compare(a, b) >= 0; }

private:
    explicit SignedDistance(QuadExt arg) : arg_(std::move(arg)) {}
    QuadExt arg_;
};

std::ostream& operator<<(std::ostream& os, const SignedDistance& d);

// h(p,q): for q != 0 the circle at p/q with euclidean diameter 1/q^2, for
// q == 0 the horizontal line at height p^2; (p,q) and (-p,-q) are the same
// horocycle, stored with q > 0 or q == 0, p > 0
class Horocycle {
public:
    Horocycle(Rational p, Rational q);          // ZeroVectorError on (0,0)
    explicit Horocycle(const Vec2& v) : Horocycle(v.p, v.q) {}

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    Vec2 vec() const { return {p_, q_}; }

    bool at_infinity() const { return q_.is_zero(); }
    BoundaryPoint center() const;
    Rational euclidean_diameter() const;        // pre: finite center
    Rational height() const;                    // pre: center at infinity
    bool is_ford() const;                       // integer coprime (p,q)

    friend bool operator==(const Horocycle& a, const Horocycle& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Horocycle& a, const Horocycle& b) { return !(a == b); }

private:
    Rational p_, q_;
};

std::ostream& operator<<(std::ostream& os, const Horocycle& h);

// unordered pair of distinct boundary points; stored with finite endpoints
// ascending and infinity last
class Geodesic {
public:
    Geodesic(BoundaryPoint a, BoundaryPoint b);   // DegenerateGeodesicError on a == b
    Geodesic(QuadExt a, QuadExt b) : Geodesic(BoundaryPoint(std::move(a)), BoundaryPoint(std::move(b))) {}

    const BoundaryPoint& e1() const { return e1_; }
    const BoundaryPoint& e2() const { return e2_; }
    bool is_vertical() const { return e2_.is_infinity(); }

    friend bool operator==(const Geodesic& a, const Geodesic& b) {
        return a.e1_ == b.e1_ && a.e2_ == b.e2_;
    }
    friend bool operator!=(const Geodesic& a, const Geodesic& b) { return !(a == b); }

private:
    BoundaryPoint e1_, e2_;
};

std::ostream& operator<<(std::ostream& os, const Geodesic& g);

// isometries act on horocycles through the vector action and on geodesics
// through the boundary action
Horocycle moebius_apply(const Mat2& m, const Horocycle& h);   // pre: |det m| = 1
Geodesic moebius_apply(const Mat2& m, const Geodesic& g);     // pre: det m != 0

// d(h1,h2) = 2 log |p1 q2 - p2 q1|; -infinity iff concentric
SignedDistance dist_horo_horo(const Horocycle& h1, const Horocycle& h2);
Rational horo_determinant(const Horocycle& h1, const Horocycle& h2);   // |p1 q2 - p2 q1|

// d(h, vertical at x) = log(2 q^2 |x - p/q|); -infinity iff x is the center
SignedDistance dist_horo_vertical(const Horocycle& h, const QuadExt& x);   // HorocycleAtInfinityError

// d(h(p,q), g) = log(|f(p,q)| / sqrt(-det f)) for the monic form f with the
// endpoints of g as roots; -infinity iff g ends at the center of h
SignedDistance dist_horo_geodesic(const Horocycle& h, const Geodesic& g);

// d(h(p,q), x+iy) = log(|f(p,q)| / sqrt(det f)) for the definite form with
// z(f) = x+iy; positive outside the horocycle, negative inside
SignedDistance dist_horo_point(const Horocycle& h, const HPoint& z);   // pre: z.y > 0

struct FareyTriangle {
    BoundaryPoint v1, v2, v3;   // finite vertices ascending, infinity last
    friend bool operator==(const FareyTriangle& a, const FareyTriangle& b) {
        return a.v1 == b.v1 && a.v2 == b.v2 && a.v3 == b.v3;
    }
    friend bool operator!=(const FareyTriangle& a, const FareyTriangle& b) { return !(a == b); }
};

std::ostream& operator<<(std::ostream& os, const FareyTriangle& t);

// point sits on a tessellation edge; carries the edge and both triangles
struct OnEdgeError : std::domain_error {
    OnEdgeError(Geodesic e, FareyTriangle a, FareyTriangle b)
        : std::domain_error("point lies on a Farey tessellation edge"),
          edge(std::move(e)), t1(std::move(a)), t2(std::move(b)) {}
    Geodesic edge;
    FareyTriangle t1, t2;
};

// the Farey triangle containing z, by Stern-Brocot descent; OnEdgeError when
// z lies on an edge of the tessellation
FareyTriangle farey_triangle_of(const HPoint& z);   // pre: z.y > 0

// all h(p,q) with 1 <= q <= q_max, gcd(p,q) = 1 and lo <= p/q <= hi, ordered
// by q then p, followed by the line h(1,0)
std::vector<Horocycle> ford_circles(long q_max, const Rational& lo = Rational(0),
                                    const Rational& hi = Rational(1));

} // namespace markovgeo
