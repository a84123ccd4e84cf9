#pragma once

// GL2 actions: exact 2x2 matrices, fractional-linear maps on the boundary
// R u {inf}, the vector action carrying horocycles, equivalence of quadratic
// irrationals by continued-fraction tails, and the modular-torus generators.

#include "markovgeo/exact.hpp"

#include <optional>
#include <vector>

namespace markovgeo {

struct NotQuadraticIrrationalError : std::domain_error {
    NotQuadraticIrrationalError()
        : std::domain_error("expected a quadratic irrational") {}
};

// point of the boundary circle R u {inf}
class BoundaryPoint {
public:
    BoundaryPoint() : inf_(true) {}
    BoundaryPoint(QuadExt v) : inf_(false), v_(std::move(v)) {}
    static BoundaryPoint infinity() { return BoundaryPoint(); }

    bool is_infinity() const { return inf_; }
    const QuadExt& value() const;   // pre: finite

    friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const BoundaryPoint& a, const BoundaryPoint& b) { return !(a == b); }

private:
    bool inf_;
    QuadExt v_;
};

std::ostream& operator<<(std::ostream& os, const BoundaryPoint& p);

struct Vec2 {
    Rational p, q;
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.p == b.p && a.q == b.q; }
};

// z -> (az+b)/(cz+d), conjugate first when det < 0 (identity on the boundary)
struct Mat2 {
    Rational a, b, c, d;

    Rational det() const { return a * d - b * c; }
    bool is_unimodular() const { return abs(det()) == 1; }
    Mat2 inverse() const;   // pre: det != 0
    static Mat2 identity() { return {1, 0, 0, 1}; }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
    // equal up to a nonzero scalar (same projective action)
    bool same_action(const Mat2& n) const;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

BoundaryPoint moebius_apply(const Mat2& m, const BoundaryPoint& x);      // pre: det != 0
Vec2 act_on_vector(const Mat2& m, const Vec2& v);                        // ZeroVectorError

// interior point x + iy, y > 0; exact Moebius image (conjugation when det<0)
struct HPoint {
    QuadExt x, y;
};
HPoint moebius_apply(const Mat2& m, const HPoint& z);

// witness m with |det m| = 1 and m(x) = y, found by matching CF tails;
// decisive once search_depth covers both preperiods plus periods
std::optional<Mat2> numbers_equivalent(const QuadExt& x, const QuadExt& y,
                                       size_t search_depth = 64);

// modular-torus group generators: A(z) = (z-1)/(-z+2), B(z) = (z+1)/(z+2)
enum class TorusGen { A, B };
struct TorusGroupGen {
    TorusGen which;
    Mat2 matrix;
};
TorusGroupGen torus_generator(TorusGen which);
Mat2 torus_gen_a();
Mat2 torus_gen_b();

// translation / scaling / reflection / inversion factors whose product has
// the same boundary action as m (scaling encoded projectively as [[s,0],[0,1]])
std::vector<Mat2> generator_decomposition(const Mat2& m);   // pre: det != 0

} // namespace markovgeo
