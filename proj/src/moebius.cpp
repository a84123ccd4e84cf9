#include "markovgeo/moebius.hpp"

#include "markovgeo/cf.hpp"

#include <ostream>

namespace markovgeo {

const QuadExt& BoundaryPoint::value() const {
    if (inf_) throw std::domain_error("boundary point at infinity has no value");
    return v_;
}

std::ostream& operator<<(std::ostream& os, const BoundaryPoint& p) {
    if (p.is_infinity()) return os << "inf";
    return os << p.value();
}

Mat2 Mat2::inverse() const {
    Rational dt = det();
    if (dt.is_zero()) throw DivisionByZeroError();
    return {d / dt, -b / dt, -c / dt, a / dt};
}

bool Mat2::same_action(const Mat2& n) const {
    // cross-ratios of all entry pairs agree: m = s*n for some s != 0
    return a * n.b == b * n.a && a * n.c == c * n.a && a * n.d == d * n.a &&
           b * n.c == c * n.b && b * n.d == d * n.b && c * n.d == d * n.c &&
           !(a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero());
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

BoundaryPoint moebius_apply(const Mat2& m, const BoundaryPoint& x) {
    if (m.det().is_zero()) throw std::domain_error("singular matrix");
    if (x.is_infinity()) {
        if (m.c.is_zero()) return BoundaryPoint::infinity();
        return BoundaryPoint(QuadExt(m.a / m.c));
    }
    QuadExt den = QuadExt(m.c) * x.value() + QuadExt(m.d);
    if (den.is_zero()) return BoundaryPoint::infinity();
    return BoundaryPoint((QuadExt(m.a) * x.value() + QuadExt(m.b)) / den);
}

Vec2 act_on_vector(const Mat2& m, const Vec2& v) {
    if (v.p.is_zero() && v.q.is_zero()) throw ZeroVectorError();
    return {m.a * v.p + m.b * v.q, m.c * v.p + m.d * v.q};
}

HPoint moebius_apply(const Mat2& m, const HPoint& z) {
    Rational dt = m.det();
    if (dt.is_zero()) throw std::domain_error("singular matrix");
    // (az+b)(conj(cz+d)) / |cz+d|^2 with z = x+iy; conjugating z first when
    // det < 0 flips the imaginary part, so Y picks up |det|
    QuadExt y2 = z.y * z.y;
    QuadExt cxd = QuadExt(m.c) * z.x + QuadExt(m.d);
    QuadExt den = cxd * cxd + QuadExt(m.c) * QuadExt(m.c) * y2;
    QuadExt re = (QuadExt(m.a) * z.x + QuadExt(m.b)) * cxd + QuadExt(m.a) * QuadExt(m.c) * y2;
    QuadExt im = z.y * QuadExt(abs(dt));
    return {re / den, im / den};
}

std::optional<Mat2> numbers_equivalent(const QuadExt& x, const QuadExt& y,
                                       size_t search_depth) {
    if (x.is_rational() || y.is_rational()) throw NotQuadraticIrrationalError();
    CFExpansion ex = cf_expand_states(x);
    CFExpansion ey = cf_expand_states(y);
    size_t nx = std::min(ex.states.size(), search_depth);
    size_t ny = std::min(ey.states.size(), search_depth);
    // x = Cx(i) t and y = Cy(j) t for a shared complete quotient t give
    // y = Cy(j) Cx(i)^{-1} x with determinant +-1
    Mat2 cx = Mat2::identity();
    for (size_t i = 0; i < nx; ++i) {
        Mat2 cy = Mat2::identity();
        for (size_t j = 0; j < ny; ++j) {
            if (ex.states[i] == ey.states[j]) {
                Mat2 w = cy * cx.inverse();
                return w;
            }
            cy = cy * Mat2{Rational(ey.digits[j]), 1, 1, 0};
        }
        cx = cx * Mat2{Rational(ex.digits[i]), 1, 1, 0};
    }
    return std::nullopt;
}

Mat2 torus_gen_a() { return {1, -1, -1, 2}; }
Mat2 torus_gen_b() { return {1, 1, 1, 2}; }

TorusGroupGen torus_generator(TorusGen which) {
    return {which, which == TorusGen::A ? torus_gen_a() : torus_gen_b()};
}

std::vector<Mat2> generator_decomposition(const Mat2& m) {
    Rational dt = m.det();
    if (dt.is_zero()) throw std::domain_error("singular matrix");
    auto translate = [](const Rational& t) { return Mat2{1, t, 0, 1}; };
    auto scale = [](const Rational& s) { return Mat2{s, 0, 0, 1}; };
    const Mat2 reflect{-1, 0, 0, 1};
    const Mat2 invert{0, 1, 1, 0};
    std::vector<Mat2> out;
    if (m.c.is_zero()) {
        // z -> (a/d) z + b/d
        Rational s = m.a / m.d;
        Rational t = m.b / m.d;
        if (!t.is_zero()) out.push_back(translate(t));
        if (s.sign() < 0) {
            if (s != -1) out.push_back(scale(-s));
            out.push_back(reflect);
        } else if (s != 1) {
            out.push_back(scale(s));
        }
    } else {
        // (az+b)/(cz+d) = a/c - det/(c^2 (z + d/c))
        Rational u = -dt / (m.c * m.c);
        Rational t1 = m.a / m.c;
        Rational t2 = m.d / m.c;
        if (!t1.is_zero()) out.push_back(translate(t1));
        if (u.sign() < 0) {
            if (u != -1) out.push_back(scale(-u));
            out.push_back(reflect);
        } else if (u != 1) {
            out.push_back(scale(u));
        }
        out.push_back(invert);
        if (!t2.is_zero()) out.push_back(translate(t2));
    }
    if (out.empty()) out.push_back(Mat2::identity());
    return out;
}

} // namespace markovgeo
