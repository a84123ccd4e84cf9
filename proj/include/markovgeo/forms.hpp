#pragma once

// Binary quadratic forms f(p,q) = Ap^2 + 2Bpq + Cq^2 with rational
// coefficients: roots, the correspondence with geodesics and points, the
// GL2 substitution action, and lattice minima M(f).

#include "markovgeo/exact.hpp"
#include "markovgeo/hypgeo.hpp"
#include "markovgeo/moebius.hpp"

#include <utility>

namespace markovgeo {

struct NotIndefiniteError : std::domain_error {
    NotIndefiniteError() : std::domain_error("form is not indefinite") {}
};

struct NotDefiniteError : std::domain_error {
    NotDefiniteError() : std::domain_error("form is not definite") {}
};

struct DegenerateFormError : std::domain_error {
    DegenerateFormError() : std::domain_error("form has determinant zero") {}
};

struct NonConjugateEndpointsError : std::domain_error {
    NonConjugateEndpointsError()
        : std::domain_error("geodesic endpoints span no rational form") {}
};

// B stores half the middle coefficient, so det = AC - B^2
struct BinaryQuadraticForm {
    Rational A, B, C;

    Rational det() const { return A * C - B * B; }
    bool is_indefinite() const { return det().sign() < 0; }
    bool is_definite() const { return det().sign() > 0; }
    bool is_degenerate() const { return det().is_zero(); }

    Rational operator()(const Rational& p, const Rational& q) const {
        return A * p * p + 2 * B * p * q + C * q * q;
    }
    QuadExt operator()(const QuadExt& p, const QuadExt& q) const {
        return QuadExt(A) * p * p + QuadExt(2 * B) * p * q + QuadExt(C) * q * q;
    }

    // equal up to a nonzero scalar
    bool proportional_to(const BinaryQuadraticForm& g) const;

    friend bool operator==(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
        return f.A == g.A && f.B == g.B && f.C == g.C;
    }
    friend bool operator!=(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
        return !(f == g);
    }
};

std::ostream& operator<<(std::ostream& os, const BinaryQuadraticForm& f);

// the two projective zeros (-B +- sqrt(-det))/A, with A = 0 giving -C/2B
// and infinity
std::pair<BoundaryPoint, BoundaryPoint> roots(const BinaryQuadraticForm& f);   // NotIndefiniteError

// geodesic joining the roots, and a form with prescribed roots; endpoints
// must be two rationals, a rational and infinity, or a conjugate pair
Geodesic geodesic_of(const BinaryQuadraticForm& f);          // NotIndefiniteError
BinaryQuadraticForm form_of(const Geodesic& g);              // NonConjugateEndpointsError

// substitution f(ap+bq, cp+dq); multiplies det by (det m)^2
BinaryQuadraticForm act(const BinaryQuadraticForm& f, const Mat2& m);

struct LatticeMin {
    Rational min_value;                  // min |f| over nonzero integer vectors
    std::pair<Integer, Integer> witness; // attains it
    QuadExt m_exact;                     // min / sqrt(|det f|)
    double m_float;
};

// brute-force scan of |p|,|q| <= search_bound; the witness is the first
// minimizer in scan order (q upward from 0, p ascending, (1,0) first)
LatticeMin lattice_min(const BinaryQuadraticForm& f, long search_bound);   // DegenerateFormError

// exact minimum of a definite form by Gauss reduction
LatticeMin definite_min(const BinaryQuadraticForm& f);   // NotDefiniteError

// exact minimum of an indefinite form from its reduction cycle (zero when a
// root is rational or infinite)
LatticeMin indefinite_min(const BinaryQuadraticForm& f);   // NotIndefiniteError

// z(f) = (-B + i sqrt(det))/A in the upper half-plane
HPoint definite_point(const BinaryQuadraticForm& f);   // NotDefiniteError

// d(h(p,q), z(f)) = log(|f(p,q)| / sqrt(det f))
SignedDistance dist_horo_point(const Horocycle& h, const BinaryQuadraticForm& f);   // NotDefiniteError

} // namespace markovgeo
