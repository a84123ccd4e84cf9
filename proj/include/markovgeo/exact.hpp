#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP-backed) and
// real quadratic extensions  x = rat + coeff*sqrt(disc)  with disc squarefree.
// All predicates (sign, compare, floor) are decided exactly; floats appear
// only through BigFloat views with explicit precision.

#include <boost/multiprecision/gmp.hpp>
#include <mpfr.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace markovgeo {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct MixedFieldError : std::domain_error {
    MixedFieldError(const Integer& d1, const Integer& d2);
};

struct DivisionByZeroError : std::domain_error {
    DivisionByZeroError() : std::domain_error("division by zero") {}
};

struct ZeroVectorError : std::domain_error {
    ZeroVectorError() : std::domain_error("zero vector") {}
};

inline int sign_of(const Integer& v)  { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

// floor(a/b), b != 0
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer rational_floor(const Rational& r);
Integer rational_ceil(const Rational& r);
// nearest integer, ties toward +infinity
Integer rational_round(const Rational& r);

// floor(sqrt(n)), n >= 0
Integer isqrt_floor(const Integer& n);
bool is_perfect_square(const Integer& n);

// n = square_part^2 * squarefree, n >= 0.  Trial division by primes up to
// 10^6 plus a perfect-square test on the cofactor; exact for every n whose
// cofactor after small-prime removal is prime, a square, or a product of two
// distinct primes (in particular all n < 10^18).
struct SquarefreeSplit {
    Integer square_part;
    Integer squarefree;
};
SquarefreeSplit split_squarefree(const Integer& n);

class BigFloat;

// Element of Q(sqrt(disc)).  Canonical: disc squarefree, disc >= 2 when
// coeff != 0, disc == 0 when coeff == 0.  Mixing two distinct irrational
// fields in arithmetic throws MixedFieldError; comparison never does.
class QuadExt {
public:
    QuadExt() : rat_(0), coeff_(0), disc_(0) {}
    QuadExt(int v) : rat_(v), coeff_(0), disc_(0) {}
    QuadExt(Integer v) : rat_(std::move(v)), coeff_(0), disc_(0) {}
    QuadExt(Rational v) : rat_(std::move(v)), coeff_(0), disc_(0) {}
    QuadExt(Rational rat, Rational coeff, Integer disc);

    // sqrt(r) for rational r >= 0
    static QuadExt sqrt_of(const Rational& r);

    const Rational& rat() const   { return rat_; }
    const Rational& coeff() const { return coeff_; }
    const Integer&  disc() const  { return disc_; }

    bool is_rational() const { return coeff_.is_zero(); }
    bool is_zero() const     { return coeff_.is_zero() && rat_.is_zero(); }

    // rat - coeff*sqrt(disc)
    QuadExt conjugate() const { return QuadExt(rat_, -coeff_, disc_, raw_tag{}); }
    // x * conjugate(x), always rational
    Rational norm() const { return rat_ * rat_ - coeff_ * coeff_ * Rational(disc_); }

    int sign() const;
    QuadExt abs() const { return sign() >= 0 ? *this : -*this; }
    QuadExt inverse() const;          // DivisionByZeroError on 0
    Integer floor() const;

    QuadExt operator-() const { return QuadExt(-rat_, -coeff_, disc_, raw_tag{}); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.disc_ == b.disc_ && a.rat_ == b.rat_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

private:
    struct raw_tag {};
    QuadExt(Rational rat, Rational coeff, Integer disc, raw_tag)
        : rat_(std::move(rat)), coeff_(std::move(coeff)), disc_(std::move(disc)) {}

    // common field of the operands, MixedFieldError if incompatible
    const Integer& joint_disc(const QuadExt& o) const;

    Rational rat_, coeff_;
    Integer disc_;
};

// sign of a - b; total order over the represented reals, fields may differ
int compare(const QuadExt& a, const QuadExt& b);

inline bool operator<(const QuadExt& a, const QuadExt& b)  { return compare(a, b) < 0; }
inline bool operator>(const QuadExt& a, const QuadExt& b)  { return compare(a, b) > 0; }
inline bool operator<=(const QuadExt& a, const QuadExt& b) { return compare(a, b) <= 0; }
inline bool operator>=(const QuadExt& a, const QuadExt& b) { return compare(a, b) >= 0; }

// textual form "r + s*sqrt(D)" with rational r, s; see docs/formats.md
std::string to_string(const QuadExt& x);
QuadExt parse_quadext(std::string_view s);
std::ostream& operator<<(std::ostream& os, const QuadExt& x);

// Arbitrary-precision binary float (MPFR).  Precision is per-value, in bits;
// binary operations compute at the wider of the operand precisions.
class BigFloat {
public:
    explicit BigFloat(unsigned prec_bits = 128);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat of(double v, unsigned prec_bits);
    static BigFloat of(const Integer& v, unsigned prec_bits);
    static BigFloat of(const Rational& v, unsigned prec_bits);

    unsigned precision() const;
    double to_double() const;
    std::string str(int digits10 = 0) const;   // 0: full precision

    bool is_zero() const;
    int sign() const;
    // binary exponent, pre: nonzero
    long exponent() const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    BigFloat operator-() const;

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend BigFloat sqrt(const BigFloat& v);   // pre: v >= 0
    friend BigFloat log(const BigFloat& v);    // pre: v > 0
    friend BigFloat abs(const BigFloat& v);
    friend int compare(const BigFloat& a, const BigFloat& b);

    // round to a (usually smaller) precision
    BigFloat rounded(unsigned prec_bits) const;

private:
    mpfr_t v_;
};

BigFloat sqrt(const BigFloat& v);
BigFloat log(const BigFloat& v);
BigFloat abs(const BigFloat& v);
int compare(const BigFloat& a, const BigFloat& b);

inline bool operator<(const BigFloat& a, const BigFloat& b)  { return compare(a, b) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b)  { return compare(a, b) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }

// x rounded to precision_bits, error < 1 ulp (guard digits absorb the
// sqrt/multiply/add rounding, with a cancellation-aware retry)
BigFloat to_float(const QuadExt& x, unsigned precision_bits);

std::ostream& operator<<(std::ostream& os, const BigFloat& v);

} // namespace markovgeo
