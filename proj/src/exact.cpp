#include "markovgeo/exact.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

namespace markovgeo {

MixedFieldError::MixedFieldError(const Integer& d1, const Integer& d2)
    : std::domain_error("mixed quadratic fields: sqrt(" + d1.str() + ") vs sqrt(" + d2.str() + ")") {}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
    return q;
}

Integer rational_floor(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

Integer rational_ceil(const Rational& r) {
    return ceil_div(numerator(r), denominator(r));
}

Integer rational_round(const Rational& r) {
    return rational_floor(r + Rational(1, 2));
}

Integer isqrt_floor(const Integer& n) {
    if (n.sign() < 0) throw std::domain_error("isqrt of negative");
    return sqrt(n);
}

bool is_perfect_square(const Integer& n) {
    if (n.sign() < 0) return false;
    return mpz_perfect_square_p(n.backend().data()) != 0;
}

namespace {

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        const uint32_t limit = 1000000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<uint32_t> ps;
        for (uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

} // namespace

SquarefreeSplit split_squarefree(const Integer& n) {
    if (n.sign() < 0) throw std::domain_error("squarefree split of negative");
    if (n <= 1) return {1, n};
    Integer m = n, sq = 1, sf = 1;
    for (uint32_t p : small_primes()) {
        Integer pp = p;
        if (pp * pp > m) break;
        unsigned e = 0;
        while (m % pp == 0) { m /= pp; ++e; }
        if (e == 0) continue;
        if (e >= 2) sq *= pow(pp, e / 2);
        if (e % 2) sf *= pp;
    }
    if (m > 1) {
        if (is_perfect_square(m)) sq *= isqrt_floor(m);
        else sf *= m;   // prime or product of two distinct large primes
    }
    return {sq, sf};
}

QuadExt::QuadExt(Rational rat, Rational coeff, Integer disc)
    : rat_(std::move(rat)), coeff_(std::move(coeff)), disc_(std::move(disc)) {
    if (disc_.sign() < 0) throw std::domain_error("negative discriminant");
    if (coeff_.is_zero() || disc_.is_zero()) {
        coeff_ = 0;
        disc_ = 0;
        return;
    }
    SquarefreeSplit s = split_squarefree(disc_);
    if (s.square_part != 1) {
        coeff_ *= Rational(s.square_part);
        disc_ = s.squarefree;
    }
    if (disc_ == 1) {
        rat_ += coeff_;
        coeff_ = 0;
        disc_ = 0;
    }
}

QuadExt QuadExt::sqrt_of(const Rational& r) {
    int s = r.sign();
    if (s < 0) throw std::domain_error("sqrt of negative rational");
    if (s == 0) return QuadExt();
    // sqrt(n/d) = sqrt(n*d)/d
    const Integer& n = numerator(r);
    const Integer& d = denominator(r);
    return QuadExt(Rational(0), Rational(1, d), n * d);
}

const Integer& QuadExt::joint_disc(const QuadExt& o) const {
    if (disc_.is_zero()) return o.disc_;
    if (o.disc_.is_zero() || disc_ == o.disc_) return disc_;
    throw MixedFieldError(disc_, o.disc_);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    Integer d = joint_disc(o);
    rat_ += o.rat_;
    coeff_ += o.coeff_;
    disc_ = coeff_.is_zero() ? Integer(0) : std::move(d);
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    Integer d = joint_disc(o);
    rat_ -= o.rat_;
    coeff_ -= o.coeff_;
    disc_ = coeff_.is_zero() ? Integer(0) : std::move(d);
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    Integer d = joint_disc(o);
    Rational r = rat_ * o.rat_ + coeff_ * o.coeff_ * Rational(d);
    Rational c = rat_ * o.coeff_ + coeff_ * o.rat_;
    rat_ = std::move(r);
    coeff_ = std::move(c);
    disc_ = coeff_.is_zero() ? Integer(0) : std::move(d);
    return *this;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    Rational n = norm();   // nonzero: sqrt(disc) is irrational
    return QuadExt(rat_ / n, -coeff_ / n, disc_, raw_tag{});
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    return *this *= o.inverse();
}

int QuadExt::sign() const {
    int sr = rat_.sign(), sc = coeff_.sign();
    if (sc == 0) return sr;
    if (sr == 0) return sc;
    if (sr == sc) return sr;
    // opposite signs: |rat| vs |coeff|*sqrt(disc), squared
    Rational lhs = rat_ * rat_;
    Rational rhs = coeff_ * coeff_ * Rational(disc_);
    // equality would make sqrt(disc) rational
    return lhs > rhs ? sr : sc;
}

Integer QuadExt::floor() const {
    if (coeff_.is_zero()) return rational_floor(rat_);
    // t = coeff*sqrt(disc): floor(|t|) = max k with k^2*den^2 <= num^2*disc
    const Integer& n = numerator(coeff_);
    const Integer& d = denominator(coeff_);
    Integer A = n * n * disc_, B = d * d;
    Integer k = isqrt_floor(A / B);
    while ((k + 1) * (k + 1) * B <= A) ++k;
    while (k * k * B > A) --k;
    // t irrational, so floor(-|t|) = -floor(|t|) - 1
    Integer ft = n.sign() > 0 ? k : Integer(-k - 1);
    Integer m = rational_floor(rat_) + ft;   // x in [m, m+2)
    QuadExt diff = *this - QuadExt(Rational(m + 1));
    return diff.sign() >= 0 ? Integer(m + 1) : m;
}

int compare(const QuadExt& a, const QuadExt& b) {
    if (a.disc().is_zero() || b.disc().is_zero() || a.disc() == b.disc())
        return (a - b).sign();
    // a - b = (ra - rb) + sa*sqrt(Da) - sb*sqrt(Db), distinct fields
    QuadExt u(a.rat() - b.rat(), a.coeff(), a.disc());
    QuadExt v(Rational(0), b.coeff(), b.disc());
    int su = u.sign(), sv = v.sign();
    if (su != sv) return su > sv ? 1 : -1;
    if (su == 0) return 0;
    // same strict sign s: sign(u - v) = s * sign(u^2 - v^2), v^2 rational
    QuadExt u2 = u * u;
    Rational v2 = v.coeff() * v.coeff() * Rational(v.disc());
    int t = (u2 - QuadExt(v2)).sign();
    return su > 0 ? t : -t;
}

namespace {

void append_rational(std::string& out, const Rational& r) {
    out += numerator(r).str();
    if (denominator(r) != 1) {
        out += '/';
        out += denominator(r).str();
    }
}

} // namespace

std::string to_string(const QuadExt& x) {
    std::string out;
    if (x.is_rational()) {
        append_rational(out, x.rat());
        return out;
    }
    bool have_rat = !x.rat().is_zero();
    if (have_rat) append_rational(out, x.rat());
    Rational c = x.coeff();
    if (c.sign() < 0) {
        out += have_rat ? " - " : "-";
        c = -c;
    } else if (have_rat) {
        out += " + ";
    }
    if (c != 1) {
        append_rational(out, c);
        out += '*';
    }
    out += "sqrt(";
    out += x.disc().str();
    out += ')';
    return out;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
    return os << to_string(x);
}

namespace {

struct Parser {
    std::string_view s;
    size_t i = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("bad quadratic-extension literal: " + what +
                                    " in \"" + std::string(s) + "\"");
    }
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    bool peek_word(std::string_view w) {
        skip_ws();
        return s.substr(i, w.size()) == w;
    }
    Integer integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return Integer(std::string(s.substr(start, i - start)));
    }
    Rational rational() {
        Integer n = integer();
        if (eat('/')) {
            Integer d = integer();
            if (d.is_zero()) fail("zero denominator");
            return Rational(n, d);
        }
        return Rational(n);
    }
    // [rational '*'] 'sqrt' '(' integer ')' | rational
    QuadExt term() {
        if (peek_word("sqrt")) {
            i += 4;
            if (!eat('(')) fail("expected ( after sqrt");
            Integer d = integer();
            if (!eat(')')) fail("expected )");
            return QuadExt(Rational(0), Rational(1), d);
        }
        Rational r = rational();
        if (eat('*')) {
            if (!peek_word("sqrt")) fail("expected sqrt after *");
            i += 4;
            if (!eat('(')) fail("expected ( after sqrt");
            Integer d = integer();
            if (!eat(')')) fail("expected )");
            return QuadExt(Rational(0), r, d);
        }
        return QuadExt(r);
    }
    QuadExt expr() {
        int sgn = 1;
        if (eat('-')) sgn = -1;
        else eat('+');
        QuadExt v = term();
        if (sgn < 0) v = -v;
        for (;;) {
            skip_ws();
            if (i >= s.size()) break;
            int s2;
            if (eat('+')) s2 = 1;
            else if (eat('-')) s2 = -1;
            else fail("trailing input");
            QuadExt t = term();
            v += (s2 < 0 ? -t : t);
        }
        return v;
    }
};

} // namespace

QuadExt parse_quadext(std::string_view s) {
    Parser p{s};
    QuadExt v = p.expr();
    return v;
}

// ---- BigFloat ----

BigFloat::BigFloat(unsigned prec_bits) {
    mpfr_init2(v_, prec_bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec_bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::of(double v, unsigned prec_bits) {
    BigFloat r(prec_bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const Integer& v, unsigned prec_bits) {
    BigFloat r(prec_bits);
    mpfr_set_z(r.v_, v.backend().data(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const Rational& v, unsigned prec_bits) {
    BigFloat r(prec_bits);
    mpfr_set_q(r.v_, v.backend().data(), MPFR_RNDN);
    return r;
}

unsigned BigFloat::precision() const { return unsigned(mpfr_get_prec(v_)); }

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::str(int digits10) const {
    char* out = nullptr;
    if (digits10 <= 0) digits10 = int(precision() * 0.30103) + 2;
    if (mpfr_asprintf(&out, "%.*Rg", digits10, v_) < 0) return "?";
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

bool BigFloat::is_zero() const { return mpfr_zero_p(v_) != 0; }
int BigFloat::sign() const { return mpfr_sgn(v_); }
long BigFloat::exponent() const { return long(mpfr_get_exp(v_)); }

namespace {
inline mpfr_prec_t widest(const mpfr_t a, const mpfr_t b) {
    return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}
} // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    BigFloat r(unsigned(widest(v_, o.v_)));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return *this = std::move(r);
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    BigFloat r(unsigned(widest(v_, o.v_)));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return *this = std::move(r);
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    BigFloat r(unsigned(widest(v_, o.v_)));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return *this = std::move(r);
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    BigFloat r(unsigned(widest(v_, o.v_)));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return *this = std::move(r);
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& v) {
    BigFloat r(v.precision());
    mpfr_sqrt(r.v_, v.v_, MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& v) {
    BigFloat r(v.precision());
    mpfr_log(r.v_, v.v_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& v) {
    BigFloat r(v.precision());
    mpfr_abs(r.v_, v.v_, MPFR_RNDN);
    return r;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }

BigFloat BigFloat::rounded(unsigned prec_bits) const {
    BigFloat r(prec_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& v) { return os << v.str(); }

BigFloat to_float(const QuadExt& x, unsigned precision_bits) {
    if (x.is_zero()) return BigFloat(precision_bits);
    if (precision_bits < MPFR_PREC_MIN) precision_bits = MPFR_PREC_MIN;
    for (unsigned extra = 32;; extra *= 2) {
        unsigned w = precision_bits + extra;
        BigFloat fr = BigFloat::of(x.rat(), w);
        BigFloat sum = fr;
        if (!x.coeff().is_zero()) {
            BigFloat ft = BigFloat::of(x.coeff(), w) * sqrt(BigFloat::of(Rational(x.disc()), w));
            sum = fr + ft;
            // cancellation eats guard bits; retry wider if too few remain
            if (!fr.is_zero() && !ft.is_zero()) {
                if (sum.is_zero()) continue;
                long lost = std::max(fr.exponent(), ft.exponent()) - sum.exponent();
                if (lost + 16 > long(extra)) continue;
            }
        }
        return sum.rounded(precision_bits);
    }
}

} // namespace markovgeo
