#include "markovgeo/cf.hpp"

#include <map>
#include <tuple>

namespace markovgeo {

namespace {

struct QuadExtKey {
    bool operator()(const QuadExt& a, const QuadExt& b) const {
        return std::tie(a.disc(), a.rat(), a.coeff()) < std::tie(b.disc(), b.rat(), b.coeff());
    }
};

} // namespace

PeriodicCF CFExpansion::cf() const {
    PeriodicCF out;
    out.preperiod.assign(digits.begin(), digits.begin() + period_start);
    out.period.assign(digits.begin() + period_start, digits.end());
    return out;
}

CFExpansion cf_expand_states(const QuadExt& x) {
    if (x.is_rational()) throw RationalInputError();
    CFExpansion e;
    std::map<QuadExt, size_t, QuadExtKey> seen;
    QuadExt cur = x;
    for (;;) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            e.period_start = it->second;
            return e;
        }
        seen.emplace(cur, e.states.size());
        Integer a = cur.floor();
        e.states.push_back(cur);
        e.digits.push_back(a);
        cur = (cur - QuadExt(Rational(a))).inverse();   // nonzero: cur irrational
    }
}

PeriodicCF cf_expand(const QuadExt& x) { return cf_expand_states(x).cf(); }

namespace {

// convergent matrix [[p_{k-1}, p_{k-2}], [q_{k-1}, q_{k-2}]] of a digit word
struct ConvMat {
    Integer p = 1, pp = 0, q = 0, qq = 1;
    void push(const Integer& a) {
        Integer np = a * p + pp, nq = a * q + qq;
        pp = p; qq = q;
        p = np; q = nq;
    }
    // image of t under the word: (p t + pp) / (q t + qq)
    QuadExt apply(const QuadExt& t) const {
        return (QuadExt(Rational(p)) * t + QuadExt(Rational(pp))) /
               (QuadExt(Rational(q)) * t + QuadExt(Rational(qq)));
    }
};

// value of the purely periodic expansion with the given digits (all >= 1)
QuadExt purely_periodic_value(const std::vector<Integer>& digits) {
    ConvMat m;
    for (const Integer& a : digits) m.push(a);
    // t = (p t + pp)/(q t + qq): q t^2 + (qq - p) t - pp = 0; the roots have
    // opposite signs (pp, q > 0), the value is the positive one
    Rational lin = Rational(m.p - m.qq);
    Rational disc = lin * lin + Rational(4 * m.pp * m.q);
    return (QuadExt(lin) + QuadExt::sqrt_of(disc)) / QuadExt(Rational(2 * m.q));
}

} // namespace

QuadExt cf_value(const PeriodicCF& cf) {
    if (cf.period.empty()) throw std::invalid_argument("empty period");
    for (size_t i = 0; i < cf.preperiod.size(); ++i)
        if (i > 0 && cf.preperiod[i] < 1) throw std::invalid_argument("nonpositive digit");
    for (const Integer& a : cf.period)
        if (a < 1) throw std::invalid_argument("nonpositive period digit");

    QuadExt t = purely_periodic_value(cf.period);
    ConvMat pre;
    for (const Integer& a : cf.preperiod) pre.push(a);
    return pre.apply(t);
}

std::vector<Convergent> convergents(const QuadExt& x, size_t n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    CFExpansion e = cf_expand_states(x);
    std::vector<Convergent> out;
    out.reserve(n);
    ConvMat m;
    for (size_t k = 0; k < n; ++k) {
        size_t i = k < e.digits.size()
                       ? k
                       : e.period_start + (k - e.period_start) % e.period_length();
        m.push(e.digits[i]);
        out.push_back({m.p, m.q});
    }
    return out;
}

std::vector<Convergent> approximations(const QuadExt& x, const QuadExt& lambda,
                                       const Integer& q_max) {
    if (x.is_rational()) throw RationalInputError();
    if (lambda.sign() <= 0) throw std::invalid_argument("lambda must be positive");
    if (q_max < 1) throw std::invalid_argument("q_max must be >= 1");
    QuadExt bound = lambda.inverse();   // compare q^2 |x - p/q| < 1/lambda
    // |qx - p| < 1/(lambda q) <= 1/lambda, so p is within slack of floor(qx)
    Integer slack = bound.floor() + 1;
    std::vector<Convergent> out;
    for (Integer q = 1; q <= q_max; ++q) {
        QuadExt qx = x * QuadExt(Rational(q));
        Integer base = qx.floor();
        for (Integer p = base - slack; p <= base + slack + 1; ++p) {
            if (gcd(p, q) != 1) continue;
            QuadExt err = (qx - QuadExt(Rational(p))).abs() * QuadExt(Rational(q));
            if (compare(err, bound) < 0) out.push_back({p, q});
        }
    }
    return out;
}

QuadExt lagrange_number(const QuadExt& x) {
    CFExpansion e = cf_expand_states(x);
    // tail value t and reversed-prefix value -1/conj(t) sum to t - conj(t)
    QuadExt best;
    bool first = true;
    for (size_t i = e.period_start; i < e.states.size(); ++i) {
        QuadExt cand = e.states[i] - e.states[i].conjugate();
        if (first || compare(cand, best) > 0) {
            best = cand;
            first = false;
        }
    }
    return best;
}

} // namespace markovgeo
