#pragma once

// Continued fractions of real quadratic irrationals: exact expansion with
// periodicity detection, convergents, counting of fractions with
// |x - p/q| < 1/(lambda q^2), and Lagrange numbers.

#include "markovgeo/exact.hpp"

#include <vector>

namespace markovgeo {

struct RationalInputError : std::domain_error {
    RationalInputError() : std::domain_error("expected a quadratic irrational, got a rational") {}
};

// digits: preperiod then period repeated forever; a0 may be any integer, all
// later digits >= 1; period nonempty and primitive
struct PeriodicCF {
    std::vector<Integer> preperiod;
    std::vector<Integer> period;
};

// full expansion data: states[k] is the complete quotient whose floor is
// digits[k]; digits run through the preperiod and one period
struct CFExpansion {
    std::vector<Integer> digits;
    std::vector<QuadExt> states;
    size_t period_start = 0;

    size_t period_length() const { return digits.size() - period_start; }
    PeriodicCF cf() const;
};

CFExpansion cf_expand_states(const QuadExt& x);   // RationalInputError on rationals
PeriodicCF cf_expand(const QuadExt& x);

// exact value of an eventually periodic expansion
QuadExt cf_value(const PeriodicCF& cf);

struct Convergent {
    Integer p, q;
};
// first n convergents p_0/q_0 ... p_{n-1}/q_{n-1}, n >= 1
std::vector<Convergent> convergents(const QuadExt& x, size_t n);

// all reduced p/q with 1 <= q <= q_max and |x - p/q| < 1/(lambda q^2),
// decided exactly; ordered by q then p.  pre: lambda > 0.
std::vector<Convergent> approximations(const QuadExt& x, const QuadExt& lambda,
                                       const Integer& q_max);

// L(x) = max over period positions of (tail value) - (its conjugate), exact
QuadExt lagrange_number(const QuadExt& x);

} // namespace markovgeo
