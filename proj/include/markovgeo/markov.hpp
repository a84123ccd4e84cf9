#pragma once

// Markov's equation a^2 + b^2 + c^2 = 3abc: triples, the neighbor
// involutions, tree enumeration, and the data attached to a triple (the
// pair (p1,p2), x0, r, x, lambda, and the quadratic form).

#include "markovgeo/exact.hpp"
#include "markovgeo/forms.hpp"

#include <utility>
#include <vector>

namespace markovgeo {

struct NotMarkovError : std::domain_error {
    NotMarkovError() : std::domain_error("not a Markov triple") {}
};

// ordered tuple, not a multiset: involutions act on positions
struct MarkovTriple {
    Integer a, b, c;

    const Integer& max() const { return std::max(a, std::max(b, c)); }

    friend bool operator==(const MarkovTriple& s, const MarkovTriple& t) {
        return s.a == t.a && s.b == t.b && s.c == t.c;
    }
    friend bool operator!=(const MarkovTriple& s, const MarkovTriple& t) { return !(s == t); }
};

std::ostream& operator<<(std::ostream& os, const MarkovTriple& t);

bool is_markov(const Integer& a, const Integer& b, const Integer& c);
bool is_markov(const MarkovTriple& t);

// replaces component k of t by 3*(product of the others) - component;
// an involution on Markov triples
MarkovTriple involution(const MarkovTriple& t, int k);   // k in {1,2,3}; NotMarkovError

MarkovTriple sorted_triple(const MarkovTriple& t);

// walk in the triple tree; consecutive equal moves would backtrack and are
// rejected
struct TreePath {
    MarkovTriple start;
    std::vector<int> moves;
};
MarkovTriple apply_path(const TreePath& path);   // NotMarkovError, invalid_argument

// all sorted triples a <= b <= c with c <= c_max, ordered by (c, b, a)
std::vector<MarkovTriple> enumerate_triples(const Integer& c_max);

// one entry of max_values per sorted triple; duplicates lists the maxima
// realized by two or more triples (uniqueness conjecture: always empty)
struct UniquenessReport {
    std::vector<Integer> max_values;
    std::vector<Integer> duplicates;
};
UniquenessReport uniqueness_scan(const Integer& c_max);

// integers with p2*b - p1*a = c, canonicalized so x0 lands in [0, 1);
// reproduces the classical table of pairs
std::pair<Integer, Integer> solve_p1p2(const MarkovTriple& t);   // NotMarkovError

// x0 = p2/a + b/(ac) - 3/2 for the canonical pair or an explicit one
Rational markov_x0(const MarkovTriple& t);
Rational markov_x0(const MarkovTriple& t, const std::pair<Integer, Integer>& p1p2);

Rational markov_r_squared(const MarkovTriple& t);   // 9/4 - 1/c^2
QuadExt markov_r(const MarkovTriple& t);

// x = x0 + r, a root of markov_form(t)
QuadExt markov_x(const MarkovTriple& t);

// sqrt(9 - 4/c^2) = 2r, the Lagrange number of markov_x(t)
QuadExt markov_lambda(const MarkovTriple& t);

// p^2 - 2 x0 pq + (x0^2 - r^2) q^2, an indefinite form with det = -r^2
BinaryQuadraticForm markov_form(const MarkovTriple& t);
BinaryQuadraticForm markov_form(const MarkovTriple& t, const std::pair<Integer, Integer>& p1p2);

} // namespace markovgeo
