#include "markovgeo/markov.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace markovgeo {

std::ostream& operator<<(std::ostream& os, const MarkovTriple& t) {
    return os << "(" << t.a << ", " << t.b << ", " << t.c << ")";
}

bool is_markov(const Integer& a, const Integer& b, const Integer& c) {
    if (a < 1 || b < 1 || c < 1) return false;
    return a * a + b * b + c * c == 3 * a * b * c;
}

bool is_markov(const MarkovTriple& t) { return is_markov(t.a, t.b, t.c); }

MarkovTriple involution(const MarkovTriple& t, int k) {
    if (!is_markov(t)) throw NotMarkovError();
    if (k < 1 || k > 3) throw std::invalid_argument("involution index must be 1, 2 or 3");
    MarkovTriple s = t;
    Integer& x = k == 1 ? s.a : k == 2 ? s.b : s.c;
    const Integer& y = k == 1 ? s.b : s.a;
    const Integer& z = k == 3 ? s.b : s.c;
    Integer old = x;
    x = 3 * y * z - x;
    // same root of the quadratic in x: x * old = y^2 + z^2
    if (x * old != y * y + z * z) throw std::logic_error("involution cross-check failed");
    return s;
}

MarkovTriple sorted_triple(const MarkovTriple& t) {
    Integer v[3] = {t.a, t.b, t.c};
    std::sort(v, v + 3);
    return {v[0], v[1], v[2]};
}

MarkovTriple apply_path(const TreePath& path) {
    MarkovTriple t = path.start;
    int prev = 0;
    for (int k : path.moves) {
        if (k == prev) throw std::invalid_argument("path move repeats its predecessor");
        t = involution(t, k);
        prev = k;
    }
    return t;
}

std::vector<MarkovTriple> enumerate_triples(const Integer& c_max) {
    auto key = [](const MarkovTriple& t) { return std::make_tuple(t.c, t.b, t.a); };
    auto by_key = [key](const MarkovTriple& s, const MarkovTriple& t) { return key(s) < key(t); };
    std::set<MarkovTriple, decltype(by_key)> found(by_key);

    MarkovTriple root{1, 1, 1};
    if (c_max < root.c) return {};
    std::queue<MarkovTriple> frontier;
    frontier.push(root);
    found.insert(root);
    while (!frontier.empty()) {
        MarkovTriple t = frontier.front();
        frontier.pop();
        // replacing a or b in a sorted triple moves away from the root
        for (int k : {1, 2}) {
            MarkovTriple child = sorted_triple(involution(t, k));
            if (child.c > c_max) continue;
            if (found.insert(child).second) frontier.push(child);
        }
    }
    return {found.begin(), found.end()};
}

UniquenessReport uniqueness_scan(const Integer& c_max) {
    UniquenessReport report;
    for (const MarkovTriple& t : enumerate_triples(c_max))
        report.max_values.push_back(t.c);
    for (size_t i = 0; i + 1 < report.max_values.size(); ++i)
        if (report.max_values[i] == report.max_values[i + 1] &&
            (report.duplicates.empty() || report.duplicates.back() != report.max_values[i]))
            report.duplicates.push_back(report.max_values[i]);
    return report;
}

namespace {

// g = gcd(a, b) with a*x + b*y = g
void egcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
    Integer r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Integer q = floor_div(r0, r1);
        Integer r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Integer x2 = x0 - q * x1; x0 = x1; x1 = x2;
        Integer y2 = y0 - q * y1; y0 = y1; y1 = y2;
    }
    g = r0; x = x0; y = y0;
}

Rational x0_of(const MarkovTriple& t, const Integer& p2) {
    return Rational(p2, t.a) + Rational(t.b, Integer(t.a * t.c)) - Rational(3, 2);
}

} // namespace

std::pair<Integer, Integer> solve_p1p2(const MarkovTriple& t) {
    if (!is_markov(t)) throw NotMarkovError();
    // a, b coprime for a Markov triple, so p2*b - p1*a = c is solvable
    Integer g, u, v;
    egcd(t.a, t.b, g, u, v);
    Integer p1 = -u * t.c / g;
    Integer p2 = v * t.c / g;
    // shifting (p1, p2) by t*(b, a) shifts x0 by t
    Integer shift = -rational_floor(x0_of(t, p2));
    return {p1 + shift * t.b, p2 + shift * t.a};
}

Rational markov_x0(const MarkovTriple& t) { return x0_of(t, solve_p1p2(t).second); }

Rational markov_x0(const MarkovTriple& t, const std::pair<Integer, Integer>& p1p2) {
    if (!is_markov(t)) throw NotMarkovError();
    if (p1p2.second * t.b - p1p2.first * t.a != t.c)
        throw std::invalid_argument("pair does not satisfy p2*b - p1*a = c");
    return x0_of(t, p1p2.second);
}

Rational markov_r_squared(const MarkovTriple& t) {
    if (!is_markov(t)) throw NotMarkovError();
    return Rational(9, 4) - Rational(1, Integer(t.c * t.c));
}

QuadExt markov_r(const MarkovTriple& t) { return QuadExt::sqrt_of(markov_r_squared(t)); }

QuadExt markov_x(const MarkovTriple& t) { return QuadExt(markov_x0(t)) + markov_r(t); }

QuadExt markov_lambda(const MarkovTriple& t) {
    if (!is_markov(t)) throw NotMarkovError();
    return QuadExt::sqrt_of(Rational(9) - Rational(4, Integer(t.c * t.c)));
}

BinaryQuadraticForm markov_form(const MarkovTriple& t) {
    return markov_form(t, solve_p1p2(t));
}

BinaryQuadraticForm markov_form(const MarkovTriple& t, const std::pair<Integer, Integer>& p1p2) {
    Rational x0 = markov_x0(t, p1p2);
    return {Rational(1), -x0, x0 * x0 - markov_r_squared(t)};
}

} // namespace markovgeo
