#pragma once

// Brute-force numeric solver for the leg-crossing optimization.  For fixed
// left end e1 the min distance is unimodal in e2 (two of the distances
// increase, one decreases), so a nested 1-D grid refinement is reliable;
// a plain 2-D grid stalls on the ridge where two distances tie.

#include "markovgeo/exact.hpp"

#include <algorithm>
#include <cmath>

namespace testutil {

inline double approx(const markovgeo::Rational& r) { return r.convert_to<double>(); }

struct CrossingOracle {
    double value;    // maximized min distance
    double e1, e2;   // ends of the argmax geodesic
};

// min over the three horocycle distances for the geodesic with ends
// e1 < v1 < v2 < e2, triangle realized with h3 at height 1
inline double crossing_min_distance(double a1, double a2, double v1, double v2,
                                    double e1, double e2) {
    double w = e2 - e1;
    double u1 = 2.0 * a2 * a2 * std::fabs((v1 - e1) * (v1 - e2)) / w;
    double u2 = 2.0 * a1 * a1 * std::fabs((v2 - e1) * (v2 - e2)) / w;
    double u3 = 2.0 / w;
    return std::min({std::log(u1), std::log(u2), std::log(u3)});
}

inline double crossing_best_right_end(double a1, double a2, double v1, double v2,
                                      double e1, double lo, double hi, double* arg) {
    double best_e = hi, best_v = -1e300;
    for (int round = 0; round < 14; ++round) {
        double step = (hi - lo) / 32;
        best_v = -1e300;
        for (int j = 0; j <= 32; ++j) {
            double e2 = lo + step * j;
            if (!(e2 > v2)) continue;
            double val = crossing_min_distance(a1, a2, v1, v2, e1, e2);
            if (val > best_v) { best_v = val; best_e = e2; }
        }
        lo = std::max(v2, best_e - 2 * step);
        hi = best_e + 2 * step;
    }
    if (arg) *arg = best_e;
    return best_v;
}

inline CrossingOracle crossing_grid_oracle(double a1, double a2, double a3,
                                           double v1, double v2) {
    double delta = a1 / (a2 * a3) + a2 / (a3 * a1) + a3 / (a1 * a2);
    double reach = 2.0 * (delta + 1.0 / a1 + 1.0 / a2 + 1.0);
    double lo = v1 - reach, hi = v1;
    CrossingOracle best{-1e300, 0, 0};
    for (int round = 0; round < 28; ++round) {
        double step = (hi - lo) / 48;
        best.value = -1e300;
        for (int i = 0; i <= 48; ++i) {
            double e1 = lo + step * i;
            if (!(e1 < v1)) continue;
            double e2 = 0;
            double val = crossing_best_right_end(a1, a2, v1, v2, e1,
                                                 v2, v2 + reach, &e2);
            if (val > best.value) best = {val, e1, e2};
        }
        lo = std::max(v1 - reach, best.e1 - 2 * step);
        hi = std::min(v1, best.e1 + 2 * step);
    }
    return best;
}

} // namespace testutil
