// support.hpp — Shared helpers for the unit and acceptance tests

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "dicke/model.hpp"
#include "dicke/semiclassical.hpp"

namespace dicke::testing {

// Smallest achievable max-distance over all pairings of two equal-size sets.
inline double multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size()) {
        return INFINITY;
    }
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = INFINITY;
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline double max_modulus(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const cplx& z : v) m = std::max(m, std::abs(z));
    return m;
}

// Raw rates for one reference point.
struct Fixture {
    const char* name;
    Rates rates;
};

// Seven reference points a-g of the full model covering every phase, in omega = 1 units.
inline const std::vector<Fixture>& phase_fixtures() {
    static const std::vector<Fixture> f = {
        {"a", {1.0, 0.0, 0.5, 0.0, 0.5, 1.0}},
        {"b", {1.0, 0.0, 1.0, 0.25, 0.5, 1.0}},
        {"c", {1.0, 0.5, 1.0, 0.5, 0.5, 1.0}},
        {"d", {1.0, 0.5, -0.5, 0.5, 0.5, 1.0}},
        {"e", {1.0, 1.0, 0.0, 4.0, 2.0, 1.0}},
        {"f", {1.0, 1.0, 0.0, 6.0, 3.0, 1.0}},
        {"g", {1.0, 1.0, 0.5, 4.0, 2.0, 1.0}},
    };
    return f;
}

inline ModelParams fixture(char panel) {
    for (const Fixture& f : phase_fixtures()) {
        if (f.name[0] == panel) return ModelParams(f.rates);
    }
    return {};
}

inline cplx random_cplx(std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

} // namespace dicke::testing
