// eigensolver.cpp — Characteristic polynomial and Aberth–Ehrlich root finder

#include "dicke/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dicke/errors.hpp"

namespace dicke {

StabilityMatrix::StabilityMatrix(int dim) : dim_(dim) {
    if (dim != 2 && dim != 4) {
        throw std::invalid_argument("StabilityMatrix dimension must be 2 or 4");
    }
}

double StabilityMatrix::max_abs_entry() const {
    double m = 0.0;
    for (const cplx& e : entries()) {
        m = std::max(m, std::abs(e));
    }
    return m;
}

namespace {

template <class At>
cplx det2(At a, int r0, int r1, int c0, int c1) {
    return a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0);
}

template <class At>
cplx det3(At a, int r0, int r1, int r2, int c0, int c1, int c2) {
    return a(r0, c0) * det2(a, r1, r2, c1, c2) - a(r0, c1) * det2(a, r1, r2, c0, c2) +
           a(r0, c2) * det2(a, r1, r2, c0, c1);
}

} // namespace

cplx StabilityMatrix::determinant() const {
    auto a = [this](int r, int c) { return (*this)(r, c); };
    if (dim_ == 2) {
        return det2(a, 0, 1, 0, 1);
    }
    return a(0, 0) * det3(a, 1, 2, 3, 1, 2, 3) - a(0, 1) * det3(a, 1, 2, 3, 0, 2, 3) +
           a(0, 2) * det3(a, 1, 2, 3, 0, 1, 3) - a(0, 3) * det3(a, 1, 2, 3, 0, 1, 2);
}

const char* to_string(Stability s) {
    return s == Stability::divergent ? "divergent" : "oscillatory";
}

EigenReport make_report(std::vector<cplx> eigenvalues) {
    EigenReport r;
    r.max_re = -std::numeric_limits<double>::infinity();
    bool divergent = false;
    for (const cplx& a : eigenvalues) {
        r.max_re = std::max(r.max_re, a.real());
        if (a.real() > zero_tolerance_rel * (1.0 + std::abs(a))) {
            divergent = true;
        }
    }
    r.label = divergent ? Stability::divergent : Stability::oscillatory;
    r.eigenvalues = std::move(eigenvalues);
    return r;
}

std::vector<cplx> characteristic_polynomial(const StabilityMatrix& m) {
    auto a = [&m](int r, int c) { return m(r, c); };
    if (m.dim() == 2) {
        return {cplx(1.0), -(a(0, 0) + a(1, 1)), det2(a, 0, 1, 0, 1)};
    }
    // Coefficient of z^(4-k) is (-1)^k times the sum of k x k principal minors.
    cplx trace = 0.0;
    for (int i = 0; i < 4; ++i) {
        trace += a(i, i);
    }
    cplx minors2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            minors2 += det2(a, i, j, i, j);
        }
    }
    cplx minors3 = 0.0;
    for (int skip = 0; skip < 4; ++skip) {
        int idx[3];
        int n = 0;
        for (int i = 0; i < 4; ++i) {
            if (i != skip) {
                idx[n++] = i;
            }
        }
        minors3 += det3(a, idx[0], idx[1], idx[2], idx[0], idx[1], idx[2]);
    }
    return {cplx(1.0), -trace, minors2, -minors3, m.determinant()};
}

namespace {

struct Evaluation {
    cplx value;
    cplx derivative;
    double error_bound;
};

// Horner evaluation with a running rounding-error bound.
Evaluation evaluate(std::span<const cplx> c, cplx z) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    cplx p = c[0];
    cplx dp = 0.0;
    double bound = std::abs(c[0]);
    const double az = std::abs(z);
    for (std::size_t k = 1; k < c.size(); ++k) {
        dp = dp * z + p;
        p = p * z + c[k];
        bound = bound * az + std::abs(c[k]);
    }
    return {p, dp, 4.0 * double(c.size()) * eps * bound};
}

} // namespace

std::vector<cplx> polynomial_roots(std::span<const cplx> monic, int max_iterations) {
    std::vector<cplx> roots;
    std::vector<cplx> c(monic.begin(), monic.end());
    // Exact zero roots are deflated so iteration only sees a nonzero constant term.
    while (c.size() > 1 && c.back() == cplx(0.0)) {
        roots.push_back(0.0);
        c.pop_back();
    }
    const std::size_t n = c.size() - 1;
    if (n == 0) {
        return roots;
    }
    if (n == 1) {
        roots.push_back(-c[1]);
        return roots;
    }

    // Fujiwara bound on root moduli seeds the starting circle.
    double radius = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double term = std::pow(std::abs(c[k]), 1.0 / double(k));
        if (k == n) {
            term = std::pow(std::abs(c[k]) / 2.0, 1.0 / double(k));
        }
        radius = std::max(radius, 2.0 * term);
    }
    std::vector<cplx> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * double(i) / double(n) + 0.4;
        z[i] = std::polar(0.5 * radius, angle);
    }

    std::vector<bool> done(n, false);
    std::size_t remaining = n;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < max_iterations && remaining > 0; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) {
                continue;
            }
            const Evaluation e = evaluate(c, z[i]);
            if (std::abs(e.value) <= e.error_bound) {
                done[i] = true;
                --remaining;
                continue;
            }
            if (e.derivative == cplx(0.0)) {
                z[i] += std::polar(eps * (1.0 + std::abs(z[i])) * 1e3, 0.7 * double(it + 1));
                continue;
            }
            const cplx newton = e.value / e.derivative;
            cplx repulsion = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    repulsion += 1.0 / (z[i] - z[j]);
                }
            }
            const cplx step = newton / (1.0 - newton * repulsion);
            z[i] -= step;
            if (std::abs(step) <= 2.0 * eps * std::abs(z[i])) {
                done[i] = true;
                --remaining;
            }
        }
    }
    if (remaining > 0) {
        throw NumericalError("polynomial root finder did not converge within " +
                             std::to_string(max_iterations) + " iterations");
    }

    // One guarded Newton polish per root.
    for (cplx& root : z) {
        const Evaluation e = evaluate(c, root);
        if (e.derivative != cplx(0.0)) {
            const cplx candidate = root - e.value / e.derivative;
            if (std::abs(evaluate(c, candidate).value) < std::abs(e.value)) {
                root = candidate;
            }
        }
        roots.push_back(root);
    }
    return roots;
}

EigenReport eigenvalues_numeric(const StabilityMatrix& m) {
    const std::vector<cplx> coeffs = characteristic_polynomial(m);
    std::vector<cplx> roots = polynomial_roots(coeffs);
    std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) {
            return a.real() > b.real();
        }
        return a.imag() > b.imag();
    });
    return make_report(std::move(roots));
}

} // namespace dicke
