// stability.cpp — BEC, closed and open linear systems, boundaries, landscapes

#include "dicke/stability.hpp"

#include <algorithm>
#include <cmath>

#include "dicke/errors.hpp"
#include "dicke/parallel.hpp"

namespace dicke {

namespace {
constexpr cplx I{0.0, 1.0};
} // namespace

StabilityMatrix bec_matrix(double omega0, double q, double Lambda) {
    StabilityMatrix m(2);
    m(0, 0) = I * omega0;
    m(0, 1) = I * q;
    m(1, 0) = I * (q - 2.0 * Lambda);
    m(1, 1) = I * omega0;
    return m;
}

std::pair<cplx, cplx> bec_eigenvalues(double omega0, double q, double Lambda) {
    const cplx root = std::sqrt(cplx(q * (q - 2.0 * Lambda), 0.0));
    return {I * omega0 + I * root, I * omega0 - I * root};
}

StabilityMatrix closed_matrix(const ModelParams& params) {
    const DerivedCouplings d = derive_couplings(params);
    const double w0 = params.omega0();
    const double q = params.q();
    const double sum4 = 4.0 * (d.delta_plus + d.delta_minus);
    const double diff4 = 4.0 * (d.delta_plus - d.delta_minus);

    StabilityMatrix m(4);
    m(0, 0) = I * w0;
    m(0, 2) = I * q;
    m(1, 1) = -I * w0;
    m(1, 3) = -I * q;
    m(2, 0) = I * (q - sum4);
    m(2, 1) = -I * diff4;
    m(2, 2) = I * w0;
    m(3, 0) = I * diff4;
    m(3, 1) = I * (-q + sum4);
    m(3, 3) = -I * w0;
    return m;
}

EigenReport closed_eigenvalues_analytic(double dp, double dm, double w0, double q) {
    const double diff = dp - dm;
    const double sum = dp + dm;
    const double w02 = w0 * w0;
    const cplx nested = std::sqrt(cplx(q * (4.0 * diff * diff * q + w02 * (q - 4.0 * sum)), 0.0));
    const cplx outer = cplx(w02 + q * (q - 4.0 * sum), 0.0);
    const cplx alpha_plus = I * std::sqrt(outer + 2.0 * nested);
    const cplx alpha_minus = I * std::sqrt(outer - 2.0 * nested);
    return make_report({alpha_plus, alpha_minus, -alpha_plus, -alpha_minus});
}

EigenReport closed_eigenvalues_analytic(const ModelParams& params) {
    const DerivedCouplings d = derive_couplings(params);
    return closed_eigenvalues_analytic(d.delta_plus, d.delta_minus, params.omega0(), params.q());
}

double closed_determinant(double dp, double dm, double w0, double q) {
    const double w02 = w0 * w0;
    return (w02 - q * (q - 8.0 * dm)) * (w02 - q * (q - 8.0 * dp));
}

double closed_determinant(const ModelParams& params) {
    const DerivedCouplings d = derive_couplings(params);
    return closed_determinant(d.delta_plus, d.delta_minus, params.omega0(), params.q());
}

std::vector<double> BoundarySet::sorted() const {
    std::vector<double> all = determinant_roots;
    all.insert(all.end(), nested_sqrt_roots.begin(), nested_sqrt_roots.end());
    std::sort(all.begin(), all.end());
    return all;
}

BoundarySet closed_boundaries(double dp, double dm, double w0) {
    const double w02 = w0 * w0;
    BoundarySet b;
    const double rp = std::sqrt(16.0 * dp * dp + w02);
    const double rm = std::sqrt(16.0 * dm * dm + w02);
    b.determinant_roots = {4.0 * dp - rp, 4.0 * dp + rp, 4.0 * dm - rm, 4.0 * dm + rm};
    std::sort(b.determinant_roots.begin(), b.determinant_roots.end());

    const double denom = w02 + 4.0 * (dp - dm) * (dp - dm);
    if (denom == 0.0) {
        b.nested_sqrt_roots = {0.0};
    } else {
        b.nested_sqrt_roots = {0.0, 4.0 * (dp + dm) * w02 / denom};
        std::sort(b.nested_sqrt_roots.begin(), b.nested_sqrt_roots.end());
    }
    return b;
}

StabilityMatrix open_matrix(const ModelParams& params) {
    const DerivedCouplings d = derive_couplings(params);
    const double w0 = params.omega0();
    const double q = params.q();
    const double L = d.Lambda_sum();
    const double G = d.Gamma_diff();
    const double S4 = 4.0 * d.Lambda_geo();

    StabilityMatrix m(4);
    m(0, 0) = I * w0;
    m(0, 2) = I * q;
    m(1, 1) = -I * w0;
    m(1, 3) = -I * q;
    m(2, 0) = I * q + 2.0 * (G - I * L);
    m(2, 1) = -I * S4;
    m(2, 2) = I * w0;
    m(3, 0) = I * S4;
    m(3, 1) = -I * q + 2.0 * (G + I * L);
    m(3, 3) = -I * w0;
    return m;
}

cplx open_determinant(const ModelParams& params) {
    const DerivedCouplings d = derive_couplings(params);
    if (!d.K) {
        // Zero couplings: the matrix is block diagonal in free rotations.
        const double w02 = params.omega0() * params.omega0();
        const double q2 = params.q() * params.q();
        return (w02 - q2) * (w02 - q2);
    }
    const cplx K = *d.K;
    const double w02 = params.omega0() * params.omega0();
    const double q = params.q();
    const double L2 = 2.0 * d.Lambda_sum();
    return (w02 - q * (q - L2 * (1.0 + K))) * (w02 - q * (q - L2 * (1.0 - K)));
}

OpenBoundarySet open_determinant_roots(const ModelParams& params) {
    const DerivedCouplings d = derive_couplings(params);
    if (!d.K) {
        throw DegenerateInput("open determinant roots need at least one nonzero coupling");
    }
    const cplx K = *d.K;
    const double L = d.Lambda_sum();
    const double w02 = params.omega0() * params.omega0();
    OpenBoundarySet out;
    const cplx centres[2] = {L * (1.0 + K), L * (1.0 - K)};
    for (int k = 0; k < 2; ++k) {
        const cplx c = centres[k];
        const cplx half_width = std::sqrt(c * c + w02);
        out.roots[std::size_t(2 * k)] = c - half_width;
        out.roots[std::size_t(2 * k + 1)] = c + half_width;
    }
    out.real = K.imag() == 0.0;
    return out;
}

const char* to_string(LinearModel m) {
    switch (m) {
    case LinearModel::bec:
        return "bec";
    case LinearModel::closed:
        return "closed";
    case LinearModel::open:
        return "open";
    }
    return "?";
}

EigenReport linear_eigen_report(LinearModel model, const ModelParams& params) {
    switch (model) {
    case LinearModel::bec: {
        if (params.lambda_plus() != 0.0) {
            throw InvalidParameter("the BEC analogue requires lambda_plus = 0");
        }
        const DerivedCouplings d = derive_couplings(params);
        const auto [ap, am] = bec_eigenvalues(params.omega0(), params.q(), d.Lambda_minus);
        return make_report({ap, am});
    }
    case LinearModel::closed:
        return closed_eigenvalues_analytic(params);
    case LinearModel::open:
        return eigenvalues_numeric(open_matrix(params));
    }
    throw InvalidParameter("unknown linear model");
}

LandscapeGrid landscape_sweep(LinearModel model, const ModelParams& params_template,
                              std::vector<double> q_axis, std::vector<double> omega0_axis) {
    if (q_axis.empty() || omega0_axis.empty()) {
        throw InvalidParameter("landscape axes must be nonempty");
    }
    for (const auto* axis : {&q_axis, &omega0_axis}) {
        for (double v : *axis) {
            if (!std::isfinite(v)) {
                throw InvalidParameter("landscape axes must be finite");
            }
        }
    }
    LandscapeGrid grid;
    grid.model = model;
    grid.q_axis = std::move(q_axis);
    grid.omega0_axis = std::move(omega0_axis);
    const std::size_t nw = grid.omega0_axis.size();
    grid.cells.resize(grid.q_axis.size() * nw);

    parallel_for(grid.cells.size(), [&](std::size_t idx) {
        LandscapeCell& cell = grid.cells[idx];
        cell.q = grid.q_axis[idx / nw];
        cell.omega0 = grid.omega0_axis[idx % nw];
        try {
            const ModelParams p = params_template.with_q(cell.q).with_omega0(cell.omega0);
            cell.report = linear_eigen_report(model, p);
        } catch (const Error& e) {
            cell.ok = false;
            cell.error = e.what();
        }
    });
    return grid;
}

} // namespace dicke
