// stability.hpp — Linearized first-order systems under the undepleted-mode approximation
//
// Three linear systems are covered: the two-mode BEC analogue (2x2, lambda_+ = 0),
// the closed adiabatically eliminated model (4x4 in A, A^dag, B, B^dag), and the
// open model with cavity decay (4x4 in the first-order moments). Divergence of any
// of them signals breakdown of the undepleted m=0 approximation.

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dicke/eigensolver.hpp"
#include "dicke/model.hpp"

namespace dicke {

// --- BEC analogue --------------------------------------------------------------

StabilityMatrix bec_matrix(double omega0, double q, double Lambda);

// {alpha_+, alpha_-} = i omega0 +- i sqrt(q (q - 2 Lambda)), principal branch.
std::pair<cplx, cplx> bec_eigenvalues(double omega0, double q, double Lambda);

// --- Closed system -------------------------------------------------------------

StabilityMatrix closed_matrix(const ModelParams& params);

// Closed-form eigenvalues, ordered {alpha_+, alpha_-, -alpha_+, -alpha_-} where
// alpha_+- carry the positive outer sign and inner sign +-.
EigenReport closed_eigenvalues_analytic(const ModelParams& params);

// Same closed form in terms of the effective constants directly.
EigenReport closed_eigenvalues_analytic(double delta_plus, double delta_minus, double omega0,
                                        double q);

// [omega0^2 - q(q - 8 Delta_-)] [omega0^2 - q(q - 8 Delta_+)]
double closed_determinant(const ModelParams& params);
double closed_determinant(double delta_plus, double delta_minus, double omega0, double q);

struct BoundarySet {
    std::vector<double> determinant_roots;  // sorted ascending, with multiplicity
    std::vector<double> nested_sqrt_roots;  // sorted ascending

    std::vector<double> sorted() const;     // union, ascending
};

BoundarySet closed_boundaries(double delta_plus, double delta_minus, double omega0);

// --- Open system ---------------------------------------------------------------

StabilityMatrix open_matrix(const ModelParams& params);

// Determinant of open_matrix in product form, evaluated at the stored q.
cplx open_determinant(const ModelParams& params);

struct OpenBoundarySet {
    // q = L(1+K) +- sqrt(L^2 (1+K)^2 + omega0^2), then the (1-K) pair; L = Lambda_+ + Lambda_-.
    std::array<cplx, 4> roots{};
    bool real{true};  // false once kappa exceeds the critical value
};

// Throws DegenerateInput when both couplings vanish (K undefined).
OpenBoundarySet open_determinant_roots(const ModelParams& params);

// --- Landscapes ----------------------------------------------------------------

enum class LinearModel { bec, closed, open };

const char* to_string(LinearModel m);

struct LandscapeCell {
    double q{0.0};
    double omega0{0.0};
    EigenReport report;
    bool ok{true};
    std::string error;  // populated when ok == false
};

struct LandscapeGrid {
    LinearModel model{LinearModel::closed};
    std::vector<double> q_axis;
    std::vector<double> omega0_axis;
    std::vector<LandscapeCell> cells;  // row-major: q outer, omega0 inner

    const LandscapeCell& at(std::size_t iq, std::size_t iomega0) const {
        return cells[iq * omega0_axis.size() + iomega0];
    }
};

// Single-point evaluation used by every landscape cell. The BEC model takes its
// Lambda from Lambda_- and requires lambda_+ = 0.
EigenReport linear_eigen_report(LinearModel model, const ModelParams& params);

// Per-cell failures are recorded in the cell, never thrown.
LandscapeGrid landscape_sweep(LinearModel model, const ModelParams& params_template,
                              std::vector<double> q_axis, std::vector<double> omega0_axis);

} // namespace dicke
