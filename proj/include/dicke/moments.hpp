// moments.hpp — First- and second-order operator moments of the open undepleted model

#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "dicke/model.hpp"
#include "dicke/rk4.hpp"

namespace dicke {

// Storage order of MomentState::values.
enum class Moment : std::size_t {
    A,                // <A> = <b+^dag + b->
    A_dag,            // <A^dag>
    B,                // <B> = <b+^dag - b->
    B_dag,            // <B^dag>
    n_plus,           // <b+^dag b+>
    n_minus,          // <b-^dag b->
    bp_bp,            // <b+^2>
    bm_bm,            // <b-^2>
    bpd_bpd,          // <b+^dag 2>
    bmd_bmd,          // <b-^dag 2>
    bp_bm,            // <b+ b->
    bpd_bmd,          // <b+^dag b-^dag>
    bp_bmd,           // <b+ b-^dag>
    bpd_bm,           // <b+^dag b->
};

inline constexpr std::size_t moment_count = 14;

std::string_view moment_name(Moment m);

struct MomentState {
    std::array<cplx, moment_count> values{};
    double t{0.0};

    cplx& operator[](Moment m) { return values[static_cast<std::size_t>(m)]; }
    const cplx& operator[](Moment m) const { return values[static_cast<std::size_t>(m)]; }

    static MomentState vacuum() { return {}; }
};

// Right-hand side of the moment equations; the first-order block follows the
// open stability matrix, the second-order block carries the inhomogeneous
// fluctuation terms.
std::array<cplx, moment_count> moment_rhs(const MomentState& state, const DerivedCouplings& d,
                                          const ModelParams& params);
std::array<cplx, moment_count> moment_rhs(const MomentState& state, const ModelParams& params);

// Relabel b+ <-> b- in a moment state (used with apply_symmetry_T).
MomentState swap_labels(const MomentState& state);

inline constexpr double moment_divergence_limit = 1e12;

struct MomentTrajectory {
    std::vector<MomentState> samples;
    IntegrationStatus status{IntegrationStatus::ok};
    double dt_used{0.0};
    int halvings{0};
    bool halving_converged{true};
};

MomentTrajectory integrate_moments(const MomentState& initial, const ModelParams& params,
                                   const IntegrationSettings& settings);

// Real populations (n+, n-). Throws NumericalError when an imaginary part
// exceeds 1e-6 (1 + |value|).
std::pair<double, double> populations(const MomentState& state);

struct PopulationSeries {
    std::vector<double> times;
    std::vector<double> n_plus;
    std::vector<double> n_minus;
};

PopulationSeries population_series(const MomentTrajectory& trajectory);

// Closed-form <N+-(t)> of the BEC analogue from an empty start. Throws
// SingularInput for q = 0 or q = 2 Lambda.
double bec_population_analytic(double t, double q, double Lambda);

} // namespace dicke
