// semiclassical.hpp — Mean-field c-number dynamics beyond the undepleted approximation
//
// Two systems: the adiabatically eliminated atomic equations (beta_+, beta_-, beta_0)
// and the full cavity + atom equations (alpha, beta_+, beta_-, beta_0). Amplitudes
// are normalized so that the atomic populations sum to 1. In both systems the
// beta_- equation is generated from the beta_+ equation by the exchange symmetry,
// which makes every right-hand side exactly equivariant in floating point.

#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "dicke/model.hpp"
#include "dicke/rk4.hpp"

namespace dicke {

struct AdiabaticState {
    cplx beta_plus{};
    cplx beta_minus{};
    cplx beta_zero{};
    double t{0.0};
};

struct FullState {
    cplx alpha{};
    cplx beta_plus{};
    cplx beta_minus{};
    cplx beta_zero{};
    double t{0.0};
};

// (alpha, beta_+, beta_-, beta_0) = (0, sqrt 0.001, sqrt 0.001, sqrt 0.998).
FullState default_seed();
AdiabaticState atomic_part(const FullState& s);

// Exchange b+ <-> b- on a state, the operator half of apply_symmetry_T.
FullState swap_labels(const FullState& s);
AdiabaticState swap_labels(const AdiabaticState& s);

// Time derivatives of every amplitude; the returned t field is dt/dt = 1.
AdiabaticState adiabatic_rhs(const AdiabaticState& state, const DerivedCouplings& d,
                             const ModelParams& params);
AdiabaticState adiabatic_rhs(const AdiabaticState& state, const ModelParams& params);
FullState full_rhs(const FullState& state, const ModelParams& params);

enum class SemiclassicalSystem { adiabatic, full };

inline constexpr double semiclassical_divergence_limit = 1e6;

struct ConservationDiagnostics {
    double max_population_drift{0.0};  // max |N(t) - N(0)| over every step
    double max_spin_length_drift{0.0}; // max |s^2(t) - s^2(0)| / s^2(0) over every step
};

// Samples are stored as FullState for both systems; alpha stays 0 for the
// adiabatic system, which has no cavity amplitude.
struct SemiclassicalTrajectory {
    SemiclassicalSystem system{SemiclassicalSystem::full};
    std::vector<FullState> samples;
    IntegrationStatus status{IntegrationStatus::ok};
    double dt_used{0.0};
    int halvings{0};
    bool halving_converged{true};
    ConservationDiagnostics diagnostics;
};

SemiclassicalTrajectory integrate_semiclassical(SemiclassicalSystem system,
                                                const FullState& initial,
                                                const ModelParams& params,
                                                const IntegrationSettings& settings);

// |beta_+|^2 + |beta_-|^2 + |beta_0|^2; the cavity amplitude is excluded.
double total_population(const FullState& s);
double total_population(const AdiabaticState& s);

inline double cavity_population(const FullState& s) { return std::norm(s.alpha); }

struct SpinExpectation {
    double s_x{0.0};
    double s_y{0.0};
    double s_z{0.0};
    double s_len2{0.0};
};

SpinExpectation spin_expectations(const FullState& s);
SpinExpectation spin_expectations(const AdiabaticState& s);

// Mean-field energy generating the kappa = 0 full equations; conserved when kappa = 0.
double hamiltonian_energy(const FullState& state, const ModelParams& params);

} // namespace dicke
