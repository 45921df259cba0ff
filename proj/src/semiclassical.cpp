// semiclassical.cpp — Adiabatic and full mean-field equations and observables

#include "dicke/semiclassical.hpp"

#include <algorithm>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

constexpr cplx I{0.0, 1.0};

CVec<4> to_vec(const FullState& s) { return {s.alpha, s.beta_plus, s.beta_minus, s.beta_zero}; }
FullState from_vec(const CVec<4>& v, double t) { return {v[0], v[1], v[2], v[3], t}; }
CVec<3> to_vec(const AdiabaticState& s) { return {s.beta_plus, s.beta_minus, s.beta_zero}; }
AdiabaticState adiabatic_from_vec(const CVec<3>& v, double t) { return {v[0], v[1], v[2], t}; }

// Projections onto one sublevel's equation; the other sublevel is obtained by
// calling these with exchanged couplings, negated omega0 and swapped amplitudes.
struct SublevelCouplings {
    double Lambda_self;   // Lambda_- in the beta_+ equation
    double Gamma_self;    // Gamma_- in the beta_+ equation
    double Gamma_diff;    // Gamma_+ - Gamma_- in the beta_+ equation
    double omega0;
};

cplx adiabatic_sublevel_rate(const SublevelCouplings& c, double q, double L, double S, double Gg,
                             cplx self, cplx other, cplx b0) {
    const double b0_abs2 = std::norm(b0);
    const cplx b0_sq = b0 * b0;
    return (I * c.Lambda_self - I * (q + c.omega0) - c.Gamma_self) * self +
           (I * S - Gg) * other +
           (I * L + c.Gamma_diff) * (self * b0_abs2 + std::conj(other) * b0_sq) +
           2.0 * I * S * (other * b0_abs2 + std::conj(self) * b0_sq);
}

cplx full_sublevel_rate(double detuning, double lambda_co, double lambda_counter, cplx alpha,
                        cplx self, cplx b0) {
    return -I * detuning * self - 2.0 * I * (lambda_co * alpha + lambda_counter * std::conj(alpha)) * b0;
}

} // namespace

FullState default_seed() {
    return {cplx(0.0), cplx(std::sqrt(0.001)), cplx(std::sqrt(0.001)), cplx(std::sqrt(0.998)), 0.0};
}

AdiabaticState atomic_part(const FullState& s) {
    return {s.beta_plus, s.beta_minus, s.beta_zero, s.t};
}

FullState swap_labels(const FullState& s) {
    return {s.alpha, s.beta_minus, s.beta_plus, s.beta_zero, s.t};
}

AdiabaticState swap_labels(const AdiabaticState& s) {
    return {s.beta_minus, s.beta_plus, s.beta_zero, s.t};
}

AdiabaticState adiabatic_rhs(const AdiabaticState& s, const DerivedCouplings& d,
                             const ModelParams& params) {
    const double q = params.q();
    const double L = d.Lambda_sum();
    const double S = d.Lambda_geo();
    const double Gg = d.Gamma_geo();
    const double G = d.Gamma_diff();

    const SublevelCouplings plus{d.Lambda_minus, d.Gamma_minus, G, params.omega0()};
    const SublevelCouplings minus{d.Lambda_plus, d.Gamma_plus, -G, -params.omega0()};

    const cplx bp = s.beta_plus, bm = s.beta_minus, b0 = s.beta_zero;
    const cplx b0c = std::conj(b0);
    const double np = std::norm(bp), nm = std::norm(bm);

    AdiabaticState r;
    r.beta_plus = adiabatic_sublevel_rate(plus, q, L, S, Gg, bp, bm, b0);
    r.beta_minus = adiabatic_sublevel_rate(minus, q, L, S, Gg, bm, bp, b0);
    r.beta_zero = I * L * (2.0 * (bp * bm) * b0c + (np + nm) * b0 + b0) +
                  2.0 * I * S * ((bp * bp + bm * bm) * b0c + (bp * std::conj(bm) + std::conj(bp) * bm) * b0) -
                  G * (np - nm) * b0 + (d.Gamma_plus + d.Gamma_minus) * b0;
    r.t = 1.0;
    return r;
}

AdiabaticState adiabatic_rhs(const AdiabaticState& s, const ModelParams& params) {
    return adiabatic_rhs(s, derive_couplings(params), params);
}

FullState full_rhs(const FullState& s, const ModelParams& p) {
    const double lp = p.lambda_plus();
    const double lm = p.lambda_minus();
    const cplx a = s.alpha, bp = s.beta_plus, bm = s.beta_minus, b0 = s.beta_zero;
    const cplx ac = std::conj(a), b0c = std::conj(b0);

    FullState r;
    r.alpha = -(p.kappa() + I * p.omega()) * a -
              2.0 * I * (lm * (bp * b0c + std::conj(bm) * b0) + lp * (std::conj(bp) * b0 + bm * b0c));
    r.beta_plus = full_sublevel_rate(p.q() + p.omega0(), lm, lp, a, bp, b0);
    r.beta_minus = full_sublevel_rate(p.q() - p.omega0(), lp, lm, a, bm, b0);
    r.beta_zero = -2.0 * I * (lm * (a * bm + ac * bp) + lp * (a * bp + ac * bm));
    r.t = 1.0;
    return r;
}

double total_population(const FullState& s) {
    return std::norm(s.beta_plus) + std::norm(s.beta_minus) + std::norm(s.beta_zero);
}

double total_population(const AdiabaticState& s) {
    return std::norm(s.beta_plus) + std::norm(s.beta_minus) + std::norm(s.beta_zero);
}

SpinExpectation spin_expectations(const AdiabaticState& s) {
    const cplx s_plus = std::sqrt(2.0) * (std::conj(s.beta_plus) * s.beta_zero +
                                          std::conj(s.beta_zero) * s.beta_minus);
    SpinExpectation e;
    e.s_x = s_plus.real();
    e.s_y = s_plus.imag();
    e.s_z = std::norm(s.beta_plus) - std::norm(s.beta_minus);
    e.s_len2 = e.s_x * e.s_x + e.s_y * e.s_y + e.s_z * e.s_z;
    return e;
}

SpinExpectation spin_expectations(const FullState& s) { return spin_expectations(atomic_part(s)); }

double hamiltonian_energy(const FullState& s, const ModelParams& p) {
    const cplx a = s.alpha, bp = s.beta_plus, bm = s.beta_minus, b0 = s.beta_zero;
    const double np = std::norm(bp), nm = std::norm(bm);
    // Coupling terms pair the cavity amplitude with the atomic raising amplitude.
    const cplx raise = std::conj(bp) * b0 + std::conj(b0) * bm;
    return p.omega() * std::norm(a) + p.omega0() * (np - nm) + p.q() * (np + nm) +
           4.0 * p.lambda_minus() * (a * raise).real() +
           4.0 * p.lambda_plus() * (std::conj(a) * raise).real();
}

SemiclassicalTrajectory integrate_semiclassical(SemiclassicalSystem system,
                                                const FullState& initial,
                                                const ModelParams& params,
                                                const IntegrationSettings& settings) {
    if (!(settings.dt > 0.0)) {
        throw InvalidParameter("integrate_semiclassical requires dt > 0");
    }
    if (!(settings.t_end > 0.0)) {
        throw InvalidParameter("integrate_semiclassical requires t_end > 0");
    }
    SemiclassicalTrajectory out;
    out.system = system;

    const double n0 = total_population(initial);
    const double s0 = spin_expectations(initial).s_len2;
    ConservationDiagnostics diag;
    auto make_observer = [&diag, n0, s0](auto to_state) {
        return [&diag, n0, s0, to_state](double, const auto& y) {
            const AdiabaticState atoms = to_state(y);
            diag.max_population_drift =
                std::max(diag.max_population_drift, std::abs(total_population(atoms) - n0));
            if (s0 > 0.0) {
                diag.max_spin_length_drift = std::max(
                    diag.max_spin_length_drift, std::abs(spin_expectations(atoms).s_len2 - s0) / s0);
            }
        };
    };

    auto finish = [&](const auto& raw, auto to_full) {
        out.status = raw.status;
        out.dt_used = raw.dt;
        out.halvings = raw.halvings;
        out.halving_converged = raw.halving_converged;
        out.diagnostics = diag;
        out.samples.reserve(raw.times.size());
        for (std::size_t i = 0; i < raw.times.size(); ++i) {
            out.samples.push_back(to_full(raw.states[i], initial.t + raw.times[i]));
        }
    };

    if (system == SemiclassicalSystem::full) {
        auto f = [&params](const CVec<4>& y) { return to_vec(full_rhs(from_vec(y, 0.0), params)); };
        auto to_atoms = [](const CVec<4>& y) { return AdiabaticState{y[1], y[2], y[3], 0.0}; };
        const auto raw = integrate_with_halving(f, to_vec(initial), settings,
                                                semiclassical_divergence_limit, [&] {
                                                    diag = {};
                                                    return make_observer(to_atoms);
                                                });
        finish(raw, [](const CVec<4>& y, double t) { return from_vec(y, t); });
    } else {
        const DerivedCouplings d = derive_couplings(params);
        auto f = [&](const CVec<3>& y) {
            return to_vec(adiabatic_rhs(adiabatic_from_vec(y, 0.0), d, params));
        };
        auto to_atoms = [](const CVec<3>& y) { return AdiabaticState{y[0], y[1], y[2], 0.0}; };
        const auto raw = integrate_with_halving(f, to_vec(atomic_part(initial)), settings,
                                                semiclassical_divergence_limit, [&] {
                                                    diag = {};
                                                    return make_observer(to_atoms);
                                                });
        finish(raw, [](const CVec<3>& y, double t) { return FullState{cplx(0.0), y[0], y[1], y[2], t}; });
    }
    return out;
}

} // namespace dicke
