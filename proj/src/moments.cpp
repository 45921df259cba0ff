// moments.cpp — Moment equations, integration, BEC closed forms

#include "dicke/moments.hpp"

#include <cmath>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {

namespace {
constexpr cplx I{0.0, 1.0};
} // namespace

std::string_view moment_name(Moment m) {
    switch (m) {
    case Moment::A: return "A";
    case Moment::A_dag: return "A_dag";
    case Moment::B: return "B";
    case Moment::B_dag: return "B_dag";
    case Moment::n_plus: return "n_plus";
    case Moment::n_minus: return "n_minus";
    case Moment::bp_bp: return "bp_bp";
    case Moment::bm_bm: return "bm_bm";
    case Moment::bpd_bpd: return "bpd_bpd";
    case Moment::bmd_bmd: return "bmd_bmd";
    case Moment::bp_bm: return "bp_bm";
    case Moment::bpd_bmd: return "bpd_bmd";
    case Moment::bp_bmd: return "bp_bmd";
    case Moment::bpd_bm: return "bpd_bm";
    }
    return "?";
}

std::array<cplx, moment_count> moment_rhs(const MomentState& s, const DerivedCouplings& d,
                                          const ModelParams& params) {
    const double q = params.q();
    const double w0 = params.omega0();
    const double L = d.Lambda_sum();
    const double S = d.Lambda_geo();
    const double G = d.Gamma_diff();
    const double Gg = d.Gamma_geo();
    const double Gp = d.Gamma_plus;
    const double Gm = d.Gamma_minus;

    const cplx A = s[Moment::A], Ad = s[Moment::A_dag], B = s[Moment::B], Bd = s[Moment::B_dag];
    const cplx np = s[Moment::n_plus], nm = s[Moment::n_minus];
    const cplx Xp = s[Moment::bp_bp], Xm = s[Moment::bm_bm];
    const cplx Xpd = s[Moment::bpd_bpd], Xmd = s[Moment::bmd_bmd];
    const cplx P = s[Moment::bp_bm], Pd = s[Moment::bpd_bmd];
    const cplx C = s[Moment::bp_bmd], Cd = s[Moment::bpd_bm];

    std::array<cplx, moment_count> r{};
    auto at = [&r](Moment m) -> cplx& { return r[static_cast<std::size_t>(m)]; };

    // First-order block.
    at(Moment::A) = I * w0 * A + I * q * B;
    at(Moment::A_dag) = -I * w0 * Ad - I * q * Bd;
    at(Moment::B) = (I * q + 2.0 * (G - I * L)) * A - 4.0 * I * S * Ad + I * w0 * B;
    at(Moment::B_dag) = 4.0 * I * S * A + (-I * q + 2.0 * (G + I * L)) * Ad - I * w0 * Bd;

    // Second-order block.
    at(Moment::n_plus) = I * L * (Pd - P) + 2.0 * I * S * (Xpd - Xp + Cd - C) +
                         G * (2.0 * np + P + Pd) + 2.0 * Gp;
    at(Moment::bp_bp) = -2.0 * I * (q + w0) * Xp + 2.0 * (G + I * L) * (Xp + C) +
                        4.0 * I * S * (np + P) + 2.0 * I * S - 2.0 * Gg;
    at(Moment::bp_bm) = -2.0 * I * (q - L) * P + I * L * (np + nm) - G * (np - nm) +
                        2.0 * I * S * (Xp + Xm + C + Cd) - (Gp + Gm) + I * L;
    at(Moment::bp_bmd) = -2.0 * I * w0 * C + (G + I * L) * (Xmd - Xp) +
                         2.0 * I * S * (nm - np + Pd - P) + 2.0 * Gg;

    at(Moment::n_minus) = I * L * (Pd - P) + 2.0 * I * S * (Xmd - Xm + C - Cd) -
                          G * (2.0 * nm + P + Pd) + 2.0 * Gm;
    at(Moment::bm_bm) = -2.0 * I * (q - w0) * Xm + 2.0 * (-G + I * L) * (Xm + Cd) +
                        4.0 * I * S * (nm + P) + 2.0 * I * S - 2.0 * Gg;
    at(Moment::bpd_bpd) = 2.0 * I * (q + w0) * Xpd + 2.0 * (G - I * L) * (Xpd + Cd) -
                          4.0 * I * S * (np + Pd) - 2.0 * I * S - 2.0 * Gg;
    at(Moment::bmd_bmd) = 2.0 * I * (q - w0) * Xmd + 2.0 * (-G - I * L) * (Xmd + C) -
                          4.0 * I * S * (nm + Pd) - 2.0 * I * S - 2.0 * Gg;
    at(Moment::bpd_bmd) = 2.0 * I * (q - L) * Pd - I * L * (np + nm) - G * (np - nm) -
                          2.0 * I * S * (Xpd + Xmd + Cd + C) - (Gp + Gm) - I * L;
    at(Moment::bpd_bm) = 2.0 * I * w0 * Cd + (G - I * L) * (Xm - Xpd) -
                         2.0 * I * S * (nm - np + P - Pd) + 2.0 * Gg;
    return r;
}

std::array<cplx, moment_count> moment_rhs(const MomentState& state, const ModelParams& params) {
    return moment_rhs(state, derive_couplings(params), params);
}

MomentState swap_labels(const MomentState& s) {
    // A = b+^dag + b- maps to b-^dag + b+ = A^dag; B = b+^dag - b- maps to -B^dag.
    MomentState out;
    out.t = s.t;
    out[Moment::A] = s[Moment::A_dag];
    out[Moment::A_dag] = s[Moment::A];
    out[Moment::B] = -s[Moment::B_dag];
    out[Moment::B_dag] = -s[Moment::B];
    out[Moment::n_plus] = s[Moment::n_minus];
    out[Moment::n_minus] = s[Moment::n_plus];
    out[Moment::bp_bp] = s[Moment::bm_bm];
    out[Moment::bm_bm] = s[Moment::bp_bp];
    out[Moment::bpd_bpd] = s[Moment::bmd_bmd];
    out[Moment::bmd_bmd] = s[Moment::bpd_bpd];
    out[Moment::bp_bm] = s[Moment::bp_bm];
    out[Moment::bpd_bmd] = s[Moment::bpd_bmd];
    out[Moment::bp_bmd] = s[Moment::bpd_bm];
    out[Moment::bpd_bm] = s[Moment::bp_bmd];
    return out;
}

MomentTrajectory integrate_moments(const MomentState& initial, const ModelParams& params,
                                   const IntegrationSettings& settings) {
    if (!(settings.dt > 0.0) || !(settings.t_end > 0.0)) {
        throw InvalidParameter("integrate_moments requires dt > 0 and t_end > 0");
    }
    const DerivedCouplings d = derive_couplings(params);
    auto f = [&](const CVec<moment_count>& y) {
        MomentState s;
        s.values = y;
        return moment_rhs(s, d, params);
    };
    const RawTrajectory<moment_count> raw =
        integrate_with_halving(f, initial.values, settings, moment_divergence_limit);

    MomentTrajectory out;
    out.status = raw.status;
    out.dt_used = raw.dt;
    out.halvings = raw.halvings;
    out.halving_converged = raw.halving_converged;
    out.samples.reserve(raw.times.size());
    for (std::size_t i = 0; i < raw.times.size(); ++i) {
        MomentState s;
        s.values = raw.states[i];
        s.t = initial.t + raw.times[i];
        out.samples.push_back(s);
    }
    return out;
}

std::pair<double, double> populations(const MomentState& s) {
    auto real_checked = [](cplx v, const char* name) {
        if (std::abs(v.imag()) >= 1e-6 * (1.0 + std::abs(v.real()))) {
            throw NumericalError(std::string("population ") + name +
                                 " has a spurious imaginary part " + std::to_string(v.imag()));
        }
        return v.real();
    };
    return {real_checked(s[Moment::n_plus], "n_plus"), real_checked(s[Moment::n_minus], "n_minus")};
}

PopulationSeries population_series(const MomentTrajectory& trajectory) {
    PopulationSeries series;
    series.times.reserve(trajectory.samples.size());
    series.n_plus.reserve(trajectory.samples.size());
    series.n_minus.reserve(trajectory.samples.size());
    for (const MomentState& s : trajectory.samples) {
        const auto [np, nm] = populations(s);
        series.times.push_back(s.t);
        series.n_plus.push_back(np);
        series.n_minus.push_back(nm);
    }
    return series;
}

double bec_population_analytic(double t, double q, double Lambda) {
    const double nu = q * (q - 2.0 * Lambda);
    if (q == 0.0 || nu == 0.0) {
        throw SingularInput("BEC population closed form is singular at q = 0 and q = 2 Lambda");
    }
    if (nu > 0.0) {
        const double s = std::sin(std::sqrt(nu) * t);
        return Lambda * Lambda / nu * s * s;
    }
    const double s = std::sinh(std::sqrt(-nu) * t);
    return Lambda * Lambda / (-nu) * s * s;
}

} // namespace dicke
