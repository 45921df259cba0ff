// acceptance.cpp — One PASS/FAIL line per acceptance criterion; exit status is the failure count

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dicke/eigensolver.hpp"
#include "dicke/moments.hpp"
#include "dicke/phase_map.hpp"
#include "dicke/semiclassical.hpp"
#include "dicke/stability.hpp"
#include "support.hpp"

using namespace dicke;
using dicke::testing::multiset_distance;
using dicke::testing::max_modulus;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

char buf[512];

template <class... Args>
std::string fmt(const char* f, Args... args) {
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// 1. Seven-region regression on the Delta_- = 0, omega0 = 5 Delta_+ slice.
Outcome seven_regions() {
    const double dp = 1.0, dm = 0.0, w0 = 5.0;
    bool ok = true;
    std::string d;
    for (double q : {-10.0, -1.0, 4.0, 14.0}) {
        const double m = closed_eigenvalues_analytic(dp, dm, w0, q).max_re;
        ok = ok && std::abs(m) <= 1e-9;
        d += fmt("q=%g max_re=%.2e; ", q, m);
    }
    for (double q : {-4.0, 2.0, 8.0}) {
        const double m = closed_eigenvalues_analytic(dp, dm, w0, q).max_re;
        ok = ok && m > 1e-6;
        d += fmt("q=%g max_re=%.3g; ", q, m);
    }
    const std::vector<double> expect = {-5.0, 4.0 - std::sqrt(41.0), 0.0, 100.0 / 29.0, 5.0,
                                        4.0 + std::sqrt(41.0)};
    const std::vector<double> got = closed_boundaries(dp, dm, w0).sorted();
    double err = got.size() == expect.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; err < INFINITY && i < got.size(); ++i) {
        err = std::max(err, std::abs(got[i] - expect[i]));
    }
    ok = ok && err <= 1e-10;
    d += fmt("boundary max err %.1e", err);
    return {ok, d};
}

// 2. BEC analytic oracle for the moment integrator.
Outcome bec_oracle() {
    double worst = 0.0;
    std::string d;
    for (const auto& [q, L] : std::vector<std::pair<double, double>>{{3.0, 1.0}, {1.0, 1.0}}) {
        // Lambda_- = lambda_-^2 / omega with omega = 1.
        const ModelParams p({1.0, 0.0, q, 0.0, std::sqrt(L), 0.0});
        IntegrationSettings s;
        s.t_end = 10.0;
        const PopulationSeries series = population_series(integrate_moments(MomentState::vacuum(), p, s));
        double rel = 0.0;
        for (std::size_t i = 0; i < series.times.size(); ++i) {
            const double t = series.times[i];
            if (t == 0.0) continue; // both sides vanish exactly
            const double exact = bec_population_analytic(t, q, L);
            rel = std::max({rel, std::abs(series.n_plus[i] - exact) / exact,
                            std::abs(series.n_minus[i] - exact) / exact});
        }
        worst = std::max(worst, rel);
        d += fmt("(q=%g,L=%g) max rel err %.2e over %zu samples; ", q, L, rel, series.times.size());
    }
    return {worst < 1e-6, d};
}

// 3. Analytic vs numeric closed-system eigenvalues on random points.
Outcome eigen_fuzz() {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> coupling(0.0, 3.0), signed_rate(-6.0, 6.0), freq(0.2, 5.0);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const ModelParams p({freq(rng), signed_rate(rng), signed_rate(rng), coupling(rng), coupling(rng), 0.0});
        const auto analytic = closed_eigenvalues_analytic(p).eigenvalues;
        const auto numeric = eigenvalues_numeric(closed_matrix(p)).eigenvalues;
        const double scale = 1.0 + std::max(max_modulus(analytic), max_modulus(numeric));
        worst = std::max(worst, multiset_distance(analytic, numeric) / scale);
    }
    return {worst < 1e-8, fmt("1000 points, worst scaled multiset distance %.2e", worst)};
}

// 4. Critical decay crossover of the open determinant roots.
Outcome critical_kappa_crossover() {
    bool ok = true;
    std::string d = fmt("kappa_c=%.6f; ", critical_kappa(from_effective_couplings(0.5, 1.0, 1.0, 0.0, 0.0, 0.0)));
    for (double w0 : {0.5, 1.0, 2.0}) {
        const OpenBoundarySet below = open_determinant_roots(from_effective_couplings(0.5, 1.0, 1.0, 2.82, w0, 0.0));
        const OpenBoundarySet above = open_determinant_roots(from_effective_couplings(0.5, 1.0, 1.0, 2.84, w0, 0.0));
        double max_im_below = 0.0, min_im_above = INFINITY;
        for (const cplx& r : below.roots) max_im_below = std::max(max_im_below, std::abs(r.imag()));
        for (const cplx& r : above.roots) min_im_above = std::min(min_im_above, std::abs(r.imag()));
        ok = ok && below.real && max_im_below == 0.0 && !above.real && min_im_above > 1e-6;
        d += fmt("w0=%g: below max|Im|=%.1e, above min|Im|=%.2e; ", w0, max_im_below, min_im_above);
    }
    return {ok, d};
}

// 5. Population conservation of the full model, non-conservation of the adiabatic one.
Outcome conservation() {
    bool ok = true;
    double worst_rate = 0.0;
    IntegrationSettings s;
    s.t_end = 200.0;
    for (const auto& f : dicke::testing::phase_fixtures()) {
        const auto traj = integrate_semiclassical(SemiclassicalSystem::full, default_seed(), ModelParams(f.rates), s);
        ok = ok && traj.status == IntegrationStatus::ok;
        const double n0 = total_population(traj.samples.front());
        for (const FullState& x : traj.samples) {
            // Drift budget grows linearly in time; the first unit of time gets a full unit.
            const double rate = std::abs(total_population(x) - n0) / std::max(x.t, 1.0);
            worst_rate = std::max(worst_rate, rate);
        }
    }
    ok = ok && worst_rate < 1e-8;
    // Adiabatic model at kappa = 0.5 Lambda_-, Lambda_+ = omega0 = 0.5 Lambda_-, q = -Lambda_-.
    const ModelParams p = from_effective_couplings(0.5, 1.0, 1.0, 0.5, 0.5, -1.0);
    IntegrationSettings unit;
    unit.t_end = 1.0;
    const auto ad = integrate_semiclassical(SemiclassicalSystem::adiabatic, default_seed(), p, unit);
    const double violation = std::abs(total_population(ad.samples.back()) - total_population(ad.samples.front()));
    ok = ok && violation > 1e-6;
    return {ok, fmt("full model worst drift rate %.2e per unit time; adiabatic |dN| over unit time %.3g",
                    worst_rate, violation)};
}

// 6. Spin length conserved at q = 0, not at q = 0.5.
Outcome spin_length() {
    IntegrationSettings s;
    s.t_end = 100.0; // lambda_- t = 200 with lambda_- = 2 omega
    auto spread = [&](char panel) {
        const auto traj = integrate_semiclassical(SemiclassicalSystem::full, default_seed(),
                                                  dicke::testing::fixture(panel), s);
        const double s0 = spin_expectations(traj.samples.front()).s_len2;
        double worst = 0.0;
        for (const FullState& x : traj.samples) {
            worst = std::max(worst, std::abs(spin_expectations(x).s_len2 - s0) / s0);
        }
        return worst;
    };
    const double conserved = spread('e');
    const double broken = spread('g');
    return {conserved < 1e-6 && broken > 1e-2,
            fmt("q=0 max rel deviation %.2e; q=0.5 max rel deviation %.3g", conserved, broken)};
}

// 7. Phase classification of the three basic phases.
Outcome phase_fixtures() {
    const PhaseLabel expect[] = {PhaseLabel::NormalPhase, PhaseLabel::Superradiant, PhaseLabel::Oscillatory};
    const char panels[] = {'a', 'b', 'c'};
    bool ok = true;
    std::string d;
    for (int i = 0; i < 3; ++i) {
        const PhaseCell c = phase_point(dicke::testing::fixture(panels[i]), default_seed(), PhaseWindow{},
                                        PhaseThresholds{}, IntegrationSettings{});
        ok = ok && c.label == expect[i];
        d += fmt("(%c) %s mean=%.3g amp=%.3g; ", panels[i], to_string(c.label), c.stats.mean, c.stats.amplitude);
    }
    return {ok, d};
}

// 8. Exchange-symmetry equivariance of integrated trajectories.
Outcome equivariance() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coupling(0.0, 2.0), rate(-2.0, 2.0), pos(0.2, 2.0), decay(0.0, 1.5);
    IntegrationSettings s;
    s.t_end = 20.0;
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const ModelParams p({pos(rng), rate(rng), rate(rng), coupling(rng), coupling(rng), decay(rng)});
        FullState seed{dicke::testing::random_cplx(rng, 0.3), dicke::testing::random_cplx(rng, 0.3),
                       dicke::testing::random_cplx(rng, 0.3), dicke::testing::random_cplx(rng, 1.0), 0.0};
        const auto system = n % 2 == 0 ? SemiclassicalSystem::full : SemiclassicalSystem::adiabatic;
        const auto a = integrate_semiclassical(system, seed, p, s);
        const auto b = integrate_semiclassical(system, swap_labels(seed), apply_symmetry_T(p), s);
        if (a.samples.size() != b.samples.size() || a.status != b.status) {
            worst = INFINITY;
            break;
        }
        for (std::size_t i = 0; i < a.samples.size(); ++i) {
            const FullState x = swap_labels(b.samples[i]);
            const FullState& y = a.samples[i];
            worst = std::max({worst, std::abs(x.alpha - y.alpha), std::abs(x.beta_plus - y.beta_plus),
                              std::abs(x.beta_minus - y.beta_minus), std::abs(x.beta_zero - y.beta_zero)});
        }
    }
    return {worst <= 1e-8, fmt("100 draws (full and adiabatic), worst pointwise deviation %.2e", worst)};
}

double first_maximum(const SemiclassicalTrajectory& traj) {
    for (std::size_t i = 1; i + 1 < traj.samples.size(); ++i) {
        const double a = std::norm(traj.samples[i - 1].beta_plus);
        const double b = std::norm(traj.samples[i].beta_plus);
        const double c = std::norm(traj.samples[i + 1].beta_plus);
        if (b > a && b >= c) return b;
    }
    return NAN;
}

double peak(const SemiclassicalTrajectory& traj) {
    double m = 0.0;
    for (const FullState& x : traj.samples) m = std::max(m, std::norm(x.beta_plus));
    return m;
}

// 9. Dispersive limit: full model vs adiabatic model with Lambda = lambda^2 / omega.
Outcome dispersive_limit() {
    IntegrationSettings s;
    s.t_end = 20.0; // lambda_- t = 20
    bool heights = true;
    std::string d;
    double small = 0.0, large = 0.0;
    for (double q : {-1.0, 1.0}) {
        const ModelParams p({10.0, 0.0, q, 0.5, 1.0, 0.0});
        const auto full = integrate_semiclassical(SemiclassicalSystem::full, default_seed(), p, s);
        const auto ad = integrate_semiclassical(SemiclassicalSystem::adiabatic, default_seed(), p, s);
        const double hf = first_maximum(full), ha = first_maximum(ad);
        const double rel = std::abs(ha - hf) / hf;
        heights = heights && rel < 0.05;
        d += fmt("q=%+g: first n+ max full %.4g vs adiabatic %.4g (rel %.2g); ", q, hf, ha, rel);
        (q < 0 ? small : large) = peak(full);
    }
    const bool dichotomy = small < 0.01 && large > 0.1;
    d += fmt("dichotomy %s (peak n+ %.3g vs %.3g)", dichotomy ? "holds" : "fails", small, large);
    return {heights && dichotomy, d};
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

} // namespace

// With no arguments every criterion runs; `acceptance N` runs criterion N only.
int main(int argc, char** argv) {
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    const std::vector<Criterion> criteria = {
        {1, "seven-region regression", 1.0, seven_regions},
        {2, "BEC analytic oracle", 5.0, bec_oracle},
        {3, "analytic vs numeric eigenvalue fuzz", 10.0, eigen_fuzz},
        {4, "critical kappa crossover", 1.0, critical_kappa_crossover},
        {5, "conservation suite", 30.0, conservation},
        {6, "spin-length law", 30.0, spin_length},
        {7, "phase classification fixtures", 30.0, phase_fixtures},
        {8, "exchange-symmetry equivariance", 60.0, equivariance},
        {9, "dispersive-limit cross-check", 60.0, dispersive_limit},
    };
    int failures = 0;
    int ran = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        ++ran;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget_s;
        const bool pass = o.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("[%s] %d. %s (%.2f s, budget %.0f s%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.budget_s, in_time ? "" : ", OVER BUDGET", o.detail.c_str());
        std::fflush(stdout);
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion numbered %d\n", only);
        return 2;
    }
    std::printf("%d of %d criteria passed\n", ran - failures, ran);
    return failures == 0 ? 0 : 1;
}
