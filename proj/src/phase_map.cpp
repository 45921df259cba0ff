// phase_map.cpp — Window statistics, phase labels, (lambda+, lambda-) sweeps, chaos score

#include "dicke/phase_map.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "dicke/errors.hpp"
#include "dicke/parallel.hpp"

namespace dicke {

namespace {

void check_axis(std::span<const double> axis, const char* name) {
    if (axis.empty()) {
        throw InvalidParameter(std::string(name) + " must be nonempty");
    }
    for (double v : axis) {
        if (!std::isfinite(v)) {
            throw InvalidParameter(std::string(name) + " must be finite");
        }
    }
}

CVec<4> pack(const FullState& s) { return {s.alpha, s.beta_plus, s.beta_minus, s.beta_zero}; }

// Phase charges of (alpha, beta_+, beta_-, beta_0) under the flow's continuous
// symmetries. A global atomic phase always leaves the equations invariant; a
// vanishing coupling adds one more rotation.
using Charges = std::array<int, 4>;

std::vector<Charges> symmetry_charges(const ModelParams& p) {
    std::vector<Charges> c{{0, 1, 1, 1}};
    if (p.lambda_plus() == 0.0) c.push_back({1, 1, -1, 0});
    if (p.lambda_minus() == 0.0) c.push_back({-1, 1, -1, 0});
    return c;
}

// Moves the twin onto the reference's population shell and to the nearest
// point of its symmetry orbit, so separation along neutral directions is not
// counted as growth.
void align_twin(CVec<4>& twin, const CVec<4>& ref, const std::vector<Charges>& charges) {
    double n_ref = 0.0, n_twin = 0.0;
    for (std::size_t k = 1; k < 4; ++k) {
        n_ref += std::norm(ref[k]);
        n_twin += std::norm(twin[k]);
    }
    if (n_ref > 0.0 && n_twin > 0.0) {
        const double scale = std::sqrt(n_ref / n_twin);
        for (std::size_t k = 1; k < 4; ++k) twin[k] *= scale;
    }
    // Coordinate descent over commuting rotations; each step is exact.
    for (int sweep = 0; sweep < (charges.size() > 1 ? 8 : 1); ++sweep) {
        for (const Charges& c : charges) {
            cplx overlap = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                const cplx z = std::conj(twin[k]) * ref[k];
                if (c[k] == 1) overlap += z;
                if (c[k] == -1) overlap += std::conj(z);
            }
            if (overlap == 0.0) continue;
            const double theta = std::arg(overlap);
            for (std::size_t k = 0; k < 4; ++k) {
                if (c[k] != 0) twin[k] *= std::polar(1.0, c[k] * theta);
            }
        }
    }
}

double distance(const CVec<4>& a, const CVec<4>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        sum += std::norm(a[i] - b[i]);
    }
    return std::sqrt(sum);
}

} // namespace

WindowStats window_stats(std::span<const double> times, std::span<const double> values,
                         double t_start, double t_end) {
    if (times.size() != values.size()) {
        throw InvalidParameter("window_stats: times and values differ in length");
    }
    if (!(t_end > t_start)) {
        throw InvalidParameter("window_stats: empty window");
    }
    if (times.empty()) {
        throw InvalidParameter("window_stats: empty series");
    }
    // Slack of one part in 1e9 absorbs sample times accumulated in floating point.
    const double slack = 1e-9 * std::max(1.0, std::abs(t_end));
    if (t_start < times.front() - slack || t_end > times.back() + slack) {
        throw InvalidParameter("window_stats: window outside the sampled range");
    }
    WindowStats s;
    s.t_start = t_start;
    s.t_end = t_end;
    double lo = INFINITY, hi = -INFINITY, sum = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < t_start - slack || times[i] > t_end + slack) {
            continue;
        }
        lo = std::min(lo, values[i]);
        hi = std::max(hi, values[i]);
        sum += values[i];
        ++s.samples;
    }
    if (s.samples < window_min_samples) {
        throw InvalidParameter("window_stats: fewer than 10 samples in window");
    }
    s.mean = sum / double(s.samples);
    s.amplitude = (hi - lo) / 2.0;
    return s;
}

const char* to_string(PhaseLabel label) {
    switch (label) {
    case PhaseLabel::NormalPhase: return "NP";
    case PhaseLabel::Superradiant: return "SP";
    case PhaseLabel::Oscillatory: return "OP";
    case PhaseLabel::Unresolved: return "unresolved";
    }
    return "unresolved";
}

PhaseLabel classify_phase(const WindowStats& stats, const PhaseThresholds& t) {
    if (!(t.eps_mean > 0.0) || !(t.eps_amp > 0.0)) {
        throw InvalidParameter("classify_phase: thresholds must be positive");
    }
    if (stats.mean < t.eps_mean) {
        return PhaseLabel::NormalPhase;
    }
    return stats.amplitude < t.eps_amp ? PhaseLabel::Superradiant : PhaseLabel::Oscillatory;
}

PhaseCell phase_point(const ModelParams& params, const FullState& seed, const PhaseWindow& window,
                      const PhaseThresholds& thresholds, const IntegrationSettings& settings) {
    PhaseCell cell;
    cell.lambda_plus = params.lambda_plus();
    cell.lambda_minus = params.lambda_minus();
    try {
        IntegrationSettings s = settings;
        s.t_end = window.t_end;
        const auto traj = integrate_semiclassical(SemiclassicalSystem::full, seed, params, s);
        if (traj.status != IntegrationStatus::ok) {
            cell.error = "integration diverged";
            return cell;
        }
        std::vector<double> t, n;
        t.reserve(traj.samples.size());
        n.reserve(traj.samples.size());
        for (const FullState& x : traj.samples) {
            t.push_back(x.t);
            n.push_back(cavity_population(x));
        }
        cell.stats = window_stats(t, n, window.t_start, window.t_end);
        cell.label = classify_phase(cell.stats, thresholds);
    } catch (const Error& e) {
        cell.label = PhaseLabel::Unresolved;
        cell.error = e.what();
    }
    return cell;
}

PhaseGrid phase_sweep(const ModelParams& tmpl, std::span<const double> lp_axis,
                      std::span<const double> lm_axis, const PhaseWindow& window,
                      const PhaseThresholds& thresholds, const FullState& seed,
                      const IntegrationSettings& settings, const ChaosSettings& chaos) {
    check_axis(lp_axis, "lambda_plus axis");
    check_axis(lm_axis, "lambda_minus axis");
    PhaseGrid grid;
    grid.lambda_plus_axis.assign(lp_axis.begin(), lp_axis.end());
    grid.lambda_minus_axis.assign(lm_axis.begin(), lm_axis.end());
    grid.cells.resize(lp_axis.size() * lm_axis.size());
    parallel_for(grid.cells.size(), [&](std::size_t k) {
        const double lp = lp_axis[k / lm_axis.size()];
        const double lm = lm_axis[k % lm_axis.size()];
        PhaseCell& cell = grid.cells[k];
        try {
            const ModelParams p = tmpl.with_couplings(lp, lm);
            cell = phase_point(p, seed, window, thresholds, settings);
            if (chaos.enabled && cell.label != PhaseLabel::Unresolved) {
                cell.chaos_score = chaos_score(p, seed, chaos.perturbation, chaos.t_end,
                                               chaos.renorm_interval, chaos.dt);
            }
        } catch (const Error& e) {
            cell = PhaseCell{};
            cell.error = e.what();
        }
        cell.lambda_plus = lp;
        cell.lambda_minus = lm;
    });
    return grid;
}

std::optional<double> chaos_score(const ModelParams& params, const FullState& seed,
                                  double perturbation, double t_end, double renorm_interval,
                                  double dt) {
    if (!(perturbation > 0.0)) {
        throw InvalidParameter("chaos_score: perturbation must be positive");
    }
    if (!(t_end > 0.0) || !(renorm_interval > 0.0) || !(dt > 0.0)) {
        throw InvalidParameter("chaos_score: t_end, renorm_interval and dt must be positive");
    }
    auto f = [&params](const CVec<4>& y) {
        const FullState d = full_rhs(FullState{y[0], y[1], y[2], y[3], 0.0}, params);
        return CVec<4>{d.alpha, d.beta_plus, d.beta_minus, d.beta_zero};
    };
    const std::vector<Charges> charges = symmetry_charges(params);
    CVec<4> ref = pack(seed);
    CVec<4> twin = ref;
    twin[1] += perturbation;
    align_twin(twin, ref, charges);
    const double d0 = distance(ref, twin);
    if (!(d0 > 0.0)) {
        throw InvalidParameter("chaos_score: perturbation vanishes on the seed's symmetry orbit");
    }

    const auto steps_per_block =
        std::max<long long>(1, std::llround(renorm_interval / dt));
    const double h = renorm_interval / double(steps_per_block);
    const auto blocks = std::max<long long>(1, std::llround(t_end / renorm_interval));
    double log_growth = 0.0;
    for (long long b = 0; b < blocks; ++b) {
        for (long long i = 0; i < steps_per_block; ++i) {
            ref = rk4_step(f, ref, h);
            twin = rk4_step(f, twin, h);
        }
        align_twin(twin, ref, charges);
        const double lim = semiclassical_divergence_limit;
        if (!(max_abs(ref) <= lim) || !(max_abs(twin) <= lim)) {
            return std::nullopt;
        }
        // A separation contracted below resolution is floored rather than reported as -inf.
        const double d = std::max(distance(ref, twin), 1e-300);
        log_growth += std::log(d / d0);
        for (std::size_t k = 0; k < 4; ++k) {
            twin[k] = ref[k] + (twin[k] - ref[k]) * (d0 / d);
        }
        align_twin(twin, ref, charges);
    }
    return log_growth / (double(blocks) * renorm_interval);
}

} // namespace dicke
