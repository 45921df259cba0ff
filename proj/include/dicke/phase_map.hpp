// phase_map.hpp — Long-time phase classification of full-model trajectories
//
// A trajectory is reduced to the mean and half-range of the cavity population
// over a late time window. Chaos is a separate continuous score and is never
// folded into the phase label.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dicke/model.hpp"
#include "dicke/rk4.hpp"
#include "dicke/semiclassical.hpp"

namespace dicke {

struct WindowStats {
    double mean{0.0};
    double amplitude{0.0}; // (max - min) / 2
    double t_start{0.0};
    double t_end{0.0};
    std::size_t samples{0};
};

inline constexpr std::size_t window_min_samples = 10;

// Statistics over samples with t_start <= t <= t_end. Throws InvalidParameter
// when the window is empty, reversed or leaves the sampled range, and when it
// holds fewer than window_min_samples samples.
WindowStats window_stats(std::span<const double> times, std::span<const double> values,
                         double t_start, double t_end);

enum class PhaseLabel { NormalPhase, Superradiant, Oscillatory, Unresolved };

const char* to_string(PhaseLabel label);

struct PhaseThresholds {
    double eps_mean{1e-4};
    double eps_amp{1e-3};
};

// Never returns Unresolved; that label is reserved for failed integrations.
PhaseLabel classify_phase(const WindowStats& stats, const PhaseThresholds& thresholds = {});

struct PhaseWindow {
    double t_start{150.0};
    double t_end{200.0};
};

struct PhaseCell {
    double lambda_plus{0.0};
    double lambda_minus{0.0};
    WindowStats stats;
    PhaseLabel label{PhaseLabel::Unresolved};
    std::optional<double> chaos_score;
    std::string error; // set when label is Unresolved
};

// The integration runs to window.t_end with the given settings; settings.t_end
// is ignored.
PhaseCell phase_point(const ModelParams& params, const FullState& seed, const PhaseWindow& window,
                      const PhaseThresholds& thresholds, const IntegrationSettings& settings);

struct ChaosSettings {
    bool enabled{false};
    double perturbation{1e-8};
    double t_end{200.0};
    double renorm_interval{1.0};
    double dt{1e-3};
};

struct PhaseGrid {
    std::vector<double> lambda_plus_axis;
    std::vector<double> lambda_minus_axis;
    std::vector<PhaseCell> cells; // lambda_plus outer, lambda_minus inner

    const PhaseCell& at(std::size_t i_plus, std::size_t i_minus) const {
        return cells[i_plus * lambda_minus_axis.size() + i_minus];
    }
};

// Couplings in the template are overridden per cell. Per-cell failures become
// Unresolved cells; the sweep itself only throws on invalid axes.
PhaseGrid phase_sweep(const ModelParams& params_template, std::span<const double> lambda_plus_axis,
                      std::span<const double> lambda_minus_axis, const PhaseWindow& window,
                      const PhaseThresholds& thresholds, const FullState& seed,
                      const IntegrationSettings& settings, const ChaosSettings& chaos = {});

// Finite-time separation rate of two full-model trajectories whose seeds differ
// by `perturbation` in Re beta_+. Separation is measured modulo the flow's
// phase symmetries and with the twin held on the reference's population
// shell, so neutral directions do not register as growth. It is rescaled to
// its initial size every renorm_interval and the log growth factors are
// averaged over t_end. Positive values mark chaotic candidates; contracting
// fixed points score negative. Returns nullopt when either trajectory
// diverges.
std::optional<double> chaos_score(const ModelParams& params, const FullState& seed,
                                  double perturbation, double t_end, double renorm_interval = 1.0,
                                  double dt = 1e-3);

} // namespace dicke
