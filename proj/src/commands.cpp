// commands.cpp — eigmap, boundaries, moments, semiclassical and phasemap tables

#include "dicke/commands.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dicke/errors.hpp"
#include "dicke/moments.hpp"
#include "dicke/phase_map.hpp"
#include "dicke/semiclassical.hpp"
#include "dicke/stability.hpp"

namespace dicke {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

void add_integration_metadata(ResultTable& t, const char* status, double dt_used, int halvings,
                              bool converged) {
    t.metadata.emplace_back("@status", status);
    t.metadata.emplace_back("@dt_used", format_double(dt_used));
    t.metadata.emplace_back("@halvings", std::to_string(halvings));
    t.metadata.emplace_back("@halving_converged", converged ? "true" : "false");
}

ResultTable eigmap(const RunConfig& c) {
    ResultTable t;
    t.columns = {"q", "omega0", "re_alpha_minus", "im_alpha_minus", "re_alpha_plus", "im_alpha_plus",
                 "max_re", "label", "status"};
    const LandscapeGrid grid = landscape_sweep(c.linear_model(), c.params, c.q_axis, c.omega0_axis);
    for (const LandscapeCell& cell : grid.cells) {
        if (!cell.ok) {
            t.add_row({cell.q, cell.omega0, nan, nan, nan, nan, nan, std::string("unresolved"), cell.error});
            continue;
        }
        // bec and closed reports start with (alpha_+, alpha_-); the numeric open
        // report is sorted by decreasing real part.
        const auto& ev = cell.report.eigenvalues;
        const cplx ap = ev.at(0);
        const cplx am = ev.at(1);
        t.add_row({cell.q, cell.omega0, am.real(), am.imag(), ap.real(), ap.imag(), cell.report.max_re,
                   std::string(to_string(cell.report.label)), std::string("ok")});
    }
    return t;
}

ResultTable boundaries(const RunConfig& c) {
    ResultTable t;
    t.columns = {"omega0", "kind", "re_q", "im_q", "real"};
    for (double w0 : c.omega0_axis) {
        const ModelParams p = c.params.with_omega0(w0);
        if (c.model == "closed") {
            const DerivedCouplings d = derive_couplings(p);
            const BoundarySet b = closed_boundaries(d.delta_plus, d.delta_minus, w0);
            for (double q : b.determinant_roots) {
                t.add_row({w0, std::string("determinant"), q, 0.0, std::string("true")});
            }
            for (double q : b.nested_sqrt_roots) {
                t.add_row({w0, std::string("nested_sqrt"), q, 0.0, std::string("true")});
            }
        } else {
            const OpenBoundarySet b = open_determinant_roots(p);
            for (const cplx& q : b.roots) {
                t.add_row({w0, std::string("open_determinant"), q.real(), q.imag(),
                           std::string(b.real ? "true" : "false")});
            }
        }
    }
    return t;
}

ResultTable moments(const RunConfig& c) {
    ResultTable t;
    t.columns = {"t"};
    for (std::size_t i = 0; i < moment_count; ++i) {
        const std::string name(moment_name(static_cast<Moment>(i)));
        t.columns.push_back("re_" + name);
        t.columns.push_back("im_" + name);
    }
    t.columns.insert(t.columns.end(), {"n_plus", "n_minus", "status"});
    const MomentTrajectory traj = integrate_moments(MomentState::vacuum(), c.params, c.integration);
    const std::string status = to_string(traj.status);
    for (const MomentState& s : traj.samples) {
        std::vector<Cell> row{s.t};
        for (const cplx& v : s.values) {
            row.emplace_back(v.real());
            row.emplace_back(v.imag());
        }
        const auto [np, nm] = populations(s);
        row.emplace_back(np);
        row.emplace_back(nm);
        row.emplace_back(status);
        t.add_row(std::move(row));
    }
    add_integration_metadata(t, status.c_str(), traj.dt_used, traj.halvings, traj.halving_converged);
    return t;
}

ResultTable semiclassical(const RunConfig& c) {
    ResultTable t;
    t.columns = {"t", "re_alpha", "im_alpha", "re_beta_plus", "im_beta_plus", "re_beta_minus",
                 "im_beta_minus", "re_beta_zero", "im_beta_zero", "n_cavity", "n_plus", "n_minus",
                 "n_zero", "s_x", "s_y", "s_z", "status"};
    const SemiclassicalTrajectory traj =
        integrate_semiclassical(c.semiclassical_system(), c.seed, c.params, c.integration);
    const std::string status = to_string(traj.status);
    for (const FullState& s : traj.samples) {
        const SpinExpectation spin = spin_expectations(s);
        t.add_row({s.t, s.alpha.real(), s.alpha.imag(), s.beta_plus.real(), s.beta_plus.imag(),
                   s.beta_minus.real(), s.beta_minus.imag(), s.beta_zero.real(), s.beta_zero.imag(),
                   cavity_population(s), std::norm(s.beta_plus), std::norm(s.beta_minus),
                   std::norm(s.beta_zero), spin.s_x, spin.s_y, spin.s_z, status});
    }
    add_integration_metadata(t, status.c_str(), traj.dt_used, traj.halvings, traj.halving_converged);
    t.metadata.emplace_back("@max_population_drift", format_double(traj.diagnostics.max_population_drift));
    t.metadata.emplace_back("@max_spin_length_drift", format_double(traj.diagnostics.max_spin_length_drift));
    return t;
}

ResultTable phasemap(const RunConfig& c) {
    ResultTable t;
    t.columns = {"lambda_plus", "lambda_minus", "mean", "amplitude", "label", "chaos_score", "status"};
    const PhaseGrid grid = phase_sweep(c.params, c.lambda_plus_axis, c.lambda_minus_axis, c.window,
                                       c.thresholds, c.seed, c.integration, c.chaos);
    for (const PhaseCell& cell : grid.cells) {
        const bool ok = cell.label != PhaseLabel::Unresolved;
        t.add_row({cell.lambda_plus, cell.lambda_minus, ok ? cell.stats.mean : nan,
                   ok ? cell.stats.amplitude : nan, std::string(to_string(cell.label)),
                   cell.chaos_score.value_or(nan), ok ? std::string("ok") : cell.error});
    }
    return t;
}

} // namespace

ResultTable run_subcommand(const RunConfig& c) {
    ResultTable t;
    try {
        switch (c.subcommand) {
        case Subcommand::eigmap: t = eigmap(c); break;
        case Subcommand::boundaries: t = boundaries(c); break;
        case Subcommand::moments: t = moments(c); break;
        case Subcommand::semiclassical: t = semiclassical(c); break;
        case Subcommand::phasemap: t = phasemap(c); break;
        }
    } catch (const NumericalError& e) {
        throw NumericalError(std::string(to_string(c.subcommand)) + ": " + e.what());
    } catch (const SingularInput& e) {
        throw SingularInput(std::string(to_string(c.subcommand)) + ": " + e.what());
    } catch (const DegenerateInput& e) {
        throw DegenerateInput(std::string(to_string(c.subcommand)) + ": " + e.what());
    } catch (const InvalidParameter& e) {
        throw InvalidParameter(std::string(to_string(c.subcommand)) + ": " + e.what());
    }
    auto md = run_metadata(c);
    md.insert(md.end(), t.metadata.begin(), t.metadata.end());
    t.metadata = std::move(md);
    return t;
}

} // namespace dicke
