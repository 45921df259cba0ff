// rk4.hpp — Fixed-step classical Runge–Kutta for autonomous complex ODE systems
//
// Samples are taken on a caller-chosen grid that need not align with the step
// grid; values between steps come from cubic Hermite interpolation using the
// stage-1 slopes at both ends, which keeps the interpolant fourth-order and
// leaves the stepped trajectory untouched.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace dicke {

using cplx = std::complex<double>;

template <std::size_t N>
using CVec = std::array<cplx, N>;

struct IntegrationSettings {
    double dt{1e-3};
    double t_end{0.0};
    int max_halvings{4};        // step halvings tried after the base step
    double halving_rtol{1e-6};  // agreement of successive final states
    double sample_dt{0.0};      // <= 0 selects the default 10 dt + dt/3

    // Incommensurate with dt so sampling cannot lock onto half-periods.
    double effective_sample_dt() const { return sample_dt > 0.0 ? sample_dt : 10.0 * dt + dt / 3.0; }
};

enum class IntegrationStatus { ok, diverged };

inline const char* to_string(IntegrationStatus s) {
    return s == IntegrationStatus::ok ? "ok" : "diverged";
}

template <std::size_t N>
struct RawTrajectory {
    std::vector<double> times;
    std::vector<CVec<N>> states;
    CVec<N> final_state{};
    double final_time{0.0};
    IntegrationStatus status{IntegrationStatus::ok};
    double dt{0.0};
    int halvings{0};
    bool halving_converged{true};
};

template <std::size_t N>
inline double max_abs(const CVec<N>& y) {
    double m = 0.0;
    for (const cplx& v : y) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

template <std::size_t N>
inline CVec<N> axpy(const CVec<N>& y, double h, const CVec<N>& k) {
    CVec<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = y[i] + h * k[i];
    }
    return out;
}

// One classical RK4 step given the slope k1 = f(y).
template <std::size_t N, class Rhs>
CVec<N> rk4_step(const Rhs& f, const CVec<N>& y, const CVec<N>& k1, double h) {
    const CVec<N> k2 = f(axpy(y, 0.5 * h, k1));
    const CVec<N> k3 = f(axpy(y, 0.5 * h, k2));
    const CVec<N> k4 = f(axpy(y, h, k3));
    CVec<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

template <std::size_t N, class Rhs>
CVec<N> rk4_step(const Rhs& f, const CVec<N>& y, double h) {
    return rk4_step(f, y, f(y), h);
}

template <std::size_t N>
CVec<N> hermite(const CVec<N>& y0, const CVec<N>& f0, const CVec<N>& y1, const CVec<N>& f1,
                double h, double theta) {
    const double t2 = theta * theta;
    const double t3 = t2 * theta;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + theta;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    CVec<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = h00 * y0[i] + h10 * h * f0[i] + h01 * y1[i] + h11 * h * f1[i];
    }
    return out;
}

struct NoStepObserver {
    template <class State>
    void operator()(double, const State&) const {}
};

// Integrates from t = 0 to t_end with step dt (a final shorter step lands on
// t_end exactly). Stops with status diverged once any |component| exceeds
// `limit` or becomes non-finite. `observe(t, y)` runs after every step.
template <std::size_t N, class Rhs, class Observer = NoStepObserver>
RawTrajectory<N> integrate_fixed(const Rhs& f, const CVec<N>& y0, double dt, double t_end,
                                 double sample_dt, double limit, Observer&& observe = {}) {
    RawTrajectory<N> out;
    out.dt = dt;
    const auto full_steps = static_cast<long long>(std::floor(t_end / dt * (1.0 + 1e-12)));
    const double tail = t_end - double(full_steps) * dt;
    const bool has_tail = tail > 1e-9 * dt;
    const long long total_steps = full_steps + (has_tail ? 1 : 0);

    long long next_sample = 0;
    auto sample_time = [&](long long k) { return double(k) * sample_dt; };

    CVec<N> y = y0;
    CVec<N> fy = f(y);
    double t = 0.0;
    out.times.push_back(0.0);
    out.states.push_back(y);
    next_sample = 1;

    for (long long n = 0; n < total_steps; ++n) {
        const double t1 = (n + 1 == total_steps) ? t_end : double(n + 1) * dt;
        const double h = t1 - t;
        const CVec<N> y1 = rk4_step(f, y, fy, h);
        const CVec<N> f1 = f(y1);

        bool bad = false;
        for (const cplx& v : y1) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > limit) {
                bad = true;
                break;
            }
        }
        if (bad) {
            out.status = IntegrationStatus::diverged;
            if (out.times.back() != t) {
                out.times.push_back(t);
                out.states.push_back(y);
            }
            out.final_state = y;
            out.final_time = t;
            return out;
        }

        for (double ts = sample_time(next_sample); ts <= t1; ts = sample_time(++next_sample)) {
            out.times.push_back(ts);
            out.states.push_back(ts == t1 ? y1 : hermite(y, fy, y1, f1, h, (ts - t) / h));
        }
        observe(t1, y1);
        y = y1;
        fy = f1;
        t = t1;
    }
    if (out.times.back() != t) {
        out.times.push_back(t);
        out.states.push_back(y);
    }
    out.final_state = y;
    out.final_time = t;
    return out;
}

// Base step, then successive halvings until two consecutive runs agree on the
// final state within halving_rtol (max-norm, relative), up to max_halvings.
// The finest accepted run is returned; a diverged run ends the search.
template <std::size_t N, class Rhs, class ObserverFactory>
RawTrajectory<N> integrate_with_halving(const Rhs& f, const CVec<N>& y0,
                                        const IntegrationSettings& s, double limit,
                                        ObserverFactory&& make_observer) {
    const double sample_dt = s.effective_sample_dt();
    double dt = s.dt;
    RawTrajectory<N> prev = integrate_fixed(f, y0, dt, s.t_end, sample_dt, limit, make_observer());
    prev.halving_converged = s.max_halvings == 0;
    if (prev.status == IntegrationStatus::diverged) {
        return prev;
    }
    for (int h = 1; h <= s.max_halvings; ++h) {
        dt *= 0.5;
        RawTrajectory<N> cur = integrate_fixed(f, y0, dt, s.t_end, sample_dt, limit, make_observer());
        cur.halvings = h;
        if (cur.status == IntegrationStatus::diverged) {
            cur.halving_converged = false;
            return cur;
        }
        double diff = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            diff = std::max(diff, std::abs(cur.final_state[i] - prev.final_state[i]));
        }
        if (diff <= s.halving_rtol * max_abs(cur.final_state)) {
            cur.halving_converged = true;
            return cur;
        }
        cur.halving_converged = false;
        prev = std::move(cur);
    }
    return prev;
}

template <std::size_t N, class Rhs>
RawTrajectory<N> integrate_with_halving(const Rhs& f, const CVec<N>& y0,
                                        const IntegrationSettings& s, double limit) {
    return integrate_with_halving(f, y0, s, limit, [] { return NoStepObserver{}; });
}

} // namespace dicke
