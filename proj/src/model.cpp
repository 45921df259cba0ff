// model.cpp — Parameter validation, derived couplings, exchange symmetry

#include "dicke/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw InvalidParameter(std::string(name) + " must be finite");
    }
}

void require_nonnegative(double v, const char* name) {
    if (v < 0.0) {
        throw InvalidParameter(std::string(name) + " must be >= 0, got " + std::to_string(v));
    }
}

} // namespace

ModelParams::ModelParams(const Rates& rates) : r_(rates) {
    require_finite(r_.omega, "omega");
    require_finite(r_.omega0, "omega0");
    require_finite(r_.q, "q");
    require_finite(r_.lambda_plus, "lambda_plus");
    require_finite(r_.lambda_minus, "lambda_minus");
    require_finite(r_.kappa, "kappa");
    require_nonnegative(r_.lambda_plus, "lambda_plus");
    require_nonnegative(r_.lambda_minus, "lambda_minus");
    require_nonnegative(r_.kappa, "kappa");
}

ModelParams ModelParams::with_q(double q) const {
    Rates r = r_;
    r.q = q;
    return ModelParams(r);
}

ModelParams ModelParams::with_omega0(double omega0) const {
    Rates r = r_;
    r.omega0 = omega0;
    return ModelParams(r);
}

ModelParams ModelParams::with_couplings(double lambda_plus, double lambda_minus) const {
    Rates r = r_;
    r.lambda_plus = lambda_plus;
    r.lambda_minus = lambda_minus;
    return ModelParams(r);
}

ModelParams ModelParams::with_kappa(double kappa) const {
    Rates r = r_;
    r.kappa = kappa;
    return ModelParams(r);
}

ModelParams from_effective_couplings(double Lambda_plus, double Lambda_minus, double omega,
                                     double kappa, double omega0, double q) {
    if (!(omega > 0.0)) {
        throw DegenerateInput("effective couplings require omega > 0");
    }
    if (Lambda_plus < 0.0 || Lambda_minus < 0.0) {
        throw InvalidParameter("effective couplings must be >= 0");
    }
    const double scale = (kappa * kappa + omega * omega) / omega;
    return ModelParams(Rates{.omega = omega,
                             .omega0 = omega0,
                             .q = q,
                             .lambda_plus = std::sqrt(Lambda_plus * scale),
                             .lambda_minus = std::sqrt(Lambda_minus * scale),
                             .kappa = kappa});
}

double DerivedCouplings::Lambda_geo() const { return std::sqrt(Lambda_plus * Lambda_minus); }
double DerivedCouplings::Gamma_geo() const { return std::sqrt(Gamma_plus * Gamma_minus); }

DerivedCouplings derive_couplings(const ModelParams& p) {
    const double w = p.omega();
    if (w == 0.0) {
        throw DegenerateInput("derived couplings are undefined for omega = 0");
    }
    const double lp = p.lambda_plus();
    const double lm = p.lambda_minus();
    const double k = p.kappa();

    DerivedCouplings d;
    d.delta_plus = (lp + lm) * (lp + lm) / (4.0 * w);
    d.delta_minus = (lp - lm) * (lp - lm) / (4.0 * w);

    const double denom = k * k + w * w;
    d.Lambda_plus = w * lp * lp / denom;
    d.Lambda_minus = w * lm * lm / denom;
    d.Gamma_plus = k * lp * lp / denom;
    d.Gamma_minus = k * lm * lm / denom;

    const double sum = d.Lambda_plus + d.Lambda_minus;
    if (sum != 0.0) {
        const double ratio = (d.Lambda_plus - d.Lambda_minus) / sum;
        const double radicand = 1.0 - (k * k / (w * w) + 1.0) * ratio * ratio;
        d.K = std::sqrt(cplx(radicand, 0.0));
    }
    return d;
}

ModelParams apply_symmetry_T(const ModelParams& p) {
    Rates r = p.rates();
    r.omega0 = -r.omega0;
    std::swap(r.lambda_plus, r.lambda_minus);
    return ModelParams(r);
}

double critical_kappa(const ModelParams& p) {
    if (!(p.omega() > 0.0)) {
        throw DegenerateInput("critical kappa requires omega > 0");
    }
    const double lp2 = p.lambda_plus() * p.lambda_plus();
    const double lm2 = p.lambda_minus() * p.lambda_minus();
    if (lp2 == 0.0 && lm2 == 0.0) {
        throw DegenerateInput("critical kappa is undefined when both couplings vanish");
    }
    // Lambda_+/Lambda_- = lambda_+^2/lambda_-^2 independently of kappa.
    const double diff = std::abs(lp2 - lm2);
    if (diff == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return p.omega() * 2.0 * std::sqrt(lp2 * lm2) / diff;
}

} // namespace dicke
