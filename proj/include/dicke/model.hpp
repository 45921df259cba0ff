// model.hpp — Physical parameters of the spin-1 Dicke model and derived couplings

#pragma once

#include <complex>
#include <optional>

namespace dicke {

using cplx = std::complex<double>;

// Raw rates in one caller-chosen unit; time is measured in the inverse unit.
struct Rates {
    double omega{1.0};        // cavity frequency
    double omega0{0.0};       // linear atomic splitting (may be negative)
    double q{0.0};            // quadratic Zeeman shift (may be negative)
    double lambda_plus{0.0};  // counter-rotating coupling, >= 0
    double lambda_minus{0.0}; // co-rotating coupling, >= 0
    double kappa{0.0};        // cavity field decay, >= 0
};

// Validated parameter record. Construction rejects negative couplings or decay
// and non-finite rates, so every ModelParams in circulation is physical.
class ModelParams {
public:
    ModelParams() = default;
    explicit ModelParams(const Rates& rates);

    double omega() const { return r_.omega; }
    double omega0() const { return r_.omega0; }
    double q() const { return r_.q; }
    double lambda_plus() const { return r_.lambda_plus; }
    double lambda_minus() const { return r_.lambda_minus; }
    double kappa() const { return r_.kappa; }
    const Rates& rates() const { return r_; }

    ModelParams with_q(double q) const;
    ModelParams with_omega0(double omega0) const;
    ModelParams with_couplings(double lambda_plus, double lambda_minus) const;
    ModelParams with_kappa(double kappa) const;

    friend bool operator==(const ModelParams& a, const ModelParams& b) {
        return a.r_.omega == b.r_.omega && a.r_.omega0 == b.r_.omega0 && a.r_.q == b.r_.q &&
               a.r_.lambda_plus == b.r_.lambda_plus && a.r_.lambda_minus == b.r_.lambda_minus &&
               a.r_.kappa == b.r_.kappa;
    }

private:
    Rates r_{};
};

// Build parameters from target effective couplings Lambda_+- at a given omega
// and kappa, inverting Lambda = omega lambda^2 / (kappa^2 + omega^2).
ModelParams from_effective_couplings(double Lambda_plus, double Lambda_minus, double omega,
                                     double kappa, double omega0, double q);

struct DerivedCouplings {
    double delta_plus{0.0};   // (lambda_+ + lambda_-)^2 / (4 omega)
    double delta_minus{0.0};  // (lambda_+ - lambda_-)^2 / (4 omega)
    double Lambda_plus{0.0};  // omega lambda_+^2 / (kappa^2 + omega^2)
    double Lambda_minus{0.0};
    double Gamma_plus{0.0};   // kappa lambda_+^2 / (kappa^2 + omega^2)
    double Gamma_minus{0.0};
    // Complex so the open-system boundaries stay defined above the critical decay;
    // empty when both couplings vanish.
    std::optional<cplx> K;

    double Lambda_sum() const { return Lambda_plus + Lambda_minus; }
    double Lambda_geo() const;  // sqrt(Lambda_+ Lambda_-)
    double Gamma_diff() const { return Gamma_plus - Gamma_minus; }
    double Gamma_geo() const;   // sqrt(Gamma_+ Gamma_-)
};

// Throws DegenerateInput when omega == 0.
DerivedCouplings derive_couplings(const ModelParams& params);

// Parameter/operator exchange: omega0 -> -omega0, lambda_+ <-> lambda_-.
// The matching operator swap b_+ <-> b_- is applied by callers to states.
ModelParams apply_symmetry_T(const ModelParams& params);

// Decay rate above which K acquires an imaginary part. +infinity for balanced
// coupling; throws DegenerateInput when both couplings vanish or omega <= 0.
double critical_kappa(const ModelParams& params);

} // namespace dicke
