// eigensolver.hpp — Small dense complex matrices and their eigenvalues
//
// Eigenvalues are the roots of the characteristic polynomial, whose coefficients
// are assembled exactly from principal minors and solved by Aberth–Ehrlich
// simultaneous iteration. Only dimensions 2 and 4 occur in this model.

#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace dicke {

using cplx = std::complex<double>;

class StabilityMatrix {
public:
    // Zero matrix of dimension 2 or 4; throws std::invalid_argument otherwise.
    explicit StabilityMatrix(int dim);

    int dim() const { return dim_; }
    cplx& operator()(int row, int col) { return entries_[index(row, col)]; }
    const cplx& operator()(int row, int col) const { return entries_[index(row, col)]; }
    std::span<const cplx> entries() const { return {entries_.data(), std::size_t(dim_ * dim_)}; }

    double max_abs_entry() const;
    cplx determinant() const;

private:
    std::size_t index(int row, int col) const { return std::size_t(row * dim_ + col); }

    int dim_;
    std::array<cplx, 16> entries_{};
};

enum class Stability { oscillatory, divergent };

const char* to_string(Stability s);

// Relative tolerance below which a real part counts as zero: |Re a| <= tol (1 + |a|).
inline constexpr double zero_tolerance_rel = 1e-9;

struct EigenReport {
    std::vector<cplx> eigenvalues;
    double max_re{0.0};
    Stability label{Stability::oscillatory};
};

EigenReport make_report(std::vector<cplx> eigenvalues);

// Monic coefficients c[0] = 1, c[1], ..., c[n] of det(z I - M).
std::vector<cplx> characteristic_polynomial(const StabilityMatrix& m);

inline constexpr int root_iteration_budget = 500;

// Roots of a monic polynomial given as above. Throws NumericalError when the
// iteration budget is exhausted.
std::vector<cplx> polynomial_roots(std::span<const cplx> monic_coeffs,
                                   int max_iterations = root_iteration_budget);

// Eigenvalues sorted by descending real part (ties by descending imaginary part).
EigenReport eigenvalues_numeric(const StabilityMatrix& m);

} // namespace dicke
