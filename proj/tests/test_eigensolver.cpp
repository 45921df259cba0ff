// test_eigensolver.cpp — Characteristic polynomial and root finder against Eigen

#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "dicke/eigensolver.hpp"
#include "dicke/errors.hpp"
#include "support.hpp"

using namespace dicke;
using dicke::testing::multiset_distance;

namespace {

Eigen::Matrix4cd to_eigen(const StabilityMatrix& m) {
    Eigen::Matrix4cd e;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) e(r, c) = m(r, c);
    return e;
}

StabilityMatrix random_matrix(std::mt19937_64& rng, double scale) {
    StabilityMatrix m(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = dicke::testing::random_cplx(rng, scale);
    return m;
}

std::vector<cplx> eigen_oracle(const StabilityMatrix& m) {
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(to_eigen(m));
    std::vector<cplx> v;
    for (int i = 0; i < 4; ++i) v.push_back(es.eigenvalues()(i));
    return v;
}

} // namespace

TEST_SUITE("eigensolver") {

TEST_CASE("matrix dimensions") {
    CHECK_THROWS_AS(StabilityMatrix(3), std::invalid_argument);
    CHECK_NOTHROW(StabilityMatrix(2));
}

TEST_CASE("diagonal matrix") {
    StabilityMatrix m(4);
    m(0, 0) = {0, 1};
    m(1, 1) = {0, -1};
    m(2, 2) = {0, 2};
    m(3, 3) = {0, -2};
    const auto r = eigenvalues_numeric(m);
    CHECK(multiset_distance(r.eigenvalues, {{0, 1}, {0, -1}, {0, 2}, {0, -2}}) < 1e-14);
    CHECK(r.label == Stability::oscillatory);
    CHECK(r.max_re == doctest::Approx(0.0));
}

TEST_CASE("zero matrix has four zero eigenvalues") {
    const auto r = eigenvalues_numeric(StabilityMatrix(4));
    for (const cplx& z : r.eigenvalues) CHECK(z == cplx(0.0));
}

TEST_CASE("2x2 solve") {
    StabilityMatrix m(2);
    m(0, 0) = 1.0;
    m(0, 1) = 2.0;
    m(1, 0) = 3.0;
    m(1, 1) = 4.0;
    const auto r = eigenvalues_numeric(m);
    const double s = std::sqrt(33.0);
    CHECK(multiset_distance(r.eigenvalues, {(5.0 + s) / 2.0, (5.0 - s) / 2.0}) < 1e-13);
    CHECK(r.label == Stability::divergent);
}

TEST_CASE("determinant matches Eigen") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 200; ++n) {
        const StabilityMatrix m = random_matrix(rng, 3.0);
        const cplx ours = m.determinant();
        const cplx ref = to_eigen(m).determinant();
        CHECK(std::abs(ours - ref) <= 1e-12 * (1.0 + std::abs(ref)) * 81.0);
    }
}

TEST_CASE("characteristic polynomial of a known matrix") {
    // Companion-style check: eigenvalues 1, 2, 3, 4 -> x^4 - 10x^3 + 35x^2 - 50x + 24.
    StabilityMatrix m(4);
    for (int i = 0; i < 4; ++i) m(i, i) = double(i + 1);
    m(0, 3) = 5.0;
    m(2, 1) = -7.0;
    const auto c = characteristic_polynomial(m);
    REQUIRE(c.size() == 5);
    CHECK(c[0] == cplx(1.0));
    CHECK(std::abs(c[1] - cplx(-10.0)) < 1e-13);
    CHECK(std::abs(c[2] - cplx(35.0)) < 1e-13);
    CHECK(std::abs(c[3] - cplx(-50.0)) < 1e-13);
    CHECK(std::abs(c[4] - cplx(24.0)) < 1e-13);
}

TEST_CASE("property: random complex matrices agree with Eigen and have small residuals") {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 2000; ++n) {
        const double scale = std::pow(10.0, std::uniform_real_distribution<double>(-3.0, 3.0)(rng));
        const StabilityMatrix m = random_matrix(rng, scale);
        const auto ours = eigenvalues_numeric(m).eigenvalues;
        const auto ref = eigen_oracle(m);
        const double size = 1.0 + dicke::testing::max_modulus(ref);
        CHECK(multiset_distance(ours, ref) <= 1e-9 * size);

        // Residual of each eigenpair through the smallest singular vector of (M - a I).
        const Eigen::Matrix4cd e = to_eigen(m);
        const double norm = e.norm();
        for (const cplx& a : ours) {
            Eigen::JacobiSVD<Eigen::Matrix4cd> svd(e - a * Eigen::Matrix4cd::Identity(), Eigen::ComputeFullV);
            const Eigen::Vector4cd v = svd.matrixV().col(3);
            CHECK((e * v - a * v).norm() <= 1e-9 * norm);
        }
    }
}

TEST_CASE("repeated roots are resolved") {
    // (x - i)^2 (x + 2)^2 via a Jordan-like block structure.
    StabilityMatrix m(4);
    m(0, 0) = {0, 1};
    m(0, 1) = 1.0;
    m(1, 1) = {0, 1};
    m(2, 2) = -2.0;
    m(3, 3) = -2.0;
    const auto r = eigenvalues_numeric(m).eigenvalues;
    // A defective double root is only determined to about sqrt(machine epsilon).
    CHECK(multiset_distance(r, {{0, 1}, {0, 1}, -2.0, -2.0}) < 1e-7);
}

TEST_CASE("labels follow the zero tolerance") {
    CHECK(make_report({cplx(1e-12, 1.0), cplx(-1.0, 0.0)}).label == Stability::oscillatory);
    CHECK(make_report({cplx(1e-6, 1.0)}).label == Stability::divergent);
    const auto r = make_report({cplx(-3.0, 0), cplx(0.5, 2.0)});
    CHECK(r.max_re == 0.5);
}

TEST_CASE("root finder reports non-convergence on non-finite input") {
    const std::vector<cplx> coeffs = {1.0, NAN, 1.0};
    CHECK_THROWS_AS(polynomial_roots(coeffs), NumericalError);
}

} // TEST_SUITE
