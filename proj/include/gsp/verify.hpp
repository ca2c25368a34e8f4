#pragma once

// Brute-force re-check of an equiangular set against its source vectors.
// Everything here is recomputed from raw inner products and span projections
// in linalg.hpp; nothing is taken from the construction.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gsp/equiangular.hpp"
#include "gsp/linalg.hpp"

namespace gsp {

template <typename Scalar>
struct Tolerances {
    Scalar norm = Scalar(1e-10);
    Scalar angle = Scalar(1e-10);
    Scalar distance = Scalar(1e-10);
    Scalar sum_identity_per_vector = Scalar(1e-8);  // scaled by n
    Scalar span_relative = Scalar(1e-9);
    Scalar gram_eigenvalue_per_vector = Scalar(1e-10);  // scaled by n
};

template <typename Scalar>
struct VerificationReport {
    Index n = 0;
    Index dim = 0;
    Scalar p_target = 0;
    Scalar max_norm_dev = 0;
    Scalar max_angle_dev = 0;
    Scalar max_dist_dev = 0;
    Scalar sum_identity_dev = 0;
    Scalar max_prefix_span_residual = 0;
    Scalar gram_min_eigenvalue_dev = 0;
    bool feasibility_ok = false;
    bool passed = false;
    std::vector<std::string> warnings;
};

template <typename DerivedX, typename DerivedZ>
VerificationReport<typename DerivedX::Scalar> verify(
    const Eigen::MatrixBase<DerivedX>& X, const Eigen::MatrixBase<DerivedZ>& Z,
    typename DerivedX::Scalar p, const Tolerances<typename DerivedX::Scalar>& tol = {}) {
    using Scalar = typename DerivedX::Scalar;
    using std::abs;
    using std::sqrt;

    if (X.rows() != Z.rows() || X.cols() != Z.cols()) {
        throw DimensionError("verify: X is " + std::to_string(X.rows()) + "x" +
                             std::to_string(X.cols()) + " but Z is " + std::to_string(Z.rows()) +
                             "x" + std::to_string(Z.cols()));
    }
    validate_vector_set(X);
    validate_vector_set(Z);

    VerificationReport<Scalar> r;
    r.n = Z.cols();
    r.dim = Z.rows();
    r.p_target = p;
    r.feasibility_ok = feasible_p(r.n, p);
    if (auto w = conditioning_warning(r.n, p)) r.warnings.push_back(*w);

    const Scalar target_dist = sqrt(std::max(Scalar(0), Scalar(2) - Scalar(2) * p));
    Matrix<Scalar> G(r.n, r.n);
    for (Index i = 0; i < r.n; ++i) {
        G(i, i) = inner(Z.col(i), Z.col(i));
        r.max_norm_dev = std::max(r.max_norm_dev, abs(sqrt(G(i, i)) - Scalar(1)));
        for (Index j = i + 1; j < r.n; ++j) {
            G(i, j) = G(j, i) = inner(Z.col(i), Z.col(j));
            r.max_angle_dev = std::max(r.max_angle_dev, abs(G(i, j) - p));
            const Scalar dist = norm(Z.col(i) - Z.col(j));
            r.max_dist_dev = std::max(r.max_dist_dev, abs(dist - target_dist));
        }
    }

    const Vector<Scalar> total = Z.rowwise().sum();
    const Scalar expected_sum = Scalar(r.n) * (Scalar(1) + p * Scalar(r.n - 1));
    r.sum_identity_dev = abs(inner(total, total) - expected_sum);

    // Both directions: z_j against span(x_1..x_j) and x_j against span(z_1..z_j).
    const Vector<Scalar> z_in_x = prefix_span_residuals(Z, X);
    const Vector<Scalar> x_in_z = prefix_span_residuals(X, Z);
    for (Index j = 0; j < r.n; ++j) {
        const Scalar zn = norm(Z.col(j));
        const Scalar xn = norm(X.col(j));
        if (zn > Scalar(0)) r.max_prefix_span_residual = std::max(r.max_prefix_span_residual, z_in_x(j) / zn);
        r.max_prefix_span_residual = std::max(r.max_prefix_span_residual, x_in_z(j) / xn);
    }

    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> eig(G, Eigen::EigenvaluesOnly);
    r.gram_min_eigenvalue_dev = abs(eig.eigenvalues().minCoeff() - ideal_min_eigenvalue(r.n, p));

    const Scalar n = Scalar(r.n);
    r.passed = r.feasibility_ok && r.max_norm_dev <= tol.norm && r.max_angle_dev <= tol.angle &&
               r.max_dist_dev <= tol.distance &&
               r.sum_identity_dev <= tol.sum_identity_per_vector * n &&
               r.max_prefix_span_residual <= tol.span_relative &&
               r.gram_min_eigenvalue_dev <= tol.gram_eigenvalue_per_vector * n;
    return r;
}

template <typename DerivedX, typename Scalar>
VerificationReport<Scalar> verify(const Eigen::MatrixBase<DerivedX>& X,
                                  const EquiangularSet<Scalar>& Z,
                                  const Tolerances<Scalar>& tol = {}) {
    return verify(X, Z.vectors, Z.p(), tol);
}

/// Largest elementwise gap between the recurrence and the closed form.
template <typename Scalar>
Scalar cross_check_methods(const OrthonormalBasis<Scalar>& Y, Scalar p) {
    const auto a = gsp_recurrence(Y, p);
    const auto b = closed_form(Y, p);
    return (a.vectors - b.vectors).cwiseAbs().maxCoeff();
}

}  // namespace gsp
