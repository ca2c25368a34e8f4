#pragma once

#include <cmath>

#include "gsp/linalg.hpp"

namespace gsp {

/// Orthonormal set y_1..y_n whose prefixes span the same subspaces as the
/// prefixes of the source set.
template <typename Scalar>
struct OrthonormalBasis {
    VectorSet<Scalar> basis;
    Index source_count = 0;

    Index size() const { return basis.cols(); }
    Index dim() const { return basis.rows(); }
};

/// Modified Gram-Schmidt on the columns of `X`, in order, without pivoting.
///
/// Each y_i satisfies inner(x_i, y_i) > 0. Throws DependentInputError(i) when
/// the i-th residual is at most `tol` times the largest input norm.
template <typename Derived>
OrthonormalBasis<typename Derived::Scalar> gram_schmidt(
    const Eigen::MatrixBase<Derived>& X,
    typename Derived::Scalar tol = typename Derived::Scalar(kDefaultTolerance)) {
    using Scalar = typename Derived::Scalar;
    validate_vector_set(X);
    if (!(tol > Scalar(0))) throw ParamError("orthonormalization tolerance must be positive");
    if (X.cols() > X.rows()) {
        throw DimensionError("cannot orthonormalize " + std::to_string(X.cols()) +
                             " vectors in dimension " + std::to_string(X.rows()));
    }

    const Scalar threshold = tol * max_column_norm(X);
    OrthonormalBasis<Scalar> out{VectorSet<Scalar>(X.rows(), X.cols()), X.cols()};
    Vector<Scalar> v(X.rows());
    for (Index i = 0; i < X.cols(); ++i) {
        v = X.col(i);
        for (Index j = 0; j < i; ++j) {
            v -= out.basis.col(j) * out.basis.col(j).dot(v);
        }
        const Scalar r = norm(v);
        if (!(r > threshold)) {
            throw DependentInputError(static_cast<std::size_t>(i + 1), static_cast<double>(r));
        }
        out.basis.col(i) = v / r;
    }
    return out;
}

/// One more sequential projection-and-normalize sweep over an orthonormal basis.
template <typename Scalar>
OrthonormalBasis<Scalar> reorthogonalize(const OrthonormalBasis<Scalar>& Y) {
    OrthonormalBasis<Scalar> out = Y;
    Vector<Scalar> v(Y.dim());
    for (Index i = 0; i < out.size(); ++i) {
        v = out.basis.col(i);
        for (Index j = 0; j < i; ++j) {
            v -= out.basis.col(j) * out.basis.col(j).dot(v);
        }
        out.basis.col(i) = v / norm(v);
    }
    return out;
}

}  // namespace gsp
