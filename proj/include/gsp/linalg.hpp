#pragma once

// Dense real-vector primitives shared by every other module.
//
// A vector set is stored as a matrix whose columns are the member vectors, so
// the i-th vector of `S` is `S.col(i)`, its dimension is `S.rows()` and the
// number of vectors is `S.cols()`.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gsp/errors.hpp"

namespace gsp {

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using VectorSet = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Default relative tolerance for rank and independence decisions.
inline constexpr double kDefaultTolerance = 1e-10;

/// Throws unless `S` holds at least one vector of dimension >= 1 with finite entries.
template <typename Derived>
void validate_vector_set(const Eigen::MatrixBase<Derived>& S) {
    if (S.rows() < 1 || S.cols() < 1) {
        throw DimensionError("vector set must hold at least one vector of dimension >= 1");
    }
    if (!S.allFinite()) {
        throw ParamError("vector set contains non-finite entries");
    }
}

template <typename DerivedU, typename DerivedV>
typename DerivedU::Scalar inner(const Eigen::MatrixBase<DerivedU>& u,
                                const Eigen::MatrixBase<DerivedV>& v) {
    if (u.size() != v.size()) {
        throw DimensionError("inner product of vectors with dimensions " +
                             std::to_string(u.size()) + " and " + std::to_string(v.size()));
    }
    return u.reshaped().dot(v.reshaped());
}

template <typename Derived>
typename Derived::Scalar norm(const Eigen::MatrixBase<Derived>& u) {
    using std::sqrt;
    return sqrt(inner(u, u));
}

/// Largest column norm of `S` (0 for an empty set).
template <typename Derived>
typename Derived::Scalar max_column_norm(const Eigen::MatrixBase<Derived>& S) {
    using Scalar = typename Derived::Scalar;
    Scalar largest(0);
    for (Index j = 0; j < S.cols(); ++j) largest = std::max(largest, norm(S.col(j)));
    return largest;
}

namespace detail {

// Two passes of classical projection against the orthonormal columns of Q.
template <typename Scalar, typename Derived>
Vector<Scalar> project_out(const Matrix<Scalar>& Q, Index count,
                           const Eigen::MatrixBase<Derived>& v) {
    Vector<Scalar> r = v;
    if (count == 0) return r;
    const auto basis = Q.leftCols(count);
    for (int pass = 0; pass < 2; ++pass) {
        r.noalias() -= basis * (basis.transpose() * r);
    }
    return r;
}

}  // namespace detail

/// Numerical rank of the columns of `S`.
///
/// Greedy column-pivoted orthogonal triangularization: at each step the
/// remaining column with the largest residual is accepted if that residual
/// exceeds `tol` times the largest input norm, then projected out of the rest.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& S,
           typename Derived::Scalar tol = typename Derived::Scalar(kDefaultTolerance)) {
    using Scalar = typename Derived::Scalar;
    if (!(tol > Scalar(0))) throw ParamError("rank tolerance must be positive");

    const Scalar scale = max_column_norm(S);
    if (scale == Scalar(0)) return 0;
    const Scalar threshold = tol * scale;

    Matrix<Scalar> work = S;
    Matrix<Scalar> Q(S.rows(), std::min(S.rows(), S.cols()));
    std::vector<Index> remaining(static_cast<std::size_t>(S.cols()));
    for (Index j = 0; j < S.cols(); ++j) remaining[static_cast<std::size_t>(j)] = j;

    Index accepted = 0;
    while (!remaining.empty() && accepted < Q.cols()) {
        auto best = remaining.begin();
        Scalar best_norm(-1);
        for (auto it = remaining.begin(); it != remaining.end(); ++it) {
            const Scalar r = work.col(*it).norm();
            if (r > best_norm) {
                best_norm = r;
                best = it;
            }
        }
        if (!(best_norm > threshold)) break;

        Vector<Scalar> q = detail::project_out(Q, accepted, work.col(*best));
        const Scalar qn = q.norm();
        if (!(qn > threshold)) break;
        Q.col(accepted++) = q / qn;
        remaining.erase(best);

        const auto qa = Q.col(accepted - 1);
        for (Index j : remaining) work.col(j) -= qa * qa.dot(work.col(j));
    }
    return accepted;
}

/// Orthonormal basis for span(B), built by classical Gram-Schmidt with a
/// second projection pass. Columns whose residual falls below `tol` times the
/// largest input norm are skipped.
template <typename Derived>
Matrix<typename Derived::Scalar> orthonormal_span(
    const Eigen::MatrixBase<Derived>& B,
    typename Derived::Scalar tol = typename Derived::Scalar(kDefaultTolerance)) {
    using Scalar = typename Derived::Scalar;
    const Scalar threshold = tol * max_column_norm(B);
    Matrix<Scalar> Q(B.rows(), std::min(B.rows(), B.cols()));
    Index count = 0;
    for (Index j = 0; j < B.cols() && count < Q.cols(); ++j) {
        Vector<Scalar> r = detail::project_out(Q, count, B.col(j));
        const Scalar rn = r.norm();
        if (rn > threshold) Q.col(count++) = r / rn;
    }
    return Q.leftCols(count);
}

/// Distance from `v` to span(B).
template <typename DerivedV, typename DerivedB>
typename DerivedV::Scalar span_residual(const Eigen::MatrixBase<DerivedV>& v,
                                        const Eigen::MatrixBase<DerivedB>& B) {
    using Scalar = typename DerivedV::Scalar;
    if (B.cols() < 1) throw DimensionError("span_residual needs a nonempty spanning set");
    if (v.size() != B.rows()) {
        throw DimensionError("span_residual: vector dimension " + std::to_string(v.size()) +
                             " does not match set dimension " + std::to_string(B.rows()));
    }
    const Matrix<Scalar> Q = orthonormal_span(B);
    return norm(detail::project_out(Q, Q.cols(), v));
}

/// For each j, the distance from V.col(j) to span(B.col(0..j)).
///
/// Equivalent to calling span_residual once per prefix but reuses one
/// incrementally grown orthonormal basis.
template <typename DerivedV, typename DerivedB>
Vector<typename DerivedV::Scalar> prefix_span_residuals(const Eigen::MatrixBase<DerivedV>& V,
                                                         const Eigen::MatrixBase<DerivedB>& B) {
    using Scalar = typename DerivedV::Scalar;
    if (V.rows() != B.rows() || V.cols() != B.cols()) {
        throw DimensionError("prefix_span_residuals: sets must have identical shapes");
    }
    const Scalar threshold = Scalar(kDefaultTolerance) * max_column_norm(B);
    Matrix<Scalar> Q(B.rows(), std::min(B.rows(), B.cols()));
    Index count = 0;
    Vector<Scalar> out(V.cols());
    for (Index j = 0; j < V.cols(); ++j) {
        if (count < Q.cols()) {
            Vector<Scalar> r = detail::project_out(Q, count, B.col(j));
            const Scalar rn = r.norm();
            if (rn > threshold) Q.col(count++) = r / rn;
        }
        out(j) = norm(detail::project_out(Q, count, V.col(j)));
    }
    return out;
}

}  // namespace gsp
