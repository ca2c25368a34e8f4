#pragma once

// Equiangular sets with prescribed nested spans.
//
// Given an orthonormal y_1..y_n and a pairwise cosine p, the construction
//
//   z_1     = y_1
//   z_{k+1} = alpha_k * y_{k+1} + beta_k * (z_1 + ... + z_k)
//   alpha_k = sqrt((1 - p)(1 + p k) / (1 + p (k - 1))),  beta_k = p / (1 + p (k - 1))
//
// yields unit vectors with z_i . z_j = p and span(z_1..z_i) = span(y_1..y_i).
// It exists iff -1/(n-1) < p < 1 (0 <= p < 1 for an unbounded sequence).
// Unrolling the recurrence gives every z_k in closed form:
//
//   z_k = a_1 y_1 + ... + a_{k-1} y_{k-1} + c_k y_k
//   a_m = p / (1 + p (m - 1)) * sqrt((1 - p)(1 + p (m - 1)) / (1 + p (m - 2)))
//   c_k = (1 + p (k - 1)) / p * a_k,   c_1 = 1.

#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "gsp/linalg.hpp"
#include "gsp/orthonormalize.hpp"

namespace gsp {

struct Unbounded {};
inline constexpr Unbounded unbounded{};

enum class ParamOrigin { given_p, converted_from_d };
enum class Method { recurrence, closed_form };

/// Pairwise cosine requested by the caller.
template <typename Scalar>
struct Angle {
    Scalar p;
};

/// Pairwise distance between unit vectors requested by the caller.
template <typename Scalar>
struct Distance {
    Scalar d;
};

namespace detail {

template <typename Scalar>
std::string fmt(Scalar x) {
    if constexpr (std::is_floating_point_v<Scalar>) {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, res.ptr);
    } else {
        std::ostringstream os;
        os.precision(std::numeric_limits<Scalar>::max_digits10);
        os << x;
        return os.str();
    }
}

template <typename Scalar>
Scalar checked_sqrt(Scalar radicand, const char* what) {
    using std::sqrt;
    if (!(radicand > Scalar(0))) {
        throw ParamError(std::string("non-positive radicand in ") + what + ": " + fmt(radicand));
    }
    return sqrt(radicand);
}

}  // namespace detail

/// Infimum of feasible p for n vectors: -1/(n-1), or -1 when n = 1.
template <typename Scalar = double>
Scalar lower_p_bound(Index n) {
    if (n < 1) throw ParamError("set size must be positive");
    if (n == 1) return Scalar(-1);
    return Scalar(-1) / Scalar(n - 1);
}

template <typename Scalar>
bool feasible_p(Index n, Scalar p) {
    if (n < 1) return false;
    if (!(p < Scalar(1)) || !(p > Scalar(-1))) return false;
    if (n == 1) return true;
    return p > lower_p_bound<Scalar>(n);
}

template <typename Scalar>
bool feasible_p(Unbounded, Scalar p) {
    return p >= Scalar(0) && p < Scalar(1);
}

template <typename Scalar>
Scalar p_from_d(Scalar d) {
    if (!(d > Scalar(0) && d < Scalar(2))) {
        throw ParamError("distance must lie in (0, 2), got " + detail::fmt(d));
    }
    return Scalar(1) - d * d / Scalar(2);
}

template <typename Scalar>
Scalar d_from_p(Scalar p) {
    using std::sqrt;
    if (!(p > Scalar(-1) && p < Scalar(1))) {
        throw ParamError("cosine must lie in (-1, 1), got " + detail::fmt(p));
    }
    return sqrt(Scalar(2) - Scalar(2) * p);
}

/// Supremum of feasible d for n vectors: sqrt(2n/(n-1)), or 2 when n = 1.
template <typename Scalar = double>
Scalar upper_d_bound(Index n) {
    using std::sqrt;
    if (n < 1) throw ParamError("set size must be positive");
    if (n == 1) return Scalar(2);
    return sqrt(Scalar(2) * Scalar(n) / Scalar(n - 1));
}

/// Decided through p_from_d so that it agrees bit-for-bit with feasible_p.
template <typename Scalar>
bool feasible_d(Index n, Scalar d) {
    if (!(d > Scalar(0) && d < Scalar(2))) return false;
    return feasible_p(n, p_from_d(d));
}

template <typename Scalar>
bool feasible_d(Unbounded, Scalar d) {
    using std::sqrt;
    return d > Scalar(0) && d <= sqrt(Scalar(2));
}

/// Validated pairwise cosine together with the set size it was checked for
/// (`n` empty means an unbounded sequence).
template <typename Scalar>
struct AngleParam {
    Scalar p;
    std::optional<Index> n;
    ParamOrigin origin = ParamOrigin::given_p;

    static AngleParam finite(Index n, Scalar p, ParamOrigin origin = ParamOrigin::given_p) {
        if (!feasible_p(n, p)) {
            const Scalar lo = lower_p_bound<Scalar>(n);
            throw ParamError("p = " + detail::fmt(p) + " is infeasible for n = " +
                                 std::to_string(n) + ": requires " + detail::fmt(lo) +
                                 " < p < 1",
                             static_cast<double>(lo));
        }
        return {p, n, origin};
    }

    static AngleParam infinite(Scalar p, ParamOrigin origin = ParamOrigin::given_p) {
        if (!feasible_p(unbounded, p)) {
            throw ParamError("p = " + detail::fmt(p) +
                                 " is infeasible for an unbounded sequence: requires 0 <= p < 1",
                             0.0);
        }
        return {p, std::nullopt, origin};
    }
};

template <typename Scalar>
struct DistanceParam {
    Scalar d;
    std::optional<Index> n;

    static DistanceParam finite(Index n, Scalar d) {
        if (!feasible_d(n, d)) {
            const Scalar hi = upper_d_bound<Scalar>(n);
            throw ParamError("d = " + detail::fmt(d) + " is infeasible for n = " +
                                 std::to_string(n) + ": requires 0 < d < " + detail::fmt(hi),
                             static_cast<double>(hi));
        }
        return {d, n};
    }

    static DistanceParam infinite(Scalar d) {
        if (!feasible_d(unbounded, d)) {
            throw ParamError("d = " + detail::fmt(d) +
                                 " is infeasible for an unbounded sequence: requires 0 < d <= sqrt(2)",
                             std::sqrt(2.0));
        }
        return {d, std::nullopt};
    }

    AngleParam<Scalar> to_angle() const {
        AngleParam<Scalar> a{p_from_d(d), n, ParamOrigin::converted_from_d};
        // d = sqrt(2) rounds to a p a few ulps below zero; the unbounded gate is closed at 0.
        if (!n && a.p < Scalar(0)) a.p = Scalar(0);
        return a;
    }
};

template <typename Scalar>
struct StepCoefficients {
    Index k;
    Scalar alpha;
    Scalar beta;
};

/// Mixing weights for building z_{k+1} from y_{k+1} and z_1 + ... + z_k.
template <typename Scalar>
StepCoefficients<Scalar> step_coefficients(Index k, Scalar p) {
    if (k < 1) throw ParamError("step index must be >= 1");
    AngleParam<Scalar>::finite(k + 1, p);
    const Scalar km1 = Scalar(k - 1);
    const Scalar denom = Scalar(1) + p * km1;
    const Scalar alpha = detail::checked_sqrt(
        (Scalar(1) - p) * (Scalar(1) + p * Scalar(k)) / denom, "step coefficient alpha");
    return {k, alpha, p / denom};
}

/// The y_m coefficient shared by every z_k with k > m.
template <typename Scalar>
Scalar coefficient_a(Index m, Scalar p) {
    if (m < 1) throw ParamError("coefficient index must be >= 1");
    AngleParam<Scalar>::finite(m + 1, p);
    const Scalar outer = Scalar(1) + p * Scalar(m - 1);
    const Scalar inner_den = Scalar(1) + p * Scalar(m - 2);
    return p / outer *
           detail::checked_sqrt((Scalar(1) - p) * outer / inner_den, "coefficient a_m");
}

/// The y_k coefficient of z_k.
template <typename Scalar>
Scalar diagonal_coefficient(Index k, Scalar p) {
    if (k < 1) throw ParamError("coefficient index must be >= 1");
    if (k == 1) return Scalar(1);
    AngleParam<Scalar>::finite(k, p);
    if (p == Scalar(0)) return Scalar(1);
    // coefficient_a(k, p) would demand feasibility for k + 1 vectors; only k are needed here.
    const Scalar outer = Scalar(1) + p * Scalar(k - 1);
    const Scalar inner_den = Scalar(1) + p * Scalar(k - 2);
    const Scalar a_k =
        p / outer * detail::checked_sqrt((Scalar(1) - p) * outer / inner_den, "diagonal coefficient");
    return outer / p * a_k;
}

template <typename Scalar>
struct CoefficientTable {
    Scalar p;
    std::vector<Scalar> a;     // a[m-1] = a_m(p)
    std::vector<Scalar> diag;  // diag[k-1] = c_k
};

/// a_1..a_{K-1} and c_1..c_K, i.e. everything needed to write z_1..z_K.
/// a_K is included as well whenever (K + 1, p) is feasible.
template <typename Scalar>
CoefficientTable<Scalar> coefficient_table(Index K, Scalar p) {
    AngleParam<Scalar>::finite(K, p);
    CoefficientTable<Scalar> t{p, {}, {}};
    t.a.reserve(static_cast<std::size_t>(K));
    t.diag.reserve(static_cast<std::size_t>(K));
    for (Index m = 1; m <= K; ++m) {
        if (m < K || feasible_p(K + 1, p)) t.a.push_back(coefficient_a(m, p));
        t.diag.push_back(diagonal_coefficient(m, p));
    }
    return t;
}

template <typename Scalar>
struct EquiangularSet {
    VectorSet<Scalar> vectors;
    AngleParam<Scalar> param;

    Scalar p() const { return param.p; }
    Index size() const { return vectors.cols(); }
};

/// Builds z_1..z_n from an orthonormal basis by the two-term recurrence,
/// carrying the running sum z_1 + ... + z_k.
template <typename Scalar>
EquiangularSet<Scalar> gsp_recurrence(const OrthonormalBasis<Scalar>& Y, Scalar p) {
    const Index n = Y.size();
    EquiangularSet<Scalar> out{VectorSet<Scalar>(Y.dim(), n), AngleParam<Scalar>::finite(n, p)};
    out.vectors.col(0) = Y.basis.col(0);
    Vector<Scalar> running = out.vectors.col(0);
    for (Index k = 1; k < n; ++k) {
        const auto c = step_coefficients(k, p);
        out.vectors.col(k) = c.alpha * Y.basis.col(k) + c.beta * running;
        running += out.vectors.col(k);
    }
    return out;
}

/// Builds each z_k directly from its closed-form coefficients.
template <typename Scalar>
EquiangularSet<Scalar> closed_form(const OrthonormalBasis<Scalar>& Y, Scalar p) {
    const Index n = Y.size();
    EquiangularSet<Scalar> out{VectorSet<Scalar>(Y.dim(), n), AngleParam<Scalar>::finite(n, p)};
    const auto table = coefficient_table(n, p);
    // prefix = a_1 y_1 + ... + a_{k-1} y_{k-1}
    Vector<Scalar> prefix = Vector<Scalar>::Zero(Y.dim());
    for (Index k = 0; k < n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        out.vectors.col(k) = prefix + table.diag[idx] * Y.basis.col(k);
        if (k + 1 < n) prefix += table.a[idx] * Y.basis.col(k);
    }
    return out;
}

template <typename Scalar>
struct TransformOptions {
    Method method = Method::recurrence;
    Scalar tol = Scalar(kDefaultTolerance);
    bool reorthogonalize = true;
};

namespace detail {

template <typename Derived>
EquiangularSet<typename Derived::Scalar> run_pipeline(
    const Eigen::MatrixBase<Derived>& X, const AngleParam<typename Derived::Scalar>& param,
    const TransformOptions<typename Derived::Scalar>& opts) {
    auto Y = gram_schmidt(X, opts.tol);
    if (opts.reorthogonalize) Y = reorthogonalize(Y);
    auto Z = opts.method == Method::recurrence ? gsp_recurrence(Y, param.p) : closed_form(Y, param.p);
    Z.param = param;
    return Z;
}

}  // namespace detail

/// Orthonormalize the columns of X, then make them pairwise cosine p.
///
/// Feasibility is checked before any work so that an infeasible p is reported
/// even for dependent input.
template <typename Derived>
EquiangularSet<typename Derived::Scalar> transform(
    const Eigen::MatrixBase<Derived>& X, Angle<typename Derived::Scalar> angle,
    const TransformOptions<typename Derived::Scalar>& opts = {}) {
    validate_vector_set(X);
    return detail::run_pipeline(X, AngleParam<typename Derived::Scalar>::finite(X.cols(), angle.p),
                                opts);
}

template <typename Derived>
EquiangularSet<typename Derived::Scalar> transform(
    const Eigen::MatrixBase<Derived>& X, Distance<typename Derived::Scalar> distance,
    const TransformOptions<typename Derived::Scalar>& opts = {}) {
    validate_vector_set(X);
    const auto dp = DistanceParam<typename Derived::Scalar>::finite(X.cols(), distance.d);
    return detail::run_pipeline(X, dp.to_angle(), opts);
}

template <typename Derived>
Matrix<typename Derived::Scalar> gram_matrix(const Eigen::MatrixBase<Derived>& Z) {
    const Index n = Z.cols();
    Matrix<typename Derived::Scalar> G(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) G(i, j) = G(j, i) = inner(Z.col(i), Z.col(j));
    }
    return G;
}

template <typename Scalar>
Matrix<Scalar> gram_matrix(const EquiangularSet<Scalar>& Z) {
    return gram_matrix(Z.vectors);
}

/// Gram matrix of an exact equiangular set: (1 - p) I + p J.
template <typename Scalar>
Matrix<Scalar> ideal_gram_matrix(Index n, Scalar p) {
    Matrix<Scalar> G = Matrix<Scalar>::Constant(n, n, p);
    G.diagonal().setOnes();
    return G;
}

/// Smallest eigenvalue of (1 - p) I + p J: min(1 - p, 1 + p (n - 1)).
template <typename Scalar>
Scalar ideal_min_eigenvalue(Index n, Scalar p) {
    const Scalar collective = Scalar(1) + p * Scalar(n - 1);
    return n == 1 ? Scalar(1) : std::min(Scalar(1) - p, collective);
}

/// Set when 1 + p (n - 1) < 1e-6, where the Gram matrix is close to singular.
template <typename Scalar>
std::optional<std::string> conditioning_warning(Index n, Scalar p) {
    const Scalar collective = Scalar(1) + p * Scalar(n - 1);
    if (n >= 2 && collective < Scalar(1e-6)) {
        return "ill-conditioned: 1 + p(n-1) = " + detail::fmt(collective) +
               " is near the feasibility boundary";
    }
    return std::nullopt;
}

}  // namespace gsp
