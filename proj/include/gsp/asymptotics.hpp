#pragma once

// Behaviour of the equiangular sequence z_1, z_2, ... in l^2 as k grows,
// computed entirely on the closed-form coordinates against an implicit
// orthonormal basis y_1, y_2, ...; no ambient vectors are formed.
//
// The limit vector is z_0 = sum_m a_m(p) y_m. Since
//
//   a_m(p)^2 = p (1 - p) [1 / (1 + p (m - 2)) - 1 / (1 + p (m - 1))],
//
// the tail sum_{m >= k} a_m^2 telescopes to p (1 - p) / (1 + p (k - 2)), and
// ||z_0||^2 = p.

#include <cmath>
#include <vector>

#include "gsp/equiangular.hpp"

namespace gsp {

namespace detail {

template <typename Scalar>
void require_open_unit(Scalar p) {
    if (!(p > Scalar(0) && p < Scalar(1))) {
        throw ParamError("asymptotic quantities need 0 < p < 1, got " + fmt(p));
    }
}

}  // namespace detail

/// sum_{m >= k} a_m(p)^2 in closed form.
template <typename Scalar>
Scalar tail_energy(Index k, Scalar p) {
    detail::require_open_unit(p);
    if (k < 1) throw ParamError("tail index must be >= 1");
    return p * (Scalar(1) - p) / (Scalar(1) + p * Scalar(k - 2));
}

/// z_0 truncated to its first K coordinates.
template <typename Scalar>
struct LimitVector {
    Scalar p;
    std::vector<Scalar> coefficients;  // a_1..a_K
    Scalar norm_value;                 // ||z_0||, from the full series
    Scalar partial_norm;               // norm of the K-term truncation
    Scalar truncation_error;           // norm of the discarded tail
};

template <typename Scalar>
LimitVector<Scalar> limit_vector(Scalar p, Index K) {
    using std::sqrt;
    detail::require_open_unit(p);
    if (K < 1) throw ParamError("limit vector length must be >= 1");
    LimitVector<Scalar> z0{p, {}, sqrt(tail_energy(Index{1}, p)), Scalar(0),
                           sqrt(tail_energy(K + 1, p))};
    z0.coefficients.reserve(static_cast<std::size_t>(K));
    Scalar energy(0);
    for (Index m = 1; m <= K; ++m) {
        const Scalar a = coefficient_a(m, p);
        z0.coefficients.push_back(a);
        energy += a * a;
    }
    z0.partial_norm = sqrt(energy);
    return z0;
}

template <typename Scalar>
struct AsymptoticRecord {
    Index k;
    Scalar residual;     // ||z_k - z_0 - sqrt(1 - p) y_k||
    Scalar scaled;       // sqrt(k) * residual
    Scalar tail_energy;  // sum_{m >= k} a_m^2
    Scalar b_term;       // |c_k - sqrt(1 - p)|
};

/// c_k - sqrt(1 - p), written to avoid cancellation for large k.
template <typename Scalar>
Scalar diagonal_excess(Index k, Scalar p) {
    using std::sqrt;
    detail::require_open_unit(p);
    if (k < 2) throw ParamError("diagonal excess is defined for k >= 2");
    // c_k = sqrt(1 - p) * sqrt(1 + x) with x = p / (1 + p (k - 2))
    const Scalar x = p / (Scalar(1) + p * Scalar(k - 2));
    return sqrt(Scalar(1) - p) * x / (sqrt(Scalar(1) + x) + Scalar(1));
}

/// Exact distance between z_k and its asymptotic approximation z_0 + sqrt(1 - p) y_k.
///
/// z_k - z_0 - sqrt(1 - p) y_k = (c_k - a_k - sqrt(1 - p)) y_k - sum_{m > k} a_m y_m.
template <typename Scalar>
AsymptoticRecord<Scalar> residual(Index k, Scalar p) {
    using std::sqrt;
    detail::require_open_unit(p);
    if (k < 2) throw ParamError("asymptotic records start at k = 2");
    const Scalar excess = diagonal_excess(k, p);
    const Scalar on_axis = excess - coefficient_a(k, p);
    const Scalar r = sqrt(tail_energy(k + 1, p) + on_axis * on_axis);
    return {k, r, sqrt(Scalar(k)) * r, tail_energy(k, p), excess};
}

/// Upper bound on |c_k - sqrt(1 - p)|: p sqrt(1 - p) / (2 (1 + p (k - 2))).
template <typename Scalar>
Scalar b_term_bound(Index k, Scalar p) {
    using std::sqrt;
    detail::require_open_unit(p);
    return Scalar(0.5) * p * sqrt(Scalar(1) - p) / (Scalar(1) + p * Scalar(k - 2));
}

/// Limit of sqrt(k) * residual(k, p) estimated from a k-grid.
template <typename Scalar>
struct ConstantEstimate {
    Scalar extrapolated;         // Richardson extrapolation on the two largest k
    Scalar last_scaled;          // sqrt(k) * residual at the largest k
    Scalar stated_constant;      // sqrt(p (1 - p))
    Scalar candidate_constant;   // sqrt(1 - p)
    std::vector<AsymptoticRecord<Scalar>> records;
};

/// Assumes sqrt(k) * residual = L + C / k + o(1/k) and eliminates C between
/// the two largest grid points. `ks` must be strictly increasing.
template <typename Scalar>
ConstantEstimate<Scalar> estimate_constant(Scalar p, const std::vector<Index>& ks) {
    using std::sqrt;
    detail::require_open_unit(p);
    if (ks.empty()) throw ParamError("k-grid must not be empty");
    ConstantEstimate<Scalar> est{};
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i > 0 && ks[i] <= ks[i - 1]) throw ParamError("k-grid must be strictly increasing");
        est.records.push_back(residual(ks[i], p));
    }
    const auto& last = est.records.back();
    est.last_scaled = last.scaled;
    est.extrapolated = last.scaled;
    if (est.records.size() >= 2) {
        const auto& prev = est.records[est.records.size() - 2];
        const Scalar k1 = Scalar(prev.k), k2 = Scalar(last.k);
        est.extrapolated = (k2 * last.scaled - k1 * prev.scaled) / (k2 - k1);
    }
    est.stated_constant = sqrt(p * (Scalar(1) - p));
    est.candidate_constant = sqrt(Scalar(1) - p);
    return est;
}

}  // namespace gsp
