#include <doctest.h>

#include <cmath>

#include "gsp/asymptotics.hpp"
#include "oracles.hpp"

using namespace gsp;

TEST_CASE("tail_energy") {
    for (int i = 1; i <= 9; ++i) {
        const double p = i / 10.0;
        CHECK(std::abs(tail_energy(Index{1}, p) - p) <= 1e-12);
    }
    CHECK_THROWS_AS(tail_energy(Index{3}, 0.0), ParamError);
    CHECK_THROWS_AS(tail_energy(Index{3}, 1.0), ParamError);
    CHECK_THROWS_AS(tail_energy(Index{0}, 0.5), ParamError);
    CHECK(tail_energy(Index{5}, 1e-12) < 1e-11);
}

TEST_CASE("tail_energy against a million-term brute-force sum") {
    // sum_{m=5}^{5+10^6} a_m(0.5)^2, precomputed with math.fsum over the
    // defining formula and checked again here by the long double oracle.
    const double frozen = 0.09999950000299998;
    const auto brute = oracle::partial_square_sum(5, 5 + 1000000, 0.5L);
    CHECK(std::abs(static_cast<double>(brute) - frozen) <= 1e-15);

    struct Case { Index k; double p; };
    for (const auto c : {Case{5, 0.5}, Case{1, 0.3}, Case{2, 0.9}, Case{10, 0.1}}) {
        const long double partial = oracle::partial_square_sum(c.k, c.k + 1000000, c.p);
        const double closed = tail_energy(c.k, c.p) - tail_energy(c.k + 1000001, c.p);
        CHECK(std::abs(static_cast<double>(partial) - closed) <= 1e-9);
        // The remainder beyond the partial sum is positive and of order (1-p)/N.
        CHECK(tail_energy(c.k, c.p) > static_cast<double>(partial));
    }
    CHECK(std::abs(tail_energy(Index{5}, 0.5) - frozen) < 1e-6);
}

TEST_CASE("property: telescoping and partial fractions") {
    for (double p : {0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
        for (Index k : {1, 2, 3, 10, 100, 12345, 1000000}) {
            const double a = coefficient_a(k, p);
            const double diff = tail_energy(k, p) - tail_energy(k + 1, p);
            // Relative to the tail itself: the difference cancels for large k.
            CHECK(std::abs(diff - a * a) <= 1e-14 * tail_energy(k, p));
            const double km = static_cast<double>(k);
            const double lhs = a * a * (1 + p * (km - 1)) * (1 + p * (km - 2));
            CHECK(std::abs(lhs - p * p * (1 - p)) <= 1e-13 * p * p * (1 - p));
        }
    }
}

TEST_CASE("limit_vector") {
    const auto z = limit_vector(0.5, 1);
    CHECK(z.coefficients.size() == 1);
    CHECK(z.partial_norm == 0.5);
    CHECK(std::abs(z.norm_value - 1 / std::sqrt(2.0)) <= 1e-12);

    for (double p : {0.1, 0.5, 0.9}) {
        double previous = 0;
        for (Index K : {1, 10, 100, 1000, 100000}) {
            const auto lv = limit_vector(p, K);
            CHECK(lv.partial_norm > previous);
            CHECK(lv.partial_norm <= std::sqrt(p));
            CHECK(std::abs(lv.partial_norm * lv.partial_norm +
                           lv.truncation_error * lv.truncation_error - p) <= 1e-12);
            previous = lv.partial_norm;
        }
    }
    CHECK_THROWS_AS(limit_vector(0.0, 5), ParamError);
    CHECK_THROWS_AS(limit_vector(0.5, 0), ParamError);
}

TEST_CASE("residual matches a materialized coefficient-space computation") {
    // Build the coordinates of z_k - z_0 - sqrt(1-p) y_k out to m = M and add
    // the closed-form tail beyond M.
    for (double p : {0.1, 0.5, 0.9}) {
        for (Index k : {2, 3, 7, 50}) {
            const Index M = 200000;
            long double sq = 0;
            for (Index m = 1; m <= M; ++m) {
                long double zk = 0;
                if (m < k) zk = oracle::coefficient(m, p);
                if (m == k) zk = (1 + p * (k - 1)) / p * oracle::coefficient(k, p);
                long double coord = zk - oracle::coefficient(m, p);
                if (m == k) coord -= std::sqrt(1.0L - p);
                sq += coord * coord;
            }
            sq += tail_energy(M + 1, p);
            const auto rec = residual(k, p);
            CHECK(rec.residual == doctest::Approx(static_cast<double>(std::sqrt(sq))).epsilon(1e-10));

            // Exact expansion identity with c_k from diagonal_coefficient.
            const double on_axis = diagonal_coefficient(k, p) - coefficient_a(k, p) - std::sqrt(1 - p);
            CHECK(std::abs(rec.residual * rec.residual -
                           (tail_energy(k + 1, p) + on_axis * on_axis)) <= 1e-12);
            CHECK(rec.b_term == doctest::Approx(std::abs(diagonal_coefficient(k, p) - std::sqrt(1 - p)))
                                    .epsilon(1e-9));
        }
    }
}

TEST_CASE("residual frozen values") {
    // mpmath at 50 digits.
    CHECK(residual(2, 0.5).residual == doctest::Approx(0.42837299059613220).epsilon(1e-14));
    CHECK(residual(1000, 0.1).scaled == doctest::Approx(0.94455987812455927).epsilon(1e-12));
    CHECK(residual(1000000, 0.9).scaled == doctest::Approx(0.31622778797711163).epsilon(1e-12));
    CHECK(residual(1000000, 0.5).b_term == doctest::Approx(3.5355330220497031e-7).epsilon(1e-9));
    CHECK_THROWS_AS(residual(1, 0.5), ParamError);
}

TEST_CASE("b_term bound and boundedness of the scaled residual") {
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        double prev = residual(1000, p).scaled;
        int direction = 0;
        for (Index k : {2, 10, 1000, 1000000, 1000000000}) {
            const auto r = residual(k, p);
            const double km = static_cast<double>(k);
            CHECK(r.b_term * (1 + p * (km - 2)) <= 0.5 * p * std::sqrt(1 - p) + 1e-12);
            CHECK(std::isfinite(r.scaled));
            CHECK(r.scaled < 1.0);
        }
        // Monotone beyond k = 1000.
        for (Index k = 2000; k <= 100000000; k *= 2) {
            const double s = residual(k, p).scaled;
            const int dir = s > prev ? 1 : (s < prev ? -1 : 0);
            if (direction == 0) direction = dir;
            if (dir != 0 && dir != direction) CHECK(std::abs(s - prev) <= 1e-12);
            prev = s;
        }
    }
    CHECK(b_term_bound(1000000, 0.5) == doctest::Approx(3.5355e-7).epsilon(1e-4));
}

TEST_CASE("estimate_constant") {
    const auto est = estimate_constant(0.5, {1000, 10000, 100000, 1000000});
    CHECK(est.records.size() == 4);
    CHECK(est.stated_constant == doctest::Approx(0.5));
    CHECK(est.candidate_constant == doctest::Approx(std::sqrt(0.5)));
    // The limit of sqrt(k) * residual, extrapolated from the grid, is recorded
    // without asserting which closed form it equals.
    CHECK(std::isfinite(est.extrapolated));
    CHECK(std::abs(est.extrapolated - est.last_scaled) < 1e-6);
    CHECK_THROWS_AS(estimate_constant(0.5, {100, 10}), ParamError);
    CHECK_THROWS_AS(estimate_constant(0.5, {}), ParamError);
}
