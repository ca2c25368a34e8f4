#include "gsp/random.hpp"

#include <cmath>
#include <numbers>

namespace gsp {

double NormalStream::uniform() {
    // (0, 1]: never zero, so the logarithm below is finite.
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double NormalStream::operator()() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

VectorSet<double> gaussian_set(Index n, Index dim, NormalStream& rng) {
    VectorSet<double> S(dim, n);
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < dim; ++i) S(i, j) = rng();
    }
    return S;
}

VectorSet<double> random_independent_set(Index n, Index dim, std::uint64_t seed) {
    if (n < 1 || dim < 1) throw ParamError("n and dim must be positive");
    if (n > dim) {
        throw ParamError("n = " + std::to_string(n) + " independent vectors do not fit in dim = " +
                         std::to_string(dim));
    }
    NormalStream rng(seed);
    while (true) {
        VectorSet<double> S = gaussian_set(n, dim, rng);
        if (rank(S) == n) return S;
    }
}

}  // namespace gsp
