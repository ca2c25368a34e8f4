#pragma once

#include <cstdint>
#include <random>

#include "gsp/linalg.hpp"

namespace gsp {

/// Portable standard-normal stream.
///
/// std::mt19937_64 is fully specified by the standard, but
/// std::normal_distribution is not, so normals are derived here from raw
/// engine output: 53-bit uniforms in (0, 1] fed to the Box-Muller transform,
/// both outputs of each pair used in order. Same seed, same numbers, on every
/// platform with IEEE doubles and a correctly rounded libm.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double operator()();

private:
    double uniform();

    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// dim x n matrix of independent standard normals, column by column.
VectorSet<double> gaussian_set(Index n, Index dim, NormalStream& rng);

/// Seeded Gaussian set whose columns are numerically independent (rank n
/// at the default tolerance); redraws until that holds. Requires n <= dim.
VectorSet<double> random_independent_set(Index n, Index dim, std::uint64_t seed);

}  // namespace gsp
