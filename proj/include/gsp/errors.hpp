#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gsp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands whose shapes do not fit together.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A parameter outside its admissible range. When the violated condition is a
/// one-sided bound (e.g. the lower limit on p for a given set size) it is kept
/// so front ends can print it.
class ParamError : public Error {
public:
    explicit ParamError(const std::string& what, std::optional<double> bound = std::nullopt)
        : Error(what), bound_(bound) {}

    std::optional<double> bound() const noexcept { return bound_; }

private:
    std::optional<double> bound_;
};

/// Orthonormalization met a vector (1-based `index`) lying numerically in the
/// span of its predecessors.
class DependentInputError : public Error {
public:
    DependentInputError(std::size_t index, double residual)
        : Error("input vector " + std::to_string(index) +
                " is numerically dependent on its predecessors (residual norm " +
                std::to_string(residual) + ")"),
          index_(index), residual_(residual) {}

    std::size_t index() const noexcept { return index_; }
    double residual() const noexcept { return residual_; }

private:
    std::size_t index_;
    double residual_;
};

/// File or format problems in the I/O layer.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gsp
