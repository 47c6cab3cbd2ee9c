#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degvisc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent run configuration (CLI exit code 1).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Parameters outside every admissible regime.
class RegimeError : public Error {
public:
    using Error::Error;
};

/// A field sample is NaN or infinite.
class CorruptionError : public Error {
public:
    using Error::Error;
};

/// Operator or boundary mode used on a grid of the wrong topology.
class TopologyError : public Error {
public:
    using Error::Error;
};

/// Density at or below the positivity floor.
class PositivityError : public Error {
public:
    PositivityError(const std::string& what, std::size_t cell, double value)
        : Error(what), cell_(cell), value_(value) {}
    std::size_t cell() const noexcept { return cell_; }
    double value() const noexcept { return value_; }

private:
    std::size_t cell_;
    double value_;
};

/// A coefficient left the representable double range.
class OverflowError : public Error {
public:
    OverflowError(const std::string& what, std::size_t cell)
        : Error(what), cell_(cell) {}
    std::size_t cell() const noexcept { return cell_; }

private:
    std::size_t cell_;
};

/// Iterative linear solve failed to reach its tolerance.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Unreadable, truncated or malformed file.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace degvisc
