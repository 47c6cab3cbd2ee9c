#pragma once

#include "degvisc/fields.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace degvisc {

/// Contents of one field snapshot file.
struct FieldSnapshot {
    Grid grid;
    bool is_vector = false;
    double t = 0.0;
    ScalarField scalar;
    VectorField vector;
};

/// Writes the text header line followed by row-major little-endian float64
/// samples. Vector samples are interleaved per cell (component fastest).
void write_field(const std::filesystem::path& path, const ScalarField& f, double t);
void write_field(const std::filesystem::path& path, const VectorField& f, double t);
/// \throws IoError on a missing, malformed or truncated file.
FieldSnapshot read_field(const std::filesystem::path& path);

/// Writes a 1D or 2D field as CSV rows "x[,y],value..." (17 significant digits).
void write_csv_slice(const std::filesystem::path& path, const ScalarField& f);
void write_csv_slice(const std::filesystem::path& path, const VectorField& f);

/// Formats with 17 significant digits.
std::string fmt17(double x);

}  // namespace degvisc
