#pragma once

#include "degvisc/params.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace degvisc {

enum class Topology { Periodic, Box };

/// Uniform cell-centered mesh. Cell i on axis a has center
/// origin[a] + (i + 1/2) * spacing(a). Unused axes have extent 1.
struct Grid {
    int dim = 1;
    std::array<int, 3> n{1, 1, 1};
    std::array<double, 3> length{1.0, 1.0, 1.0};
    std::array<double, 3> origin{0.0, 0.0, 0.0};
    Topology topology = Topology::Periodic;

    /// Torus [0, L)^dim with n cells per axis.
    static Grid torus(int dim, int n, double length = 1.0);
    /// Box (-half_width, half_width)^dim with n cells per axis.
    static Grid box(int dim, int n, double half_width);

    double spacing(int axis) const { return length[axis] / n[axis]; }
    double center(int axis, int i) const { return origin[axis] + (i + 0.5) * spacing(axis); }
    std::size_t size() const { return static_cast<std::size_t>(n[0]) * n[1] * n[2]; }
    double cell_volume() const;
    double volume() const;
    /// Largest spacing over active axes.
    double max_spacing() const;
    /// Ghost layers per face the boundary operators act on (1 on boxes).
    int ghost_width() const { return topology == Topology::Box ? 1 : 0; }
    /// Linear-index stride of each axis (row-major, axis 0 slowest).
    std::array<std::ptrdiff_t, 3> strides() const {
        return {static_cast<std::ptrdiff_t>(n[1]) * n[2], n[2], 1};
    }
    std::size_t index(int i0, int i1 = 0, int i2 = 0) const {
        return (static_cast<std::size_t>(i0) * n[1] + i1) * n[2] + i2;
    }
    /// Cell coordinates of a linear index.
    std::array<int, 3> coords(std::size_t idx) const;

    /// Throws ConfigError unless dim, extents and lengths are valid.
    void validate() const;

    bool operator==(const Grid&) const = default;
};

class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const Grid& grid, double value = 0.0) : grid_(grid), data_(grid.size(), value) {}

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return data_.size(); }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

private:
    Grid grid_;
    std::vector<double> data_;
};

/// dim components stored as separate arrays.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(const Grid& grid, double value = 0.0) : grid_(grid) {
        for (int c = 0; c < grid.dim; ++c) comp_[c].assign(grid.size(), value);
    }

    const Grid& grid() const { return grid_; }
    int dim() const { return grid_.dim; }
    std::size_t size() const { return grid_.size(); }
    std::vector<double>& comp(int c) { return comp_[c]; }
    const std::vector<double>& comp(int c) const { return comp_[c]; }
    double& operator()(int c, std::size_t i) { return comp_[c][i]; }
    double operator()(int c, std::size_t i) const { return comp_[c][i]; }
    double norm2_at(std::size_t i) const {
        double s = 0.0;
        for (int c = 0; c < grid_.dim; ++c) s += comp_[c][i] * comp_[c][i];
        return s;
    }

private:
    Grid grid_;
    std::array<std::vector<double>, 3> comp_;
};

struct State {
    ScalarField rho;
    VectorField u;
    double t = 0.0;
    ModelParams params;

    const Grid& grid() const { return rho.grid(); }
};

/// Throws CorruptionError naming the first non-finite sample.
void check_finite(const ScalarField& f, const char* what = "field");
void check_finite(const VectorField& f, const char* what = "field");

/// Midpoint rule: sum of samples times cell volume.
double integrate(const ScalarField& f);
/// Midpoint rule of an integrand given per cell.
template <class Term>
double integrate_cells(const Grid& g, Term&& term);

/// (integral |f|^p)^(1/p); p = infinity returns the max norm.
double lp_norm(const ScalarField& f, double p);

enum class LevelSide { Above, Below };
/// Cell count with f > k (Above) or f < k (Below), times cell volume.
double level_set_measure(const ScalarField& f, double k, LevelSide side);

double min_value(const ScalarField& f);
double max_value(const ScalarField& f);

}  // namespace degvisc

#include "degvisc/parallel.hpp"

template <class Term>
double degvisc::integrate_cells(const Grid& g, Term&& term) {
    return deterministic_sum(g.size(), term) * g.cell_volume();
}
