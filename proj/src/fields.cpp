#include "degvisc/fields.hpp"

#include "degvisc/errors.hpp"
#include "degvisc/parallel.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace degvisc {

Grid Grid::torus(int dim, int n, double length) {
    Grid g;
    g.dim = dim;
    for (int a = 0; a < dim; ++a) {
        g.n[a] = n;
        g.length[a] = length;
    }
    g.topology = Topology::Periodic;
    g.validate();
    return g;
}

Grid Grid::box(int dim, int n, double half_width) {
    Grid g;
    g.dim = dim;
    for (int a = 0; a < dim; ++a) {
        g.n[a] = n;
        g.length[a] = 2.0 * half_width;
        g.origin[a] = -half_width;
    }
    g.topology = Topology::Box;
    g.validate();
    return g;
}

double Grid::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= spacing(a);
    return v;
}

double Grid::volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= length[a];
    return v;
}

double Grid::max_spacing() const {
    double h = 0.0;
    for (int a = 0; a < dim; ++a) h = std::max(h, spacing(a));
    return h;
}

std::array<int, 3> Grid::coords(std::size_t idx) const {
    std::array<int, 3> c{};
    c[2] = static_cast<int>(idx % n[2]);
    idx /= n[2];
    c[1] = static_cast<int>(idx % n[1]);
    c[0] = static_cast<int>(idx / n[1]);
    return c;
}

void Grid::validate() const {
    if (dim < 1 || dim > 3) throw ConfigError("grid dimension must be 1, 2 or 3");
    for (int a = 0; a < 3; ++a) {
        if (a < dim) {
            if (n[a] < 4) throw ConfigError("grid extent must be at least 4 cells per axis");
            if (!(length[a] > 0.0) || !std::isfinite(length[a]))
                throw ConfigError("grid length must be positive and finite");
        } else if (n[a] != 1) {
            throw ConfigError("unused grid axes must have extent 1");
        }
    }
}

namespace {

[[noreturn]] void report_corruption(const Grid& g, const char* what, int comp, std::size_t i, double v) {
    std::ostringstream msg;
    const auto c = g.coords(i);
    msg << what << ": non-finite sample " << v;
    if (comp >= 0) msg << " in component " << comp;
    msg << " at cell (" << c[0];
    for (int a = 1; a < g.dim; ++a) msg << ',' << c[a];
    msg << ')';
    throw CorruptionError(msg.str());
}

}  // namespace

void check_finite(const ScalarField& f, const char* what) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!std::isfinite(f[i])) report_corruption(f.grid(), what, -1, i, f[i]);
}

void check_finite(const VectorField& f, const char* what) {
    for (int c = 0; c < f.dim(); ++c)
        for (std::size_t i = 0; i < f.size(); ++i)
            if (!std::isfinite(f(c, i))) report_corruption(f.grid(), what, c, i, f(c, i));
}

double integrate(const ScalarField& f) {
    check_finite(f, "integrand");
    return pairwise_sum(f.data(), f.size()) * f.grid().cell_volume();
}

double lp_norm(const ScalarField& f, double p) {
    if (std::isinf(p) && p > 0) {
        check_finite(f, "lp_norm argument");
        double m = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
        return m;
    }
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm requires p >= 1");
    check_finite(f, "lp_norm argument");
    const double s = integrate_cells(f.grid(), [&](std::size_t i) { return std::pow(std::abs(f[i]), p); });
    return std::pow(s, 1.0 / p);
}

double level_set_measure(const ScalarField& f, double k, LevelSide side) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (side == LevelSide::Above ? f[i] > k : f[i] < k) ++count;
    }
    return static_cast<double>(count) * f.grid().cell_volume();
}

double min_value(const ScalarField& f) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.size(); ++i) m = std::min(m, f[i]);
    return m;
}

double max_value(const ScalarField& f) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, f[i]);
    return m;
}

}  // namespace degvisc
