#include "doctest.h"

#include "degvisc/errors.hpp"
#include "degvisc/fields.hpp"
#include "degvisc/snapshot.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

using namespace degvisc;
namespace fs = std::filesystem;

namespace {
fs::path scratch(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / "degvisc_unit";
    fs::create_directories(d);
    return d / name;
}
}  // namespace

TEST_CASE("grid geometry") {
    const Grid t = Grid::torus(2, 8, 2.0);
    CHECK(t.size() == 64);
    CHECK(t.spacing(0) == 0.25);
    CHECK(t.center(1, 0) == 0.125);
    CHECK(t.cell_volume() == doctest::Approx(0.0625));
    CHECK(t.volume() == doctest::Approx(4.0));
    const auto c = t.coords(t.index(3, 5));
    CHECK(c[0] == 3);
    CHECK(c[1] == 5);

    const Grid b = Grid::box(3, 4, 1.5);
    CHECK(b.origin[0] == -1.5);
    CHECK(b.length[2] == 3.0);
    CHECK(b.topology == Topology::Box);
    CHECK(b.ghost_width() == 1);
    CHECK(t.ghost_width() == 0);

    Grid bad = t;
    bad.n[0] = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("midpoint integration is exact for trigonometric polynomials") {
    const Grid g = Grid::torus(2, 16);
    ScalarField f(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto c = g.coords(i);
        const double x = g.center(0, c[0]), y = g.center(1, c[1]);
        f[i] = 2.0 + std::sin(2 * std::numbers::pi * x) * std::cos(4 * std::numbers::pi * y);
    }
    CHECK(integrate(f) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(lp_norm(f, INFINITY) == doctest::Approx(max_value(f)));
    CHECK(min_value(f) > 0.9);
}

TEST_CASE("lp norms and level sets") {
    const Grid g = Grid::torus(1, 4);
    ScalarField f(g);
    f[0] = 1;
    f[1] = -2;
    f[2] = 3;
    f[3] = 0;
    // (sum |f|^2 h)^(1/2) with h = 1/4
    CHECK(lp_norm(f, 2.0) == doctest::Approx(std::sqrt(14.0 / 4.0)));
    CHECK(lp_norm(f, 1.0) == doctest::Approx(1.5));
    CHECK(level_set_measure(f, 0.5, LevelSide::Above) == 0.5);
    CHECK(level_set_measure(f, 0.5, LevelSide::Below) == 0.5);
    CHECK(level_set_measure(f, 3.0, LevelSide::Above) == 0.0);
}

TEST_CASE("non-finite samples are reported") {
    const Grid g = Grid::torus(1, 8);
    ScalarField f(g, 1.0);
    CHECK_NOTHROW(check_finite(f));
    f[5] = NAN;
    CHECK_THROWS_AS(check_finite(f), CorruptionError);
    VectorField v(g);
    v(0, 2) = INFINITY;
    CHECK_THROWS_AS(check_finite(v), CorruptionError);
}

TEST_CASE("snapshot files round trip bit for bit") {
    const Grid g = Grid::torus(2, 5, 1.3);
    ScalarField s(g);
    VectorField v(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        s[i] = std::sin(0.37 * i) / 3.0;
        v(0, i) = std::exp(-0.01 * i);
        v(1, i) = -1.0 / (i + 1.0);
    }
    write_field(scratch("s.bin"), s, 0.1);
    write_field(scratch("v.bin"), v, 0.2);
    const auto rs = read_field(scratch("s.bin"));
    const auto rv = read_field(scratch("v.bin"));
    CHECK_FALSE(rs.is_vector);
    CHECK(rv.is_vector);
    CHECK(rs.grid == g);
    CHECK(rs.t == 0.1);
    CHECK(rs.scalar.values() == s.values());
    CHECK(rv.vector.comp(0) == v.comp(0));
    CHECK(rv.vector.comp(1) == v.comp(1));
}

TEST_CASE("truncated and malformed snapshot files are rejected") {
    const Grid g = Grid::torus(1, 16);
    write_field(scratch("t.bin"), ScalarField(g, 1.0), 0.0);
    fs::resize_file(scratch("t.bin"), fs::file_size(scratch("t.bin")) - 8);
    CHECK_THROWS_AS(read_field(scratch("t.bin")), IoError);
    {
        std::ofstream out(scratch("junk.bin"));
        out << "not a field\n";
    }
    CHECK_THROWS_AS(read_field(scratch("junk.bin")), IoError);
    CHECK_THROWS_AS(read_field(scratch("missing.bin")), IoError);
}

TEST_CASE("csv slices use 17 significant digits") {
    CHECK(fmt17(0.1) == "0.10000000000000001");
    const Grid g = Grid::torus(1, 4);
    ScalarField f(g, 1.0 / 3.0);
    write_csv_slice(scratch("slice.csv"), f);
    std::ifstream in(scratch("slice.csv"));
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(row.find("0.33333333333333331") != std::string::npos);
}
