#include "doctest.h"

#include "degvisc/errors.hpp"
#include "degvisc/params.hpp"

#include <algorithm>
#include <cmath>

using namespace degvisc;

namespace {
bool mentions(const RegimeReport& r, const std::string& cond) {
    return std::find(r.violated_conditions.begin(), r.violated_conditions.end(), cond) != r.violated_conditions.end();
}
}  // namespace

TEST_CASE("two-dimensional regimes") {
    const auto a = validate_regime(1.0, 2.0, 2, SystemVariant::A2D);
    CHECK(a.admissible);
    CHECK(a.theorem == Theorem::Thm2D_S2);
    CHECK(validate_regime(1.0, 2.0, 2, SystemVariant::B3D).theorem == Theorem::Thm2D_S1);

    // gamma = 2 alpha - 1 is the edge of the admissible range
    CHECK(validate_regime(1.5, 2.0, 2, SystemVariant::A2D).admissible);
    const auto low = validate_regime(1.5, 1.9, 2, SystemVariant::A2D);
    CHECK_FALSE(low.admissible);
    CHECK(mentions(low, "γ≥2α−1"));
}

TEST_CASE("standing assumptions are reported by name") {
    const auto r = validate_regime(1.0, 1.0, 2, SystemVariant::A2D);
    CHECK_FALSE(r.admissible);
    CHECK(mentions(r, "γ>1"));
    CHECK(r.theorem == Theorem::None);
    CHECK(mentions(validate_regime(0.5, 2.0, 2, SystemVariant::A2D), "α>1/2"));
    CHECK(mentions(validate_regime(NAN, 2.0, 2, SystemVariant::A2D), "finite α, γ"));
    CHECK(mentions(validate_regime(1.0, 2.0, 4, SystemVariant::A2D), "N∈{1,2,3}"));
}

TEST_CASE("three-dimensional regimes") {
    const auto b = validate_regime(1.0, 2.0, 3, SystemVariant::B3D);
    CHECK(b.admissible);
    CHECK_FALSE(b.needs_L4_data);
    // gamma < 6 alpha - 3 at alpha = 3/4 means gamma < 3/2
    CHECK(validate_regime(0.75, 1.4, 3, SystemVariant::B3D).admissible);
    CHECK(mentions(validate_regime(0.75, 1.5, 3, SystemVariant::B3D), "γ<6α−3"));

    const auto l4 = validate_regime(1.5, 2.5, 3, SystemVariant::B3D);
    CHECK(l4.admissible);
    CHECK(l4.needs_L4_data);
    CHECK(mentions(validate_regime(1.5, 3.6, 3, SystemVariant::B3D), "γ≤3α−1"));
    CHECK(mentions(validate_regime(1.5, 3.2, 3, SystemVariant::B3D), "γ<3"));
    CHECK(mentions(validate_regime(2.0, 2.5, 3, SystemVariant::B3D), "α∈[3/4,2)"));
    CHECK_FALSE(validate_regime(1.0, 2.0, 3, SystemVariant::A2D).admissible);
}

TEST_CASE("system C requires alpha = 1 and gamma < 3 in 3D") {
    CHECK(validate_regime(1.0, 2.0, 3, SystemVariant::C3D).theorem == Theorem::Thm3D_S2_alpha1);
    CHECK(mentions(validate_regime(1.2, 2.0, 3, SystemVariant::C3D), "α=1"));
    CHECK(mentions(validate_regime(1.0, 3.0, 3, SystemVariant::C3D), "γ<3"));
    CHECK(validate_regime(1.0, 1.4, 1, SystemVariant::C3D).admissible);
}

TEST_CASE("one-dimensional runs are allowed with a note") {
    const auto r = validate_regime(1.0, 2.0, 1, SystemVariant::A2D);
    CHECK(r.admissible);
    CHECK(r.theorem == Theorem::None);
    CHECK_FALSE(r.notes.empty());
}

TEST_CASE("derived constants") {
    const ModelParams p = derive_constants(1.0, 2.0, 1.0, SystemVariant::A2D);
    CHECK(p.gamma_tilde == doctest::Approx(2.0 + 1.0 / 6.0));
    // sigma0 = (8 (alpha + gamma + 2))^{-8}, eps0 = min{(2 alpha - 1)(16 (alpha + gamma))^{-10}, eta0}
    CHECK(p.sigma0 == doctest::Approx(std::pow(40.0, -8.0)).epsilon(1e-14));
    CHECK(p.epsilon0 == doctest::Approx(std::pow(48.0, -10.0)).epsilon(1e-14));
    CHECK(p.p0 == 50);

    const ModelParams small_eta = derive_constants(1.0, 2.0, 1e-30, SystemVariant::A2D);
    CHECK(small_eta.epsilon0 == 1e-30);

    const ModelParams c = derive_constants(1.0, 2.0, 1.0, SystemVariant::C3D);
    CHECK(c.epsilon0 == 1e-10);
}

TEST_CASE("make_params validates epsilon and the regime") {
    CHECK(make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D).epsilon == 0.05);
    CHECK(make_params(1.0, 2.0, 0.0, 1.0, SystemVariant::A2D).epsilon == 0.0);
    CHECK_THROWS_AS(make_params(1.0, 2.0, -0.1, 1.0, SystemVariant::A2D), RegimeError);
    CHECK_THROWS_AS(make_params(1.0, 1.0, 0.1, 1.0, SystemVariant::A2D), RegimeError);
    CHECK_THROWS_AS(make_params(1.0, 2.0, 0.1, 0.0, SystemVariant::A2D), RegimeError);
    const ModelParams p = make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D);
    CHECK_FALSE(p.epsilon_in_theory_range());
    try {
        make_params(1.0, 1.0, 0.1, 1.0, SystemVariant::A2D);
    } catch (const RegimeError& e) {
        CHECK(std::string(e.what()).find("γ>1") != std::string::npos);
    }
}

TEST_CASE("variant names round trip") {
    for (auto v : {SystemVariant::A2D, SystemVariant::B3D, SystemVariant::C3D}) CHECK(parse_variant(to_string(v)) == v);
    CHECK(parse_variant("C3D_alpha1") == SystemVariant::C3D);
    CHECK_THROWS_AS(parse_variant("D4"), ConfigError);
    CHECK(native_dimension(SystemVariant::A2D) == 2);
    CHECK(native_dimension(SystemVariant::B3D) == 3);
}
