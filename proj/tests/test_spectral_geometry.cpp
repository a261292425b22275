#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numeric>

#include "sjslab/errors.hpp"
#include "sjslab/spectral_geometry.hpp"

using namespace sjslab;

namespace {

// independent lattice count: full enumeration of {-r..r}^3
std::int64_t brute_lattice_count(std::int64_t n) {
    const std::int64_t r = static_cast<std::int64_t>(std::ceil(std::sqrt(double(n))));
    std::int64_t count = 0;
    for (std::int64_t x = -r; x <= r; ++x)
        for (std::int64_t y = -r; y <= r; ++y)
            for (std::int64_t z = -r; z <= r; ++z)
                if (x * x + y * y + z * z == n) ++count;
    return count;
}

} // namespace

TEST_CASE("sphere spectrum: unit radius, unit mass") {
    const SpatialSpectrum spec = build_sphere_spectrum(1.0, 1.0, 2);
    REQUIRE(spec.size() == 3);
    CHECK(spec.levels[0].omega == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(spec.levels[1].omega == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(spec.levels[2].omega == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(spec.levels[0].multiplicity == 1);
    CHECK(spec.levels[1].multiplicity == 4);
    CHECK(spec.levels[2].multiplicity == 9);
}

TEST_CASE("sphere spectrum: single level") {
    const SpatialSpectrum spec = build_sphere_spectrum(1.0, 1.0, 0);
    REQUIRE(spec.size() == 1);
    CHECK(spec.levels[0].omega == 1.0);
    CHECK(spec.levels[0].multiplicity == 1);
}

TEST_CASE("sphere spectrum: R=2, m=0.5 level 1") {
    // exact arithmetic: omega_1^2 = 1*3/4 + 1/4 = 1
    const SpatialSpectrum spec = build_sphere_spectrum(2.0, 0.5, 1);
    CHECK(spec.levels[1].omega == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(spec.levels[1].multiplicity == 4);
}

TEST_CASE("sphere spectrum: invalid parameters") {
    CHECK_THROWS_AS(build_sphere_spectrum(0.0, 1.0, 2), invalid_parameter);
    CHECK_THROWS_AS(build_sphere_spectrum(-1.0, 1.0, 2), invalid_parameter);
    CHECK_THROWS_AS(build_sphere_spectrum(1.0, 0.0, 2), invalid_parameter);
    CHECK_THROWS_AS(build_sphere_spectrum(1.0, 1.0, -1), invalid_parameter);
}

TEST_CASE("sphere spectrum: dispersion identity and multiplicity totals") {
    const double R = 1.7, m = 0.9;
    const SpatialSpectrum spec = build_sphere_spectrum(R, m, 60);
    std::int64_t mult_total = 0;
    for (const SpectrumLevel& level : spec.levels) {
        const double j = static_cast<double>(level.index);
        const double expected = j * (j + 2.0) / (R * R);
        CHECK(level.omega * level.omega - m * m ==
              doctest::Approx(expected).epsilon(1e-13));
        mult_total += level.multiplicity;
    }
    std::int64_t expected_total = 0;
    for (std::int64_t j = 0; j <= 60; ++j) expected_total += (j + 1) * (j + 1);
    CHECK(mult_total == expected_total);

    for (std::size_t i = 1; i < spec.size(); ++i)
        CHECK(spec.levels[i].omega > spec.levels[i - 1].omega);
}

TEST_CASE("sphere spectrum: mR = 1 gives integer frequencies exactly") {
    const SpatialSpectrum spec = build_sphere_spectrum(1.0, 1.0, 500);
    for (const SpectrumLevel& level : spec.levels)
        CHECK(level.omega == static_cast<double>(level.index + 1));

    const SpatialSpectrum half = build_sphere_spectrum(2.0, 0.5, 100);
    for (const SpectrumLevel& level : half.levels)
        CHECK(level.omega ==
              doctest::Approx((level.index + 1) / 2.0).epsilon(3e-16));
}

TEST_CASE("torus spectrum: small norms") {
    const SpatialSpectrum spec = build_torus_spectrum(1.0, 0.5, 10);
    REQUIRE(!spec.levels.empty());
    CHECK(spec.levels[0].index == 0);
    CHECK(spec.levels[0].omega == 0.5); // omega = m at the zero lattice vector
    CHECK(spec.levels[0].multiplicity == 1);
    CHECK(spec.levels[1].index == 1);
    CHECK(spec.levels[1].multiplicity == 6);

    // n = 7 is not a sum of three squares
    for (const SpectrumLevel& level : spec.levels) CHECK(level.index != 7);
}

TEST_CASE("torus spectrum: omega value against lattice enumeration") {
    const SpatialSpectrum spec = build_torus_spectrum(2.0 * M_PI, 1.0, 1);
    REQUIRE(spec.size() == 2);
    CHECK(spec.levels[1].omega == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(spec.levels[1].multiplicity == brute_lattice_count(1));
}

TEST_CASE("torus spectrum: multiplicities match brute force up to 50") {
    const SpatialSpectrum spec = build_torus_spectrum(1.0, 1.0, 50);
    for (const SpectrumLevel& level : spec.levels)
        CHECK(level.multiplicity == brute_lattice_count(level.index));
    // achievable-n count: levels are exactly those with nonzero lattice count
    std::size_t achievable = 0;
    for (std::int64_t n = 0; n <= 50; ++n)
        if (brute_lattice_count(n) > 0) ++achievable;
    CHECK(spec.size() == achievable);
}

TEST_CASE("torus spectrum: invalid parameters") {
    CHECK_THROWS_AS(build_torus_spectrum(0.0, 1.0, 5), invalid_parameter);
    CHECK_THROWS_AS(build_torus_spectrum(1.0, -1.0, 5), invalid_parameter);
    CHECK_THROWS_AS(build_torus_spectrum(1.0, 1.0, -2), invalid_parameter);
}

TEST_CASE("custom spectrum: sorting and merging") {
    const SpatialSpectrum sorted =
        build_custom_spectrum({{2.0, 1}, {1.0, 3}}, 1.0);
    REQUIRE(sorted.size() == 2);
    CHECK(sorted.levels[0].omega == 1.0);
    CHECK(sorted.levels[0].multiplicity == 3);
    CHECK(sorted.levels[1].omega == 2.0);

    const SpatialSpectrum merged =
        build_custom_spectrum({{1.0, 2}, {1.0, 3}}, 1.0);
    REQUIRE(merged.size() == 1);
    CHECK(merged.levels[0].multiplicity == 5);
}

TEST_CASE("custom spectrum: validation") {
    CHECK_THROWS_AS(build_custom_spectrum({{0.5, 1}}, 1.0), invalid_parameter);
    CHECK_THROWS_AS(build_custom_spectrum({{-1.0, 1}}, 1.0), invalid_parameter);
    CHECK_THROWS_AS(build_custom_spectrum({{2.0, 0}}, 1.0), invalid_parameter);
    CHECK_THROWS_AS(build_custom_spectrum({}, 1.0), invalid_parameter);
}
