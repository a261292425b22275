#include <doctest.h>

#include <algorithm>
#include <string>

#include "sjslab/report_io.hpp"

using namespace sjslab;
using nlohmann::json;

TEST_CASE("spectrum JSON round trip") {
    const SpatialSpectrum sphere = build_sphere_spectrum(2.0, 0.7, 6);
    const json j = spectrum_to_json(sphere);
    CHECK(j["geometry"] == "sphere");
    CHECK(j["radius"] == 2.0);
    const SpatialSpectrum back = spectrum_from_json(j);
    REQUIRE(back.size() == sphere.size());
    CHECK(back.kind == GeometryKind::sphere);
    CHECK(back.geometry_parameter == sphere.geometry_parameter);
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back.levels[i].index == sphere.levels[i].index);
        CHECK(back.levels[i].omega == sphere.levels[i].omega);
        CHECK(back.levels[i].multiplicity == sphere.levels[i].multiplicity);
    }
    // serialisation is stable under a second pass
    CHECK(spectrum_to_json(back).dump() == j.dump());

    // torus levels keep their sparse ||k||^2 indices
    const SpatialSpectrum torus = build_torus_spectrum(1.0, 1.0, 12);
    const SpatialSpectrum torus_back = spectrum_from_json(spectrum_to_json(torus));
    for (std::size_t i = 0; i < torus.size(); ++i)
        CHECK(torus_back.levels[i].index == torus.levels[i].index);
}

TEST_CASE("spectrum JSON validation") {
    json j{{"geometry", "sphere"},
           {"mass", 1.0},
           {"radius", 1.0},
           {"levels", json::array({json{{"index", 0}, {"omega", 0.5}, {"multiplicity", 1}}})}};
    CHECK_THROWS_AS(spectrum_from_json(j), invalid_parameter); // omega below mass
}

TEST_CASE("CSV formats: headers, 17 significant digits") {
    const SpatialSpectrum spectrum = build_sphere_spectrum(1.0, 1.0, 1);
    const std::string spec_csv = spectrum_to_csv(spectrum);
    CHECK(spec_csv.rfind("level,omega,multiplicity\n", 0) == 0);
    CHECK(spec_csv.find("\n0,1,1\n") != std::string::npos);

    const std::string modes_csv = modes_to_csv(spectrum, 1.0);
    CHECK(modes_csv.rfind("level,omega,multiplicity,sinc2wt,normC2,normS2,delta,lambda_plus\n",
                          0) == 0);
    // sinc(2) printed with 17 significant digits
    CHECK(modes_csv.find("0.45464871341284085") != std::string::npos);

    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
    CHECK(format_double(0.0) == "0");
}

TEST_CASE("element CSV carries kind and complex parts") {
    const SpatialSpectrum spectrum = build_sphere_spectrum(1.0, 1.0, 2);
    const TemporalTestFunction f = TemporalTestFunction::bump(0.4);
    const auto elements = assemble_diagonal(spectrum, 1.0, f, ElementKind::normord);
    const std::string csv = elements_to_csv(spectrum, elements);
    CHECK(csv.rfind("level,omega,multiplicity,kind,re_value,im_value\n", 0) == 0);
    CHECK(csv.find(",NORMORD,") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK_THROWS_AS(elements_to_csv(build_sphere_spectrum(1.0, 1.0, 5), elements),
                    invalid_parameter);
}

TEST_CASE("series and scan CSV shapes") {
    const SpatialSpectrum spectrum = build_sphere_spectrum(1.0, 2.0, 20);
    const auto [series_c, series_s] = nec_series(spectrum, 1.0);
    const std::string csv = series_to_csv({&series_c, &series_s});
    CHECK(csv.rfind("series,level,omega,multiplicity,term,partial_sum\n", 0) == 0);
    // one row per level per series plus the header line
    const std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == 1 + 2 * spectrum.size());

    const std::vector<double> grid{0.5, 1.0};
    const std::string scan_csv = scan_to_csv(tau_scan(spectrum, grid, 5));
    CHECK(scan_csv.rfind("tau,tail_sup,tail_mean,window\n", 0) == 0);
    CHECK(std::count(scan_csv.begin(), scan_csv.end(), '\n') == 3);
}

TEST_CASE("verdict and report JSON carry evidence and thresholds") {
    const SpatialSpectrum spectrum = build_sphere_spectrum(1.0, 2.0, 100);
    const SeriesReport report = sj_hadamard_disjointness(spectrum, 1.0);
    const json j = series_report_to_json(report, true);
    CHECK(j["verdict"]["outcome"] == "DIVERGENCE_INDICATED");
    CHECK(j["verdict"]["thresholds"]["growth_band_lo"] == 1.8);
    CHECK(j["verdict"]["tail"].contains("sup"));
    CHECK(j["rows"].size() == spectrum.size());
    CHECK(j["label"] == "sj_hadamard");

    // identical inputs give identical serialised reports
    const json again = series_report_to_json(sj_hadamard_disjointness(spectrum, 1.0), true);
    CHECK(again.dump() == j.dump());
}
