#include "sjslab/spectral_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sjslab/errors.hpp"

namespace sjslab {

std::string to_string(GeometryKind kind) {
    switch (kind) {
        case GeometryKind::sphere: return "sphere";
        case GeometryKind::torus: return "torus";
        case GeometryKind::custom: return "custom";
    }
    return "custom";
}

SpatialSpectrum build_sphere_spectrum(double radius, double mass, std::int64_t level_max) {
    if (!(radius > 0.0)) throw invalid_parameter("build_sphere_spectrum: radius must be > 0");
    if (!(mass > 0.0)) throw invalid_parameter("build_sphere_spectrum: mass must be > 0");
    if (level_max < 0) throw invalid_parameter("build_sphere_spectrum: level_max must be >= 0");

    SpatialSpectrum spec;
    spec.kind = GeometryKind::sphere;
    spec.mass = mass;
    spec.geometry_parameter = radius;
    spec.levels.reserve(static_cast<std::size_t>(level_max) + 1);
    const double mr = mass * radius;
    for (std::int64_t j = 0; j <= level_max; ++j) {
        const double jd = static_cast<double>(j);
        spec.levels.push_back({j, std::sqrt(jd * (jd + 2.0) + mr * mr) / radius,
                               (j + 1) * (j + 1)});
    }
    return spec;
}

std::int64_t torus_lattice_count(std::int64_t n) {
    if (n < 0) return 0;
    const std::int64_t kmax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
    std::int64_t count = 0;
    for (std::int64_t kx = -kmax; kx <= kmax; ++kx)
        for (std::int64_t ky = -kmax; ky <= kmax; ++ky) {
            const std::int64_t rem = n - kx * kx - ky * ky;
            if (rem < 0) continue;
            const std::int64_t kz = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rem))));
            if (kz * kz == rem) count += (kz == 0) ? 1 : 2;
        }
    return count;
}

SpatialSpectrum build_torus_spectrum(double period, double mass, std::int64_t norm2_max) {
    if (!(period > 0.0)) throw invalid_parameter("build_torus_spectrum: period must be > 0");
    if (!(mass > 0.0)) throw invalid_parameter("build_torus_spectrum: mass must be > 0");
    if (norm2_max < 0) throw invalid_parameter("build_torus_spectrum: norm2_max must be >= 0");

    // group the lattice cube by ||k||^2; exactness beats number theory at this scale
    std::map<std::int64_t, std::int64_t> counts;
    const std::int64_t kmax =
        static_cast<std::int64_t>(std::sqrt(static_cast<double>(norm2_max)));
    for (std::int64_t kx = -kmax; kx <= kmax; ++kx)
        for (std::int64_t ky = -kmax; ky <= kmax; ++ky)
            for (std::int64_t kz = -kmax; kz <= kmax; ++kz) {
                const std::int64_t n = kx * kx + ky * ky + kz * kz;
                if (n <= norm2_max) ++counts[n];
            }

    SpatialSpectrum spec;
    spec.kind = GeometryKind::torus;
    spec.mass = mass;
    spec.geometry_parameter = period;
    spec.levels.reserve(counts.size());
    const double k0 = 2.0 * M_PI / period;
    for (const auto& [n, mult] : counts)
        spec.levels.push_back(
            {n, std::sqrt(k0 * k0 * static_cast<double>(n) + mass * mass), mult});
    return spec;
}

SpatialSpectrum build_custom_spectrum(
    const std::vector<std::pair<double, std::int64_t>>& entries, double mass) {
    if (!(mass > 0.0)) throw invalid_parameter("build_custom_spectrum: mass must be > 0");
    if (entries.empty()) throw invalid_parameter("build_custom_spectrum: entries must be non-empty");

    std::vector<std::pair<double, std::int64_t>> sorted = entries;
    for (const auto& [omega, mult] : sorted) {
        if (!(omega > 0.0))
            throw invalid_parameter("build_custom_spectrum: omega must be > 0");
        if (omega < mass)
            throw invalid_parameter("build_custom_spectrum: omega below the mass gap");
        if (mult < 1)
            throw invalid_parameter("build_custom_spectrum: multiplicity must be >= 1");
    }
    std::sort(sorted.begin(), sorted.end());

    SpatialSpectrum spec;
    spec.kind = GeometryKind::custom;
    spec.mass = mass;
    spec.levels.reserve(sorted.size());
    for (const auto& [omega, mult] : sorted) {
        if (!spec.levels.empty() && spec.levels.back().omega == omega)
            spec.levels.back().multiplicity += mult;
        else
            spec.levels.push_back({static_cast<std::int64_t>(spec.levels.size()), omega, mult});
    }
    return spec;
}

} // namespace sjslab
