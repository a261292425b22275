/*
 * spectral_geometry.hpp — spectrum of K = -Laplacian + m^2 on the spatial
 * section, stored as levels (omega, multiplicity) in ascending omega.
 *
 * Supported sections: round 3-sphere of radius R, flat 3-torus of period L,
 * and user-supplied spectra. Level indices carry the geometry's natural
 * label: sphere -> angular number j, torus -> ||k||^2, custom -> ordinal.
 */

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sjslab {

enum class GeometryKind { sphere, torus, custom };

std::string to_string(GeometryKind kind);

struct SpectrumLevel {
    std::int64_t index = 0;
    double omega = 0.0;           // sqrt(eigenvalue of K), > 0
    std::int64_t multiplicity = 1;
};

struct SpatialSpectrum {
    GeometryKind kind = GeometryKind::custom;
    double mass = 0.0;
    double geometry_parameter = 0.0; // sphere radius R or torus period L; 0 for custom
    std::vector<SpectrumLevel> levels; // strictly increasing in omega

    std::size_t size() const { return levels.size(); }
};

// Sphere: omega_j = sqrt(j(j+2)/R^2 + m^2), multiplicity (j+1)^2, j = 0..level_max.
// Evaluated as sqrt(j(j+2) + (mR)^2)/R so that mR = 1 gives omega_j = (j+1)/R
// without rounding drift.
SpatialSpectrum build_sphere_spectrum(double radius, double mass, std::int64_t level_max);

// Torus: one level per achievable n = ||k||^2 <= norm2_max, k in Z^3, with
// omega = sqrt((2 pi / L)^2 n + m^2) and multiplicity #{k : ||k||^2 = n}.
SpatialSpectrum build_torus_spectrum(double period, double mass, std::int64_t norm2_max);

// Brute-force lattice count #{k in Z^3 : ||k||^2 = n}.
std::int64_t torus_lattice_count(std::int64_t n);

// Validates, sorts by omega, and merges duplicate omegas (multiplicities add).
SpatialSpectrum build_custom_spectrum(
    const std::vector<std::pair<double, std::int64_t>>& entries, double mass);

} // namespace sjslab
