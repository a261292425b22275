/*
 * two_point.hpp — smeared two-point values per mode, for mode-separable test
 * functions f(t) (x) psi_j with the spatial factors orthonormal. In terms of
 * the transforms Cf = int f cos(omega t) dt, Sf = int f sin(omega t) dt:
 *
 *   SJ      (||S||/(2 omega ||C||)) (Cf - i(1-delta) Sf)(Ch + i(1-delta) Sh)
 *   H       (1/(2 omega)) (Cf - i Sf)(Ch + i Sh)
 *   NORMORD (delta/(2 omega)) ( Cf Ch / (1-delta) - Sf Sh )
 *
 * and NORMORD = SJ - H identically. Real test functions only.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "sjslab/slab_modes.hpp"
#include "sjslab/smearing.hpp"
#include "sjslab/spectral_geometry.hpp"

namespace sjslab {

enum class ElementKind { sj, h, normord };

const char* to_string(ElementKind kind);

struct ModeMatrixElement {
    std::int64_t level_index = 0;
    ElementKind kind = ElementKind::sj;
    std::complex<double> value;
};

std::complex<double> wsj_element(const ModeConstants& mc, const TemporalTestFunction& f,
                                 const TemporalTestFunction& h);

std::complex<double> wh_element(double omega, const TemporalTestFunction& f,
                                const TemporalTestFunction& h);

std::complex<double> normord_element(const ModeConstants& mc, const TemporalTestFunction& f,
                                     const TemporalTestFunction& h);

// Diagonal elements f = h for every spectrum level, ascending level order.
std::vector<ModeMatrixElement> assemble_diagonal(const SpatialSpectrum& spectrum, double tau,
                                                 const TemporalTestFunction& f,
                                                 ElementKind kind);

} // namespace sjslab
