/*
 * smearing.hpp — smooth compactly supported temporal test functions on the
 * slab and their two-sided cosine/sine transforms.
 *
 * The working family is the standard mollifier
 *   bump(a, A): t -> A exp(-a^2 / (a^2 - t^2))   for |t| < a, else 0,
 * optionally shifted off centre, plus an odd companion (t/a) * bump used for
 * parity checks. Transforms run Gauss-Legendre with node doubling; parity
 * short-circuits return exact zeros.
 */

#pragma once

#include <functional>

#include "sjslab/slab_modes.hpp"

namespace sjslab {

enum class Parity { even, odd, none };

class TemporalTestFunction {
public:
    enum class Family { bump, odd_bump };

    static TemporalTestFunction bump(double half_width, double amplitude = 1.0);
    static TemporalTestFunction odd_bump(double half_width, double amplitude = 1.0);

    // copy with support moved to [center - a, center + a]
    TemporalTestFunction shifted(double center) const;
    // copy with amplitude multiplied by factor
    TemporalTestFunction scaled(double factor) const;
    // copy with amplitude replaced
    TemporalTestFunction with_amplitude(double amplitude) const;

    double operator()(double t) const { return amplitude_ * shape(t - center_); }

    double half_width() const { return half_width_; }
    double center() const { return center_; }
    double amplitude() const { return amplitude_; }
    Family family() const { return family_; }
    Parity parity() const;
    double support_lo() const { return center_ - half_width_; }
    double support_hi() const { return center_ + half_width_; }

    // unit-amplitude profile about the centre; transforms integrate this and
    // apply the amplitude once at the end (keeps power-of-two rescaling exact)
    double shape(double u) const;

private:
    TemporalTestFunction(Family family, double half_width, double center, double amplitude);

    Family family_;
    double half_width_;
    double center_;
    double amplitude_;
};

double integral(const TemporalTestFunction& f);
double l2_norm(const TemporalTestFunction& f);

// two-sided transforms: int f(t) cos(omega t) dt, int f(t) sin(omega t) dt
double cosine_transform(const TemporalTestFunction& f, double omega);
double sine_transform(const TemporalTestFunction& f, double omega);

// Rescale so that int eta cos(omega t) dt = sqrt(2 omega); after this the
// ground-state diagonal element is exactly 1.
TemporalTestFunction normalize_eta_hadamard(const TemporalTestFunction& f, double omega);

// Rescale so that (||S||/(2 omega ||C||)) (int eta cos(omega t) dt)^2 = 1,
// i.e. target transform sqrt(2 omega ||C||/||S||).
TemporalTestFunction normalize_eta_sj(const TemporalTestFunction& f, const ModeConstants& mc);

// Symmetric bump for building the orthonormal e_j family: width
// min(0.8 tau, pi/(2 omega)), halved (up to 6 times) while the cosine overlap
// is negligible. initial_width <= 0 means the default heuristic.
TemporalTestFunction make_ej_temporal(double omega, double tau, double initial_width = 0.0);

} // namespace sjslab
