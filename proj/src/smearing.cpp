#include "sjslab/smearing.hpp"

#include <algorithm>
#include <cmath>

#include "sjslab/quadrature.hpp"

namespace sjslab {

namespace {
constexpr double kOverlapFloor = 1e-8; // |cos transform| below this times ||f|| is "no overlap"
}

TemporalTestFunction::TemporalTestFunction(Family family, double half_width, double center,
                                           double amplitude)
    : family_(family), half_width_(half_width), center_(center), amplitude_(amplitude) {
    if (!(half_width > 0.0))
        throw invalid_parameter("TemporalTestFunction: half width must be > 0");
}

TemporalTestFunction TemporalTestFunction::bump(double half_width, double amplitude) {
    return TemporalTestFunction(Family::bump, half_width, 0.0, amplitude);
}

TemporalTestFunction TemporalTestFunction::odd_bump(double half_width, double amplitude) {
    return TemporalTestFunction(Family::odd_bump, half_width, 0.0, amplitude);
}

TemporalTestFunction TemporalTestFunction::shifted(double center) const {
    TemporalTestFunction copy = *this;
    copy.center_ = center;
    return copy;
}

TemporalTestFunction TemporalTestFunction::scaled(double factor) const {
    TemporalTestFunction copy = *this;
    copy.amplitude_ *= factor;
    return copy;
}

TemporalTestFunction TemporalTestFunction::with_amplitude(double amplitude) const {
    TemporalTestFunction copy = *this;
    copy.amplitude_ = amplitude;
    return copy;
}

Parity TemporalTestFunction::parity() const {
    if (center_ != 0.0) return Parity::none;
    return family_ == Family::bump ? Parity::even : Parity::odd;
}

double TemporalTestFunction::shape(double u) const {
    const double a = half_width_;
    if (std::abs(u) >= a) return 0.0;
    const double core = std::exp(-(a * a) / (a * a - u * u));
    return family_ == Family::bump ? core : (u / a) * core;
}

namespace {

template <class Weight>
double transform_impl(const TemporalTestFunction& f, Weight&& weight) {
    const double raw = integrate(
        [&](double t) { return f.shape(t - f.center()) * weight(t); }, f.support_lo(),
        f.support_hi());
    return f.amplitude() * raw;
}

} // namespace

double integral(const TemporalTestFunction& f) {
    if (f.parity() == Parity::odd) return 0.0;
    return transform_impl(f, [](double) { return 1.0; });
}

double l2_norm(const TemporalTestFunction& f) {
    const double raw = integrate(
        [&](double t) {
            const double v = f.shape(t - f.center());
            return v * v;
        },
        f.support_lo(), f.support_hi());
    return std::abs(f.amplitude()) * std::sqrt(raw);
}

double cosine_transform(const TemporalTestFunction& f, double omega) {
    if (f.parity() == Parity::odd) return 0.0;
    return transform_impl(f, [omega](double t) { return std::cos(omega * t); });
}

double sine_transform(const TemporalTestFunction& f, double omega) {
    if (f.parity() == Parity::even) return 0.0;
    return transform_impl(f, [omega](double t) { return std::sin(omega * t); });
}

namespace {

TemporalTestFunction rescale_to_target(const TemporalTestFunction& f, double omega,
                                       double target) {
    const double overlap = cosine_transform(f, omega);
    if (std::abs(overlap) < kOverlapFloor * l2_norm(f))
        throw invalid_parameter(
            "normalize_eta: cosine overlap is negligible at this omega; reshape the bump");
    return f.scaled(target / overlap);
}

} // namespace

TemporalTestFunction normalize_eta_hadamard(const TemporalTestFunction& f, double omega) {
    if (!(omega > 0.0)) throw invalid_parameter("normalize_eta_hadamard: omega must be > 0");
    return rescale_to_target(f, omega, std::sqrt(2.0 * omega));
}

TemporalTestFunction normalize_eta_sj(const TemporalTestFunction& f, const ModeConstants& mc) {
    const double target = std::sqrt(2.0 * mc.omega * std::sqrt(mc.norm_c2 / mc.norm_s2));
    return rescale_to_target(f, mc.omega, target);
}

TemporalTestFunction make_ej_temporal(double omega, double tau, double initial_width) {
    if (!(omega > 0.0) || !(tau > 0.0))
        throw invalid_parameter("make_ej_temporal: omega and tau must be > 0");
    double width = initial_width > 0.0
                       ? std::min(initial_width, 0.999 * tau)
                       : std::min(0.8 * tau, M_PI / (2.0 * omega));
    for (int attempt = 0; attempt <= 6; ++attempt) {
        TemporalTestFunction candidate = TemporalTestFunction::bump(width);
        if (std::abs(cosine_transform(candidate, omega)) >= kOverlapFloor * l2_norm(candidate))
            return candidate;
        width *= 0.5;
    }
    throw invalid_parameter("make_ej_temporal: no usable width after 6 halvings");
}

} // namespace sjslab
