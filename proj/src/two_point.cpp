#include "sjslab/two_point.hpp"

#include <cmath>

#include "sjslab/parallel.hpp"

namespace sjslab {

const char* to_string(ElementKind kind) {
    switch (kind) {
        case ElementKind::sj: return "SJ";
        case ElementKind::h: return "H";
        case ElementKind::normord: return "NORMORD";
    }
    return "SJ";
}

namespace {

void require_support_inside(const TemporalTestFunction& f, double tau) {
    if (f.support_lo() <= -tau || f.support_hi() >= tau)
        throw domain_error("test function support must lie inside (-tau, tau)");
}

} // namespace

std::complex<double> wsj_element(const ModeConstants& mc, const TemporalTestFunction& f,
                                 const TemporalTestFunction& h) {
    require_support_inside(f, mc.tau);
    require_support_inside(h, mc.tau);
    const double ratio = 1.0 - mc.delta; // ||C||/||S||
    const std::complex<double> left(cosine_transform(f, mc.omega),
                                    -ratio * sine_transform(f, mc.omega));
    const std::complex<double> right(cosine_transform(h, mc.omega),
                                     ratio * sine_transform(h, mc.omega));
    const double prefactor = std::sqrt(mc.norm_s2 / mc.norm_c2) / (2.0 * mc.omega);
    return prefactor * left * right;
}

std::complex<double> wh_element(double omega, const TemporalTestFunction& f,
                                const TemporalTestFunction& h) {
    if (!(omega > 0.0)) throw invalid_parameter("wh_element: omega must be > 0");
    const std::complex<double> left(cosine_transform(f, omega), -sine_transform(f, omega));
    const std::complex<double> right(cosine_transform(h, omega), sine_transform(h, omega));
    return left * right / (2.0 * omega);
}

std::complex<double> normord_element(const ModeConstants& mc, const TemporalTestFunction& f,
                                     const TemporalTestFunction& h) {
    require_support_inside(f, mc.tau);
    require_support_inside(h, mc.tau);
    const double cc = cosine_transform(f, mc.omega) * cosine_transform(h, mc.omega);
    const double ss = sine_transform(f, mc.omega) * sine_transform(h, mc.omega);
    const double value = mc.delta / (2.0 * mc.omega) * (cc / (1.0 - mc.delta) - ss);
    return {value, 0.0};
}

std::vector<ModeMatrixElement> assemble_diagonal(const SpatialSpectrum& spectrum, double tau,
                                                 const TemporalTestFunction& f,
                                                 ElementKind kind) {
    if (!(tau > 0.0)) throw invalid_parameter("assemble_diagonal: tau must be > 0");
    require_support_inside(f, tau);
    std::vector<ModeMatrixElement> elements(spectrum.size());
    parallel_for(spectrum.size(), [&](std::size_t i) {
        const SpectrumLevel& level = spectrum.levels[i];
        std::complex<double> value;
        switch (kind) {
            case ElementKind::sj:
                value = wsj_element(mode_constants(level.omega, tau), f, f);
                break;
            case ElementKind::h:
                value = wh_element(level.omega, f, f);
                break;
            case ElementKind::normord:
                value = normord_element(mode_constants(level.omega, tau), f, f);
                break;
        }
        elements[i] = {level.index, kind, value};
    });
    return elements;
}

} // namespace sjslab
