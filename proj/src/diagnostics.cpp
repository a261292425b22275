#include "sjslab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sjslab/errors.hpp"
#include "sjslab/parallel.hpp"
#include "sjslab/slab_modes.hpp"
#include "sjslab/summation.hpp"

namespace sjslab {

const char* to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::consistent_with_summable: return "CONSISTENT_WITH_SUMMABLE";
        case Outcome::divergence_indicated: return "DIVERGENCE_INDICATED";
        case Outcome::exact_zero: return "EXACT_ZERO";
    }
    return "CONSISTENT_WITH_SUMMABLE";
}

namespace {

std::int64_t effective_window(std::int64_t requested, std::size_t n) {
    if (requested <= 0) return std::max<std::int64_t>(1, static_cast<std::int64_t>(n) / 10);
    return std::min<std::int64_t>(requested, static_cast<std::int64_t>(n));
}

TailStatistic tail_of(std::span<const double> values, std::int64_t window) {
    TailStatistic tail;
    tail.window = std::min<std::int64_t>(window, static_cast<std::int64_t>(values.size()));
    if (tail.window <= 0) return tail;
    CompensatedSum<double> mean;
    for (std::size_t i = values.size() - static_cast<std::size_t>(tail.window);
         i < values.size(); ++i) {
        const double v = std::abs(values[i]);
        tail.sup = std::max(tail.sup, v);
        mean.add(v);
    }
    tail.mean = mean.value() / static_cast<double>(tail.window);
    return tail;
}

Verdict classify(double max_abs_driver, const TailStatistic& tail, double growth_ratio,
                 const Thresholds& thresholds) {
    Verdict verdict;
    verdict.growth_ratio = growth_ratio;
    verdict.linear_growth =
        growth_ratio >= thresholds.growth_band_lo && growth_ratio <= thresholds.growth_band_hi;
    verdict.tail = tail;
    verdict.max_abs_driver = max_abs_driver;
    verdict.thresholds = thresholds;
    if (max_abs_driver <= thresholds.exact_zero_tol)
        verdict.outcome = Outcome::exact_zero;
    else if (growth_ratio >= thresholds.growth_band_lo ||
             tail.sup >= thresholds.tail_sup_threshold)
        verdict.outcome = Outcome::divergence_indicated;
    else
        verdict.outcome = Outcome::consistent_with_summable;
    return verdict;
}

std::size_t level_count(const SpatialSpectrum& spectrum, std::int64_t level_limit) {
    if (level_limit == 0) return spectrum.size();
    if (level_limit < 0 || static_cast<std::size_t>(level_limit) > spectrum.size())
        throw invalid_parameter("diagnostics: level limit exceeds spectrum extent");
    return static_cast<std::size_t>(level_limit);
}

// terms -> rows with compensated partial sums, growth ratio, tails, verdict
SeriesReport assemble_series(std::string label, const SpatialSpectrum& spectrum,
                             std::size_t n, double tau, std::optional<double> tau_prime,
                             std::span<const double> terms, std::span<const double> driver,
                             std::int64_t window, const Thresholds& thresholds) {
    SeriesReport report;
    report.label = std::move(label);
    report.tau = tau;
    report.tau_prime = tau_prime;
    report.rows.resize(n);

    CompensatedSum<double> sum;
    const std::size_t half = n / 2;
    double half_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const SpectrumLevel& level = spectrum.levels[i];
        sum.add(terms[i]);
        report.rows[i] = {level.index, level.omega, level.multiplicity, terms[i], sum.value()};
        if (i + 1 == half) half_sum = sum.value();
    }
    report.total = sum.value();
    report.growth_ratio = half_sum != 0.0 ? report.total / half_sum
                                          : std::numeric_limits<double>::quiet_NaN();

    std::vector<double> sins(n);
    for (std::size_t i = 0; i < n; ++i)
        sins[i] = std::sin(2.0 * spectrum.levels[i].omega * tau);
    const std::int64_t w = effective_window(window, n);
    report.sin_tail = tail_of(sins, w);

    double max_driver = 0.0;
    for (double v : driver) max_driver = std::max(max_driver, std::abs(v));
    report.verdict = classify(max_driver, tail_of(driver, w), report.growth_ratio, thresholds);
    return report;
}

} // namespace

std::pair<SeriesReport, SeriesReport> nec_series(const SpatialSpectrum& spectrum, double tau,
                                                 const DiagnosticsOptions& opts) {
    if (!(tau > 0.0)) throw invalid_parameter("nec_series: tau must be > 0");
    const double tau_prime = opts.tau_prime.value_or(0.5 * tau);
    if (!(tau_prime > 0.0) || !(tau_prime < tau))
        throw invalid_parameter("nec_series: need 0 < tau_prime < tau");
    const std::size_t n = level_count(spectrum, opts.level_limit);

    std::vector<double> term_c(n), term_s(n), driver(n);
    parallel_for(n, [&](std::size_t i) {
        const SpectrumLevel& level = spectrum.levels[i];
        const ModeConstants mc = mode_constants(level.omega, tau);
        const TjEigenvalues tj = tj_eigenvalues(mc, tau_prime);
        const double mult = static_cast<double>(level.multiplicity);
        term_c[i] = mult * tj.on_c * tj.on_c;
        term_s[i] = mult * tj.on_s * tj.on_s;
        driver[i] = std::sin(2.0 * level.omega * tau);
    });

    return {assemble_series("nec_c", spectrum, n, tau, tau_prime, term_c, driver, opts.window,
                            opts.thresholds),
            assemble_series("nec_s", spectrum, n, tau, tau_prime, term_s, driver, opts.window,
                            opts.thresholds)};
}

TailStatistic sin_tail_analysis(const SpatialSpectrum& spectrum, double tau,
                                std::int64_t window) {
    if (!(tau > 0.0)) throw invalid_parameter("sin_tail_analysis: tau must be > 0");
    if (window < 0 || static_cast<std::size_t>(window) > spectrum.size())
        throw invalid_parameter("sin_tail_analysis: window exceeds level count");
    std::vector<double> sins(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        sins[i] = std::sin(2.0 * spectrum.levels[i].omega * tau);
    return tail_of(sins, window == 0 ? effective_window(0, sins.size()) : window);
}

std::vector<double> sphere_candidate_taus(double radius, int k_max) {
    if (!(radius > 0.0)) throw invalid_parameter("sphere_candidate_taus: radius must be > 0");
    std::vector<double> taus;
    taus.reserve(std::max(k_max, 0));
    for (int k = 1; k <= k_max; ++k) taus.push_back(0.5 * k * M_PI * radius);
    return taus;
}

std::vector<AsymptoticRatioRow> sphere_asymptotic_check(double radius, double mass, int k,
                                                        std::int64_t level_lo,
                                                        std::int64_t level_hi) {
    if (!(radius > 0.0) || !(mass > 0.0) || k < 1)
        throw invalid_parameter("sphere_asymptotic_check: invalid parameters");
    const double mr2m1 = mass * radius * mass * radius - 1.0;
    if (std::abs(mr2m1) < 1e-12)
        throw invalid_parameter(
            "sphere_asymptotic_check: mR = 1 is degenerate (all sinc zeros); use the "
            "EXACT_ZERO pathway instead");
    const double tau = 0.5 * k * M_PI * radius;
    std::vector<AsymptoticRatioRow> rows;
    for (std::int64_t j = std::max<std::int64_t>(1, level_lo); j <= level_hi; ++j) {
        const double jd = static_cast<double>(j);
        const double omega = std::sqrt(jd * (jd + 2.0) + mass * radius * mass * radius) / radius;
        const double s = std::sin(2.0 * omega * tau);
        const double law = mr2m1 * M_PI * k / (2.0 * jd);
        rows.push_back({j, s * s / (law * law)});
    }
    return rows;
}

TorusIncommensurabilityReport torus_incommensurability(double period, double tau,
                                                       std::int64_t r_max,
                                                       std::int64_t window,
                                                       const Thresholds& thresholds) {
    if (!(period > 0.0) || !(tau > 0.0))
        throw invalid_parameter("torus_incommensurability: period and tau must be > 0");
    if (r_max < 1) throw invalid_parameter("torus_incommensurability: r_max must be >= 1");

    TorusIncommensurabilityReport report;
    report.thresholds = thresholds;
    report.frac_axis = 4.0 * tau / period;
    report.frac_diag = 4.0 * std::sqrt(2.0) * tau / period;
    report.axis_near_integer =
        std::abs(report.frac_axis - std::round(report.frac_axis)) <= report.near_integer_tol;
    report.diag_near_integer =
        std::abs(report.frac_diag - std::round(report.frac_diag)) <= report.near_integer_tol;

    std::vector<double> axis(static_cast<std::size_t>(r_max)),
        diag(static_cast<std::size_t>(r_max));
    for (std::int64_t r = 1; r <= r_max; ++r) {
        axis[static_cast<std::size_t>(r - 1)] = std::sin(M_PI * r * report.frac_axis);
        diag[static_cast<std::size_t>(r - 1)] = std::sin(M_PI * r * report.frac_diag);
    }
    const std::int64_t w = window > 0 ? std::min(window, r_max)
                                      : std::max<std::int64_t>(1, r_max / 4);
    report.axis_tail = tail_of(axis, w);
    report.diag_tail = tail_of(diag, w);

    const double worst = std::max(report.axis_tail.sup, report.diag_tail.sup);
    if (worst <= thresholds.exact_zero_tol)
        report.outcome = Outcome::exact_zero;
    else if (worst >= thresholds.tail_sup_threshold)
        report.outcome = Outcome::divergence_indicated;
    else
        report.outcome = Outcome::consistent_with_summable;
    return report;
}

SeriesReport sj_hadamard_disjointness(const SpatialSpectrum& spectrum, double tau,
                                      const DiagnosticsOptions& opts) {
    if (!(tau > 0.0)) throw invalid_parameter("sj_hadamard_disjointness: tau must be > 0");
    const std::size_t n = level_count(spectrum, opts.level_limit);
    std::vector<double> terms(n), driver(n);
    parallel_for(n, [&](std::size_t i) {
        const SpectrumLevel& level = spectrum.levels[i];
        const ModeConstants mc = mode_constants(level.omega, tau);
        const double value = mc.delta / (1.0 - mc.delta);
        terms[i] = static_cast<double>(level.multiplicity) * value * value;
        driver[i] = std::sin(2.0 * level.omega * tau);
    });
    return assemble_series("sj_hadamard", spectrum, n, tau, std::nullopt, terms, driver,
                           opts.window, opts.thresholds);
}

SjSjReport sj_sj_disjointness(const SpatialSpectrum& spectrum, double tau, double tau_prime,
                              const DiagnosticsOptions& opts) {
    if (!(tau_prime > 0.0) || !(tau_prime < tau))
        throw invalid_parameter("sj_sj_disjointness: need 0 < tau_prime < tau");
    const std::size_t n = level_count(spectrum, opts.level_limit);

    SjSjReport report;
    report.mix.resize(n);
    std::vector<double> terms(n);
    parallel_for(n, [&](std::size_t i) {
        const SpectrumLevel& level = spectrum.levels[i];
        const double d = mode_constants(level.omega, tau).delta;
        const double dp = mode_constants(level.omega, tau_prime).delta;
        // ||C||(d - d')/(||S||(1-d)(1-d')) with the norms on the outer slab,
        // where ||C||/||S|| = 1 - d
        const double value = (d - dp) / (1.0 - dp);
        terms[i] = static_cast<double>(level.multiplicity) * value * value;
        report.mix[i] = (tau_prime / tau) * std::sin(2.0 * level.omega * tau) -
                        std::sin(2.0 * level.omega * tau_prime);
    });

    report.series = assemble_series("sj_sj", spectrum, n, tau, tau_prime, terms, report.mix,
                                    opts.window, opts.thresholds);
    report.mix_tail = report.series.verdict.tail;
    return report;
}

std::vector<ScanRow> tau_scan(const SpatialSpectrum& spectrum, std::span<const double> taus,
                              std::int64_t window) {
    std::vector<ScanRow> rows(taus.size());
    const std::int64_t w = effective_window(window, spectrum.size());
    parallel_for(taus.size(), [&](std::size_t i) {
        TailStatistic tail;
        tail.window = std::min<std::int64_t>(w, static_cast<std::int64_t>(spectrum.size()));
        CompensatedSum<double> mean;
        for (std::size_t k = spectrum.size() - static_cast<std::size_t>(tail.window);
             k < spectrum.size(); ++k) {
            const double v = std::abs(std::sin(2.0 * spectrum.levels[k].omega * taus[i]));
            tail.sup = std::max(tail.sup, v);
            mean.add(v);
        }
        if (tail.window > 0) tail.mean = mean.value() / static_cast<double>(tail.window);
        rows[i] = {taus[i], tail};
    });
    return rows;
}

} // namespace sjslab
