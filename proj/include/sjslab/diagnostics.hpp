/*
 * diagnostics.hpp — divergence and disjointness decision procedures.
 *
 * Each procedure reduces to a weighted series over spectrum levels plus a
 * tail statistic of the driving oscillatory sequence. Verdicts are numerical
 * proxies for the asymptotic conditions and are fully determined by recorded
 * evidence and thresholds:
 *
 *   EXACT_ZERO                 every driving term vanishes to exact_zero_tol
 *   DIVERGENCE_INDICATED       partial sums keep growing (ratio >= band lo)
 *                              or the driving sequence does not decay
 *   CONSISTENT_WITH_SUMMABLE   neither signal fires (no claim of summability)
 *
 * Terms are multiplicity-weighted once, accumulated in ascending level order
 * with compensated summation; term evaluation may run in parallel but the
 * reduction is sequential, so reports are bit-reproducible.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sjslab/spectral_geometry.hpp"

namespace sjslab {

struct Thresholds {
    double exact_zero_tol = 1e-12;
    double tail_sup_threshold = 0.05;
    double growth_band_lo = 1.8;
    double growth_band_hi = 2.2;
};

struct TailStatistic {
    double sup = 0.0;
    double mean = 0.0;
    std::int64_t window = 0;
};

enum class Outcome { consistent_with_summable, divergence_indicated, exact_zero };

const char* to_string(Outcome outcome);

struct Verdict {
    Outcome outcome = Outcome::consistent_with_summable;
    double growth_ratio = 0.0;    // partial_sum(all) / partial_sum(half)
    bool linear_growth = false;   // growth_ratio inside the band
    TailStatistic tail;           // of the driving sequence
    double max_abs_driver = 0.0;  // sup over all levels of the driving sequence
    Thresholds thresholds;
};

struct SeriesLevelRow {
    std::int64_t level = 0;
    double omega = 0.0;
    std::int64_t multiplicity = 1;
    double term = 0.0;        // multiplicity-weighted
    double partial_sum = 0.0; // compensated, ascending levels
};

struct SeriesReport {
    std::string label;
    double tau = 0.0;
    std::optional<double> tau_prime;
    std::vector<SeriesLevelRow> rows;
    double total = 0.0;
    double growth_ratio = 0.0;
    TailStatistic sin_tail; // sup/mean |sin 2 omega_j tau| over the trailing window
    Verdict verdict;
};

struct DiagnosticsOptions {
    std::optional<double> tau_prime; // inner interval; diagnostics default tau/2
    std::int64_t level_limit = 0;    // use first N levels; 0 = all
    std::int64_t window = 0;         // trailing window; 0 = max(1, n/10)
    Thresholds thresholds;
};

// Square-summability test series: per level,
//   term_C = mult (omega delta ||C'||^2 / 2)^2
//   term_S = mult (omega delta ||S'||^2 / (2(1-delta)))^2
// with delta from tau and the norms from the inner interval tau'.
std::pair<SeriesReport, SeriesReport> nec_series(const SpatialSpectrum& spectrum, double tau,
                                                 const DiagnosticsOptions& opts = {});

// sup and mean of |sin 2 omega_j tau| over the last `window` levels.
TailStatistic sin_tail_analysis(const SpatialSpectrum& spectrum, double tau,
                                std::int64_t window);

// Sphere taus k pi R / 2 at which sin 2 omega_j tau can decay, k = 1..k_max.
std::vector<double> sphere_candidate_taus(double radius, int k_max);

struct AsymptoticRatioRow {
    std::int64_t level = 0;
    double ratio = 0.0; // sin^2(2 omega_j tau) / (((mR)^2-1) pi k / (2j))^2
};

// Ratio against the large-j tail law at tau = k pi R / 2; approaches 1.
// mR = 1 is the degenerate all-zeros case and raises invalid_parameter.
std::vector<AsymptoticRatioRow> sphere_asymptotic_check(double radius, double mass, int k,
                                                        std::int64_t level_lo,
                                                        std::int64_t level_hi);

struct TorusIncommensurabilityReport {
    double frac_axis = 0.0; // 4 tau / L
    double frac_diag = 0.0; // 4 sqrt(2) tau / L
    bool axis_near_integer = false;
    bool diag_near_integer = false;
    double near_integer_tol = 1e-9;
    TailStatistic axis_tail; // |sin(pi r frac_axis)| over trailing r window
    TailStatistic diag_tail;
    Outcome outcome = Outcome::consistent_with_summable;
    Thresholds thresholds;
};

// Axis and face-diagonal subsequences in their large-r form: decay of both
// sin(4 pi r tau / L) and sin(4 sqrt(2) pi r tau / L) would need 4 tau / L and
// 4 sqrt(2) tau / L to be simultaneously integers, which no tau achieves.
TorusIncommensurabilityReport torus_incommensurability(double period, double tau,
                                                       std::int64_t r_max,
                                                       std::int64_t window = 0,
                                                       const Thresholds& thresholds = {});

// Hilbert-Schmidt matrix-element series mult (delta/(1-delta))^2 against the
// ground state, plus the sin 2 omega tau necessary-condition tail.
SeriesReport sj_hadamard_disjointness(const SpatialSpectrum& spectrum, double tau,
                                      const DiagnosticsOptions& opts = {});

struct SjSjReport {
    SeriesReport series;      // terms mult ((delta - delta')/(1 - delta'))^2
    std::vector<double> mix;  // (tau'/tau) sin 2 omega tau - sin 2 omega tau'
    TailStatistic mix_tail;   // the verdict's driving-sequence tail
};

// Two-slab comparison tau > tau'; the verdict's driver is the mix sequence.
SjSjReport sj_sj_disjointness(const SpatialSpectrum& spectrum, double tau, double tau_prime,
                              const DiagnosticsOptions& opts = {});

struct ScanRow {
    double tau = 0.0;
    TailStatistic tail;
};

// Tail statistic per tau over a grid; dips flag candidate degenerate taus.
std::vector<ScanRow> tau_scan(const SpatialSpectrum& spectrum, std::span<const double> taus,
                              std::int64_t window);

} // namespace sjslab
