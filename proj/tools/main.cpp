/*
 * sjslab — command-line diagnostics for Sorkin-Johnston vacua on ultrastatic
 * slab spacetimes (-tau, tau) x Sigma.
 *
 * Subcommands:
 *   spectrum  dump the spatial spectrum (levels, omegas, multiplicities)
 *   modes     per-mode constants table
 *   hadamard  square-summability series, sin tails, sphere/torus special cases
 *   disjoint  ground-state and two-slab disjointness series
 *   limit     large-slab normal-ordered diagonal along a tau schedule
 *   oracle    Nystrom validation suite
 *   scan      sin-tail statistic over a tau grid
 *
 * Exit codes: 0 ok, 2 validation error, 3 accuracy error, 64 usage error.
 * Outputs are byte-deterministic for a fixed config; JSON reports embed the
 * config. SJSLAB_THREADS controls worker threads (output-invariant).
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sjslab/diagnostics.hpp"
#include "sjslab/errors.hpp"
#include "sjslab/oracle.hpp"
#include "sjslab/report_io.hpp"
#include "sjslab/slab_modes.hpp"
#include "sjslab/smearing.hpp"
#include "sjslab/spectral_geometry.hpp"
#include "sjslab/two_point.hpp"

using nlohmann::json;
using namespace sjslab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitAccuracy = 3;
constexpr int kExitUsage = 64;

struct RunConfig {
    std::string subcommand;
    std::string geometry = "sphere"; // sphere | torus | custom
    double radius = 1.0;
    double period = 1.0;
    std::string spectrum_file;
    double mass = 1.0;
    double tau = 1.0;
    std::optional<double> tau_prime;
    std::int64_t levels = 200;
    std::int64_t window = 0;
    Thresholds thresholds;
    std::string out;
    std::vector<std::string> formats{"csv", "json"};
    // limit / oracle extras
    double omega = 1.0;
    double bump_width = 1.0;
    std::vector<double> tau_schedule{2.0, 5.0, 10.0, 20.0, 50.0, 100.0};
    int n_grid = 501;
    // scan extras
    double tau_min = 0.5;
    double tau_max = 2.0;
    double tau_step = 0.1;
};

json config_to_json(const RunConfig& cfg) {
    json j{{"subcommand", cfg.subcommand},
           {"geometry", cfg.geometry},
           {"mass", cfg.mass},
           {"tau", cfg.tau},
           {"levels", cfg.levels},
           {"window", cfg.window},
           {"thresholds", thresholds_to_json(cfg.thresholds)},
           {"out", cfg.out},
           {"formats", cfg.formats},
           {"omega", cfg.omega},
           {"bump_width", cfg.bump_width},
           {"tau_schedule", cfg.tau_schedule},
           {"n_grid", cfg.n_grid},
           {"tau_min", cfg.tau_min},
           {"tau_max", cfg.tau_max},
           {"tau_step", cfg.tau_step}};
    if (cfg.geometry == "sphere") j["radius"] = cfg.radius;
    if (cfg.geometry == "torus") j["period"] = cfg.period;
    if (cfg.geometry == "custom") j["spectrum_file"] = cfg.spectrum_file;
    if (cfg.tau_prime) j["tau_prime"] = *cfg.tau_prime;
    return j;
}

void config_from_json(const json& j, RunConfig& cfg) {
    cfg.subcommand = j.value("subcommand", cfg.subcommand);
    cfg.geometry = j.value("geometry", cfg.geometry);
    cfg.radius = j.value("radius", cfg.radius);
    cfg.period = j.value("period", cfg.period);
    cfg.spectrum_file = j.value("spectrum_file", cfg.spectrum_file);
    cfg.mass = j.value("mass", cfg.mass);
    cfg.tau = j.value("tau", cfg.tau);
    if (j.contains("tau_prime")) cfg.tau_prime = j["tau_prime"].get<double>();
    cfg.levels = j.value("levels", cfg.levels);
    cfg.window = j.value("window", cfg.window);
    if (j.contains("thresholds")) {
        const json& t = j["thresholds"];
        cfg.thresholds.exact_zero_tol =
            t.value("exact_zero_tol", cfg.thresholds.exact_zero_tol);
        cfg.thresholds.tail_sup_threshold =
            t.value("tail_sup_threshold", cfg.thresholds.tail_sup_threshold);
        cfg.thresholds.growth_band_lo =
            t.value("growth_band_lo", cfg.thresholds.growth_band_lo);
        cfg.thresholds.growth_band_hi =
            t.value("growth_band_hi", cfg.thresholds.growth_band_hi);
    }
    cfg.out = j.value("out", cfg.out);
    if (j.contains("formats")) cfg.formats = j["formats"].get<std::vector<std::string>>();
    cfg.omega = j.value("omega", cfg.omega);
    cfg.bump_width = j.value("bump_width", cfg.bump_width);
    if (j.contains("tau_schedule"))
        cfg.tau_schedule = j["tau_schedule"].get<std::vector<double>>();
    cfg.n_grid = j.value("n_grid", cfg.n_grid);
    cfg.tau_min = j.value("tau_min", cfg.tau_min);
    cfg.tau_max = j.value("tau_max", cfg.tau_max);
    cfg.tau_step = j.value("tau_step", cfg.tau_step);
}

SpatialSpectrum build_spectrum(const RunConfig& cfg) {
    if (cfg.geometry == "sphere")
        return build_sphere_spectrum(cfg.radius, cfg.mass, cfg.levels);
    if (cfg.geometry == "torus")
        return build_torus_spectrum(cfg.period, cfg.mass, cfg.levels);
    if (cfg.geometry == "custom") {
        std::ifstream in(cfg.spectrum_file);
        if (!in)
            throw invalid_parameter("cannot read spectrum file: " + cfg.spectrum_file);
        json j;
        in >> j;
        return spectrum_from_json(j);
    }
    throw invalid_parameter("unknown geometry: " + cfg.geometry);
}

bool wants(const RunConfig& cfg, const std::string& format) {
    for (const std::string& f : cfg.formats)
        if (f == format) return true;
    return false;
}

void emit(const RunConfig& cfg, const std::string& csv, const json& report) {
    if (cfg.out.empty()) return;
    if (wants(cfg, "csv") && !csv.empty()) write_file(cfg.out + ".csv", csv);
    if (wants(cfg, "json")) {
        json wrapped = report;
        wrapped["config"] = config_to_json(cfg);
        write_file(cfg.out + ".json", wrapped.dump(2) + "\n");
    }
}

DiagnosticsOptions options_of(const RunConfig& cfg) {
    DiagnosticsOptions opts;
    opts.tau_prime = cfg.tau_prime;
    opts.window = cfg.window;
    opts.thresholds = cfg.thresholds;
    return opts;
}

int run_spectrum(const RunConfig& cfg) {
    const SpatialSpectrum spectrum = build_spectrum(cfg);
    emit(cfg, spectrum_to_csv(spectrum), spectrum_to_json(spectrum));
    std::cout << "spectrum: " << spectrum.size() << " levels, geometry "
              << to_string(spectrum.kind) << ", mass " << format_double(spectrum.mass)
              << "\n";
    return kExitOk;
}

int run_modes(const RunConfig& cfg) {
    const SpatialSpectrum spectrum = build_spectrum(cfg);
    json rows = json::array();
    for (const SpectrumLevel& level : spectrum.levels) {
        const ModeConstants mc = mode_constants(level.omega, cfg.tau);
        rows.push_back({{"level", level.index},
                        {"omega", mc.omega},
                        {"multiplicity", level.multiplicity},
                        {"sinc2wt", mc.sinc2wt},
                        {"normC2", mc.norm_c2},
                        {"normS2", mc.norm_s2},
                        {"delta", mc.delta},
                        {"lambda_plus", mc.lambda_plus}});
    }
    emit(cfg, modes_to_csv(spectrum, cfg.tau), json{{"modes", rows}});
    std::cout << "modes: " << spectrum.size() << " rows at tau " << format_double(cfg.tau)
              << "\n";
    return kExitOk;
}

int run_hadamard(const RunConfig& cfg) {
    const SpatialSpectrum spectrum = build_spectrum(cfg);
    const DiagnosticsOptions opts = options_of(cfg);
    const auto [series_c, series_s] = nec_series(spectrum, cfg.tau, opts);
    const TailStatistic tail = sin_tail_analysis(
        spectrum, cfg.tau,
        cfg.window > 0 ? cfg.window
                       : std::max<std::int64_t>(1, (std::int64_t)spectrum.size() / 10));

    json report{{"nec_c", series_report_to_json(series_c)},
                {"nec_s", series_report_to_json(series_s)},
                {"sin_tail", tail_to_json(tail)}};
    if (cfg.geometry == "sphere") {
        report["candidate_taus"] = sphere_candidate_taus(cfg.radius, 8);
        const double mr = cfg.mass * cfg.radius;
        if (std::abs(mr - 1.0) > 1e-12) {
            const double k_guess = 2.0 * cfg.tau / (M_PI * cfg.radius);
            const int k = static_cast<int>(std::lround(k_guess));
            if (k >= 1 && std::abs(k_guess - k) < 1e-9) {
                json ratios = json::array();
                for (const AsymptoticRatioRow& row :
                     sphere_asymptotic_check(cfg.radius, cfg.mass, k,
                                             std::max<std::int64_t>(1, cfg.levels - 20),
                                             cfg.levels))
                    ratios.push_back({{"level", row.level}, {"ratio", row.ratio}});
                report["tail_law_ratios"] = std::move(ratios);
            }
        }
    }
    if (cfg.geometry == "torus")
        report["incommensurability"] = torus_report_to_json(torus_incommensurability(
            cfg.period, cfg.tau, std::max<std::int64_t>(1, cfg.levels), cfg.window,
            cfg.thresholds));

    emit(cfg, series_to_csv({&series_c, &series_s}), report);
    std::cout << "hadamard: nec_c " << to_string(series_c.verdict.outcome) << " (growth "
              << format_double(series_c.growth_ratio) << "), nec_s "
              << to_string(series_s.verdict.outcome) << " (growth "
              << format_double(series_s.growth_ratio) << ")\n";
    return kExitOk;
}

int run_disjoint(const RunConfig& cfg) {
    const SpatialSpectrum spectrum = build_spectrum(cfg);
    const DiagnosticsOptions opts = options_of(cfg);
    if (cfg.tau_prime) {
        const SjSjReport report =
            sj_sj_disjointness(spectrum, cfg.tau, *cfg.tau_prime, opts);
        json j{{"sj_sj", series_report_to_json(report.series)},
               {"mix_tail", tail_to_json(report.mix_tail)}};
        emit(cfg, sjsj_to_csv(report), j);
        std::cout << "disjoint (two-slab): " << to_string(report.series.verdict.outcome)
                  << " (growth " << format_double(report.series.growth_ratio)
                  << ", mix tail sup " << format_double(report.mix_tail.sup) << ")\n";
        return kExitOk;
    }
    DiagnosticsOptions plain = opts;
    plain.tau_prime.reset();
    const SeriesReport report = sj_hadamard_disjointness(spectrum, cfg.tau, plain);
    emit(cfg, series_to_csv({&report}), json{{"sj_hadamard", series_report_to_json(report)}});
    std::cout << "disjoint (vs ground state): " << to_string(report.verdict.outcome)
              << " (growth " << format_double(report.growth_ratio) << ")\n";
    return kExitOk;
}

int run_limit(const RunConfig& cfg) {
    const TemporalTestFunction f = TemporalTestFunction::bump(cfg.bump_width);
    const LimitTauResult result = limit_tau_check(cfg.omega, f, cfg.tau_schedule);
    emit(cfg, limit_to_csv(result), limit_to_json(result));
    const double first = std::abs(result.points.front().kernel_value);
    const double last = std::abs(result.points.back().kernel_value);
    std::cout << "limit: |normord| " << format_double(first) << " -> "
              << format_double(last) << " over tau "
              << format_double(result.points.front().tau) << " -> "
              << format_double(result.points.back().tau) << "\n";
    return kExitOk;
}

int run_oracle(const RunConfig& cfg) {
    json cases = json::array();
    std::string csv = "case,n,deviation,pass\n";
    const auto push = [&](const std::string& name, int n, double deviation, bool pass) {
        cases.push_back({{"case", name}, {"N", n}, {"deviation", deviation}, {"pass", pass}});
        csv += name + "," + std::to_string(n) + "," + format_double(deviation) + "," +
               (pass ? "1" : "0") + "\n";
    };

    const AjOracleResult aj = analyze_discretized_aj(cfg.omega, cfg.tau, cfg.n_grid);
    push("aj_eigenvalues", cfg.n_grid, aj.eigenvalue_rel_dev, aj.eigenvalue_rel_dev <= 1e-8);
    push("aj_rank2", cfg.n_grid, aj.third_singular_ratio, aj.third_singular_ratio <= 1e-8);
    push("aj_positive_kernel", cfg.n_grid, aj.positive_kernel_max_dev,
         aj.positive_kernel_max_dev <= 1e-7);
    push("aj_eigvec_overlap", cfg.n_grid, 1.0 - aj.eigvec_overlap,
         aj.eigvec_overlap >= 1.0 - 1e-8);

    const ModeConstants mc = mode_constants(cfg.omega, cfg.tau);
    const TjEigenvalues tj = tj_eigenvalues(mc, 0.5 * cfg.tau);
    const auto [tj_lo, tj_hi] = discretized_tj_extremes(mc, 0.5 * cfg.tau, 501);
    const double tj_scale = std::max(std::abs(tj.on_c), std::abs(tj.on_s));
    const double tj_dev =
        std::max(std::abs(tj_lo - std::min(tj.on_c, tj.on_s)),
                 std::abs(tj_hi - std::max(tj.on_c, tj.on_s))) /
        tj_scale;
    push("tj_eigenvalues", 501, tj_dev, tj_dev <= 1e-8);

    const double defect = saturation_purity_check(mc, 20);
    push("saturation_purity", 0, defect, defect <= 1e-10);

    const TemporalTestFunction f = TemporalTestFunction::bump(cfg.bump_width);
    const LimitTauResult limit = limit_tau_check(cfg.omega, f, cfg.tau_schedule);
    double limit_dev = 0.0;
    for (const LimitTauPoint& p : limit.points)
        limit_dev = std::max(limit_dev, std::abs(p.kernel_value - p.transform_minus));
    push("limit_kernel_vs_transform", 0, limit_dev, limit_dev <= 1e-9);

    bool all = true;
    for (const json& c : cases) all = all && c["pass"].get<bool>();
    json report{{"cases", cases}, {"all_pass", all}};
    emit(cfg, csv, report);
    std::cout << "oracle: " << (all ? "all checks pass" : "CHECK FAILURES") << " ("
              << cases.size() << " cases)\n";
    return kExitOk;
}

int run_scan(const RunConfig& cfg) {
    const SpatialSpectrum spectrum = build_spectrum(cfg);
    if (!(cfg.tau_step > 0.0) || !(cfg.tau_max >= cfg.tau_min))
        throw invalid_parameter("scan: need tau_min <= tau_max and tau_step > 0");
    std::vector<double> grid;
    for (double tau = cfg.tau_min; tau <= cfg.tau_max + 1e-12 * cfg.tau_step;
         tau += cfg.tau_step)
        grid.push_back(tau);
    const auto rows = tau_scan(spectrum, grid,
                               cfg.window > 0 ? cfg.window
                                              : std::max<std::int64_t>(
                                                    1, (std::int64_t)spectrum.size() / 10));
    emit(cfg, scan_to_csv(rows), json{{"scan", scan_to_json(rows)}});
    double min_sup = rows.empty() ? 0.0 : rows.front().tail.sup;
    double arg_min = rows.empty() ? 0.0 : rows.front().tau;
    for (const ScanRow& row : rows)
        if (row.tail.sup < min_sup) {
            min_sup = row.tail.sup;
            arg_min = row.tau;
        }
    std::cout << "scan: " << rows.size() << " taus, min tail sup "
              << format_double(min_sup) << " at tau " << format_double(arg_min) << "\n";
    return kExitOk;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, bool with_spectrum,
                      bool with_tau = true) {
    if (with_spectrum) {
        cmd->add_option("--geometry", cfg.geometry, "sphere | torus | custom")
            ->check(CLI::IsMember({"sphere", "torus", "custom"}));
        cmd->add_option("--radius", cfg.radius, "sphere radius R");
        cmd->add_option("--period", cfg.period, "torus period L");
        cmd->add_option("--spectrum-file", cfg.spectrum_file,
                        "custom spectrum JSON document");
        cmd->add_option("--mass", cfg.mass, "field mass m > 0");
        cmd->add_option("--levels", cfg.levels,
                        "sphere level_max / torus norm2_max");
        cmd->add_option("--window", cfg.window, "trailing tail window");
    }
    if (with_tau) cmd->add_option("--tau", cfg.tau, "slab half-width tau");
    cmd->add_option("--out", cfg.out, "output path prefix (.csv/.json appended)");
    cmd->add_option("--format", cfg.formats, "csv and/or json")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string config_path;

    CLI::App app{"Sorkin-Johnston slab-state diagnostics"};
    app.require_subcommand(1);
    app.add_option("--config", config_path, "JSON config file (flags override)")
        ->each([&](const std::string& path) {
            std::ifstream in(path);
            if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
            json j;
            try {
                in >> j;
            } catch (const json::exception& err) {
                throw CLI::ValidationError("--config", err.what());
            }
            config_from_json(j, cfg);
        });

    CLI::App* spectrum = app.add_subcommand("spectrum", "dump the spatial spectrum");
    add_common_flags(spectrum, cfg, true, false);

    CLI::App* modes = app.add_subcommand("modes", "per-mode constants table");
    add_common_flags(modes, cfg, true);

    CLI::App* hadamard =
        app.add_subcommand("hadamard", "square-summability diagnostics");
    add_common_flags(hadamard, cfg, true);
    hadamard->add_option("--tau-prime", cfg.tau_prime,
                         "inner interval (default tau/2)");

    CLI::App* disjoint = app.add_subcommand("disjoint", "disjointness series");
    add_common_flags(disjoint, cfg, true);
    disjoint->add_option("--tau-prime", cfg.tau_prime,
                         "compare S-J states at tau and tau-prime");

    CLI::App* limit = app.add_subcommand("limit", "large-slab limit sequence");
    add_common_flags(limit, cfg, false, false);
    limit->add_option("--omega", cfg.omega, "mode frequency");
    limit->add_option("--bump-width", cfg.bump_width, "test-function half width");
    limit->add_option("--tau-schedule", cfg.tau_schedule, "increasing tau values")
        ->delimiter(',');

    CLI::App* oracle = app.add_subcommand("oracle", "Nystrom validation suite");
    add_common_flags(oracle, cfg, false);
    oracle->add_option("--omega", cfg.omega, "mode frequency");
    oracle->add_option("--n-grid", cfg.n_grid, "Nystrom grid size");
    oracle->add_option("--bump-width", cfg.bump_width, "test-function half width");

    CLI::App* scan = app.add_subcommand("scan", "tail statistic over a tau grid");
    add_common_flags(scan, cfg, true, false);
    scan->add_option("--tau-min", cfg.tau_min, "grid start");
    scan->add_option("--tau-max", cfg.tau_max, "grid end");
    scan->add_option("--tau-step", cfg.tau_step, "grid step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err); // --help
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (spectrum->parsed()) return run_spectrum((cfg.subcommand = "spectrum", cfg));
        if (modes->parsed()) return run_modes((cfg.subcommand = "modes", cfg));
        if (hadamard->parsed()) return run_hadamard((cfg.subcommand = "hadamard", cfg));
        if (disjoint->parsed()) return run_disjoint((cfg.subcommand = "disjoint", cfg));
        if (limit->parsed()) return run_limit((cfg.subcommand = "limit", cfg));
        if (oracle->parsed()) return run_oracle((cfg.subcommand = "oracle", cfg));
        if (scan->parsed()) return run_scan((cfg.subcommand = "scan", cfg));
    } catch (const accuracy_error& err) {
        std::cerr << "accuracy error: " << err.what() << "\n";
        return kExitAccuracy;
    } catch (const invalid_parameter& err) {
        std::cerr << "invalid parameter: " << err.what() << "\n";
        return kExitValidation;
    } catch (const sjslab::domain_error& err) {
        std::cerr << "domain error: " << err.what() << "\n";
        return kExitValidation;
    } catch (const json::exception& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
