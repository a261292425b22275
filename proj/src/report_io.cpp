#include "sjslab/report_io.hpp"

#include <cstdio>
#include <fstream>

#include "sjslab/errors.hpp"

namespace sjslab {

using nlohmann::json;

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

json spectrum_to_json(const SpatialSpectrum& spectrum) {
    json levels = json::array();
    for (const SpectrumLevel& level : spectrum.levels)
        levels.push_back({{"index", level.index},
                          {"omega", level.omega},
                          {"multiplicity", level.multiplicity}});
    json j{{"geometry", to_string(spectrum.kind)},
           {"mass", spectrum.mass},
           {"levels", std::move(levels)}};
    if (spectrum.kind == GeometryKind::sphere) j["radius"] = spectrum.geometry_parameter;
    if (spectrum.kind == GeometryKind::torus) j["period"] = spectrum.geometry_parameter;
    return j;
}

SpatialSpectrum spectrum_from_json(const json& j) {
    const std::string kind = j.value("geometry", "custom");
    const double mass = j.at("mass").get<double>();
    if (kind == "custom") {
        // custom entries go through the validating builder (sort + merge)
        std::vector<std::pair<double, std::int64_t>> entries;
        for (const json& level : j.at("levels"))
            entries.emplace_back(level.at("omega").get<double>(),
                                 level.at("multiplicity").get<std::int64_t>());
        return build_custom_spectrum(entries, mass);
    }

    // sphere/torus documents carry meaningful level indices; preserve them
    SpatialSpectrum spectrum;
    spectrum.kind = kind == "sphere" ? GeometryKind::sphere : GeometryKind::torus;
    spectrum.mass = mass;
    spectrum.geometry_parameter =
        kind == "sphere" ? j.value("radius", 0.0) : j.value("period", 0.0);
    for (const json& level : j.at("levels")) {
        SpectrumLevel parsed{level.at("index").get<std::int64_t>(),
                             level.at("omega").get<double>(),
                             level.at("multiplicity").get<std::int64_t>()};
        if (!(parsed.omega >= mass) || parsed.multiplicity < 1)
            throw invalid_parameter("spectrum_from_json: invalid level");
        if (!spectrum.levels.empty() && parsed.omega <= spectrum.levels.back().omega)
            throw invalid_parameter("spectrum_from_json: levels must increase in omega");
        spectrum.levels.push_back(parsed);
    }
    return spectrum;
}

json tail_to_json(const TailStatistic& tail) {
    return {{"sup", tail.sup}, {"mean", tail.mean}, {"window", tail.window}};
}

json thresholds_to_json(const Thresholds& thresholds) {
    return {{"exact_zero_tol", thresholds.exact_zero_tol},
            {"tail_sup_threshold", thresholds.tail_sup_threshold},
            {"growth_band_lo", thresholds.growth_band_lo},
            {"growth_band_hi", thresholds.growth_band_hi}};
}

json verdict_to_json(const Verdict& verdict) {
    return {{"outcome", to_string(verdict.outcome)},
            {"growth_ratio", verdict.growth_ratio},
            {"linear_growth", verdict.linear_growth},
            {"tail", tail_to_json(verdict.tail)},
            {"max_abs_driver", verdict.max_abs_driver},
            {"thresholds", thresholds_to_json(verdict.thresholds)}};
}

json series_report_to_json(const SeriesReport& report, bool include_rows) {
    json j{{"label", report.label},
           {"tau", report.tau},
           {"total", report.total},
           {"growth_ratio", report.growth_ratio},
           {"sin_tail", tail_to_json(report.sin_tail)},
           {"verdict", verdict_to_json(report.verdict)},
           {"levels_used", report.rows.size()}};
    if (report.tau_prime) j["tau_prime"] = *report.tau_prime;
    if (include_rows) {
        json rows = json::array();
        for (const SeriesLevelRow& row : report.rows)
            rows.push_back({{"level", row.level},
                            {"omega", row.omega},
                            {"multiplicity", row.multiplicity},
                            {"term", row.term},
                            {"partial_sum", row.partial_sum}});
        j["rows"] = std::move(rows);
    }
    return j;
}

json torus_report_to_json(const TorusIncommensurabilityReport& report) {
    return {{"frac_axis", report.frac_axis},
            {"frac_diag", report.frac_diag},
            {"axis_near_integer", report.axis_near_integer},
            {"diag_near_integer", report.diag_near_integer},
            {"near_integer_tol", report.near_integer_tol},
            {"axis_tail", tail_to_json(report.axis_tail)},
            {"diag_tail", tail_to_json(report.diag_tail)},
            {"outcome", to_string(report.outcome)},
            {"thresholds", thresholds_to_json(report.thresholds)}};
}

json scan_to_json(const std::vector<ScanRow>& rows) {
    json j = json::array();
    for (const ScanRow& row : rows)
        j.push_back({{"tau", row.tau}, {"tail", tail_to_json(row.tail)}});
    return j;
}

json limit_to_json(const LimitTauResult& result) {
    json points = json::array();
    for (const LimitTauPoint& point : result.points)
        points.push_back({{"tau", point.tau},
                          {"kernel_value", point.kernel_value},
                          {"transform_minus", point.transform_minus},
                          {"transform_plus", point.transform_plus}});
    return {{"points", std::move(points)}, {"matched_sign", result.matched_sign}};
}

std::string spectrum_to_csv(const SpatialSpectrum& spectrum) {
    std::string out = "level,omega,multiplicity\n";
    for (const SpectrumLevel& level : spectrum.levels) {
        out += std::to_string(level.index);
        out += ',';
        out += format_double(level.omega);
        out += ',';
        out += std::to_string(level.multiplicity);
        out += '\n';
    }
    return out;
}

std::string modes_to_csv(const SpatialSpectrum& spectrum, double tau) {
    std::string out = "level,omega,multiplicity,sinc2wt,normC2,normS2,delta,lambda_plus\n";
    for (const SpectrumLevel& level : spectrum.levels) {
        const ModeConstants mc = mode_constants(level.omega, tau);
        out += std::to_string(level.index);
        out += ',';
        out += format_double(mc.omega);
        out += ',';
        out += std::to_string(level.multiplicity);
        out += ',';
        out += format_double(mc.sinc2wt);
        out += ',';
        out += format_double(mc.norm_c2);
        out += ',';
        out += format_double(mc.norm_s2);
        out += ',';
        out += format_double(mc.delta);
        out += ',';
        out += format_double(mc.lambda_plus);
        out += '\n';
    }
    return out;
}

std::string elements_to_csv(const SpatialSpectrum& spectrum,
                            const std::vector<ModeMatrixElement>& elements) {
    if (elements.size() != spectrum.size())
        throw invalid_parameter("elements_to_csv: element/spectrum size mismatch");
    std::string out = "level,omega,multiplicity,kind,re_value,im_value\n";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const SpectrumLevel& level = spectrum.levels[i];
        const ModeMatrixElement& element = elements[i];
        out += std::to_string(level.index);
        out += ',';
        out += format_double(level.omega);
        out += ',';
        out += std::to_string(level.multiplicity);
        out += ',';
        out += to_string(element.kind);
        out += ',';
        out += format_double(element.value.real());
        out += ',';
        out += format_double(element.value.imag());
        out += '\n';
    }
    return out;
}

std::string series_to_csv(const std::vector<const SeriesReport*>& reports) {
    std::string out = "series,level,omega,multiplicity,term,partial_sum\n";
    for (const SeriesReport* report : reports)
        for (const SeriesLevelRow& row : report->rows) {
            out += report->label;
            out += ',';
            out += std::to_string(row.level);
            out += ',';
            out += format_double(row.omega);
            out += ',';
            out += std::to_string(row.multiplicity);
            out += ',';
            out += format_double(row.term);
            out += ',';
            out += format_double(row.partial_sum);
            out += '\n';
        }
    return out;
}

std::string sjsj_to_csv(const SjSjReport& report) {
    std::string out = "series,level,omega,multiplicity,term,partial_sum,mix\n";
    for (std::size_t i = 0; i < report.series.rows.size(); ++i) {
        const SeriesLevelRow& row = report.series.rows[i];
        out += report.series.label;
        out += ',';
        out += std::to_string(row.level);
        out += ',';
        out += format_double(row.omega);
        out += ',';
        out += std::to_string(row.multiplicity);
        out += ',';
        out += format_double(row.term);
        out += ',';
        out += format_double(row.partial_sum);
        out += ',';
        out += format_double(report.mix[i]);
        out += '\n';
    }
    return out;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::string out = "tau,tail_sup,tail_mean,window\n";
    for (const ScanRow& row : rows) {
        out += format_double(row.tau);
        out += ',';
        out += format_double(row.tail.sup);
        out += ',';
        out += format_double(row.tail.mean);
        out += ',';
        out += std::to_string(row.tail.window);
        out += '\n';
    }
    return out;
}

std::string limit_to_csv(const LimitTauResult& result) {
    std::string out = "tau,kernel_value,transform_minus,transform_plus\n";
    for (const LimitTauPoint& point : result.points) {
        out += format_double(point.tau);
        out += ',';
        out += format_double(point.kernel_value);
        out += ',';
        out += format_double(point.transform_minus);
        out += ',';
        out += format_double(point.transform_plus);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_parameter("cannot open output file: " + path);
    out << contents;
    if (!out) throw invalid_parameter("failed writing output file: " + path);
}

} // namespace sjslab
