/*
 * report_io.hpp — CSV and JSON serialisation of spectra, mode tables, and
 * diagnostic reports. Floats are printed with 17 significant digits and all
 * orderings are fixed, so identical inputs give byte-identical files.
 * Column orders are documented in the README.
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sjslab/diagnostics.hpp"
#include "sjslab/oracle.hpp"
#include "sjslab/slab_modes.hpp"
#include "sjslab/spectral_geometry.hpp"
#include "sjslab/two_point.hpp"

namespace sjslab {

std::string format_double(double value); // %.17g

// --- JSON ---
nlohmann::json spectrum_to_json(const SpatialSpectrum& spectrum);
SpatialSpectrum spectrum_from_json(const nlohmann::json& j);

nlohmann::json tail_to_json(const TailStatistic& tail);
nlohmann::json thresholds_to_json(const Thresholds& thresholds);
nlohmann::json verdict_to_json(const Verdict& verdict);
nlohmann::json series_report_to_json(const SeriesReport& report, bool include_rows = false);
nlohmann::json torus_report_to_json(const TorusIncommensurabilityReport& report);
nlohmann::json scan_to_json(const std::vector<ScanRow>& rows);
nlohmann::json limit_to_json(const LimitTauResult& result);

// --- CSV ---
std::string spectrum_to_csv(const SpatialSpectrum& spectrum);
std::string modes_to_csv(const SpatialSpectrum& spectrum, double tau);
std::string elements_to_csv(const SpatialSpectrum& spectrum,
                            const std::vector<ModeMatrixElement>& elements);
std::string series_to_csv(const std::vector<const SeriesReport*>& reports);
std::string sjsj_to_csv(const SjSjReport& report);
std::string scan_to_csv(const std::vector<ScanRow>& rows);
std::string limit_to_csv(const LimitTauResult& result);

void write_file(const std::string& path, const std::string& contents);

} // namespace sjslab
