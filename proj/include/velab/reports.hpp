/// @file reports.hpp
/// @brief CSV / JSON / two-column plot output.  Every float is written with
/// 17 significant digits so files re-parse to the same doubles.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "velab/diagnostics.hpp"
#include "velab/sweep.hpp"

namespace velab {

std::string format_double(double v);

/// norms.csv contents: header plus one row per report.
std::string norms_csv(const std::vector<NormReport>& series, int m);
std::string sweep_csv(const SweepReport& r);
/// Pretty-printed JSON document.
std::string sweep_json(const SweepReport& r);

/// File stem embedding grid size and amplitude, e.g. "64x65_a0.01".
std::string report_tag(const SweepReport& r);

/// Writes norms.csv, and when a sweep is given sweep.json, sweep.csv and
/// plotdata/{err,dyerr,wall}_vs_eps_<tag>.dat.  plotdata/wall_vs_t.dat is
/// written from the series.  Throws IoError on write failure.
void emit_reports(const std::vector<NormReport>& series, int m, const std::optional<SweepReport>& sweep,
                  const std::string& out_dir);

/// compare-ns output: sweep_on.*, sweep_off.* and contrast.json.
void emit_ns_comparison(const NsComparison& c, const std::string& out_dir);

void write_text(const std::string& path, const std::string& text);

}  // namespace velab
