#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dk {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(std::istream& in);

/// Radius-versus-degree line chart: one polyline per bound method.
/// Needs columns degree, bound, radius. Throws std::invalid_argument on a
/// missing column ("missing column: <name>") or when only the header is
/// present ("no data rows").
std::string radius_chart_svg(const CsvTable& table);

/// Convergence-history chart: one polyline per run, log-scale max step.
/// Needs columns run, iteration, max_step.
std::string convergence_chart_svg(const CsvTable& table);

}  // namespace dk
