#pragma once

// Minimal two-panel SVG rendering for the sweep CSV: log-log deficit vs eps
// with a slope-2 reference, and the ratio columns on a log-x panel.

#include <optional>
#include <string>
#include <vector>

struct SweepPlotRow {
    double eps = 0.0;
    double deficit = 0.0;
    std::optional<double> ratio_hd;
    std::optional<double> ratio_l1;
};

std::string render_sweep_svg(const std::vector<SweepPlotRow>& rows);
