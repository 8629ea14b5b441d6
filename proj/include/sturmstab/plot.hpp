#ifndef STURMSTAB_PLOT_HPP
#define STURMSTAB_PLOT_HPP

#include <optional>
#include <string>
#include <vector>

#include "sturmstab/sweep.hpp"

namespace sturmstab {

struct BoundaryOverlay {
    ParameterFamily family; // x_order / y_order select the plotted parameters
    int n_max = 0;
};

struct PlotOptions {
    std::string title;
    std::string x_label = "x";
    std::string y_label = "y";
    /// Zero contours of q(0, n) and q(-n^2/4, n) for n = 1..n_max, drawn
    /// as "candidate boundaries".
    std::optional<BoundaryOverlay> overlay;
};

/// Region plot of a sweep: one rectangle per possibly-unstable cell,
/// coloured by its smallest unstable n, on a white (stable) background.
/// Cells must form a full grid; throws std::invalid_argument otherwise.
std::string render_svg(const std::vector<CellResult>& cells, const PlotOptions& options);

} // namespace sturmstab

#endif
