#ifndef GRIDSCAN_PLOT_HPP
#define GRIDSCAN_PLOT_HPP

#include <string>

#include "gridscan/dataset.hpp"
#include "gridscan/manifold.hpp"
#include "gridscan/scan.hpp"

namespace gridscan {

/// SVG figure of a run: data points as circles, kept cells as rectangle
/// outlines (one <rect> per cell), the chain as individual <line> segments.
/// kept and chain may be null. Two-dimensional data plots natively; higher
/// dimensions are projected onto the first two principal axes. Output is
/// deterministic for fixed input.
std::string render_plot_svg(const Dataset& dataset, const KeptCells* kept,
                            const Chain* chain);

void emit_plot(const Dataset& dataset, const KeptCells* kept,
               const Chain* chain, const std::string& path);

}  // namespace gridscan

#endif  // GRIDSCAN_PLOT_HPP
