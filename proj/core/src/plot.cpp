#include "gridscan/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "gridscan/error.hpp"
#include "gridscan/pca.hpp"

namespace gridscan {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 20.0;
constexpr double kPlot = kCanvas - 2.0 * kMargin;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

using XY = std::pair<double, double>;

struct Frame {
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;

  double map_x(double x) const {
    return kMargin + (x - x_min) / (x_max - x_min) * kPlot;
  }
  // SVG y grows downward.
  double map_y(double y) const {
    return kMargin + (1.0 - (y - y_min) / (y_max - y_min)) * kPlot;
  }
  void include(const XY& p) {
    x_min = std::min(x_min, p.first);
    x_max = std::max(x_max, p.first);
    y_min = std::min(y_min, p.second);
    y_max = std::max(y_max, p.second);
  }
};

struct Planar {
  std::vector<XY> points;
  std::vector<XY> centers;
  std::vector<XY> path;
  Frame frame;
};

/// Reduce everything to plot coordinates. Two-dimensional data passes
/// through; higher dimensions go through the first two principal axes; a
/// one-dimensional cloud gets a constant second coordinate.
Planar flatten(const Dataset& dataset, const KeptCells* kept,
               const Chain* chain) {
  Planar planar;
  const std::uint32_t dim = dataset.dim();

  if (dim <= 2) {
    auto lift = [dim](std::span<const double> p) {
      return XY{p[0], dim == 2 ? p[1] : 0.5};
    };
    for (std::size_t j = 0; j < dataset.size(); ++j) {
      planar.points.push_back(lift(dataset.point(j)));
    }
    if (kept != nullptr) {
      for (const auto& cell : kept->cells) {
        planar.centers.push_back(lift(cell.center));
      }
    }
    if (chain != nullptr) {
      for (const auto& v : chain->vertices) planar.path.push_back(lift(v));
    }
    planar.frame = Frame{};  // native unit square
    return planar;
  }

  const PrincipalAxes axes = pca_fit(dataset, 2);
  auto lift = [&axes](std::span<const double> p) {
    const auto q = project(axes, p);
    return XY{q[0], q[1]};
  };
  Frame frame;
  frame.x_min = frame.y_min = std::numeric_limits<double>::infinity();
  frame.x_max = frame.y_max = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < dataset.size(); ++j) {
    planar.points.push_back(lift(dataset.point(j)));
    frame.include(planar.points.back());
  }
  if (kept != nullptr) {
    for (const auto& cell : kept->cells) {
      planar.centers.push_back(lift(cell.center));
      frame.include(planar.centers.back());
    }
  }
  if (chain != nullptr) {
    for (const auto& v : chain->vertices) planar.path.push_back(lift(v));
  }
  if (!(frame.x_max > frame.x_min)) frame.x_max = frame.x_min + 1.0;
  if (!(frame.y_max > frame.y_min)) frame.y_max = frame.y_min + 1.0;
  planar.frame = frame;
  return planar;
}

}  // namespace

std::string render_plot_svg(const Dataset& dataset, const KeptCells* kept,
                            const Chain* chain) {
  const Planar planar = flatten(dataset, kept, chain);
  const Frame& frame = planar.frame;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\""
      << kCanvas << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas
      << ' ' << kCanvas << "\">\n";

  // Kept cells first so points stay visible on top of them.
  if (kept != nullptr && !planar.centers.empty()) {
    const double side = kept->resolution.cell_side();
    const double w = side / (frame.x_max - frame.x_min) * kPlot;
    const double h = side / (frame.y_max - frame.y_min) * kPlot;
    svg << "  <g stroke=\"#d62728\" fill=\"none\" stroke-width=\"1\">\n";
    for (const XY& c : planar.centers) {
      const double cx = frame.map_x(c.first);
      const double cy = frame.map_y(c.second);
      svg << "    <rect x=\"" << px(cx - w / 2.0) << "\" y=\""
          << px(cy - h / 2.0) << "\" width=\"" << px(w) << "\" height=\""
          << px(h) << "\"/>\n";
    }
    svg << "  </g>\n";
  }

  svg << "  <g fill=\"#1f77b4\">\n";
  for (const XY& p : planar.points) {
    svg << "    <circle cx=\"" << px(frame.map_x(p.first)) << "\" cy=\""
        << px(frame.map_y(p.second)) << "\" r=\"2\"/>\n";
  }
  svg << "  </g>\n";

  if (planar.path.size() >= 2) {
    svg << "  <g stroke=\"#2ca02c\" stroke-width=\"1.5\">\n";
    for (std::size_t k = 0; k + 1 < planar.path.size(); ++k) {
      svg << "    <line x1=\"" << px(frame.map_x(planar.path[k].first))
          << "\" y1=\"" << px(frame.map_y(planar.path[k].second))
          << "\" x2=\"" << px(frame.map_x(planar.path[k + 1].first))
          << "\" y2=\"" << px(frame.map_y(planar.path[k + 1].second))
          << "\"/>\n";
    }
    svg << "  </g>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(const Dataset& dataset, const KeptCells* kept,
               const Chain* chain, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::io_error, "cannot write " + path);
  }
  out << render_plot_svg(dataset, kept, chain);
  if (!out) {
    throw Error(ErrorCode::io_error, "write failed: " + path);
  }
}

}  // namespace gridscan
