#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "compat/conflict.hpp"
#include "compat/generators.hpp"

namespace compat::cli {

namespace {

constexpr double kPanel = 320.0;
constexpr double kMargin = 28.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string draw_svg(const Instance& inst, const std::optional<Matching>& m) {
  const std::size_t panels = inst.ell();
  const double width = static_cast<double>(panels) * kPanel;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(kPanel) << "\" viewBox=\"0 0 " << fmt(width)
      << ' ' << fmt(kPanel) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t s = 0; s < panels; ++s) {
    const LabeledSet& set = inst.set(s);
    const LabeledSet shown = set.is_convex() ? convex_polygon_points(set.order()) : set;

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    std::vector<std::pair<double, double>> xy(shown.size());
    for (std::size_t i = 0; i < shown.size(); ++i) {
      xy[i] = {shown.points()[i].x.convert_to<double>(),
               shown.points()[i].y.convert_to<double>()};
      if (i == 0) {
        min_x = max_x = xy[i].first;
        min_y = max_y = xy[i].second;
      }
      min_x = std::min(min_x, xy[i].first);
      max_x = std::max(max_x, xy[i].first);
      min_y = std::min(min_y, xy[i].second);
      max_y = std::max(max_y, xy[i].second);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    const double scale = (kPanel - 2 * kMargin) / span;
    const double ox = static_cast<double>(s) * kPanel + kMargin;
    auto px = [&](Label x) {
      return ox + (xy[static_cast<std::size_t>(x - 1)].first - min_x) * scale;
    };
    // SVG y grows downwards.
    auto py = [&](Label x) {
      return kMargin + (max_y - xy[static_cast<std::size_t>(x - 1)].second) * scale;
    };

    svg << "<g id=\"set" << s + 1 << "\">\n";
    svg << "<text x=\"" << fmt(static_cast<double>(s) * kPanel + 6)
        << "\" y=\"16\" font-size=\"12\" font-family=\"sans-serif\">set " << s + 1
        << (set.is_convex() ? " (convex)" : " (planar)") << "</text>\n";

    if (m) {
      std::set<std::size_t> hot;
      const auto& edges = m->edges();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
          if (edges_cross_in_set(edges[i], edges[j], set)) {
            hot.insert(i);
            hot.insert(j);
          }
        }
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const bool crossing = hot.count(i) != 0;
        svg << "<line x1=\"" << fmt(px(edges[i].a)) << "\" y1=\"" << fmt(py(edges[i].a))
            << "\" x2=\"" << fmt(px(edges[i].b)) << "\" y2=\"" << fmt(py(edges[i].b))
            << "\" stroke=\"" << (crossing ? "#d62728" : "#1f77b4")
            << "\" stroke-width=\"" << (crossing ? "3" : "2") << "\"/>\n";
      }
    }
    for (Label x = 1; x <= static_cast<Label>(shown.size()); ++x) {
      svg << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(x))
          << "\" r=\"4\" fill=\"black\"/>\n";
      svg << "<text x=\"" << fmt(px(x) + 6) << "\" y=\"" << fmt(py(x) - 6)
          << "\" font-size=\"11\" font-family=\"sans-serif\">" << x << "</text>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace compat::cli
