#include "annulus/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace annulus {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Mapper {
  double xmin, xmax, ymin, ymax;
  int width, height;
  double scale, ox, oy;

  void fit(double margin_frac) {
    const double dx = std::max(1e-9, xmax - xmin);
    const double dy = std::max(1e-9, ymax - ymin);
    const double mx = margin_frac * dx, my = margin_frac * dy;
    const double sx = width / (dx + 2 * mx);
    const double sy = height / (dy + 2 * my);
    scale = std::min(sx, sy);
    ox = 0.5 * width - scale * 0.5 * (xmin + xmax);
    oy = 0.5 * height + scale * 0.5 * (ymin + ymax);
  }
  std::string px(Cx p) const {
    return fmt(ox + scale * p.real()) + "," + fmt(oy - scale * p.imag());
  }
};

std::string polyline(const std::vector<Cx>& pts, const Mapper& m) {
  std::ostringstream ss;
  for (size_t j = 0; j < pts.size(); ++j) {
    ss << (j == 0 ? "M " : "L ") << m.px(pts[j]) << " ";
  }
  ss << "Z";
  return ss.str();
}

struct Drawable {
  std::vector<std::vector<Cx>> curves;
  bool is_annulus = false;
  bool seam = false;
};

Drawable to_drawable(const Json& j, int samples) {
  Drawable d;
  const std::string kind = json_kind(j);
  if (kind == "curve") {
    d.curves.push_back(curve_from_json(j).points);
  } else if (kind == "rigged_annulus") {
    const DiskMap f = disk_map_from_json(j.at("f"));
    const ExteriorMap g = exterior_map_from_json(j.at("g"));
    d.curves.push_back(boundary_samples(f, samples, 1.0));
    d.curves.push_back(boundary_samples(g, samples, 1.0));
    d.is_annulus = true;
    if (j.contains("flags"))
      for (const auto& fl : j["flags"])
        if (fl == "G") d.seam = true;
  } else if (kind == "disk_map") {
    d.curves.push_back(boundary_samples(disk_map_from_json(j), samples, 1.0));
  } else if (kind == "exterior_map") {
    d.curves.push_back(
        boundary_samples(exterior_map_from_json(j), samples, 1.0));
  } else {
    throw InvalidInput("render: unsupported object kind \"" + kind + "\"");
  }
  return d;
}

}  // namespace

std::string render_svg(const std::vector<Json>& objects,
                       const SvgStyle& style) {
  std::vector<Drawable> items;
  for (const auto& j : objects) items.push_back(to_drawable(j, style.samples));

  Mapper m{1e300, -1e300, 1e300, -1e300, style.width, style.height,
           1.0,   0.0,    0.0};
  for (const auto& it : items)
    for (const auto& c : it.curves)
      for (const auto& p : c) {
        m.xmin = std::min(m.xmin, p.real());
        m.xmax = std::max(m.xmax, p.real());
        m.ymin = std::min(m.ymin, p.imag());
        m.ymax = std::max(m.ymax, p.imag());
      }
  if (items.empty()) throw InvalidInput("render: no objects");
  m.fit(style.margin_frac);

  std::ostringstream ss;
  ss << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width
     << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width
     << " " << style.height << "\">\n";
  ss << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  for (const auto& it : items) {
    if (it.is_annulus && !it.seam) {
      // shade the ring between the two boundary curves
      ss << "<path d=\"" << polyline(it.curves[1], m) << " "
         << polyline(it.curves[0], m) << "\" fill=\"" << style.fill_color
         << "\" fill-opacity=\"0.35\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
    }
    for (size_t c = 0; c < it.curves.size(); ++c) {
      std::string color = style.curve_color;
      double w = style.stroke_width;
      if (it.is_annulus && it.seam) {
        color = style.seam_color;  // coincident curves: draw the seam only
        w = 2.0 * style.stroke_width;
        if (c > 0) break;
      } else if (it.is_annulus && c == 1) {
        color = style.exterior_color;
      }
      ss << "<path d=\"" << polyline(it.curves[c], m) << "\" fill=\"none\""
         << " stroke=\"" << color << "\" stroke-width=\"" << fmt(w)
         << "\"/>\n";
    }
  }
  ss << "</svg>\n";
  return ss.str();
}

}  // namespace annulus
