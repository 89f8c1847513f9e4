#include "multinet/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <utility>

#include "multinet/error.hpp"

namespace multinet {

namespace {

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string fmt(double v) {
  if (std::fabs(v) < 5e-4) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double real_value(const Cyclo& c) { return c.embed().real(); }

struct Chart {
  int fixed;  // coordinate set to 1
  int u;      // horizontal
  int v;      // vertical
};

Chart chart_for(char c) {
  switch (c) {
    case 'x': return {0, 1, 2};
    case 'y': return {1, 0, 2};
    case 'z': return {2, 0, 1};
  }
  throw Error(ErrorKind::InvalidParams, std::string("chart must be x, y or z, got '") + c + "'");
}

using Seg = std::pair<std::array<double, 2>, std::array<double, 2>>;

/// Clips a X + b Y + c = 0 to the square [-h, h]^2.
std::optional<Seg> clip(double a, double b, double c, double h) {
  std::vector<std::array<double, 2>> hits;
  auto inside = [h](double t) { return t >= -h - 1e-12 && t <= h + 1e-12; };
  if (b != 0.0)
    for (double x : {-h, h})
      if (double y = -(a * x + c) / b; inside(y)) hits.push_back({x, y});
  if (a != 0.0)
    for (double y : {-h, h})
      if (double x = -(b * y + c) / a; inside(x)) hits.push_back({x, y});
  if (hits.size() < 2) return std::nullopt;
  // the two hits farthest apart along the line direction (-b, a)
  auto along = [a, b](const std::array<double, 2>& p) { return -b * p[0] + a * p[1]; };
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(),
                                      [&](const auto& p, const auto& q) { return along(p) < along(q); });
  return Seg{*lo, *hi};
}

}  // namespace

std::string render_svg(const MultinetCandidate& a, const RenderOptions& opts) {
  const Chart ch = chart_for(opts.chart);
  if (!(opts.span > 0.0) || !std::isfinite(opts.span))
    throw Error(ErrorKind::InvalidParams, "span must be a positive number");
  for (const auto& e : a.lines())
    for (std::size_t i = 0; i < 3; ++i)
      if (!e.line[i].is_real())
        throw Error(ErrorKind::NonRealArrangement, "line " + e.line.key() + " has a non-real coordinate");

  const double h = opts.span / 2.0;
  const double px = opts.pixels;
  auto sx = [&](double x) { return fmt((x + h) / (2.0 * h) * px); };
  auto sy = [&](double y) { return fmt((h - y) / (2.0 * h) * px); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.pixels << "\" height=\""
      << opts.pixels << "\" viewBox=\"0 0 " << opts.pixels << " " << opts.pixels << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << opts.pixels << "\" height=\"" << opts.pixels
      << "\" fill=\"white\"/>\n";

  for (const auto& e : a.lines()) {
    const double la = real_value(e.line[ch.u]);
    const double lb = real_value(e.line[ch.v]);
    const double lc = real_value(e.line[ch.fixed]);
    const std::string stroke = std::string(" stroke=\"") + kPalette[e.block % kPalette.size()] +
                               "\" stroke-width=\"" + fmt(e.mult > 1 ? 1.5 + e.mult : 1.5) + "\"";
    if (e.line[ch.u].is_zero() && e.line[ch.v].is_zero()) {
      // the line at infinity is drawn as a dashed frame around the viewport
      out << "<rect class=\"line\" x=\"2\" y=\"2\" width=\"" << opts.pixels - 4 << "\" height=\""
          << opts.pixels - 4 << "\" fill=\"none\"" << stroke << " stroke-dasharray=\"8,4\"/>\n";
      continue;
    }
    const auto seg = clip(la, lb, lc, h);
    if (!seg) continue;
    out << "<line class=\"line\" x1=\"" << sx(seg->first[0]) << "\" y1=\"" << sy(seg->first[1]) << "\" x2=\""
        << sx(seg->second[0]) << "\" y2=\"" << sy(seg->second[1]) << "\"" << stroke << "/>\n";
  }

  for (const auto& bp : analyze(a).base) {
    const Cyclo& w = bp.point[ch.fixed];
    double x, y;
    if (w.is_zero()) {
      // a point at infinity sits on the frame, in its direction
      x = real_value(bp.point[ch.u]);
      y = real_value(bp.point[ch.v]);
      const double scale = h / std::max(std::fabs(x), std::fabs(y));
      x *= scale;
      y *= scale;
    } else {
      x = real_value(bp.point[ch.u] / w);
      y = real_value(bp.point[ch.v] / w);
      if (std::fabs(x) > h || std::fabs(y) > h) continue;
    }
    out << "<circle class=\"base-point\" cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"" << 2 + 2 * bp.n_p
        << "\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace multinet
