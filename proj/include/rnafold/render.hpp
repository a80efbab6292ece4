#ifndef RNAFOLD_RENDER_HPP
#define RNAFOLD_RENDER_HPP

// ASCII and SVG pictures of a folding with its bonds.
//
// Legend: G filled disc, C open disc, A disc with a horizontal bar, U disc
// with a vertical bar, X a cross. Chain links are solid, bonds dashed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rnafold/lattice.hpp"

namespace rnafold {

enum class RenderFormat { Ascii, Svg };

struct RenderSpec {
  RenderFormat format = RenderFormat::Ascii;
  int cell = 40;  ///< SVG pixels per lattice unit
};

namespace detail {

struct Extent {
  std::int64_t min_x, max_x, min_y, max_y;
};

inline Extent extent_of(const Folding& folding) {
  const auto pts = folding.points();
  Extent e{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
  for (const Point& p : pts) {
    e.min_x = std::min(e.min_x, p.x);
    e.max_x = std::max(e.max_x, p.x);
    e.min_y = std::min(e.min_y, p.y);
    e.max_y = std::max(e.max_y, p.y);
  }
  return e;
}

}  // namespace detail

/// Nodes on even rows and columns, links '-' and '|', bonds '.' (horizontal)
/// and ':' (vertical). Higher y is drawn nearer the top.
inline std::string render_ascii(const Chain& chain, const Folding& folding) {
  const auto e = detail::extent_of(folding);
  const auto w = static_cast<std::size_t>(2 * (e.max_x - e.min_x) + 1);
  const auto h = static_cast<std::size_t>(2 * (e.max_y - e.min_y) + 1);
  std::vector<std::string> rows(h, std::string(w, ' '));
  auto col = [&](std::int64_t x2) { return static_cast<std::size_t>(x2 - 2 * e.min_x); };
  auto row = [&](std::int64_t y2) { return static_cast<std::size_t>(2 * e.max_y - y2); };
  const auto pts = folding.points();

  auto mid = [&](Point a, Point b, char horizontal, char vertical) {
    rows[row(a.y + b.y)][col(a.x + b.x)] = a.y == b.y ? horizontal : vertical;
  };
  for (std::size_t i = 1; i < pts.size(); ++i) mid(pts[i - 1], pts[i], '-', '|');
  for (const auto& bond : score(chain, folding).witness.edges) {
    mid(pts[bond.i - 1], pts[bond.j - 1], '.', ':');
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    rows[row(2 * pts[i].y)][col(2 * pts[i].x)] = to_char(chain[i + 1]);
  }

  std::string out;
  for (auto& r : rows) {
    r.erase(r.find_last_not_of(' ') + 1);
    out += r + "\n";
  }
  return out;
}

inline std::string render_svg(const Chain& chain, const Folding& folding, int cell = 40) {
  const auto e = detail::extent_of(folding);
  const std::int64_t margin = cell;
  const std::int64_t width = (e.max_x - e.min_x) * cell + 2 * margin;
  const std::int64_t height = (e.max_y - e.min_y) * cell + 2 * margin;
  const std::int64_t r = cell / 4;
  auto sx = [&](const Point& p) { return (p.x - e.min_x) * cell + margin; };
  auto sy = [&](const Point& p) { return (e.max_y - p.y) * cell + margin; };
  auto num = [](std::int64_t v) { return std::to_string(v); };
  const auto pts = folding.points();

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out += "<polyline class=\"chain\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += (i ? " " : "") + num(sx(pts[i])) + "," + num(sy(pts[i]));
  }
  out += "\"/>\n";

  out += "<g class=\"bonds\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"4,3\">\n";
  for (const auto& bond : score(chain, folding).witness.edges) {
    const Point a = pts[bond.i - 1], b = pts[bond.j - 1];
    out += "<line x1=\"" + num(sx(a)) + "\" y1=\"" + num(sy(a)) + "\" x2=\"" + num(sx(b)) +
           "\" y2=\"" + num(sy(b)) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g class=\"nodes\" stroke=\"black\" stroke-width=\"2\">\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::int64_t x = sx(pts[i]), y = sy(pts[i]);
    const Base b = chain[i + 1];
    if (b == Base::X) {
      out += "<path d=\"M" + num(x - r) + " " + num(y - r) + " L" + num(x + r) + " " +
             num(y + r) + " M" + num(x - r) + " " + num(y + r) + " L" + num(x + r) + " " +
             num(y - r) + "\"/>\n";
      continue;
    }
    const char* fill = b == Base::G ? "black" : "white";
    out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" + num(r) + "\" fill=\"" +
           fill + "\"/>\n";
    if (b == Base::A) {
      out += "<line x1=\"" + num(x - r) + "\" y1=\"" + num(y) + "\" x2=\"" + num(x + r) +
             "\" y2=\"" + num(y) + "\"/>\n";
    } else if (b == Base::U) {
      out += "<line x1=\"" + num(x) + "\" y1=\"" + num(y - r) + "\" x2=\"" + num(x) +
             "\" y2=\"" + num(y + r) + "\"/>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

inline std::string render(const Chain& chain, const Folding& folding, const RenderSpec& spec = {}) {
  return spec.format == RenderFormat::Svg ? render_svg(chain, folding, spec.cell)
                                          : render_ascii(chain, folding);
}

}  // namespace rnafold

#endif  // RNAFOLD_RENDER_HPP
