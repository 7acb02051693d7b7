#pragma once

// ASCII and SVG pictures of cup diagrams. Positions sit on the original
// numberline; arcs connect each vee to the back-mapped position of its
// matching wedge. Arc rows are ordered by nesting depth, innermost first.

#include <algorithm>
#include <string>
#include <vector>

#include "superdim/cup_diagram.hpp"
#include "superdim/weights.hpp"

namespace superdim {

namespace detail {

struct RenderModel {
  PosSet vees;                 // original positions
  PosSet crosses;
  std::vector<Cup> arcs;       // original positions
  std::vector<int> depths;
  std::vector<Interval> sectors;    // compacted coordinates
  std::vector<Interval> segments;   // compacted coordinates
  Pos lo = 0, hi = 0;          // display window
  int max_depth = 0;
};

inline RenderModel render_model(const CompactedDiagram& c) {
  RenderModel m;
  m.crosses = c.removed;
  CupDiagram d = build(c);
  m.depths = cup_depths(d);
  m.sectors = d.sectors;
  m.segments = d.segments;
  for (const Cup& cup : d.cups)
    m.arcs.push_back(Cup{uncompact_position(c.removed, cup.open),
                         uncompact_position(c.removed, cup.close)});
  for (Pos v : c.vees) m.vees.push_back(uncompact_position(c.removed, v));
  std::sort(m.vees.begin(), m.vees.end());

  Pos lo = 0, hi = 0;
  bool first = true;
  auto see = [&](Pos x) {
    if (first) { lo = hi = x; first = false; return; }
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  };
  for (Pos v : m.vees) see(v);
  for (Pos x : m.crosses) see(x);
  for (const Cup& a : m.arcs) { see(a.open); see(a.close); }
  if (first) { lo = 0; hi = 0; }
  m.lo = lo - 1;
  m.hi = hi + 1;
  for (int dd : m.depths) m.max_depth = std::max(m.max_depth, dd);
  return m;
}

inline std::string interval_list_text(const std::vector<Interval>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += "[" + std::to_string(xs[i].lo) + "," + std::to_string(xs[i].hi) + "]";
  }
  return out.empty() ? "-" : out;
}

}  // namespace detail

inline std::string render_ascii(const CompactedDiagram& c) {
  detail::RenderModel m = detail::render_model(c);

  size_t cell = 2;
  for (Pos p = m.lo; p <= m.hi; ++p)
    cell = std::max(cell, std::to_string(p).size() + 1);
  size_t width = static_cast<size_t>(m.hi - m.lo + 1) * cell;
  auto column = [&](Pos p) { return static_cast<size_t>(p - m.lo) * cell + cell - 1; };

  std::string out;
  std::string ruler(width, ' ');
  for (Pos p = m.lo; p <= m.hi; ++p) {
    std::string label = std::to_string(p);
    size_t end = column(p);
    for (size_t k = 0; k < label.size(); ++k)
      ruler[end - label.size() + 1 + k] = label[k];
  }
  out += ruler + "\n";

  std::string labels(width, ' ');
  for (Pos p = m.lo; p <= m.hi; ++p) labels[column(p)] = '^';
  for (Pos x : m.crosses)
    if (m.lo <= x && x <= m.hi) labels[column(x)] = 'x';
  for (Pos v : m.vees) labels[column(v)] = 'v';
  out += labels + "\n";

  for (int depth = m.max_depth; depth >= 0; --depth) {
    std::string row(width, ' ');
    bool any = false;
    for (size_t k = 0; k < m.arcs.size(); ++k) {
      if (m.depths[k] != depth) continue;
      any = true;
      size_t from = column(m.arcs[k].open), to = column(m.arcs[k].close);
      row[from] = '\\';
      row[to] = '/';
      for (size_t col = from + 1; col < to; ++col) row[col] = '_';
    }
    if (any) out += row + "\n";
  }

  out += "sectors (compacted): " + detail::interval_list_text(m.sectors) + "\n";
  out += "segments (compacted): " + detail::interval_list_text(m.segments) + "\n";
  return out;
}

inline std::string render_ascii(const SuperWeight& w) {
  return render_ascii(compact(w));
}

inline std::string render_svg(const CompactedDiagram& c) {
  detail::RenderModel m = detail::render_model(c);

  const long long unit = 28, margin = 20, baseline = 30;
  long long span = m.hi - m.lo;
  long long width = 2 * margin + span * unit;
  long long depth_px = 18;
  long long height = baseline + (m.max_depth + 2) * depth_px + 24;
  auto x_of = [&](Pos p) { return margin + (p - m.lo) * unit; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "  <line x1=\"" + std::to_string(margin - 10) + "\" y1=\"" +
         std::to_string(baseline) + "\" x2=\"" + std::to_string(width - margin + 10) +
         "\" y2=\"" + std::to_string(baseline) + "\" stroke=\"#999\"/>\n";

  for (Pos p = m.lo; p <= m.hi; ++p) {
    char glyph = '^';
    if (set_contains(m.crosses, p)) glyph = 'x';
    if (set_contains(m.vees, p)) glyph = 'v';
    svg += "  <text x=\"" + std::to_string(x_of(p)) + "\" y=\"" +
           std::to_string(baseline - 8) + "\" text-anchor=\"middle\" font-size=\"13\">" +
           glyph + "</text>\n";
    svg += "  <text x=\"" + std::to_string(x_of(p)) + "\" y=\"" +
           std::to_string(height - 6) +
           "\" text-anchor=\"middle\" font-size=\"9\" fill=\"#777\">" +
           std::to_string(p) + "</text>\n";
  }

  for (size_t k = 0; k < m.arcs.size(); ++k) {
    long long x1 = x_of(m.arcs[k].open), x2 = x_of(m.arcs[k].close);
    long long dip = baseline + (m.max_depth - m.depths[k] + 1) * depth_px;
    svg += "  <path d=\"M " + std::to_string(x1) + " " + std::to_string(baseline + 2) +
           " C " + std::to_string(x1) + " " + std::to_string(dip) + ", " +
           std::to_string(x2) + " " + std::to_string(dip) + ", " + std::to_string(x2) +
           " " + std::to_string(baseline + 2) + "\" fill=\"none\" stroke=\"#225\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

inline std::string render_svg(const SuperWeight& w) { return render_svg(compact(w)); }

}  // namespace superdim
