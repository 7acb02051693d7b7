#pragma once

// The basic move at a site [i, i+1]: the center diagram has a vee at i and a
// wedge at i+1. The site is unencapsulated when the cup (i, i+1) is a sector
// of its segment, and encapsulated when it lies nested inside another cup.
// Expanding a site lists the middle-layer constituents; each enters with
// multiplicity one while the center counts twice, giving the linear relation
//   2 m(center) = sum over the middle diagrams of m.

#include <string>
#include <vector>

#include "superdim/cup_diagram.hpp"
#include "superdim/error.hpp"

namespace superdim {

enum class SiteKind { Encapsulated, Unencapsulated };

enum class MoveKind { Up, Boundary, InternalLower, InternalUpper };

inline const char* site_kind_name(SiteKind k) noexcept {
  return k == SiteKind::Encapsulated ? "encapsulated" : "unencapsulated";
}

inline const char* move_kind_name(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::Up: return "Up";
    case MoveKind::Boundary: return "Boundary";
    case MoveKind::InternalLower: return "InternalLower";
    case MoveKind::InternalUpper: return "InternalUpper";
  }
  return "?";
}

struct MoveSite {
  CupDiagram center;  // vee at i, wedge at i+1
  Pos i = 0;
  SiteKind kind = SiteKind::Unencapsulated;
  Pos a = 0;  // enclosing interval [a, b]: the innermost enclosing cup, or
  Pos b = 0;  // the segment widened by one position on each side
};

struct MoveConstituent {
  PosSet vees;
  MoveKind move = MoveKind::Up;
};

struct MoveExpansion {
  MoveSite site;
  std::vector<MoveConstituent> middle;
};

// 2 m(lhs) = sum of m over rhs.
struct Relation {
  PosSet lhs;
  Pos site = 0;
  std::vector<PosSet> rhs;
};

inline MoveSite classify_site(CupDiagram d, Pos i) {
  if (!set_contains(d.vees, i) || set_contains(d.vees, i + 1))
    fail(Errc::BadIndex, "no move site at position " + std::to_string(i));

  MoveSite site;
  site.i = i;

  // innermost cup strictly containing (i, i+1), if any
  bool enclosed = false;
  Pos best_open = 0, best_close = 0;
  for (const Cup& c : d.cups) {
    if (c.open < i && i < c.close) {
      if (!enclosed || c.open > best_open) {
        best_open = c.open;
        best_close = c.close;
      }
      enclosed = true;
    }
  }

  if (enclosed) {
    site.kind = SiteKind::Encapsulated;
    site.a = best_open;
    site.b = best_close;
  } else {
    site.kind = SiteKind::Unencapsulated;
    for (const Interval& seg : d.segments) {
      if (seg.lo <= i && i <= seg.hi) {
        site.a = seg.lo - 1;
        site.b = seg.hi + 1;
        break;
      }
    }
  }
  site.center = std::move(d);
  return site;
}

inline std::vector<MoveSite> move_sites(const CupDiagram& d) {
  std::vector<MoveSite> out;
  for (Pos v : d.vees)
    if (!set_contains(d.vees, v + 1)) out.push_back(classify_site(d, v));
  return out;
}

inline std::vector<MoveSite> move_sites(const PosSet& vees) {
  return move_sites(build(vees));
}

namespace detail {

// Maximal cups of d inside [lo, hi]; these tile the whole interval.
inline std::vector<Cup> maximal_cups_within(const CupDiagram& d, Pos lo, Pos hi) {
  std::vector<Cup> out;
  Pos skip_until = lo - 1;
  for (const Cup& c : d.cups) {  // sorted by open
    if (c.open < lo || c.close > hi) continue;
    if (c.open <= skip_until) continue;
    out.push_back(c);
    skip_until = c.close;
  }
  return out;
}

}  // namespace detail

inline MoveExpansion expand(const MoveSite& site) {
  const CupDiagram& d = site.center;
  const Pos i = site.i;
  MoveExpansion out;
  out.site = site;

  out.middle.push_back({set_replace(d.vees, i, i + 1), MoveKind::Up});
  if (site.kind == SiteKind::Unencapsulated)
    out.middle.push_back({set_replace(d.vees, i, site.a), MoveKind::Boundary});

  // internal sectors: the maximal cups tiling (a, b), one of them is (i, i+1)
  for (const Cup& c : detail::maximal_cups_within(d, site.a + 1, site.b - 1)) {
    if (c.close < i)
      out.middle.push_back({set_replace(d.vees, i, c.close), MoveKind::InternalLower});
  }
  for (const Cup& c : detail::maximal_cups_within(d, site.a + 1, site.b - 1)) {
    if (c.open > i + 1)
      out.middle.push_back({set_replace(d.vees, c.open, i + 1), MoveKind::InternalUpper});
  }
  return out;
}

inline Relation relation(const MoveSite& site) {
  MoveExpansion e = expand(site);
  Relation r;
  r.lhs = site.center.vees;
  r.site = site.i;
  r.rhs.reserve(e.middle.size());
  for (MoveConstituent& c : e.middle) r.rhs.push_back(std::move(c.vees));
  return r;
}

}  // namespace superdim
