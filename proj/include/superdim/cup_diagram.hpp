#pragma once

// Cup diagrams over compacted vee positions. Sweeping the numberline left to
// right, every vee opens a cup and every wedge closes the innermost open one,
// so each vee is matched to the nearest wedge at its own nesting depth.
// Sectors are the outermost cups; adjacent sectors merge into segments.

#include <vector>

#include "superdim/error.hpp"
#include "superdim/weights.hpp"

namespace superdim {

struct CompactedDiagram {
  PosSet vees;     // positions on the compacted line, ascending
  PosSet removed;  // crosses deleted by the compaction (the back map)
};

struct Interval {
  Pos lo = 0;
  Pos hi = 0;
  bool operator==(const Interval&) const = default;
};

struct Cup {
  Pos open = 0;   // carries a vee
  Pos close = 0;  // carries a wedge
  bool operator==(const Cup&) const = default;
};

struct CupDiagram {
  PosSet vees;
  std::vector<Cup> cups;          // sorted by opening position
  std::vector<Interval> sectors;  // outermost cups, left to right
  std::vector<Interval> segments; // maximal runs of adjacent sectors
};

// Delete the crosses: x -> x - #{crosses below x}. Circles cannot occur in a
// maximal atypical block, so this is the whole compaction.
inline CompactedDiagram compact(const SuperWeight& w) {
  Labeling lab = labeling(w);
  if (static_cast<int>(lab.vees.size()) != w.n)
    fail(Errc::NotMaximalAtypical,
         "weight has atypicality " + std::to_string(lab.vees.size()) +
             " < n = " + std::to_string(w.n));
  CompactedDiagram out;
  out.removed = std::move(lab.crosses);
  out.vees.reserve(lab.vees.size());
  for (Pos v : lab.vees) out.vees.push_back(compact_position(out.removed, v));
  return out;
}

inline CupDiagram build(const PosSet& vees) {
  CupDiagram d;
  d.vees = vees;
  if (vees.empty()) return d;

  std::vector<std::pair<Pos, int>> open_stack;  // position, depth at opening
  std::vector<std::pair<Cup, int>> matched;     // cup, depth
  size_t vi = 0;
  for (Pos p = vees.front(); !(open_stack.empty() && vi == vees.size()); ++p) {
    if (vi < vees.size() && vees[vi] == p) {
      open_stack.emplace_back(p, static_cast<int>(open_stack.size()));
      ++vi;
    } else if (!open_stack.empty()) {
      matched.push_back({Cup{open_stack.back().first, p}, open_stack.back().second});
      open_stack.pop_back();
    } else {
      p = vees[vi] - 1;  // nothing open, jump to the next vee
    }
  }

  std::sort(matched.begin(), matched.end(),
            [](const auto& a, const auto& b) { return a.first.open < b.first.open; });
  d.cups.reserve(matched.size());
  for (const auto& [cup, depth] : matched) {
    d.cups.push_back(cup);
    if (depth == 0) d.sectors.push_back(Interval{cup.open, cup.close});
  }

  for (const Interval& s : d.sectors) {
    if (!d.segments.empty() && d.segments.back().hi + 1 == s.lo)
      d.segments.back().hi = s.hi;
    else
      d.segments.push_back(s);
  }
  return d;
}

inline CupDiagram build(const CompactedDiagram& c) { return build(c.vees); }

// Cups strictly inside the outer cup of the given sector.
inline CupDiagram interior(const CupDiagram& d, size_t sector_index) {
  if (sector_index >= d.sectors.size())
    fail(Errc::BadIndex, "sector index " + std::to_string(sector_index) +
                             " out of range");
  const Interval s = d.sectors[sector_index];
  PosSet inner;
  for (Pos v : d.vees)
    if (s.lo < v && v < s.hi) inner.push_back(v);
  return build(inner);
}

inline bool is_fully_nested(const CupDiagram& d) {
  if (d.vees.empty()) return true;
  return d.vees.back() - d.vees.front() + 1 == static_cast<Pos>(d.vees.size());
}

inline bool is_fully_nested(const PosSet& vees) {
  if (vees.empty()) return true;
  return vees.back() - vees.front() + 1 == static_cast<Pos>(vees.size());
}

inline CupDiagram translate(const CupDiagram& d, Pos shift) {
  return build(set_shift(d.vees, shift));
}

// Shape key: translated so the leftmost vee sits at 0.
inline PosSet normalize_vees(const PosSet& vees) {
  if (vees.empty()) return vees;
  return set_shift(vees, -vees.front());
}

inline Pos half_length(const Interval& s) { return (s.hi - s.lo + 1) / 2; }

// Nesting depth of each cup: the number of cups strictly containing it.
inline std::vector<int> cup_depths(const CupDiagram& d) {
  std::vector<int> depth(d.cups.size(), 0);
  for (size_t i = 0; i < d.cups.size(); ++i)
    for (size_t j = 0; j < d.cups.size(); ++j)
      if (d.cups[j].open < d.cups[i].open && d.cups[i].close < d.cups[j].close)
        ++depth[i];
  return depth;
}

}  // namespace superdim
