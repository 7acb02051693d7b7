#pragma once

// Reduction of cup diagrams to fully nested leaves.
//
// The pivot of a diagram that is not fully nested is a move site whose upward
// move reproduces the diagram:
//   I   two or more segments: pull the second segment's first vee one step left
//   II  one segment, two or more sectors: pull the second sector's first vee
//       onto the end of the first
//   III one sector: recurse into its interior
// Propagating 2 m(center) = sum m(middle) along pivots expresses every
// multiplicity through fully nested diagrams, which have multiplicity one.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superdim/bigint.hpp"
#include "superdim/cup_diagram.hpp"
#include "superdim/error.hpp"
#include "superdim/moves.hpp"

namespace superdim {

enum class Algorithm { I, II, III };

inline const char* algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::I: return "I";
    case Algorithm::II: return "II";
    case Algorithm::III: return "III";
  }
  return "?";
}

struct Pivot {
  Algorithm algorithm = Algorithm::I;
  MoveSite site;  // site.center is the pivot center
};

inline Pivot pivot(const CupDiagram& d) {
  if (is_fully_nested(d)) fail(Errc::FullyNested, "diagram is fully nested");

  if (d.segments.size() >= 2) {
    Pos s2 = d.segments[1].lo;
    PosSet center = set_replace(d.vees, s2, s2 - 1);
    return Pivot{Algorithm::I, classify_site(build(center), s2 - 1)};
  }
  if (d.sectors.size() >= 2) {
    Pos i = d.sectors[0].hi;  // wedge ending the first sector
    PosSet center = set_replace(d.vees, d.sectors[1].lo, i);
    return Pivot{Algorithm::II, classify_site(build(center), i)};
  }
  // single sector, interior not nested: the interior is a segment, so the
  // recursion only ever yields II (or descends further)
  Pivot inner = pivot(interior(d, 0));
  PosSet center = inner.site.center.vees;
  center.insert(std::lower_bound(center.begin(), center.end(), d.sectors[0].lo),
                d.sectors[0].lo);
  return Pivot{Algorithm::III, classify_site(build(center), inner.site.i)};
}

// Memoized multiplicity oracle. The memo is keyed on translation-normalized
// vee sets and guarded by a mutex; concurrent calls may compute the same key
// twice but always insert the same value.
class MultiplicityEngine {
 public:
  Int multiplicity(const PosSet& vees) {
    std::vector<PosSet> in_progress;
    return compute(normalize_vees(vees), in_progress);
  }

  size_t memo_size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
  }

 private:
  Int compute(const PosSet& key, std::vector<PosSet>& in_progress) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    if (is_fully_nested(key)) {
      store(key, 1);
      return 1;
    }
    for (const PosSet& seen : in_progress)
      if (seen == key)
        fail(Errc::NonTermination, "reduction revisited a diagram");
    in_progress.push_back(key);

    CupDiagram d = build(key);
    Pivot p = pivot(d);
    MoveExpansion e = expand(p.site);
    Int value = 2 * compute(normalize_vees(p.site.center.vees), in_progress);
    for (const MoveConstituent& c : e.middle) {
      if (c.vees == key) continue;  // the upward move is the diagram itself
      value -= compute(normalize_vees(c.vees), in_progress);
    }

    in_progress.pop_back();
    store(key, value);
    return value;
  }

  void store(const PosSet& key, Int value) {
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(key, std::move(value));
  }

  mutable std::mutex mutex_;
  std::map<PosSet, Int> memo_;
};

inline MultiplicityEngine& global_multiplicity_engine() {
  static MultiplicityEngine engine;
  return engine;
}

inline Int m_oracle(const PosSet& vees) {
  return global_multiplicity_engine().multiplicity(vees);
}

inline Int m_oracle(const CompactedDiagram& c) { return m_oracle(c.vees); }

inline Int m_oracle(const SuperWeight& w) { return m_oracle(compact(w).vees); }

// ---------------------------------------------------------------------------
// Full derivation tree: one step per reduced diagram, leaves with their net
// integer coefficients (the coefficients sum to the root multiplicity).

struct TraceStep {
  PosSet diagram;
  Pivot pivot;
  Relation relation;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;                 // discovery order
  std::vector<std::pair<PosSet, Int>> leaves;   // fully nested, with coefficients
  Int multiplicity = 0;
};

namespace detail {

using LeafCombo = std::map<PosSet, Int>;

inline const LeafCombo& trace_decompose(const PosSet& vees,
                                        std::map<PosSet, LeafCombo>& memo,
                                        std::vector<PosSet>& in_progress,
                                        std::vector<TraceStep>& steps) {
  auto it = memo.find(vees);
  if (it != memo.end()) return it->second;
  if (is_fully_nested(vees)) {
    LeafCombo combo;
    combo[vees] = 1;
    return memo.emplace(vees, std::move(combo)).first->second;
  }
  for (const PosSet& seen : in_progress)
    if (seen == vees) fail(Errc::NonTermination, "reduction revisited a diagram");
  in_progress.push_back(vees);

  Pivot p = pivot(build(vees));
  Relation rel = relation(p.site);
  steps.push_back(TraceStep{vees, p, rel});

  LeafCombo combo;
  for (const auto& [leaf, coeff] :
       trace_decompose(p.site.center.vees, memo, in_progress, steps))
    combo[leaf] += 2 * coeff;
  for (const PosSet& x : rel.rhs) {
    if (x == vees) continue;
    for (const auto& [leaf, coeff] : trace_decompose(x, memo, in_progress, steps))
      combo[leaf] -= coeff;
  }
  for (auto it2 = combo.begin(); it2 != combo.end();)
    it2 = it2->second == 0 ? combo.erase(it2) : std::next(it2);

  in_progress.pop_back();
  return memo.emplace(vees, std::move(combo)).first->second;
}

}  // namespace detail

inline ReductionTrace reduce_trace(const PosSet& vees) {
  ReductionTrace out;
  std::map<PosSet, detail::LeafCombo> memo;
  std::vector<PosSet> in_progress;
  const detail::LeafCombo& combo =
      detail::trace_decompose(vees, memo, in_progress, out.steps);
  for (const auto& [leaf, coeff] : combo) {
    out.leaves.emplace_back(leaf, coeff);
    out.multiplicity += coeff;
  }
  return out;
}

inline ReductionTrace reduce_trace(const SuperWeight& w) {
  return reduce_trace(compact(w).vees);
}

// ---------------------------------------------------------------------------
// Right-move ladder for a Kostant weight: with vees at [a, a+n-1] on the
// compacted line, step k moves the rightmost vee one further step right,
// S^k = {a,...,a+n-2, a+n-1+k}. Every step before the last is encapsulated
// with middle {S^{k}, S^{k-2}}; the last is unencapsulated and adds the
// left-shifted interval Pi = [a-1, a+n-2].

struct LadderStep {
  PosSet center;               // S^{k-1}
  Pos i = 0;                   // move position
  SiteKind kind = SiteKind::Unencapsulated;
  std::vector<PosSet> middle;  // expansion middles, compacted line
};

struct AlgorithmIVResult {
  std::vector<SuperWeight> s;          // S^0 .. S^steps
  std::optional<SuperWeight> pi;       // present when the ladder ran to the end
  std::vector<PosSet> s_compacted;
  std::optional<PosSet> pi_compacted;
  std::vector<LadderStep> steps;
};

inline AlgorithmIVResult algorithm_iv(const SuperWeight& w, int steps = -1) {
  CompactedDiagram c = compact(w);  // also rejects non maximal atypical
  if (!is_kostant(w)) fail(Errc::NotKostant, "vees do not form an interval");

  const int n = w.n;
  if (steps < 0 || steps > n) steps = n;
  AlgorithmIVResult out;

  auto to_weight = [&](const PosSet& compacted) {
    Labeling lab;
    lab.crosses = c.removed;
    for (Pos v : compacted) lab.vees.push_back(uncompact_position(c.removed, v));
    std::sort(lab.vees.begin(), lab.vees.end());
    return weight_from_labeling(w.m, w.n, lab);
  };

  if (n == 0) {  // empty ladder
    out.s = {w};
    out.s_compacted = {c.vees};
    out.pi = w;
    out.pi_compacted = c.vees;
    return out;
  }

  const Pos a = c.vees.front();
  auto rung = [&](int k) {  // S^k
    PosSet v(c.vees.begin(), c.vees.end() - 1);
    v.push_back(a + n - 1 + k);
    return v;
  };

  for (int k = 0; k <= steps; ++k) {
    out.s_compacted.push_back(rung(k));
    out.s.push_back(to_weight(out.s_compacted.back()));
  }
  for (int k = 1; k <= steps; ++k) {
    const PosSet& center = out.s_compacted[k - 1];
    Pos i = center.back();
    MoveSite site = classify_site(build(center), i);
    MoveExpansion e = expand(site);
    LadderStep step;
    step.center = center;
    step.i = i;
    step.kind = site.kind;
    for (MoveConstituent& mc : e.middle) step.middle.push_back(std::move(mc.vees));
    out.steps.push_back(std::move(step));
  }
  if (steps == n) {
    PosSet pi = set_shift(PosSet(c.vees.begin(), c.vees.end()), -1);
    out.pi_compacted = pi;
    out.pi = to_weight(pi);
  }
  return out;
}

}  // namespace superdim
