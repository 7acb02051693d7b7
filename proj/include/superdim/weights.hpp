#pragma once

// Dominant integral weights of Gl(m|n) and the combinatorics read off their
// numberline labelings: blocks, atypicality, parity, Bruhat distance, Kostant
// weights, ground states and the self-Ext dimensions of ground states.
//
// A labeling decorates every integer with one of four symbols. The two sets
//   I_x = { lambda_i - i + 1         : 1 <= i <= m }
//   I_o = { i - m - lambda_{m+i}     : 1 <= i <= n }
// mark positions; their intersection carries a vee, I_x alone a cross,
// I_o alone a circle, and every other integer a wedge.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "superdim/error.hpp"

namespace superdim {

using Pos = long long;

// Sorted ascending, no duplicates. The implicit complement carries wedges.
using PosSet = std::vector<Pos>;

inline PosSet make_pos_set(PosSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool set_contains(const PosSet& s, Pos x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline Pos count_less(const PosSet& s, Pos x) {
  return std::lower_bound(s.begin(), s.end(), x) - s.begin();
}

inline Pos count_in_range(const PosSet& s, Pos lo, Pos hi) {  // [lo, hi]
  if (lo > hi) return 0;
  return count_less(s, hi + 1) - count_less(s, lo);
}

inline PosSet set_union(const PosSet& a, const PosSet& b) {
  PosSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline PosSet set_intersection(const PosSet& a, const PosSet& b) {
  PosSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline PosSet set_difference(const PosSet& a, const PosSet& b) {
  PosSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Remove `from` (must be present), insert `to` (must be absent).
inline PosSet set_replace(PosSet s, Pos from, Pos to) {
  s.erase(std::find(s.begin(), s.end(), from));
  s.insert(std::upper_bound(s.begin(), s.end(), to), to);
  return s;
}

inline PosSet set_shift(const PosSet& s, Pos delta) {
  PosSet out = s;
  for (Pos& x : out) x += delta;
  return out;
}

// ---------------------------------------------------------------------------

struct SuperWeight {
  int m = 0;                // size of the even part, m >= 1
  int n = 0;                // size of the odd part, 0 <= n <= m
  std::vector<Pos> parts;   // lambda_1..lambda_m ; lambda_{m+1}..lambda_{m+n}

  bool operator==(const SuperWeight&) const = default;
};

struct Labeling {
  PosSet crosses;
  PosSet circles;
  PosSet vees;
};

struct BlockId {
  int m = 0;
  int n = 0;
  PosSet crosses;
  PosSet circles;

  int atypicality() const { return n - static_cast<int>(circles.size()); }
  bool maximal_atypical() const { return circles.empty(); }
  bool operator==(const BlockId&) const = default;
};

struct Parity {
  Pos p = 0;     // sum of the odd tail entries
  int mod2 = 0;  // p reduced mod 2, in {0,1}
};

struct ExtProfile {
  int degree = 0;
  long long dimension = 0;
  bool operator==(const ExtProfile&) const = default;
};

// ---------------------------------------------------------------------------

inline SuperWeight validate_weight(int m, int n, std::vector<Pos> parts) {
  if (m < 1 || n < 0 || m < n)
    fail(Errc::BadShape, "need m >= n >= 0 and m >= 1, got m=" + std::to_string(m) +
                             " n=" + std::to_string(n));
  if (static_cast<int>(parts.size()) != m + n)
    fail(Errc::BadShape, "expected " + std::to_string(m + n) + " parts, got " +
                             std::to_string(parts.size()));
  for (int i = 1; i < m; ++i)
    if (parts[i - 1] < parts[i])
      fail(Errc::DominanceViolation, "even tail not weakly decreasing at index " +
                                         std::to_string(i));
  for (int i = 1; i < n; ++i)
    if (parts[m + i - 1] < parts[m + i])
      fail(Errc::DominanceViolation, "odd tail not weakly decreasing at index " +
                                         std::to_string(m + i));
  return SuperWeight{m, n, std::move(parts)};
}

inline Labeling labeling(const SuperWeight& w) {
  PosSet ix, io;
  ix.reserve(w.m);
  io.reserve(w.n);
  for (int i = 1; i <= w.m; ++i) ix.push_back(w.parts[i - 1] - i + 1);
  for (int i = 1; i <= w.n; ++i) io.push_back(i - w.m - w.parts[w.m + i - 1]);
  std::sort(ix.begin(), ix.end());
  std::sort(io.begin(), io.end());
  Labeling lab;
  lab.vees = set_intersection(ix, io);
  lab.crosses = set_difference(ix, io);
  lab.circles = set_difference(io, ix);
  return lab;
}

inline SuperWeight weight_from_labeling(int m, int n, const Labeling& lab) {
  if (!set_intersection(lab.crosses, lab.circles).empty() ||
      !set_intersection(lab.crosses, lab.vees).empty() ||
      !set_intersection(lab.circles, lab.vees).empty())
    fail(Errc::CardinalityMismatch, "cross/circle/vee sets overlap");
  if (static_cast<int>(lab.crosses.size() + lab.vees.size()) != m ||
      static_cast<int>(lab.circles.size() + lab.vees.size()) != n)
    fail(Errc::CardinalityMismatch,
         "need |crosses|+|vees| = m and |circles|+|vees| = n");

  PosSet ix = set_union(lab.crosses, lab.vees);   // ascending
  PosSet io = set_union(lab.circles, lab.vees);   // ascending
  std::vector<Pos> parts(m + n);
  for (int i = 1; i <= m; ++i) parts[i - 1] = ix[m - i] + i - 1;  // ix descending
  for (int i = 1; i <= n; ++i) parts[m + i - 1] = i - m - io[i - 1];
  return validate_weight(m, n, std::move(parts));
}

inline int atypicality(const SuperWeight& w) {
  return static_cast<int>(labeling(w).vees.size());
}

inline bool is_maximal_atypical(const SuperWeight& w) {
  return atypicality(w) == w.n;
}

inline BlockId block_of(const SuperWeight& w) {
  Labeling lab = labeling(w);
  return BlockId{w.m, w.n, std::move(lab.crosses), std::move(lab.circles)};
}

inline Parity parity(const SuperWeight& w) {
  Pos p = 0;
  for (int i = 0; i < w.n; ++i) p += w.parts[w.m + i];
  return Parity{p, static_cast<int>(((p % 2) + 2) % 2)};
}

inline SuperWeight twist_by_berezin(const SuperWeight& w, Pos k) {
  SuperWeight out = w;
  for (int i = 0; i < w.m; ++i) out.parts[i] += k;
  for (int i = 0; i < w.n; ++i) out.parts[w.m + i] -= k;
  return out;
}

inline SuperWeight berezin_power(int m, int n, Pos k) {
  std::vector<Pos> parts(m + n);
  for (int i = 0; i < m; ++i) parts[i] = k;
  for (int i = 0; i < n; ++i) parts[m + i] = -k;
  return validate_weight(m, n, std::move(parts));
}

// Ground state of order N: the n vees sit consecutively just below the
// leftmost cross (below 1 when there is none), shifted down by N.
inline SuperWeight ground_state(const BlockId& b, Pos order = 0) {
  if (!b.maximal_atypical())
    fail(Errc::NotMaximalAtypicalBlock, "block carries circles");
  Pos j = b.crosses.empty() ? 1 : b.crosses.front();
  Labeling lab;
  lab.crosses = b.crosses;
  for (int i = 1; i <= b.n; ++i) lab.vees.push_back(j - i - order);
  std::sort(lab.vees.begin(), lab.vees.end());
  return weight_from_labeling(b.m, b.n, lab);
}

// No subsequence vee, wedge, vee, wedge at increasing positions. Since all
// but finitely many positions carry wedges, this holds iff no wedge sits
// strictly between two vees.
inline bool is_kostant(const SuperWeight& w) {
  Labeling lab = labeling(w);
  const PosSet& v = lab.vees;
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    Pos lo = v[i], hi = v[i + 1];
    Pos occupied = count_in_range(lab.crosses, lo + 1, hi - 1) +
                   count_in_range(lab.circles, lo + 1, hi - 1);
    if (hi - lo - 1 > occupied) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Compaction: the order isomorphism Z \ removed -> Z and its inverse.

inline Pos compact_position(const PosSet& removed, Pos x) {
  return x - count_less(removed, x);
}

inline Pos uncompact_position(const PosSet& removed, Pos y) {
  Pos x = y;
  for (;;) {
    Pos next = y + count_less(removed, x);
    if (next == x) break;
    x = next;
  }
  while (set_contains(removed, x)) ++x;
  return x;
}

// Vee positions on the numberline with all crosses and circles deleted.
inline PosSet compacted_vees(const Labeling& lab) {
  PosSet removed = set_union(lab.crosses, lab.circles);
  PosSet out;
  out.reserve(lab.vees.size());
  for (Pos v : lab.vees) out.push_back(compact_position(removed, v));
  return out;
}

inline PosSet compacted_vees(const SuperWeight& w) {
  return compacted_vees(labeling(w));
}

// ---------------------------------------------------------------------------
// Bruhat order on a block: moving a vee leftward strictly decreases the
// weight. Distances count single transpositions of a vee with a wedge
// neighbour (neighbouring up to crosses and circles).

inline void require_same_block(const SuperWeight& v, const SuperWeight& w) {
  if (!(block_of(v) == block_of(w)))
    fail(Errc::DifferentBlocks, "weights lie in different blocks");
}

inline bool bruhat_leq(const SuperWeight& v, const SuperWeight& w) {
  require_same_block(v, w);
  PosSet xv = compacted_vees(v), xw = compacted_vees(w);
  for (size_t i = 0; i < xv.size(); ++i)
    if (xv[i] > xw[i]) return false;
  return true;
}

// Sum of componentwise displacements; nullopt when the pair is incomparable.
inline std::optional<Pos> l_distance(const SuperWeight& v, const SuperWeight& w) {
  require_same_block(v, w);
  PosSet xv = compacted_vees(v), xw = compacted_vees(w);
  bool le = true, ge = true;
  Pos sum = 0;
  for (size_t i = 0; i < xv.size(); ++i) {
    Pos d = xw[i] - xv[i];
    le &= d >= 0;
    ge &= d <= 0;
    sum += d < 0 ? -d : d;
  }
  if (!le && !ge) return std::nullopt;
  return sum;
}

// dim Ext^i(V(nu), L(mu)) for a Kostant weight mu: one when nu and mu share
// a block, nu <= mu and i is exactly the Bruhat distance, zero otherwise.
inline int ext_kac_dim(const SuperWeight& nu, const SuperWeight& mu, long long i) {
  if (!is_kostant(mu)) fail(Errc::NotKostant, "second weight is not Kostant");
  if (!(block_of(nu) == block_of(mu))) return 0;
  if (!bruhat_leq(nu, mu)) return 0;
  std::optional<Pos> l = l_distance(nu, mu);
  return (l && *l == i) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Layers below the N=0 ground state. The weights with nu <= lambda_0 and
// distance t correspond to displacement vectors 0 <= d_1 <= ... <= d_n
// summing to t (vee i of the ground state, read right to left, moves d_i
// steps left on the compacted line).

namespace detail {

template <typename Fn>
inline void for_each_displacement(int n, long long total, std::vector<Pos>& cur,
                                  long long minimum, const Fn& fn) {
  if (static_cast<int>(cur.size()) == n) {
    if (total == 0) fn(cur);
    return;
  }
  int slots = n - static_cast<int>(cur.size());
  for (long long d = minimum; d * slots <= total; ++d) {
    cur.push_back(d);
    for_each_displacement(n, total - d, cur, d, fn);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<SuperWeight> bgg_layer(const BlockId& b, long long j) {
  if (!b.maximal_atypical())
    fail(Errc::NotMaximalAtypicalBlock, "block carries circles");
  if (j < 0) fail(Errc::BadIndex, "negative layer");
  SuperWeight ground = ground_state(b, 0);
  Labeling glab = labeling(ground);
  PosSet base = compacted_vees(glab);  // consecutive interval, ascending

  std::vector<SuperWeight> out;
  std::vector<Pos> cur;
  detail::for_each_displacement(b.n, j, cur, 0, [&](const std::vector<Pos>& d) {
    Labeling lab;
    lab.crosses = b.crosses;
    // d is ascending over vees read right to left
    for (int i = 0; i < b.n; ++i) {
      Pos compacted = base[b.n - 1 - i] - d[i];
      lab.vees.push_back(uncompact_position(b.crosses, compacted));
    }
    std::sort(lab.vees.begin(), lab.vees.end());
    out.push_back(weight_from_labeling(b.m, b.n, lab));
  });
  return out;
}

// dim Ext^j(L, L) for the ground state L of a maximal atypical block:
// zero in odd degrees, and in degree 2t the number of layer-t weights.
inline std::vector<ExtProfile> ext_self_dims(const BlockId& b, int j_max) {
  if (!b.maximal_atypical())
    fail(Errc::NotMaximalAtypicalBlock, "block carries circles");
  std::vector<ExtProfile> out;
  out.reserve(j_max + 1);
  for (int j = 0; j <= j_max; ++j) {
    if (j % 2 == 1) {
      out.push_back(ExtProfile{j, 0});
      continue;
    }
    long long count = 0;
    std::vector<Pos> cur;
    detail::for_each_displacement(b.n, j / 2, cur, 0,
                                  [&](const std::vector<Pos>&) { ++count; });
    out.push_back(ExtProfile{j, count});
  }
  return out;
}

}  // namespace superdim
