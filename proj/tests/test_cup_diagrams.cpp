#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superdim/cup_diagram.hpp"
#include "superdim/textio.hpp"

using namespace superdim;

TEST_CASE("compaction deletes crosses") {
  CHECK(compact(parse_weight("2|2: 0,0;0,0")).vees == PosSet{-1, 0});
  CHECK(compact(parse_weight("3|1: 1,0,0;0")).vees == PosSet{-2});
  CHECK(compact(parse_weight("2|1: 2,0;0")).vees == PosSet{-1});
  CHECK_THROWS_AS(compact(parse_weight("1|1: 1;0")), Error);

  // compaction is the order isomorphism against the cross set
  PosSet crosses{-1, 1, 4};
  for (Pos y = -6; y <= 6; ++y) {
    Pos x = uncompact_position(crosses, y);
    CHECK_FALSE(set_contains(crosses, x));
    CHECK(compact_position(crosses, x) == y);
  }
}

TEST_CASE("bracket matching builds the named diagrams") {
  CupDiagram d = build(PosSet{0, 1});
  CHECK(d.cups == std::vector<Cup>{{0, 3}, {1, 2}});
  CHECK(d.sectors == std::vector<Interval>{{0, 3}});
  CHECK(d.segments == std::vector<Interval>{{0, 3}});

  d = build(PosSet{0, 2});
  CHECK(d.cups == std::vector<Cup>{{0, 1}, {2, 3}});
  CHECK(d.sectors == std::vector<Interval>{{0, 1}, {2, 3}});
  CHECK(d.segments == std::vector<Interval>{{0, 3}});

  d = build(PosSet{0, 1, 3});
  CHECK(d.cups == std::vector<Cup>{{0, 5}, {1, 2}, {3, 4}});
  CHECK(d.sectors == std::vector<Interval>{{0, 5}});
  CHECK(interior(d, 0).sectors == std::vector<Interval>{{1, 2}, {3, 4}});

  CHECK(build(PosSet{}).cups.empty());
}

TEST_CASE("interior of a sector") {
  CHECK(interior(build(PosSet{0, 1}), 0).vees == PosSet{1});
  CHECK(interior(build(PosSet{0, 1, 3}), 0).vees == PosSet{1, 3});
  CHECK(interior(build(PosSet{5}), 0).vees.empty());
  CHECK_THROWS_AS(interior(build(PosSet{5}), 1), Error);
}

TEST_CASE("full nesting and translation") {
  CHECK(is_fully_nested(build(PosSet{5, 6, 7})));
  CHECK_FALSE(is_fully_nested(build(PosSet{0, 2})));
  CHECK(is_fully_nested(build(PosSet{})));

  CupDiagram d = build(PosSet{0, 2});
  CupDiagram t = translate(d, 3);
  CHECK(t.vees == PosSet{3, 5});
  CHECK(t.sectors == std::vector<Interval>{{3, 4}, {5, 6}});

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<Pos> pos(0, 9), shift(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    PosSet vees;
    while (vees.size() < 3) {
      Pos p = pos(rng);
      if (!set_contains(vees, p))
        vees.insert(std::upper_bound(vees.begin(), vees.end(), p), p);
    }
    Pos k = shift(rng);
    CupDiagram a = translate(build(vees), k);
    CupDiagram b = build(set_shift(vees, k));
    CHECK(a.cups == b.cups);
    // cup lengths are translation invariant
    std::vector<Pos> la, lb;
    for (const Cup& c : build(vees).cups) la.push_back(c.close - c.open);
    for (const Cup& c : b.cups) lb.push_back(c.close - c.open);
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    CHECK(la == lb);
  }
}

TEST_CASE("sector and segment structure invariants") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<Pos> pos(0, 11);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 500; ++trial) {
    PosSet vees;
    int n = size(rng);
    while (static_cast<int>(vees.size()) < n) {
      Pos p = pos(rng);
      if (!set_contains(vees, p))
        vees.insert(std::upper_bound(vees.begin(), vees.end(), p), p);
    }
    CupDiagram d = build(vees);
    REQUIRE(d.cups.size() == vees.size());

    for (const Cup& c : d.cups) {
      CHECK(set_contains(d.vees, c.open));
      CHECK_FALSE(set_contains(d.vees, c.close));
    }
    // non-crossing
    for (const Cup& a : d.cups)
      for (const Cup& b : d.cups) {
        if (a == b) continue;
        bool disjoint = a.close < b.open || b.close < a.open;
        bool nested = (a.open < b.open && b.close < a.close) ||
                      (b.open < a.open && a.close < b.close);
        CHECK((disjoint || nested));
      }
    // sectors are exactly the cups inside no other cup
    std::vector<Interval> outer;
    for (const Cup& c : d.cups) {
      bool contained = false;
      for (const Cup& o : d.cups)
        if (o.open < c.open && c.close < o.close) contained = true;
      if (!contained) outer.push_back(Interval{c.open, c.close});
    }
    CHECK(outer == d.sectors);
    for (size_t si = 0; si < d.sectors.size(); ++si) {
      const Interval& s = d.sectors[si];
      CHECK((s.hi - s.lo + 1) % 2 == 0);
      CHECK(set_contains(d.vees, s.lo));
      CHECK_FALSE(set_contains(d.vees, s.hi));
      // the interior is completely tiled by its sectors
      CupDiagram inner = interior(d, si);
      Pos covered = 0;
      for (const Interval& t : inner.sectors) covered += t.hi - t.lo + 1;
      CHECK(covered == s.hi - s.lo - 1);
    }
    // segments tile maximal runs of adjacent sectors, gaps at least 2
    for (size_t i = 1; i < d.segments.size(); ++i)
      CHECK(d.segments[i].lo - d.segments[i - 1].hi >= 2);
    Pos sector_len = 0, segment_len = 0;
    for (const Interval& s : d.sectors) sector_len += s.hi - s.lo + 1;
    for (const Interval& s : d.segments) segment_len += s.hi - s.lo + 1;
    CHECK(sector_len == segment_len);
  }
}

TEST_CASE("kostant matches single-interval vees after compaction") {
  // exhaustive for n <= 4 in a window, with and without crosses
  const std::vector<PosSet> cross_sets{{}, {3}, {-1, 4}};
  for (const PosSet& crosses : cross_sets) {
    for (int n = 1; n <= 4; ++n) {
      PosSet cur;
      auto rec = [&](auto&& self, Pos next) -> void {
        if (static_cast<int>(cur.size()) == n) {
          // cur lives on the compacted line; build the weight through the
          // inverse compaction so the labels avoid the crosses
          Labeling lab;
          lab.crosses = crosses;
          for (Pos v : cur) lab.vees.push_back(uncompact_position(crosses, v));
          std::sort(lab.vees.begin(), lab.vees.end());
          SuperWeight w = weight_from_labeling(
              n + static_cast<int>(crosses.size()), n, lab);
          CHECK(is_kostant(w) == is_fully_nested(cur));
          return;
        }
        for (Pos p = next; p < 10; ++p) {
          cur.push_back(p);
          self(self, p + 1);
          cur.pop_back();
        }
      };
      rec(rec, 0);
    }
  }
}
