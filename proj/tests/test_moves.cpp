#include <catch2/catch_amalgamated.hpp>

#include "superdim/moves.hpp"
#include "superdim/multiplicity.hpp"

using namespace superdim;

namespace {

std::vector<PosSet> all_subsets(int window, int n) {
  std::vector<PosSet> out;
  PosSet cur;
  auto rec = [&](auto&& self, Pos next) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (Pos p = next; p < window; ++p) {
      cur.push_back(p);
      self(self, p + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("site classification") {
  auto sites = move_sites(PosSet{0, 1});
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].i == 1);
  CHECK(sites[0].kind == SiteKind::Encapsulated);
  CHECK(sites[0].a == 0);
  CHECK(sites[0].b == 3);

  sites = move_sites(PosSet{0, 2});
  REQUIRE(sites.size() == 2);
  CHECK(sites[0].i == 0);
  CHECK(sites[0].kind == SiteKind::Unencapsulated);
  CHECK(sites[0].a == -1);
  CHECK(sites[0].b == 4);
  CHECK(sites[1].i == 2);
  CHECK(sites[1].kind == SiteKind::Unencapsulated);
  CHECK(sites[1].a == -1);
  CHECK(sites[1].b == 4);

  sites = move_sites(PosSet{5});
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].i == 5);
  CHECK(sites[0].kind == SiteKind::Unencapsulated);
  CHECK(sites[0].a == 4);
  CHECK(sites[0].b == 7);

  CHECK_THROWS_AS(classify_site(build(PosSet{0, 1}), 0), Error);  // 1 is a vee
  CHECK_THROWS_AS(classify_site(build(PosSet{0, 1}), 4), Error);  // no vee
}

TEST_CASE("expansion middle lists") {
  MoveExpansion e = expand(classify_site(build(PosSet{1}), 1));
  REQUIRE(e.middle.size() == 2);
  CHECK(e.middle[0].vees == PosSet{2});
  CHECK(e.middle[0].move == MoveKind::Up);
  CHECK(e.middle[1].vees == PosSet{0});
  CHECK(e.middle[1].move == MoveKind::Boundary);

  e = expand(classify_site(build(PosSet{0, 2}), 2));
  REQUIRE(e.middle.size() == 3);
  CHECK(e.middle[0].vees == PosSet{0, 3});
  CHECK(e.middle[0].move == MoveKind::Up);
  CHECK(e.middle[1].vees == PosSet{-1, 0});
  CHECK(e.middle[1].move == MoveKind::Boundary);
  CHECK(e.middle[2].vees == PosSet{0, 1});
  CHECK(e.middle[2].move == MoveKind::InternalLower);

  e = expand(classify_site(build(PosSet{0, 1}), 1));
  REQUIRE(e.middle.size() == 1);
  CHECK(e.middle[0].vees == PosSet{0, 2});
  CHECK(e.middle[0].move == MoveKind::Up);

  // upper internal sector: {0,2} at i=0 sees the sector [2,3] on its right
  e = expand(classify_site(build(PosSet{0, 2}), 0));
  REQUIRE(e.middle.size() == 3);
  CHECK(e.middle[0].vees == PosSet{1, 2});
  CHECK(e.middle[1].vees == PosSet{-1, 2});
  CHECK(e.middle[2].vees == PosSet{0, 1});  // vee at 2 moved onto i+1
  CHECK(e.middle[2].move == MoveKind::InternalUpper);
}

TEST_CASE("relations on the named examples") {
  Relation r = relation(classify_site(build(PosSet{1}), 1));
  CHECK(r.lhs == PosSet{1});
  CHECK(2 * m_closed(r.lhs) == m_closed(PosSet{2}) + m_closed(PosSet{0}));

  r = relation(classify_site(build(PosSet{0, 1}), 1));
  REQUIRE(r.rhs.size() == 1);
  CHECK(r.rhs[0] == PosSet{0, 2});
  CHECK(m_closed(PosSet{0, 2}) == 2);

  r = relation(classify_site(build(PosSet{0, 2}), 2));
  Int rhs = 0;
  for (const PosSet& x : r.rhs) rhs += m_closed(x);
  CHECK(rhs == 2 + 1 + 1);
  CHECK(2 * m_closed(r.lhs) == rhs);
}

TEST_CASE("no boundary constituent in the encapsulated case") {
  for (int n = 2; n <= 4; ++n)
    for (const PosSet& vees : all_subsets(9, n))
      for (const MoveSite& site : move_sites(build(vees))) {
        MoveExpansion e = expand(site);
        bool has_boundary = false;
        for (const MoveConstituent& c : e.middle)
          has_boundary |= c.move == MoveKind::Boundary;
        CHECK(has_boundary == (site.kind == SiteKind::Unencapsulated));
        // Up always present and first
        REQUIRE_FALSE(e.middle.empty());
        CHECK(e.middle[0].move == MoveKind::Up);
      }
}

TEST_CASE("every middle flips the vee-sum parity") {
  for (int n = 1; n <= 4; ++n)
    for (const PosSet& vees : all_subsets(9, n)) {
      Pos center_sum = 0;
      for (Pos v : vees) center_sum += v;
      for (const MoveSite& site : move_sites(build(vees)))
        for (const MoveConstituent& c : expand(site).middle) {
          Pos sum = 0;
          for (Pos v : c.vees) sum += v;
          CHECK(((sum - center_sum) % 2 + 2) % 2 == 1);
        }
    }
}

TEST_CASE("upward move is an involution against the reverse swap") {
  for (int n = 1; n <= 3; ++n)
    for (const PosSet& vees : all_subsets(8, n))
      for (const MoveSite& site : move_sites(build(vees))) {
        // the up move swaps [i, i+1]; swapping back recreates the center
        MoveExpansion e = expand(site);
        PosSet up = e.middle[0].vees;
        CHECK(set_replace(up, site.i + 1, site.i) == vees);
      }
}

TEST_CASE("middles stay within the span widened by one to the left") {
  for (int n = 1; n <= 4; ++n)
    for (const PosSet& vees : all_subsets(9, n))
      for (const MoveSite& site : move_sites(build(vees)))
        for (const MoveConstituent& c : expand(site).middle) {
          CHECK(c.vees.front() >= vees.front() - 1);
          CHECK(c.vees.back() <= build(vees).segments.back().hi + 1);
        }
}
