#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <thread>

#include "superdim/multiplicity.hpp"
#include "superdim/reduction.hpp"
#include "superdim/textio.hpp"

using namespace superdim;

TEST_CASE("pivot choice") {
  Pivot p = pivot(build(PosSet{0, 4}));
  CHECK(p.algorithm == Algorithm::I);
  CHECK(p.site.i == 3);
  CHECK(p.site.center.vees == PosSet{0, 3});

  p = pivot(build(PosSet{0, 2}));
  CHECK(p.algorithm == Algorithm::II);
  CHECK(p.site.i == 1);
  CHECK(p.site.center.vees == PosSet{0, 1});

  p = pivot(build(PosSet{0, 1, 3}));
  CHECK(p.algorithm == Algorithm::III);
  CHECK(p.site.i == 2);
  CHECK(p.site.center.vees == PosSet{0, 1, 2});

  CHECK_THROWS_AS(pivot(build(PosSet{4, 5, 6})), Error);
  // the up move of the pivot center recreates the diagram
  for (const PosSet& vees :
       {PosSet{0, 4}, PosSet{0, 2}, PosSet{0, 1, 3}, PosSet{0, 2, 5, 6}}) {
    Pivot pv = pivot(build(vees));
    MoveExpansion e = expand(pv.site);
    CHECK(e.middle[0].vees == vees);
  }
}

TEST_CASE("oracle values") {
  CHECK(m_oracle(PosSet{}) == 1);
  CHECK(m_oracle(PosSet{7}) == 1);
  CHECK(m_oracle(PosSet{0, 2}) == 2);
  CHECK(m_oracle(PosSet{0, 2, 4}) == 6);
  for (int n = 1; n <= 5; ++n) {
    PosSet nested, unnested;
    for (int i = 0; i < n; ++i) {
      nested.push_back(i);
      unnested.push_back(2 * i);
    }
    CHECK(m_oracle(nested) == 1);
    CHECK(m_oracle(unnested) == factorial(n));
  }
  CHECK(m_oracle(compact(parse_weight("3|1: 1,0,0;0")).vees) == 1);
}

TEST_CASE("oracle is translation invariant and within the factorial bounds") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<Pos> pos(0, 11), shift(-6, 6);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    PosSet vees;
    int n = size(rng);
    while (static_cast<int>(vees.size()) < n) {
      Pos p = pos(rng);
      if (!set_contains(vees, p))
        vees.insert(std::upper_bound(vees.begin(), vees.end(), p), p);
    }
    Int m = m_oracle(vees);
    CHECK(m == m_oracle(set_shift(vees, shift(rng))));
    CHECK(m >= 1);
    CHECK(m <= factorial(n));
    CHECK((m == 1) == is_fully_nested(vees));
  }
}

TEST_CASE("reduction traces") {
  ReductionTrace t = reduce_trace(PosSet{-1, 0});
  CHECK(t.steps.empty());
  REQUIRE(t.leaves.size() == 1);
  CHECK(t.leaves[0].first == PosSet{-1, 0});
  CHECK(t.multiplicity == 1);

  t = reduce_trace(PosSet{0, 2});
  CHECK(t.steps.size() == 1);
  CHECK(t.steps[0].pivot.algorithm == Algorithm::II);
  CHECK(t.steps[0].relation.lhs == PosSet{0, 1});
  CHECK(t.multiplicity == 2);
  Int leaf_sum = 0;
  for (const auto& [leaf, coeff] : t.leaves) {
    CHECK(is_fully_nested(leaf));
    leaf_sum += coeff;
  }
  CHECK(leaf_sum == 2);

  t = reduce_trace(PosSet{0, 1, 3});
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].pivot.algorithm == Algorithm::III);  // interior descent
  CHECK(t.multiplicity == 2);
  for (const auto& [leaf, coeff] : t.leaves) CHECK(is_fully_nested(leaf));

  // every recorded relation balances against the closed multiplicities
  t = reduce_trace(PosSet{0, 2, 5, 6});
  CHECK(t.multiplicity == m_closed(PosSet{0, 2, 5, 6}));
  for (const TraceStep& step : t.steps) {
    Int rhs = 0;
    for (const PosSet& x : step.relation.rhs) rhs += m_closed(x);
    CHECK(2 * m_closed(step.relation.lhs) == rhs);
  }

  CHECK_THROWS_AS(reduce_trace(parse_weight("1|1: 1;0")), Error);
}

TEST_CASE("ladder of a kostant weight") {
  AlgorithmIVResult r = algorithm_iv(parse_weight("1|1: 0;0"));
  REQUIRE(r.s_compacted.size() == 2);
  CHECK(r.s_compacted[0] == PosSet{0});
  CHECK(r.s_compacted[1] == PosSet{1});
  CHECK(r.pi_compacted.value() == PosSet{-1});
  CHECK(r.pi.value() == berezin_power(1, 1, -1));
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].kind == SiteKind::Unencapsulated);
  REQUIRE(r.steps[0].middle.size() == 2);
  CHECK(r.steps[0].middle[0] == r.s_compacted[1]);
  CHECK(r.steps[0].middle[1] == r.pi_compacted.value());

  r = algorithm_iv(parse_weight("2|2: 0,0;0,0"));
  REQUIRE(r.s_compacted.size() == 3);
  CHECK(r.s_compacted[1] == PosSet{-1, 1});
  CHECK(r.pi_compacted.value() == PosSet{-2, -1});
  CHECK(r.steps[0].kind == SiteKind::Encapsulated);
  CHECK(r.steps[0].middle == std::vector<PosSet>{r.s_compacted[1]});
  CHECK(r.steps[1].kind == SiteKind::Unencapsulated);
  REQUIRE(r.steps[1].middle.size() == 3);

  // the full ladder sends the ground state to the next one
  BlockId b = block_of(parse_weight("3|1: 1,0,0;0"));
  for (Pos N = 0; N <= 2; ++N) {
    AlgorithmIVResult ladder = algorithm_iv(ground_state(b, N));
    CHECK(ladder.pi.value() == ground_state(b, N + 1));
  }

  // partial ladder: no pi
  r = algorithm_iv(parse_weight("2|2: 0,0;0,0"), 1);
  CHECK(r.s_compacted.size() == 2);
  CHECK_FALSE(r.pi.has_value());

  Labeling lab;
  lab.vees = {0, 2};
  CHECK_THROWS_AS(algorithm_iv(weight_from_labeling(2, 2, lab)), Error);
  CHECK_THROWS_AS(algorithm_iv(parse_weight("1|1: 1;0")), Error);
}

TEST_CASE("memo table is safe under concurrent use") {
  std::vector<PosSet> inputs;
  for (Pos a = 0; a < 8; ++a)
    for (Pos b = a + 1; b < 8; ++b)
      for (Pos c = b + 1; c < 8; ++c) inputs.push_back(PosSet{a, b, c});

  MultiplicityEngine engine;
  std::vector<std::vector<Int>> results(4, std::vector<Int>(inputs.size()));
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (size_t k = 0; k < inputs.size(); ++k) {
        size_t idx = (k + 17 * t) % inputs.size();  // different orders
        results[t][idx] = engine.multiplicity(inputs[idx]);
      }
    });
  for (auto& w : workers) w.join();
  for (size_t k = 0; k < inputs.size(); ++k) {
    Int expect = m_closed(inputs[k]);
    for (int t = 0; t < 4; ++t) CHECK(results[t][k] == expect);
  }
}
