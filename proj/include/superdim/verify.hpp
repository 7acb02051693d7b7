#pragma once

// Batch self-checks behind the `verify` command. Each suite sweeps a bounded
// family of inputs, compares two independent routes exactly, and reports the
// first counterexample if any.

#include <random>
#include <string>
#include <vector>

#include "superdim/cup_diagram.hpp"
#include "superdim/moves.hpp"
#include "superdim/multiplicity.hpp"
#include "superdim/reduction.hpp"
#include "superdim/schur.hpp"
#include "superdim/textio.hpp"
#include "superdim/weights.hpp"

namespace superdim {

struct VerifyReport {
  std::string suite;
  bool pass = true;
  long long cases = 0;
  std::string first_counterexample;
};

namespace detail {

template <typename Fn>
inline void for_each_subset(int window, int size_max, const Fn& fn) {
  // all nonempty vee subsets of [0, window-1] with at most size_max elements
  PosSet cur;
  auto rec = [&](auto&& self, Pos next) -> void {
    if (!cur.empty()) fn(cur);
    if (static_cast<int>(cur.size()) == size_max) return;
    for (Pos p = next; p < window; ++p) {
      cur.push_back(p);
      self(self, p + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

inline void fail_case(VerifyReport& rep, const std::string& what) {
  if (!rep.pass) return;
  rep.pass = false;
  rep.first_counterexample = what;
}

}  // namespace detail

// 2 m(center) = sum m(middle) for every diagram in the window and every site.
inline VerifyReport verify_relations(int n_max = 3, int window = 8) {
  VerifyReport rep;
  rep.suite = "relations";
  detail::for_each_subset(window, n_max, [&](const PosSet& vees) {
    if (!rep.pass) return;
    CupDiagram d = build(vees);
    for (const MoveSite& site : move_sites(d)) {
      ++rep.cases;
      Int lhs = 2 * m_closed(d);
      Int rhs = 0;
      MoveExpansion e = expand(site);
      for (const MoveConstituent& c : e.middle) rhs += m_closed(c.vees);
      if (lhs != rhs)
        detail::fail_case(rep, "diagram " + format_pos_set(vees) + " site " +
                                   std::to_string(site.i) + ": 2m = " + lhs.str() +
                                   " but middles sum to " + rhs.str());
    }
  });
  return rep;
}

// Closed multiplicity formula against the reduction oracle.
inline VerifyReport verify_oracle_vs_closed(int n_max = 4, int window = 10,
                                            int samples = 0, int sample_size = 5,
                                            int sample_window = 14,
                                            unsigned seed = 20110913) {
  VerifyReport rep;
  rep.suite = "oracle-vs-closed";
  MultiplicityEngine engine;
  auto check = [&](const PosSet& vees) {
    if (!rep.pass) return;
    ++rep.cases;
    Int closed = m_closed(vees);
    Int oracle = engine.multiplicity(vees);
    if (closed != oracle)
      detail::fail_case(rep, "diagram " + format_pos_set(vees) + ": closed " +
                                 closed.str() + " != oracle " + oracle.str());
  };
  detail::for_each_subset(window, n_max, check);

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples && rep.pass; ++s) {
    PosSet vees;
    std::uniform_int_distribution<Pos> pick(0, sample_window - 1);
    while (static_cast<int>(vees.size()) < sample_size) {
      Pos p = pick(rng);
      if (!set_contains(vees, p))
        vees.insert(std::upper_bound(vees.begin(), vees.end(), p), p);
    }
    check(vees);
  }
  return rep;
}

inline VerifyReport verify_identities_suite(long long bound = 20) {
  IdentityReport ir = verify_identities(bound);
  VerifyReport rep;
  rep.suite = "identities";
  rep.pass = ir.pass;
  rep.cases = ir.checked;
  rep.first_counterexample = ir.first_counterexample;
  return rep;
}

// Superdimension through cup diagrams against the Littlewood-Richardson count.
inline VerifyReport verify_covariant(int degree_max = 8) {
  VerifyReport rep;
  rep.suite = "covariant";
  const std::vector<std::pair<int, int>> shapes = {{2, 1}, {3, 1}, {3, 2}, {2, 2}};
  for (long long deg = 0; deg <= degree_max && rep.pass; ++deg) {
    for (const Partition& p : partitions_of(deg)) {
      if (!rep.pass) break;
      for (auto [m, n] : shapes) {
        if (!hook_condition(p, m, n)) continue;
        ++rep.cases;
        Int via_diagram = sdim(to_highest_weight(p, m, n)).sdim;
        Int via_lr = covariant_sdim_oracle(p, m, n);
        if (via_diagram != via_lr) {
          detail::fail_case(rep, "partition " + format_partition(p) + " at Gl(" +
                                     std::to_string(m) + "|" + std::to_string(n) +
                                     "): " + via_diagram.str() + " != " + via_lr.str());
          break;
        }
        if (p.at(m - n) > 0 && via_diagram != 0) {
          detail::fail_case(rep, "partition " + format_partition(p) +
                                     " is not maximal atypical yet sdim != 0");
          break;
        }
      }
    }
  }
  return rep;
}

// Self-Ext dimensions of a ground state against the series
// prod_{i=1}^{n} 1/(1 - x^{2i}).
inline VerifyReport verify_hilbert(int n_max = 3, int j_max = 10) {
  VerifyReport rep;
  rep.suite = "hilbert";
  for (int n = 1; n <= n_max && rep.pass; ++n) {
    std::vector<long long> series(j_max + 1, 0);
    series[0] = 1;
    for (int i = 1; i <= n; ++i)  // multiply by 1/(1-x^{2i})
      for (int j = 2 * i; j <= j_max; ++j) series[j] += series[j - 2 * i];

    BlockId trivial{n, n, {}, {}};
    std::vector<ExtProfile> profile = ext_self_dims(trivial, j_max);
    for (int j = 0; j <= j_max; ++j) {
      ++rep.cases;
      if (profile[j].dimension != series[j]) {
        detail::fail_case(rep, "n=" + std::to_string(n) + " degree " +
                                   std::to_string(j) + ": got " +
                                   std::to_string(profile[j].dimension) +
                                   ", series says " + std::to_string(series[j]));
        break;
      }
    }
  }
  return rep;
}

}  // namespace superdim
