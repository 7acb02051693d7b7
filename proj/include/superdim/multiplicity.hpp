#pragma once

// Closed multiplicity formula, the block's Gl(m-n) representation, the Weyl
// dimension formula and the signed superdimension
//   sdim L(lambda) = (-1)^p * m * dim rho   (maximal atypical lambda)
// with sdim = 0 for every weight that is not maximal atypical.

#include <span>
#include <string>
#include <vector>

#include "superdim/bigint.hpp"
#include "superdim/cup_diagram.hpp"
#include "superdim/error.hpp"
#include "superdim/weights.hpp"

namespace superdim {

inline Int factorial(long long n) {
  Int out = 1;
  for (long long i = 2; i <= n; ++i) out *= i;
  return out;
}

inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is a binomial prefix
  }
  return out;
}

inline Int multinomial(std::span<const long long> parts) {
  long long total = 0;
  for (long long p : parts) total += p;
  Int out = factorial(total);
  for (long long p : parts) out /= factorial(p);
  return out;
}

inline Int multinomial(std::initializer_list<long long> parts) {
  return multinomial(std::span<const long long>(parts.begin(), parts.size()));
}

// With sectors of half-lengths n_1..n_r:
//   m = (n choose n_1,...,n_r) * prod m(interior of sector i).
// A single sector contributes its interior's multiplicity, the multinomial
// factor being 1; the empty diagram has multiplicity 1.
inline Int m_closed(const CupDiagram& d) {
  if (d.cups.empty()) return 1;
  std::vector<long long> halves;
  halves.reserve(d.sectors.size());
  for (const Interval& s : d.sectors) halves.push_back(half_length(s));
  Int out = multinomial(halves);
  for (size_t k = 0; k < d.sectors.size(); ++k) out *= m_closed(interior(d, k));
  return out;
}

inline Int m_closed(const PosSet& vees) { return m_closed(build(vees)); }

inline Int m_closed(const SuperWeight& w) { return m_closed(build(compact(w))); }

// ---------------------------------------------------------------------------

struct BlockRho {
  std::vector<Pos> partition;  // entries >= 0, weakly decreasing, length m-n
  Pos det_twist = 0;           // uniform shift split off the cross positions
};

inline BlockRho rho_of_block(const BlockId& b) {
  if (!b.maximal_atypical())
    fail(Errc::NotMaximalAtypicalBlock, "block carries circles");
  BlockRho out;
  const size_t r = b.crosses.size();  // = m - n
  if (r == 0) return out;
  std::vector<Pos> lam(r);
  for (size_t i = 0; i < r; ++i)  // crosses descending: q_i = crosses[r-1-i]
    lam[i] = b.crosses[r - 1 - i] + static_cast<Pos>(i);
  out.det_twist = lam.back();
  out.partition.resize(r);
  for (size_t i = 0; i < r; ++i) out.partition[i] = lam[i] - out.det_twist;
  return out;
}

// dim of the Gl(N) representation with highest weight p_1 >= ... >= p_N:
// prod_{i<j} (p_i - p_j + j - i) / (j - i). Entries may be negative; adding
// a constant to all of them does not change the value.
inline Int weyl_dim(std::span<const Pos> parts, int N) {
  if (static_cast<int>(parts.size()) > N)
    fail(Errc::NonDominant, "more parts than the rank allows");
  std::vector<Pos> p(parts.begin(), parts.end());
  p.resize(N, 0);
  for (int i = 1; i < N; ++i)
    if (p[i - 1] < p[i])
      fail(Errc::NonDominant, "parts not weakly decreasing at index " +
                                  std::to_string(i));
  Int num = 1, den = 1;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      num *= p[i] - p[j] + j - i;
      den *= j - i;
    }
  return num / den;  // exact
}

inline Int weyl_dim(const std::vector<Pos>& parts, int N) {
  return weyl_dim(std::span<const Pos>(parts.data(), parts.size()), N);
}

// ---------------------------------------------------------------------------

struct SdimResult {
  bool maximal_atypical = false;
  Pos p = 0;
  int p_mod2 = 0;
  Int multiplicity = 0;
  std::vector<Pos> rho;
  Pos det_twist = 0;
  Int dim_rho = 0;
  Int sdim = 0;
};

inline SdimResult sdim(const SuperWeight& w) {
  SdimResult out;
  Parity par = parity(w);
  out.p = par.p;
  out.p_mod2 = par.mod2;
  if (!is_maximal_atypical(w)) return out;

  out.maximal_atypical = true;
  out.multiplicity = m_closed(w);
  BlockRho rho = rho_of_block(block_of(w));
  out.rho = rho.partition;
  out.det_twist = rho.det_twist;
  out.dim_rho = weyl_dim(out.rho, w.m - w.n);
  out.sdim = out.multiplicity * out.dim_rho;
  if (out.p_mod2 == 1) out.sdim = -out.sdim;
  return out;
}

// ---------------------------------------------------------------------------
// The three arithmetic identities behind the one-segment recursion:
//  (i)   2uv = (u+v) + v(u-1) + u(v-1)
//  (ii)  2 (a+b; a,1,b-1) = (a+b,a) + (a+b,a+1) + (a+b,a+1) a + (a+b,a)(b-1)
//  (iii) 2 (a+b; a,1,b-1) = (a+b,a) + (a+b,a)(b-1) + (a+b; a,1,b-1)

struct IdentityReport {
  bool pass = true;
  long long checked = 0;
  std::string first_counterexample;
};

inline IdentityReport verify_identities(long long bound) {
  IdentityReport rep;
  auto report = [&](const std::string& what, long long x, long long y,
                    const Int& lhs, const Int& rhs) {
    if (lhs == rhs) return true;
    rep.pass = false;
    rep.first_counterexample = what + " fails at (" + std::to_string(x) + "," +
                               std::to_string(y) + "): " + lhs.str() +
                               " != " + rhs.str();
    return false;
  };

  for (long long u = 1; u <= bound && rep.pass; ++u)
    for (long long v = 1; v <= bound && rep.pass; ++v) {
      ++rep.checked;
      report("2uv identity", u, v, Int(2 * u * v),
             Int(u + v) + Int(v) * (u - 1) + Int(u) * (v - 1));
    }
  for (long long a = 1; a <= bound && rep.pass; ++a)
    for (long long b = 1; b <= bound && rep.pass; ++b) {
      Int tri = multinomial({a, 1, b - 1});
      ++rep.checked;
      if (!report("first binomial identity", a, b, 2 * tri,
                  binomial(a + b, a) + binomial(a + b, a + 1) +
                      binomial(a + b, a + 1) * a + binomial(a + b, a) * (b - 1)))
        break;
      ++rep.checked;
      report("second binomial identity", a, b, 2 * tri,
             binomial(a + b, a) + binomial(a + b, a) * (b - 1) + tri);
    }
  return rep;
}

}  // namespace superdim
