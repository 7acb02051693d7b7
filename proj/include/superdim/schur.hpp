#pragma once

// Partition combinatorics for covariant representations: hook condition and
// highest weight, vertical-strip Pieri rule, Littlewood-Richardson expansion
// and an independent superdimension count obtained by restricting the Schur
// functor to Gl(m) x Gl(n):
//   sdim Schur_p(k^{m|n})
//     = sum_{mu,nu} c^p_{mu,nu} dim S_mu(k^m) dim S_{nu'}(k^n) (-1)^{|nu|}.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superdim/bigint.hpp"
#include "superdim/error.hpp"
#include "superdim/multiplicity.hpp"
#include "superdim/weights.hpp"

namespace superdim {

struct Partition {
  std::vector<Pos> parts;  // weakly decreasing, positive (trailing zeros trimmed)

  long long size() const {
    long long s = 0;
    for (Pos p : parts) s += p;
    return s;
  }
  size_t length() const { return parts.size(); }
  Pos at(size_t i) const { return i < parts.size() ? parts[i] : 0; }  // 0-based

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

inline Partition make_partition(std::vector<Pos> v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i])
      fail(Errc::BadShape, "parts not weakly decreasing at index " + std::to_string(i));
  if (!v.empty() && v.back() < 0) fail(Errc::BadShape, "negative part");
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Partition{std::move(v)};
}

inline Partition conjugate(const Partition& p) {
  Partition out;
  if (p.parts.empty()) return out;
  out.parts.resize(p.parts[0]);
  for (Pos c = 0; c < p.parts[0]; ++c) {
    Pos rows = 0;
    for (Pos part : p.parts)
      if (part > c) ++rows;
    out.parts[c] = rows;
  }
  return out;
}

inline bool hook_condition(const Partition& p, int m, int n) {
  return p.at(m) <= n;
}

inline SuperWeight to_highest_weight(const Partition& p, int m, int n) {
  if (!hook_condition(p, m, n))
    fail(Errc::HookViolation, "part " + std::to_string(m + 1) + " exceeds n");
  Partition conj = conjugate(p);
  std::vector<Pos> parts(m + n);
  for (int i = 0; i < m; ++i) parts[i] = p.at(i);
  for (int i = 0; i < n; ++i) parts[m + i] = std::max<Pos>(0, conj.at(i) - m);
  return validate_weight(m, n, std::move(parts));
}

inline bool is_covariant_max_atypical(const Partition& p, int m, int n) {
  if (!hook_condition(p, m, n))
    fail(Errc::HookViolation, "part " + std::to_string(m + 1) + " exceeds n");
  return p.at(m - n) == 0;
}

// All partitions obtained by adding a vertical strip of k boxes (no two in
// the same row).
inline std::vector<Partition> column_pieri(const Partition& p, long long k) {
  if (k < 0) fail(Errc::BadShape, "negative strip size");
  std::vector<Partition> out;
  std::vector<Pos> cur;
  size_t rows = p.length() + static_cast<size_t>(k);  // enough room
  auto rec = [&](auto&& self, size_t row, long long left) -> void {
    if (row == rows) {
      if (left == 0) out.push_back(make_partition(cur));
      return;
    }
    for (Pos add = 0; add <= 1 && add <= left; ++add) {
      Pos val = p.at(row) + add;
      if (!cur.empty() && val > cur.back()) continue;  // keep decreasing
      if (val == 0 && left - add > 0) continue;  // empty row ends the shape
      cur.push_back(val);
      self(self, row + 1, left - add);
      cur.pop_back();
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// Chains of horizontal strips, one per part of q, grown on top of p. The
// filling that writes k into the cells of the k-th strip is column-strict by
// construction; keeping only chains whose reverse reading word is a lattice
// word makes it a Littlewood-Richardson tableau, so each surviving chain
// contributes one to c^{shape}_{p,q}.
inline bool lattice_word_ok(const std::vector<Pos>& base,
                            const std::vector<std::vector<Pos>>& chain) {
  const std::vector<Pos>& final_shape = chain.back();
  size_t q_rows = chain.size() - 1;
  std::vector<long long> counts(q_rows + 1, 0);
  for (size_t r = 0; r < final_shape.size(); ++r) {
    Pos row_start = r < base.size() ? base[r] : 0;
    for (Pos col = final_shape[r] - 1; col >= row_start; --col) {
      // entry: which strip added cell (r, col)
      size_t entry = 0;
      for (size_t s = 1; s < chain.size(); ++s) {
        Pos rows_s = r < chain[s].size() ? chain[s][r] : 0;
        if (rows_s > col) {
          entry = s;
          break;
        }
      }
      ++counts[entry];
      if (entry > 1 && counts[entry] > counts[entry - 1]) return false;
    }
  }
  return true;
}

template <typename Fn>
inline void horizontal_strips(const std::vector<Pos>& shape, long long k,
                              const std::vector<Pos>* bound, const Fn& fn) {
  // all shapes obtained by adding a horizontal strip of k boxes, optionally
  // staying inside *bound
  std::vector<Pos> cur;
  size_t rows = shape.size() + 1;
  auto rec = [&](auto&& self, size_t row, long long left) -> void {
    if (row == rows) {
      if (left == 0) fn(cur);
      return;
    }
    Pos base = row < shape.size() ? shape[row] : 0;
    Pos cap = row == 0 ? base + left
                       : std::min<Pos>(base + left, shape[row - 1]);  // strip rule
    if (bound) cap = std::min<Pos>(cap, row < bound->size() ? (*bound)[row] : 0);
    for (Pos val = base; val <= cap; ++val) {
      cur.push_back(val);
      self(self, row + 1, left - (val - base));
      cur.pop_back();
    }
  };
  rec(rec, 0, k);
}

template <typename Fn>
inline void lr_chains(const std::vector<Pos>& base, const std::vector<Pos>& q,
                      const std::vector<Pos>* bound, const Fn& fn) {
  std::vector<std::vector<Pos>> chain{base};
  auto rec = [&](auto&& self, size_t step) -> void {
    if (step == q.size()) {
      if (lattice_word_ok(base, chain)) fn(chain.back());
      return;
    }
    std::vector<Pos> current = chain.back();  // chain reallocates below
    horizontal_strips(current, q[step], bound, [&](const std::vector<Pos>& next) {
      chain.push_back(next);
      self(self, step + 1);
      chain.pop_back();
    });
  };
  rec(rec, 0);
}

inline std::vector<Pos> trimmed(std::vector<Pos> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace detail

// Littlewood-Richardson decomposition of s_p * s_q, with multiplicities.
inline std::vector<std::pair<Partition, long long>> lr_expand(const Partition& p,
                                                              const Partition& q) {
  std::map<std::vector<Pos>, long long> acc;
  detail::lr_chains(p.parts, q.parts, nullptr,
                    [&](const std::vector<Pos>& shape) { ++acc[detail::trimmed(shape)]; });
  std::vector<std::pair<Partition, long long>> out;
  out.reserve(acc.size());
  for (auto& [shape, mult] : acc)
    out.emplace_back(Partition{shape}, mult);
  return out;
}

// c^{target}_{p,q}
inline long long lr_coefficient(const Partition& p, const Partition& q,
                                const Partition& target) {
  if (p.size() + q.size() != target.size()) return 0;
  long long count = 0;
  detail::lr_chains(p.parts, q.parts, &target.parts,
                    [&](const std::vector<Pos>& shape) {
                      if (detail::trimmed(shape) == target.parts) ++count;
                    });
  return count;
}

// dim Schur_p(k^N): zero when p has more than N rows.
inline Int schur_dim(const Partition& p, int N) {
  if (p.length() > static_cast<size_t>(N)) return 0;
  return weyl_dim(std::span<const Pos>(p.parts.data(), p.parts.size()), N);
}

inline std::vector<Partition> partitions_of(long long N) {
  std::vector<Partition> out;
  std::vector<Pos> cur;
  auto rec = [&](auto&& self, long long left, Pos cap) -> void {
    if (left == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (Pos first = std::min<Pos>(cap, left); first >= 1; --first) {
      cur.push_back(first);
      self(self, left - first, first);
      cur.pop_back();
    }
  };
  rec(rec, N, N);
  return out;
}

namespace detail {

template <typename Fn>
inline void subpartitions(const Partition& p, const Fn& fn) {
  std::vector<Pos> cur;
  auto rec = [&](auto&& self, size_t row) -> void {
    if (row == p.length()) {
      fn(make_partition(cur));
      return;
    }
    Pos cap = row == 0 ? p.parts[0] : std::min(p.parts[row], cur.back());
    for (Pos val = 0; val <= cap; ++val) {
      if (val == 0) {
        fn(make_partition(cur));  // shorter subpartitions end here
        continue;
      }
      cur.push_back(val);
      self(self, row + 1);
      cur.pop_back();
    }
  };
  if (p.length() == 0)
    fn(Partition{});
  else
    rec(rec, 0);
}

}  // namespace detail

// Exact superdimension of the covariant representation attached to p,
// computed without cup diagrams. Vanishes automatically when the hook
// condition fails.
inline Int covariant_sdim_oracle(const Partition& p, int m, int n) {
  Int total = 0;
  detail::subpartitions(p, [&](const Partition& mu) {
    Int dim_even = schur_dim(mu, m);
    if (dim_even == 0) return;
    long long rest = p.size() - mu.size();
    for (const Partition& nu : partitions_of(rest)) {
      if (nu.at(0) > n) continue;  // conjugate would have too many rows
      Int dim_odd = schur_dim(conjugate(nu), n);
      if (dim_odd == 0) continue;
      long long c = lr_coefficient(mu, nu, p);
      if (c == 0) continue;
      Int term = Int(c) * dim_even * dim_odd;
      total += (rest % 2 == 0) ? term : -term;
    }
  });
  return total;
}

}  // namespace superdim
