#pragma once

#include <numeric>
#include <vector>

#include "fock/alphabet.hpp"

namespace fock {

/// Partitions are weakly decreasing vectors of nonnegative ints; equality is
/// up to trailing zeros. GenPartition is a weakly decreasing vector of exactly
/// n ints, possibly negative.
using Partition = std::vector<int>;
using GenPartition = std::vector<int>;

inline bool weakly_decreasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

inline Partition normalized(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline void check_partition(const Partition& p) {
  if (!weakly_decreasing(p)) throw ValidationError("parts not weakly decreasing");
  if (!p.empty() && p.back() < 0) throw ValidationError("negative part in partition");
}

inline void check_gen_partition(const GenPartition& p, int n) {
  if (static_cast<int>(p.size()) != n)
    throw ValidationError("generalized partition must have length n");
  if (!weakly_decreasing(p)) throw ValidationError("parts not weakly decreasing");
}

inline int part(const std::vector<int>& p, size_t i) {
  return i < p.size() ? p[i] : 0;
}

inline long long total(const std::vector<int>& p) {
  return std::accumulate(p.begin(), p.end(), 0LL);
}

inline bool contains(const Partition& outer, const Partition& inner) {
  for (size_t i = 0; i < inner.size(); ++i)
    if (part(outer, i) < inner[i]) return false;
  return true;
}

inline Partition pad(Partition p, size_t n) {
  p.resize(std::max(p.size(), n), 0);
  return p;
}

inline Partition conjugate(const Partition& p) {
  Partition q = normalized(p);
  if (q.empty()) return {};
  Partition c(q[0], 0);
  for (int x : q)
    for (int j = 0; j < x; ++j) c[j]++;
  return c;
}

/// mu dominated by la: equal totals and all partial sums of mu <= those of la.
inline bool dominated(const GenPartition& mu, const GenPartition& la) {
  if (mu.size() != la.size() || total(mu) != total(la)) return false;
  long long sm = 0, sl = 0;
  for (size_t i = 0; i < mu.size(); ++i) {
    sm += mu[i];
    sl += la[i];
    if (sm > sl) return false;
  }
  return true;
}

/// All partitions of m with at most max_len parts, each part <= max_part.
std::vector<Partition> partitions_of(int m, int max_len, int max_part);

/// All generalized partitions of length n with parts in [lo, hi] and the given
/// total (or any total when `any_total`).
std::vector<GenPartition> gen_partitions(int n, int lo, int hi, long long sum,
                                         bool any_total = false);

}  // namespace fock
