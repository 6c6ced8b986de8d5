#include "fock/partition.hpp"

namespace fock {

static void partitions_rec(int m, int max_len, int max_part, Partition& cur,
                           std::vector<Partition>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  int hi = std::min(m, max_part);
  int lo = (m + max_len - 1) / max_len;  // smallest feasible next part
  for (int p = hi; p >= lo && p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(m - p, max_len - 1, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int m, int max_len, int max_part) {
  std::vector<Partition> out;
  if (m < 0) return out;
  Partition cur;
  partitions_rec(m, max_len, max_part, cur, out);
  return out;
}

static void gen_rec(int n, int lo, int hi, long long sum, bool any_total,
                    GenPartition& cur, std::vector<GenPartition>& out) {
  if (static_cast<int>(cur.size()) == n) {
    if (any_total || total(cur) == sum) out.push_back(cur);
    return;
  }
  int top = cur.empty() ? hi : cur.back();
  int remaining = n - static_cast<int>(cur.size());
  for (int p = top; p >= lo; --p) {
    if (!any_total) {
      long long s = total(cur) + p;
      // prune: remaining-1 parts each in [lo, p]
      if (s + 1LL * (remaining - 1) * p < sum) break;
      if (s + 1LL * (remaining - 1) * lo > sum) continue;
    }
    cur.push_back(p);
    gen_rec(n, lo, hi, sum, any_total, cur, out);
    cur.pop_back();
  }
}

std::vector<GenPartition> gen_partitions(int n, int lo, int hi, long long sum,
                                         bool any_total) {
  std::vector<GenPartition> out;
  if (n == 0) {
    if (any_total || sum == 0) out.push_back({});
    return out;
  }
  GenPartition cur;
  gen_rec(n, lo, hi, sum, any_total, cur, out);
  return out;
}

}  // namespace fock
