#include "fock/rational.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fock {

bool RationalTableau::structurally_ok() const {
  if (n <= 0 || static_cast<int>(shape.size()) != n ||
      rows.size() != shape.size())
    return false;
  if (!weakly_decreasing(shape)) return false;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != std::abs(shape[i])) return false;
    for (int e : rows[i]) {
      if (e == 0 || std::abs(e) > n) return false;
      if (shape[i] > 0 && e < 0) return false;
      if (shape[i] < 0 && e > 0) return false;
    }
  }
  return true;
}

RationalTableau make_rational(int n, GenPartition shape,
                              std::vector<std::vector<int>> rows) {
  RationalTableau t{n, std::move(shape), std::move(rows)};
  if (!t.structurally_ok())
    throw ValidationError("rational tableau shape/row mismatch");
  return t;
}

RationalTableau empty_rational(int n) {
  RationalTableau t;
  t.n = n;
  t.shape.assign(n, 0);
  t.rows.assign(n, {});
  return t;
}

bool operator==(const RationalTableau& a, const RationalTableau& b) {
  return a.n == b.n && a.shape == b.shape && a.rows == b.rows;
}

namespace {

// Entry at (row i, signed column c != 0), or 0 when outside the shape.
int rat_entry(const RationalTableau& t, int i, int c) {
  if (i < 0 || i >= t.n || c == 0) return 0;
  int s = t.shape[i];
  if (c > 0) return s >= c ? t.rows[i][c - 1] : 0;
  return s <= c ? t.rows[i][c - s] : 0;
}

}  // namespace

bool validate_rational(const RationalTableau& t) {
  if (!t.structurally_ok())
    throw ValidationError("rational tableau shape/row mismatch");
  for (int i = 0; i < t.n; ++i) {
    // rows weakly increase (all letters even; repeats allowed)
    for (size_t j = 1; j < t.rows[i].size(); ++j)
      if (t.rows[i][j - 1] > t.rows[i][j]) return false;
    // columns strictly increase downward
    int s = t.shape[i];
    int lo = s > 0 ? 1 : s, hi = s > 0 ? s : -1;
    if (s == 0) continue;
    for (int c = lo; c <= hi; ++c) {
      if (c == 0) continue;
      int x = rat_entry(t, i, c);
      int below = rat_entry(t, i + 1, c);
      if (x != 0 && below != 0 && below <= x) return false;
    }
  }
  // condition (3): first/(-1)st column compatibility
  std::vector<int> pos_col, neg_col;
  for (int i = 0; i < t.n; ++i) {
    if (t.shape[i] >= 1) pos_col.push_back(rat_entry(t, i, 1));
    if (t.shape[i] <= -1) neg_col.push_back(-rat_entry(t, i, -1));
  }
  std::set<int> primes(neg_col.begin(), neg_col.end());
  std::vector<int> complement;
  for (int v = 1; v <= t.n; ++v)
    if (!primes.count(v)) complement.push_back(v);
  for (size_t i = 0; i < pos_col.size(); ++i)
    if (complement[i] > pos_col[i]) return false;
  return true;
}

std::vector<int> weight_rational(const RationalTableau& t) {
  std::vector<int> w(t.n, 0);
  for (const auto& row : t.rows)
    for (int e : row) {
      if (e > 0)
        w[e - 1]++;
      else
        w[-e - 1]--;
    }
  return w;
}

std::vector<int> rational_word(const RationalTableau& t) {
  std::vector<int> w;
  int cmax = 0, cmin = 0;
  for (int s : t.shape) {
    cmax = std::max(cmax, s);
    cmin = std::min(cmin, s);
  }
  for (int c = cmax; c >= cmin; --c) {
    if (c == 0) continue;
    for (int i = 0; i < t.n; ++i) {
      int x = rat_entry(t, i, c);
      if (x != 0) w.push_back(x);
    }
  }
  return w;
}

RationalTableau sigma(const RationalTableau& t) {
  if (!t.structurally_ok())
    throw ValidationError("rational tableau shape/row mismatch");
  RationalTableau r = t;
  std::set<int> b;
  for (int i = 0; i < t.n; ++i)
    if (t.shape[i] <= -1) b.insert(-rat_entry(t, i, -1));
  std::vector<int> complement;
  for (int v = 1; v <= t.n; ++v)
    if (!b.count(v)) complement.push_back(v);
  int s = static_cast<int>(complement.size());  // rows gaining a box on the left
  for (int i = 0; i < t.n; ++i) {
    if (i < s)
      r.rows[i].insert(r.rows[i].begin(), complement[i]);
    else
      r.rows[i].pop_back();
    r.shape[i]++;
  }
  return r;
}

RationalTableau sigma_inverse(const RationalTableau& t) {
  if (!t.structurally_ok())
    throw ValidationError("rational tableau shape/row mismatch");
  RationalTableau r = t;
  std::set<int> c;
  for (int i = 0; i < t.n; ++i)
    if (t.shape[i] >= 1) c.insert(rat_entry(t, i, 1));
  std::vector<int> complement;
  for (int v = 1; v <= t.n; ++v)
    if (!c.count(v)) complement.push_back(v);
  int s = t.n - static_cast<int>(complement.size());
  for (int i = 0; i < t.n; ++i) {
    if (i < s)
      r.rows[i].erase(r.rows[i].begin());
    else
      r.rows[i].push_back(-complement[t.n - 1 - i]);
    r.shape[i]--;
  }
  return r;
}

RationalTableau delta(const RationalTableau& t, int d) {
  if (!t.structurally_ok())
    throw ValidationError("rational tableau shape/row mismatch");
  if (t.shape.back() < 0)
    throw ValidationError("delta requires a partition shape");
  if (d < t.shape[0]) throw ValidationError("delta requires d >= shape[0]");
  RationalTableau s = t;
  for (int k = 0; k < d; ++k) s = sigma_inverse(s);
  // s is purely non-positive; rotate 180 degrees, negating entries.
  RationalTableau out = empty_rational(t.n);
  for (int i = 0; i < t.n; ++i) {
    out.shape[i] = -s.shape[t.n - 1 - i];
    out.rows[i].assign(s.rows[t.n - 1 - i].rbegin(),
                       s.rows[t.n - 1 - i].rend());
    for (int& e : out.rows[i]) e = -e;
  }
  return out;
}

RationalTableau delta_inverse(const RationalTableau& qvee, int d) {
  if (!qvee.structurally_ok())
    throw ValidationError("rational tableau shape/row mismatch");
  if (qvee.shape.back() < 0 || qvee.shape[0] > d)
    throw ValidationError("delta_inverse needs a partition shape with mu_1 <= d");
  RationalTableau s = empty_rational(qvee.n);
  for (int i = 0; i < qvee.n; ++i) {
    s.shape[i] = -qvee.shape[qvee.n - 1 - i];
    s.rows[i].assign(qvee.rows[qvee.n - 1 - i].rbegin(),
                     qvee.rows[qvee.n - 1 - i].rend());
    for (int& e : s.rows[i]) e = -e;
  }
  for (int k = 0; k < d; ++k) s = sigma(s);
  return s;
}

namespace {

void enumerate_rat_rec(int n, const GenPartition& shape, int i,
                       RationalTableau& cur, std::vector<RationalTableau>& out) {
  if (i == n) {
    if (validate_rational(cur)) out.push_back(cur);
    return;
  }
  int len = std::abs(shape[i]);
  // Fill row i with a weakly increasing sequence; prune against the row above
  // (strict columns) as we go, from the alphabet [n] or [-n].
  std::vector<int> row;
  auto column_of = [&](int idx) { return shape[i] > 0 ? idx + 1 : shape[i] + idx; };
  std::function<void(int)> fill = [&](int j) {
    if (j == len) {
      cur.rows[i] = row;
      enumerate_rat_rec(n, shape, i + 1, cur, out);
      return;
    }
    int lo = shape[i] > 0 ? 1 : -n;
    int hi = shape[i] > 0 ? n : -1;
    for (int e = lo; e <= hi; ++e) {
      if (j > 0 && e < row[j - 1]) continue;
      int above = rat_entry(cur, i - 1, column_of(j));
      if (above != 0 && e <= above) continue;
      row.push_back(e);
      fill(j + 1);
      row.pop_back();
    }
  };
  fill(0);
  cur.rows[i].clear();
}

}  // namespace

std::vector<RationalTableau> enumerate_rational(int n, const GenPartition& shape) {
  check_gen_partition(shape, n);
  std::vector<RationalTableau> out;
  RationalTableau cur = empty_rational(n);
  cur.shape = shape;
  enumerate_rat_rec(n, shape, 0, cur, out);
  return out;
}

RationalTableau rational_from_tableau(int n, const SuperTableau& t) {
  if (t.row_count() > n)
    throw ValidationError("tableau has more than n rows");
  for (int x : t.inner)
    if (x != 0) throw ValidationError("straight shape required");
  RationalTableau r = empty_rational(n);
  for (int i = 0; i < t.row_count(); ++i) {
    r.shape[i] = t.outer[i];
    for (int x : t.rows[i]) r.rows[i].push_back(x + 1);
  }
  return r;
}

SuperTableau tableau_from_rational(const RationalTableau& t) {
  if (!t.structurally_ok() || (t.n > 0 && t.shape.back() < 0))
    throw ValidationError("partition-shaped rational tableau required");
  Alphabet al = Alphabet::preset("[" + std::to_string(t.n) + "]");
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < t.n; ++i) {
    if (t.shape[i] == 0) continue;
    std::vector<int> row;
    for (int e : t.rows[i]) row.push_back(e - 1);
    rows.push_back(std::move(row));
  }
  return from_rows(std::move(al), std::move(rows));
}

}  // namespace fock
