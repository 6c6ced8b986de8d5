#include "fock/energy.hpp"

#include <algorithm>

namespace fock {

namespace {

std::vector<int> multiplicities(const std::vector<int>& sorted_ranks, int size) {
  std::vector<int> m(size, 0);
  for (int r : sorted_ranks) m[r]++;
  return m;
}

}  // namespace

SignSeq sign_sequence(const Alphabet& a, const Alphabet& b, const Level1& t1,
                      const Level1& t2) {
  std::vector<int> m1a = multiplicities(t1.plus, a.size());
  std::vector<int> m2a = multiplicities(t2.plus, a.size());
  std::vector<int> m1b = multiplicities(t1.minus, b.size());
  std::vector<int> m2b = multiplicities(t2.minus, b.size());
  SignSeq s;
  for (int r = a.size() - 1; r >= 0; --r) {
    if (a.odd(r)) {
      if (m1a[r]) s.push_back({+1, true, r, 1});
      if (m2a[r]) s.push_back({-1, true, r, 2});
    } else {
      for (int i = 0; i < m2a[r]; ++i) s.push_back({-1, true, r, 2});
      for (int i = 0; i < m1a[r]; ++i) s.push_back({+1, true, r, 1});
    }
  }
  for (int r = 0; r < b.size(); ++r) {
    if (b.odd(r)) {
      if (m2b[r]) s.push_back({+1, false, r, 2});
      if (m1b[r]) s.push_back({-1, false, r, 1});
    } else {
      for (int i = 0; i < m1b[r]; ++i) s.push_back({-1, false, r, 1});
      for (int i = 0; i < m2b[r]; ++i) s.push_back({+1, false, r, 2});
    }
  }
  return s;
}

ReducedSigns reduce(const SignSeq& s) {
  std::vector<Sign> minus, plus;
  for (const Sign& x : s) {
    if (x.sign > 0) {
      plus.push_back(x);
    } else if (!plus.empty()) {
      plus.pop_back();
    } else {
      minus.push_back(x);
    }
  }
  ReducedSigns r;
  r.eps = static_cast<int>(minus.size());
  r.phi = static_cast<int>(plus.size());
  r.surviving = std::move(minus);
  r.surviving.insert(r.surviving.end(), plus.begin(), plus.end());
  return r;
}

int local_h(const Alphabet& a, const Alphabet& b, const Level1& t1,
            const Level1& t2) {
  ReducedSigns r = reduce(sign_sequence(a, b, t1, t2));
  if (r.phi - r.eps != t1.k() - t2.k())
    throw ValidationError("local energy: phi - eps != k1 - k2");
  return -std::min(r.eps, r.phi);
}

namespace {

void remove_one(std::vector<int>& row, int rank) {
  auto it = std::find(row.begin(), row.end(), rank);
  if (it == row.end())
    throw ValidationError("r_matrix: tagged entry missing");
  row.erase(it);
}

void insert_sorted(std::vector<int>& row, int rank) {
  row.insert(std::upper_bound(row.begin(), row.end(), rank), rank);
}

bool valid_row(const Alphabet& al, const std::vector<int>& row) {
  for (size_t i = 1; i < row.size(); ++i)
    if (row[i - 1] == row[i] && al.odd(row[i])) return false;
  return true;
}

}  // namespace

std::pair<Level1, Level1> r_matrix(const Alphabet& a, const Alphabet& b,
                                   const Level1& t1, const Level1& t2) {
  int k1 = t1.k(), k2 = t2.k();
  if (k1 == k2) return {t1, t2};
  ReducedSigns r = reduce(sign_sequence(a, b, t1, t2));
  Level1 u1 = t1, u2 = t2;
  if (k1 > k2) {
    // first k1-k2 surviving +'s from the left
    std::vector<Sign> moved;
    for (const Sign& x : r.surviving)
      if (x.sign > 0 && static_cast<int>(moved.size()) < k1 - k2)
        moved.push_back(x);
    for (const Sign& x : moved) {
      if (x.in_a) {  // sits in T1+, moves to T2+
        remove_one(u1.plus, x.rank);
        insert_sorted(u2.plus, x.rank);
      } else {  // sits in T2-, moves to T1-
        remove_one(u2.minus, x.rank);
        insert_sorted(u1.minus, x.rank);
      }
    }
  } else {
    // first k2-k1 surviving -'s from the right
    std::vector<Sign> minuses;
    for (const Sign& x : r.surviving)
      if (x.sign < 0) minuses.push_back(x);
    std::vector<Sign> moved(minuses.end() - (k2 - k1), minuses.end());
    for (const Sign& x : moved) {
      if (x.in_a) {  // sits in T2+, moves to T1+
        remove_one(u2.plus, x.rank);
        insert_sorted(u1.plus, x.rank);
      } else {  // sits in T1-, moves to T2-
        remove_one(u1.minus, x.rank);
        insert_sorted(u2.minus, x.rank);
      }
    }
  }
  if (u1.k() != k2 || u2.k() != k1)
    throw ValidationError("r_matrix: shapes not swapped");
  if (!valid_row(a, u1.plus) || !valid_row(a, u2.plus) ||
      !valid_row(b, u1.minus) || !valid_row(b, u2.minus))
    throw ValidationError("r_matrix: output row not semistandard");
  return {u1, u2};
}

FockTuple apply_r(const FockTuple& t, int i) {
  if (i < 1 || i >= t.n())
    throw ValidationError("apply_r: slot out of range");
  FockTuple r = t;
  auto [u1, u2] = r_matrix(t.A, t.B, t.entries[i - 1], t.entries[i]);
  r.entries[i - 1] = u1;
  r.entries[i] = u2;
  return r;
}

long long global_d(const FockTuple& t) {
  long long d = 0;
  int n = t.n();
  for (int j = 2; j <= n; ++j) {
    FockTuple v = t;
    for (int i = j - 1; i >= 1; --i) {
      if (i < j - 1) v = apply_r(v, i + 1);
      d += local_h(t.A, t.B, v.entries[i - 1], v.entries[i]);
    }
  }
  return d;
}

AbMatrix to_matrix(const FockTuple& t) {
  AbMatrix m;
  m.A = t.A;
  m.B = t.B;
  m.n = t.n();
  m.a_rows.assign(t.A.size(), std::vector<int>(m.n, 0));
  m.b_rows.assign(t.B.size(), std::vector<int>(m.n, 0));
  for (int j = 0; j < m.n; ++j) {
    for (int r : t.entries[j].plus) m.a_rows[r][j]++;
    for (int r : t.entries[j].minus) m.b_rows[r][j]++;
  }
  for (int r = 0; r < t.A.size(); ++r)
    if (t.A.odd(r))
      for (int x : m.a_rows[r])
        if (x > 1) throw ValidationError("matrix: odd row entry > 1");
  for (int r = 0; r < t.B.size(); ++r)
    if (t.B.odd(r))
      for (int x : m.b_rows[r])
        if (x > 1) throw ValidationError("matrix: odd row entry > 1");
  return m;
}

FockTuple from_matrix(const AbMatrix& m) {
  FockTuple t;
  t.A = m.A;
  t.B = m.B;
  t.entries.resize(m.n);
  for (int j = 0; j < m.n; ++j) {
    for (int r = 0; r < m.A.size(); ++r) {
      if (m.A.odd(r) && m.a_rows[r][j] > 1)
        throw ValidationError("matrix: odd row entry > 1");
      for (int c = 0; c < m.a_rows[r][j]; ++c) t.entries[j].plus.push_back(r);
    }
    for (int r = 0; r < m.B.size(); ++r) {
      if (m.B.odd(r) && m.b_rows[r][j] > 1)
        throw ValidationError("matrix: odd row entry > 1");
      for (int c = 0; c < m.b_rows[r][j]; ++c) t.entries[j].minus.push_back(r);
    }
  }
  return t;
}

RationalTableau row_tableau(const AbMatrix& m, bool in_a, int rank) {
  int n = m.n;
  const std::vector<int>& row = in_a ? m.a_rows.at(rank) : m.b_rows.at(rank);
  bool odd = in_a ? m.A.odd(rank) : m.B.odd(rank);
  int tot = 0;
  for (int x : row) tot += x;
  RationalTableau t = empty_rational(n);
  if (tot == 0) return t;
  if (in_a) {
    std::vector<int> entries;
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < row[j]; ++c) entries.push_back(j + 1);
    if (odd) {  // single column (1^tot)
      for (int i = 0; i < tot; ++i) {
        t.shape[i] = 1;
        t.rows[i] = {entries[i]};
      }
    } else {  // single row (tot)
      t.shape[0] = tot;
      t.rows[0] = entries;
    }
  } else {
    std::vector<int> entries;
    for (int j = n - 1; j >= 0; --j)
      for (int c = 0; c < row[j]; ++c) entries.push_back(-(j + 1));
    if (odd) {  // single column (0,...,-1^tot)
      for (int i = 0; i < tot; ++i) {
        t.shape[n - tot + i] = -1;
        t.rows[n - tot + i] = {entries[i]};
      }
    } else {  // single negative row (0,...,-tot)
      t.shape[n - 1] = -tot;
      t.rows[n - 1] = entries;
    }
  }
  if (!validate_rational(t))
    throw ValidationError("row_tableau: invalid result");
  return t;
}

TupleWord tuple_word(const FockTuple& t) {
  AbMatrix m = to_matrix(t);
  TupleWord out;
  auto add = [&](bool in_a, int rank) {
    RationalTableau rt = row_tableau(m, in_a, rank);
    for (int l : rational_word(rt)) {
      out.word.push_back(l);
      out.tags.push_back({in_a, rank});
    }
  };
  for (int r = t.A.size() - 1; r >= 0; --r) add(true, r);
  for (int r = 0; r < t.B.size(); ++r) add(false, r);
  return out;
}

namespace {

std::optional<FockTuple> apply_tuple_op(const FockTuple& t, int j,
                                        bool lowering) {
  TupleWord tw = tuple_word(t);
  int n = t.n();
  int p = lowering ? f_position(tw.word, n, j) : e_position(tw.word, n, j);
  if (p < 0) return std::nullopt;
  AbMatrix m = to_matrix(t);
  auto [in_a, rank] = tw.tags[p];
  int l = tw.word[p];
  std::vector<int>& row = in_a ? m.a_rows[rank] : m.b_rows[rank];
  // e: j+1 -> j or -j -> -(j+1); f: j -> j+1 or -(j+1) -> -j. In the matrix,
  // letter +-c sits in column c of its row.
  int target = l > 0 ? (lowering ? l + 1 : l - 1) : (lowering ? -l - 1 : -l + 1);
  row[std::abs(l) - 1]--;
  row[target - 1]++;
  bool odd = in_a ? m.A.odd(rank) : m.B.odd(rank);
  if (odd && row[target - 1] > 1)
    throw ValidationError("crystal operator violated the parity constraint");
  return from_matrix(m);
}

}  // namespace

std::optional<FockTuple> e_tilde(const FockTuple& t, int j) {
  return apply_tuple_op(t, j, false);
}

std::optional<FockTuple> f_tilde(const FockTuple& t, int j) {
  return apply_tuple_op(t, j, true);
}

int tuple_eps(const FockTuple& t, int j) {
  return eps(tuple_word(t).word, t.n(), j);
}

int tuple_phi(const FockTuple& t, int j) {
  return phi(tuple_word(t).word, t.n(), j);
}

FockTuple tuple_weyl_s(const FockTuple& t, int j) {
  int k = tuple_phi(t, j) - tuple_eps(t, j);
  FockTuple cur = t;
  for (int i = 0; i < k; ++i) cur = *f_tilde(cur, j);
  for (int i = 0; i < -k; ++i) cur = *e_tilde(cur, j);
  return cur;
}

long long d_via_roots(const FockTuple& t) {
  Word w = tuple_word(t).word;
  int n = t.n();
  long long total = 0;
  for (int s = 1; s <= n; ++s)
    for (int u = s + 1; u <= n; ++u)
      total += std::min(eps_alpha(w, n, s, u), phi_alpha(w, n, s, u));
  return -total;
}

int tuple_charge(const FockTuple& t) {
  return charge(tuple_word(t).word, t.n());
}

}  // namespace fock
