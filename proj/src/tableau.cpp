#include "fock/tableau.hpp"

#include <algorithm>
#include <map>

namespace fock {

long long SuperTableau::box_count() const {
  long long c = 0;
  for (size_t i = 0; i < outer.size(); ++i) c += outer[i] - inner[i];
  return c;
}

bool SuperTableau::structurally_ok() const {
  if (inner.size() != outer.size() || rows.size() != outer.size()) return false;
  if (!weakly_decreasing(outer) || !weakly_decreasing(inner)) return false;
  for (size_t i = 0; i < outer.size(); ++i) {
    if (inner[i] < 0 || inner[i] > outer[i]) return false;
    if (static_cast<int>(rows[i].size()) != outer[i] - inner[i]) return false;
    for (int x : rows[i])
      if (x < 0 || x >= alphabet.size()) return false;
  }
  return true;
}

SuperTableau make_tableau(Alphabet alphabet, std::vector<int> outer,
                          std::vector<int> inner,
                          std::vector<std::vector<int>> rows) {
  SuperTableau t{std::move(alphabet), std::move(outer), std::move(inner),
                 std::move(rows)};
  if (!t.structurally_ok()) throw ValidationError("tableau shape/row mismatch");
  return t;
}

SuperTableau from_rows(Alphabet alphabet, std::vector<std::vector<int>> rows) {
  std::vector<int> outer, inner;
  for (const auto& r : rows) {
    outer.push_back(static_cast<int>(r.size()));
    inner.push_back(0);
  }
  return make_tableau(std::move(alphabet), std::move(outer), std::move(inner),
                      std::move(rows));
}

SuperTableau empty_tableau(Alphabet alphabet) {
  return SuperTableau{std::move(alphabet), {}, {}, {}};
}

bool same_tableau(const SuperTableau& a, const SuperTableau& b) {
  if (a.alphabet != b.alphabet) return false;
  auto strip = [](const SuperTableau& t) {
    SuperTableau s = t;
    while (!s.outer.empty() && s.outer.back() == s.inner.back()) {
      s.outer.pop_back();
      s.inner.pop_back();
      s.rows.pop_back();
    }
    if (s.box_count() == 0) return empty_tableau(s.alphabet);
    return s;
  };
  SuperTableau x = strip(a), y = strip(b);
  return x.outer == y.outer && x.inner == y.inner && x.rows == y.rows;
}

namespace {

// Entry at (row i, absolute column c), or -1 if outside the shape.
int entry_at(const SuperTableau& t, int i, int c) {
  if (i < 0 || i >= t.row_count()) return -1;
  if (c < t.inner[i] || c >= t.outer[i]) return -1;
  return t.rows[i][c - t.inner[i]];
}

}  // namespace

bool validate(const SuperTableau& t) {
  if (!t.structurally_ok()) throw ValidationError("tableau shape/row mismatch");
  const Alphabet& al = t.alphabet;
  for (int i = 0; i < t.row_count(); ++i) {
    for (int c = t.inner[i]; c < t.outer[i]; ++c) {
      int x = entry_at(t, i, c);
      int right = entry_at(t, i, c + 1);
      if (right >= 0) {
        if (right < x) return false;
        if (right == x && al.odd(x)) return false;  // odd strict in rows
      }
      int below = entry_at(t, i + 1, c);
      if (below >= 0) {
        if (below < x) return false;
        if (below == x && !al.odd(x)) return false;  // even strict in columns
      }
    }
  }
  return true;
}

std::vector<int> word_col(const SuperTableau& t) {
  std::vector<int> w;
  int maxc = 0;
  for (int i = 0; i < t.row_count(); ++i) maxc = std::max(maxc, t.outer[i]);
  for (int c = maxc - 1; c >= 0; --c)
    for (int i = 0; i < t.row_count(); ++i) {
      int x = entry_at(t, i, c);
      if (x >= 0) w.push_back(x);
    }
  return w;
}

std::vector<int> word_row(const SuperTableau& t) {
  std::vector<int> w;
  for (int i = t.row_count() - 1; i >= 0; --i)
    for (int x : t.rows[i]) w.push_back(x);
  return w;
}

namespace {

void require_straight(const SuperTableau& t) {
  for (int x : t.inner)
    if (x != 0) throw ValidationError("insertion requires a straight shape");
}

// Bump position in a row: leftmost entry > a (a even) or >= a (a odd).
int row_bump_pos(const Alphabet& al, const std::vector<int>& row, int a) {
  bool odd = al.odd(a);
  for (size_t j = 0; j < row.size(); ++j)
    if (odd ? row[j] >= a : row[j] > a) return static_cast<int>(j);
  return -1;
}

// Reverse row bump: rightmost entry e with e < c (e even) or e <= c (e odd).
int row_unbump_pos(const Alphabet& al, const std::vector<int>& row, int c) {
  for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j) {
    int e = row[j];
    if (al.odd(e) ? e <= c : e < c) return j;
  }
  return -1;
}

}  // namespace

SuperTableau row_insert(const SuperTableau& t, int rank, Box* box) {
  require_straight(t);
  SuperTableau r = t;
  int carry = rank;
  for (int i = 0;; ++i) {
    if (i == r.row_count()) {
      r.outer.push_back(1);
      r.inner.push_back(0);
      r.rows.push_back({carry});
      if (box) *box = {i, 0};
      break;
    }
    int p = row_bump_pos(r.alphabet, r.rows[i], carry);
    if (p < 0) {
      r.rows[i].push_back(carry);
      r.outer[i]++;
      if (box) *box = {i, r.outer[i] - 1};
      break;
    }
    std::swap(carry, r.rows[i][p]);
  }
  if (!weakly_decreasing(r.outer))
    throw ValidationError("row_insert broke the shape");
  return r;
}

SuperTableau col_insert(const SuperTableau& t, int rank, Box* box) {
  require_straight(t);
  SuperTableau r = t;
  const Alphabet& al = r.alphabet;
  int carry = rank;
  for (int c = 0;; ++c) {
    // column c spans rows [0, h)
    int h = 0;
    while (h < r.row_count() && r.outer[h] > c) ++h;
    bool odd = al.odd(carry);
    int hit = -1;
    for (int i = 0; i < h; ++i) {
      int e = r.rows[i][c];
      if (odd ? e > carry : e >= carry) {
        hit = i;
        break;
      }
    }
    if (hit < 0) {
      if (h == r.row_count()) {
        r.outer.push_back(0);
        r.inner.push_back(0);
        r.rows.push_back({});
      }
      if (r.outer[h] != c) throw ValidationError("col_insert broke the shape");
      r.rows[h].push_back(carry);
      r.outer[h]++;
      if (box) *box = {h, c};
      break;
    }
    std::swap(carry, r.rows[hit][c]);
  }
  if (!weakly_decreasing(r.outer))
    throw ValidationError("col_insert broke the shape");
  return r;
}

SuperTableau key_tableau(const Partition& mu, int r) {
  check_partition(mu);
  Partition m = normalized(mu);
  if (static_cast<int>(m.size()) > r)
    throw ValidationError("key tableau needs l(mu) <= r");
  Alphabet al = Alphabet::preset("[" + std::to_string(std::max(r, 1)) + "]");
  std::vector<std::vector<int>> rows;
  for (size_t i = 0; i < m.size(); ++i)
    rows.push_back(std::vector<int>(m[i], static_cast<int>(i)));
  return from_rows(std::move(al), std::move(rows));
}

SuperTableau rotate_pi(const SuperTableau& t) {
  if (!t.structurally_ok()) throw ValidationError("tableau shape/row mismatch");
  int r = t.row_count();
  int w = r == 0 ? 0 : t.outer[0];
  SuperTableau out;
  out.alphabet = pi_dual(t.alphabet);
  int n = t.alphabet.size();
  out.outer.resize(r);
  out.inner.resize(r);
  out.rows.resize(r);
  for (int i = 0; i < r; ++i) {
    int src = r - 1 - i;
    out.outer[i] = w - t.inner[src];
    out.inner[i] = w - t.outer[src];
    out.rows[i].assign(t.rows[src].rbegin(), t.rows[src].rend());
    for (int& x : out.rows[i]) x = n - 1 - x;
  }
  return out;
}

SuperTableau glue(const SuperTableau& s, const SuperTableau& t) {
  require_straight(s);
  Alphabet g = star(s.alphabet, t.alphabet);
  int off = s.alphabet.size();
  int r = std::max(s.row_count(), t.row_count());
  SuperTableau out;
  out.alphabet = g;
  out.outer.resize(r, 0);
  out.inner.assign(r, 0);
  out.rows.resize(r);
  for (int i = 0; i < r; ++i) {
    int s_len = i < s.row_count() ? s.outer[i] : 0;
    int t_inner = i < t.row_count() ? t.inner[i] : 0;
    int t_outer = i < t.row_count() ? t.outer[i] : 0;
    if (t_outer > 0 && t_inner != s_len)
      throw ValidationError("glue: inner shape of T must equal sh(S)");
    out.outer[i] = std::max(s_len, t_outer);
    if (i < s.row_count())
      out.rows[i].insert(out.rows[i].end(), s.rows[i].begin(), s.rows[i].end());
    if (i < t.row_count())
      for (int x : t.rows[i]) out.rows[i].push_back(x + off);
  }
  while (!out.outer.empty() && out.outer.back() == 0) {
    out.outer.pop_back();
    out.inner.pop_back();
    out.rows.pop_back();
  }
  if (!validate(out)) throw ValidationError("glue: result is not semistandard");
  return out;
}

std::pair<SuperTableau, SuperTableau> split(const SuperTableau& g,
                                            const Alphabet& a,
                                            const Alphabet& b) {
  if (g.alphabet != star(a, b))
    throw ValidationError("split: tableau is not over star(A,B)");
  int off = a.size();
  SuperTableau s, t;
  s.alphabet = a;
  t.alphabet = b;
  for (int i = 0; i < g.row_count(); ++i) {
    if (g.inner[i] != 0) throw ValidationError("split: straight shape required");
    size_t cut = 0;
    while (cut < g.rows[i].size() && g.rows[i][cut] < off) ++cut;
    for (size_t j = cut; j < g.rows[i].size(); ++j)
      if (g.rows[i][j] < off)
        throw ValidationError("split: A-letters not left-justified");
    s.outer.push_back(static_cast<int>(cut));
    s.inner.push_back(0);
    s.rows.emplace_back(g.rows[i].begin(), g.rows[i].begin() + cut);
    t.outer.push_back(g.outer[i]);
    t.inner.push_back(static_cast<int>(cut));
    std::vector<int> rest(g.rows[i].begin() + cut, g.rows[i].end());
    for (int& x : rest) x -= off;
    t.rows.push_back(std::move(rest));
  }
  while (!s.outer.empty() && s.outer.back() == 0) {
    s.outer.pop_back();
    s.inner.pop_back();
    s.rows.pop_back();
  }
  return {std::move(s), std::move(t)};
}

namespace {

void require_one_row(const SuperTableau& t) {
  if (t.row_count() > 1 || (t.row_count() == 1 && t.inner[0] != 0))
    throw ValidationError("rho input must be a one-row tableau");
}

SuperTableau recording_from_labels(const SuperTableau& s,
                                   const std::vector<std::vector<int>>& labels,
                                   int r) {
  Alphabet al = Alphabet::preset("[" + std::to_string(std::max(r, 1)) + "]");
  SuperTableau rec;
  rec.alphabet = std::move(al);
  rec.outer = s.outer;
  rec.inner = s.inner;
  rec.rows = labels;
  if (!validate(rec))
    throw ValidationError("rho: recording tableau is not semistandard");
  return rec;
}

RhoResult rho_generic(const std::vector<SuperTableau>& inputs, bool column) {
  if (inputs.empty()) throw ValidationError("rho needs at least one tableau");
  Alphabet al = inputs[0].alphabet;
  SuperTableau s = empty_tableau(al);
  std::vector<std::vector<int>> labels;
  int r = static_cast<int>(inputs.size());
  for (int k = 0; k < r; ++k) {
    const SuperTableau& tk = inputs[k];
    require_one_row(tk);
    if (tk.alphabet != al) throw ValidationError("rho: mixed alphabets");
    if (!validate(tk)) throw ValidationError("rho: invalid input row");
    std::vector<int> word =
        column ? word_col(tk) : word_row(tk);
    for (int a : word) {
      Box box;
      s = column ? col_insert(s, a, &box) : row_insert(s, a, &box);
      if (box.row == static_cast<int>(labels.size())) labels.push_back({});
      if (box.col != static_cast<int>(labels[box.row].size()))
        throw ValidationError("rho: non-corner insertion box");
      labels[box.row].push_back(k);
    }
  }
  return {s, recording_from_labels(s, labels, r)};
}

// Un-insert the box at (i, j) (must be a corner), returning the letter that
// pops out of row 0 / column 0.
int reverse_row_extract(SuperTableau& t, int i, int j) {
  if (i >= t.row_count() || j != t.outer[i] - 1 ||
      (i + 1 < t.row_count() && t.outer[i + 1] > j))
    throw ValidationError("reverse bump: not a corner box");
  int c = t.rows[i][j];
  t.rows[i].pop_back();
  t.outer[i]--;
  for (int r = i - 1; r >= 0; --r) {
    int p = row_unbump_pos(t.alphabet, t.rows[r], c);
    if (p < 0) throw ValidationError("reverse bump: no admissible entry");
    std::swap(c, t.rows[r][p]);
  }
  if (!t.outer.empty() && t.outer.back() == 0) {
    t.outer.pop_back();
    t.inner.pop_back();
    t.rows.pop_back();
  }
  return c;
}

int reverse_col_extract(SuperTableau& t, int i, int j) {
  if (i >= t.row_count() || j != t.outer[i] - 1 ||
      (i + 1 < t.row_count() && t.outer[i + 1] > j))
    throw ValidationError("reverse bump: not a corner box");
  const Alphabet& al = t.alphabet;
  int c = t.rows[i][j];
  t.rows[i].pop_back();
  t.outer[i]--;
  for (int col = j - 1; col >= 0; --col) {
    int hit = -1;
    for (int r2 = 0; r2 < t.row_count() && t.outer[r2] > col; ++r2) {
      int e = t.rows[r2][col];
      if (al.odd(e) ? e < c : e <= c) hit = r2;  // bottommost admissible
    }
    if (hit < 0) throw ValidationError("reverse bump: no admissible entry");
    std::swap(c, t.rows[hit][col]);
  }
  if (!t.outer.empty() && t.outer.back() == 0) {
    t.outer.pop_back();
    t.inner.pop_back();
    t.rows.pop_back();
  }
  return c;
}

std::vector<SuperTableau> rho_inverse_generic(const SuperTableau& s,
                                              const SuperTableau& recording,
                                              bool column) {
  if (!validate(s) || !validate(recording))
    throw ValidationError("rho inverse: inputs not semistandard");
  if (s.outer != recording.outer || s.inner != recording.inner)
    throw ValidationError("rho inverse: shape mismatch");
  int r = recording.alphabet.size();
  SuperTableau cur = s;
  std::vector<SuperTableau> out(r, empty_tableau(s.alphabet));
  for (int k = r - 1; k >= 0; --k) {
    // Boxes labeled k, processed right to left (distinct columns).
    std::vector<Box> boxes;
    for (int i = 0; i < recording.row_count(); ++i)
      for (int j = 0; j < static_cast<int>(recording.rows[i].size()); ++j)
        if (recording.rows[i][j] == k)
          boxes.push_back({i, j + recording.inner[i]});
    std::sort(boxes.begin(), boxes.end(),
              [](const Box& a, const Box& b) { return a.col > b.col; });
    std::vector<int> extracted;
    for (const Box& b : boxes)
      extracted.push_back(column ? reverse_col_extract(cur, b.row, b.col)
                                 : reverse_row_extract(cur, b.row, b.col));
    // Row insertion pops letters in reverse insertion order; column insertion
    // (word read right to left) pops them in row order already.
    if (!column) std::reverse(extracted.begin(), extracted.end());
    if (!extracted.empty()) {
      out[k] = from_rows(s.alphabet, {extracted});
      if (!validate(out[k]))
        throw ValidationError("rho inverse: extracted row not semistandard");
    }
  }
  if (cur.box_count() != 0)
    throw ValidationError("rho inverse: leftover boxes");
  return out;
}

}  // namespace

RhoResult rho_col(const std::vector<SuperTableau>& rows1) {
  return rho_generic(rows1, true);
}

RhoResult rho_row(const std::vector<SuperTableau>& rows1) {
  return rho_generic(rows1, false);
}

std::vector<SuperTableau> rho_col_inverse(const SuperTableau& s,
                                          const SuperTableau& recording) {
  return rho_inverse_generic(s, recording, true);
}

std::vector<SuperTableau> rho_row_inverse(const SuperTableau& s,
                                          const SuperTableau& recording) {
  return rho_inverse_generic(s, recording, false);
}

namespace {

void enumerate_rec(const Alphabet& al, const std::vector<int>& outer,
                   const std::vector<int>& inner, int i, int j,
                   SuperTableau& cur, std::vector<SuperTableau>& out) {
  int r = static_cast<int>(outer.size());
  while (i < r && inner[i] + j >= outer[i]) {
    ++i;
    j = 0;
  }
  if (i == r) {
    out.push_back(cur);
    return;
  }
  int c = inner[i] + j;  // absolute column
  for (int x = 0; x < al.size(); ++x) {
    // left neighbor
    if (j > 0) {
      int l = cur.rows[i][j - 1];
      if (x < l || (x == l && al.odd(x))) continue;
    }
    // neighbor above
    if (i > 0 && c >= inner[i - 1] && c < outer[i - 1]) {
      int u = cur.rows[i - 1][c - inner[i - 1]];
      if (x < u || (x == u && !al.odd(x))) continue;
    }
    cur.rows[i].push_back(x);
    enumerate_rec(al, outer, inner, i, j + 1, cur, out);
    cur.rows[i].pop_back();
  }
}

}  // namespace

std::vector<SuperTableau> enumerate_sst(const Alphabet& a,
                                        const std::vector<int>& outer,
                                        const std::vector<int>& inner_in) {
  std::vector<int> inner = inner_in;
  inner.resize(outer.size(), 0);
  if (!weakly_decreasing(outer) || !weakly_decreasing(inner))
    throw ValidationError("enumerate_sst: bad shape");
  for (size_t i = 0; i < outer.size(); ++i)
    if (inner[i] > outer[i]) throw ValidationError("enumerate_sst: inner > outer");
  std::vector<SuperTableau> out;
  SuperTableau cur;
  cur.alphabet = a;
  cur.outer = outer;
  cur.inner = inner;
  cur.rows.resize(outer.size());
  enumerate_rec(a, outer, inner, 0, 0, cur, out);
  return out;
}

}  // namespace fock
