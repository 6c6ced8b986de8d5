#include "fock/crystal.hpp"

#include <algorithm>
#include <cstdlib>

namespace fock {

namespace {

void check_word(const Word& w, int n) {
  for (int l : w)
    if (l == 0 || std::abs(l) > n)
      throw ValidationError("crystal word letter out of range");
}

// Sign of a letter for color j: +1 where f_j can act (j or -(j+1)),
// -1 where e_j can act (j+1 or -j), 0 otherwise.
int letter_sign(int l, int j) {
  if (l == j || l == -(j + 1)) return +1;
  if (l == j + 1 || l == -j) return -1;
  return 0;
}

struct Scan {
  std::vector<int> surviving_plus;   // positions, left to right
  std::vector<int> surviving_minus;  // positions, left to right
};

// Bracketing scan: a '-' cancels the nearest uncancelled '+' to its left.
Scan scan_word(const Word& w, int j) {
  Scan s;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    int sg = letter_sign(w[i], j);
    if (sg > 0) {
      s.surviving_plus.push_back(i);
    } else if (sg < 0) {
      if (!s.surviving_plus.empty())
        s.surviving_plus.pop_back();
      else
        s.surviving_minus.push_back(i);
    }
  }
  return s;
}

int raise_letter(int l, int j) {  // e_j on a single letter
  if (l == j + 1) return j;
  return -(j + 1);  // l == -j
}

int lower_letter(int l, int j) {  // f_j on a single letter
  if (l == j) return j + 1;
  return -j;  // l == -(j+1)
}

}  // namespace

std::vector<int> word_weight(const Word& w, int n) {
  check_word(w, n);
  std::vector<int> wt(n, 0);
  for (int l : w) {
    if (l > 0)
      wt[l - 1]++;
    else
      wt[-l - 1]--;
  }
  return wt;
}

int eps(const Word& w, int n, int j) {
  check_word(w, n);
  return static_cast<int>(scan_word(w, j).surviving_minus.size());
}

int phi(const Word& w, int n, int j) {
  check_word(w, n);
  return static_cast<int>(scan_word(w, j).surviving_plus.size());
}

int e_position(const Word& w, int n, int j) {
  check_word(w, n);
  Scan s = scan_word(w, j);
  if (s.surviving_minus.empty()) return -1;
  return s.surviving_minus.back();
}

int f_position(const Word& w, int n, int j) {
  check_word(w, n);
  Scan s = scan_word(w, j);
  if (s.surviving_plus.empty()) return -1;
  return s.surviving_plus.front();
}

std::optional<Word> e_tilde(const Word& w, int n, int j) {
  int p = e_position(w, n, j);
  if (p < 0) return std::nullopt;
  Word r = w;
  r[p] = raise_letter(r[p], j);
  return r;
}

std::optional<Word> f_tilde(const Word& w, int n, int j) {
  int p = f_position(w, n, j);
  if (p < 0) return std::nullopt;
  Word r = w;
  r[p] = lower_letter(r[p], j);
  return r;
}

int eps_by_application(const Word& w, int n, int j) {
  int k = 0;
  Word cur = w;
  while (auto nx = e_tilde(cur, n, j)) {
    cur = *nx;
    ++k;
  }
  return k;
}

int phi_by_application(const Word& w, int n, int j) {
  int k = 0;
  Word cur = w;
  while (auto nx = f_tilde(cur, n, j)) {
    cur = *nx;
    ++k;
  }
  return k;
}

Word weyl_S(const Word& w, int n, int j) {
  int k = phi(w, n, j) - eps(w, n, j);  // <wt, h_j>
  Word cur = w;
  for (int i = 0; i < k; ++i) cur = *f_tilde(cur, n, j);
  for (int i = 0; i < -k; ++i) cur = *e_tilde(cur, n, j);
  return cur;
}

int eps_alpha(const Word& w, int n, int s, int t) {
  if (!(1 <= s && s < t && t <= n))
    throw ValidationError("eps_alpha: need 1 <= s < t <= n");
  Word cur = w;
  for (int j = t - 1; j >= s + 1; --j) cur = weyl_S(cur, n, j);
  return eps(cur, n, s);
}

int phi_alpha(const Word& w, int n, int s, int t) {
  if (!(1 <= s && s < t && t <= n))
    throw ValidationError("phi_alpha: need 1 <= s < t <= n");
  Word cur = w;
  for (int j = t - 1; j >= s + 1; --j) cur = weyl_S(cur, n, j);
  return phi(cur, n, s);
}

std::pair<Word, std::vector<int>> to_dominant(const Word& w, int n) {
  Word cur = w;
  std::vector<int> applied;
  bool moved = true;
  while (moved) {
    moved = false;
    std::vector<int> wt = word_weight(cur, n);
    for (int j = 1; j <= n - 1; ++j) {
      if (wt[j - 1] < wt[j]) {
        cur = weyl_S(cur, n, j);
        applied.push_back(j);
        moved = true;
        break;
      }
    }
  }
  return {cur, applied};
}

int charge(const Word& w, int n) {
  int total = 0;
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t)
      total += std::min(eps_alpha(w, n, s, t), phi_alpha(w, n, s, t));
  return total;
}

int charge_ls(const Word& w, int n) {
  check_word(w, n);
  std::vector<int> content(n, 0);
  for (int l : w) {
    if (l <= 0) throw ValidationError("charge_ls needs positive letters");
    content[l - 1]++;
  }
  if (!weakly_decreasing(content))
    throw ValidationError("charge_ls needs partition content");
  int m = 0;
  while (m < n && content[m] > 0) ++m;  // largest letter present
  int L = static_cast<int>(w.size());
  std::vector<bool> used(L, false);
  int total = 0;
  int words = content.empty() ? 0 : content[0];
  for (int rep = 0; rep < words; ++rep) {
    // Extract one standard subword scanning right to left, cyclically.
    int lim = m;
    while (lim > 0 && content[lim - 1] <= rep) --lim;  // letters still needed
    int pos = L;  // scan starts at the right end
    int prev_pos = -1, prev_index = 0;
    for (int letter = 1; letter <= lim; ++letter) {
      int found = -1;
      for (int step = 0; step < L; ++step) {
        pos = (pos - 1 + L) % L;
        if (!used[pos] && w[pos] == letter) {
          found = pos;
          break;
        }
      }
      if (found < 0)
        throw ValidationError("charge_ls: extraction failed");
      used[found] = true;
      int index = prev_index;
      if (letter > 1 && found > prev_pos) index += 1;
      total += index;
      prev_pos = found;
      prev_index = index;
      pos = found;  // continue leftward from here
    }
  }
  return total;
}

namespace {

// Canonical raising path: repeatedly apply e_j for the least j with eps_j > 0.
std::vector<int> raising_path(const Word& w, int n) {
  std::vector<int> path;
  Word cur = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 1; j <= n - 1; ++j) {
      if (eps(cur, n, j) > 0) {
        cur = *e_tilde(cur, n, j);
        path.push_back(j);
        moved = true;
        break;
      }
    }
  }
  return path;
}

}  // namespace

bool crystal_equiv(const Word& a, const Word& b, int n, bool mod_shift) {
  std::vector<int> wa = word_weight(a, n), wb = word_weight(b, n);
  if (mod_shift) {
    if (n == 0) return true;
    int d = wa[0] - wb[0];
    for (int i = 0; i < n; ++i)
      if (wa[i] - wb[i] != d) return false;
  } else if (wa != wb) {
    return false;
  }
  return raising_path(a, n) == raising_path(b, n);
}

namespace {

// Box positions of the column word, parallel to rational_word(t).
std::vector<std::pair<int, int>> rational_word_boxes(const RationalTableau& t) {
  std::vector<std::pair<int, int>> boxes;
  int cmax = 0, cmin = 0;
  for (int s : t.shape) {
    cmax = std::max(cmax, s);
    cmin = std::min(cmin, s);
  }
  for (int c = cmax; c >= cmin; --c) {
    if (c == 0) continue;
    for (int i = 0; i < t.n; ++i) {
      int s = t.shape[i];
      bool inside = c > 0 ? s >= c : s <= c;
      if (inside) boxes.push_back({i, c});
    }
  }
  return boxes;
}

std::optional<RationalTableau> apply_op(const RationalTableau& t, int j,
                                        bool lowering) {
  Word w = rational_word(t);
  int p = lowering ? f_position(w, t.n, j) : e_position(w, t.n, j);
  if (p < 0) return std::nullopt;
  auto boxes = rational_word_boxes(t);
  auto [i, c] = boxes[p];
  RationalTableau r = t;
  int idx = c > 0 ? c - 1 : c - t.shape[i];
  r.rows[i][idx] = lowering ? lower_letter(w[p], j) : raise_letter(w[p], j);
  if (!validate_rational(r))
    throw ValidationError("crystal operator left SST(lambda)");
  return r;
}

}  // namespace

std::optional<RationalTableau> e_tilde(const RationalTableau& t, int j) {
  return apply_op(t, j, false);
}

std::optional<RationalTableau> f_tilde(const RationalTableau& t, int j) {
  return apply_op(t, j, true);
}

int charge(const RationalTableau& t) {
  return charge(rational_word(t), t.n);
}

}  // namespace fock
