#include "fock/psst.hpp"

#include <algorithm>

namespace fock {

bool operator==(const Psst& a, const Psst& b) {
  return a.A == b.A && a.B == b.B && a.n == b.n && a.lambda == b.lambda &&
         a.d == b.d && a.mu == b.mu && same_tableau(a.plus, b.plus) &&
         same_tableau(a.minus, b.minus);
}

namespace {

// Pad a straight-or-skew tableau to exactly n stored rows with the given
// outer/inner extensions (empty rows).
SuperTableau pad_rows(SuperTableau t, const std::vector<int>& outer,
                      const std::vector<int>& inner) {
  t.outer = outer;
  t.inner = inner;
  t.rows.resize(outer.size());
  for (size_t i = 0; i < outer.size(); ++i)
    if (static_cast<int>(t.rows[i].size()) != outer[i] - inner[i])
      throw ValidationError("psst filling does not match its shape");
  return t;
}

}  // namespace

Psst normalize_psst(const Alphabet& a, const Alphabet& b, int n, int d,
                    Partition mu, SuperTableau plus, SuperTableau minus) {
  if (n <= 0) throw ValidationError("psst level must be positive");
  if (d < 0) throw ValidationError("psst needs d >= 0");
  check_partition(mu);
  mu = pad(normalized(mu), n);
  if (static_cast<int>(mu.size()) != n || mu[0] > d)
    throw ValidationError("psst needs mu inside (d^n)");
  // shift to the canonical representative
  int k = mu[n - 1];
  d -= k;
  for (int& m : mu) m -= k;
  for (int& x : plus.outer) x -= k;
  for (int& x : plus.inner) x -= k;
  for (int& x : minus.outer) x -= k;
  for (int& x : minus.inner) x -= k;

  GenPartition lambda(n, 0);
  std::vector<int> plus_outer(n, 0);
  for (int i = 0; i < n; ++i)
    plus_outer[i] = i < plus.row_count() ? plus.outer[i] : 0;
  if (plus.row_count() > n)
    throw ValidationError("psst plus part has more than n rows");
  for (int i = 0; i < n; ++i) lambda[i] = plus_outer[i] - d;
  check_gen_partition(lambda, n);
  for (int i = 0; i < n; ++i)
    if (mu[i] > d || mu[i] > lambda[i] + d)
      throw ValidationError("psst needs mu inside (d^n) and lambda+(d^n)");

  Psst t;
  t.A = a;
  t.B = b;
  t.n = n;
  t.lambda = lambda;
  t.d = d;
  t.mu = mu;
  std::vector<int> mu_inner = mu;
  t.plus = pad_rows(std::move(plus), plus_outer, mu_inner);
  t.minus = pad_rows(std::move(minus), std::vector<int>(n, d), mu_inner);
  t.plus.alphabet = a;
  t.minus.alphabet = b;
  if (!validate(t.plus) || !validate(t.minus))
    throw ValidationError("psst filling is not semistandard");
  return t;
}

Psst empty_psst(const Alphabet& a, const Alphabet& b, int n) {
  SuperTableau p = empty_tableau(a), m = empty_tableau(b);
  p.outer.assign(n, 0);
  p.inner.assign(n, 0);
  p.rows.resize(n);
  m.outer.assign(n, 0);
  m.inner.assign(n, 0);
  m.rows.resize(n);
  return normalize_psst(a, b, n, 0, {}, std::move(p), std::move(m));
}

Psst level1_psst(const Alphabet& a, const Alphabet& b, const Level1& t) {
  int d = static_cast<int>(t.minus.size());
  SuperTableau plus = t.plus.empty() ? empty_tableau(a)
                                     : from_rows(a, {t.plus});
  SuperTableau minus = t.minus.empty() ? empty_tableau(b)
                                       : from_rows(b, {t.minus});
  if (plus.row_count() == 0) {
    plus.outer = {0};
    plus.inner = {0};
    plus.rows = {{}};
  }
  if (minus.row_count() == 0) {
    minus.outer = {0};
    minus.inner = {0};
    minus.rows = {{}};
  }
  return normalize_psst(a, b, 1, d, {}, std::move(plus), std::move(minus));
}

WeightAB weight_ab(const Psst& t) {
  WeightAB w;
  for (const auto& row : t.plus.rows)
    for (int r : row) w[{true, r}]++;
  for (const auto& row : t.minus.rows)
    for (int r : row) w[{false, r}]--;
  for (auto it = w.begin(); it != w.end();)
    it = it->second == 0 ? w.erase(it) : std::next(it);
  return w;
}

WeightAB weight_ab(const Alphabet&, const Alphabet&, const Level1& t) {
  WeightAB w;
  for (int r : t.plus) w[{true, r}]++;
  for (int r : t.minus) w[{false, r}]--;
  for (auto it = w.begin(); it != w.end();)
    it = it->second == 0 ? w.erase(it) : std::next(it);
  return w;
}

namespace {

// (T^-)^pi as a one-row tableau over pi_dual(B).
SuperTableau rotated_minus_row(const Alphabet& bpi, int bsize,
                               const Level1& t) {
  std::vector<int> row(t.minus.rbegin(), t.minus.rend());
  for (int& r : row) r = bsize - 1 - r;
  if (row.empty()) return empty_tableau(bpi);
  return from_rows(bpi, {row});
}

SuperTableau strip_trailing_empty(SuperTableau t) {
  while (!t.outer.empty() && t.outer.back() == t.inner.back()) {
    t.outer.pop_back();
    t.inner.pop_back();
    t.rows.pop_back();
  }
  return t;
}

}  // namespace

KappaResult kappa(const FockTuple& tuple) {
  const Alphabet& A = tuple.A;
  const Alphabet& B = tuple.B;
  int n = tuple.n();
  if (n == 0) throw ValidationError("kappa needs a nonempty tuple");
  Alphabet bpi = pi_dual(B);

  // (kappa-1)
  std::vector<SuperTableau> rot;
  for (const Level1& t : tuple.entries)
    rot.push_back(rotated_minus_row(bpi, B.size(), t));
  RhoResult pq = rho_col(rot);
  SuperTableau p = pq.s;
  int d = p.outer.empty() ? 0 : p.outer[0];
  std::vector<int> outer_n = pad(p.outer, n), inner_n = pad(p.inner, n);
  SuperTableau t_minus =
      rotate_pi(make_tableau(bpi, outer_n, inner_n,
                             [&] {
                               auto rows = p.rows;
                               rows.resize(n);
                               return rows;
                             }()));
  t_minus.alphabet = B;
  Partition mu = t_minus.inner;  // mu_n = d - sh(P)_1 = 0

  // (kappa-2)
  RationalTableau q1 = rational_from_tableau(n, pq.recording);
  RationalTableau qvee = delta(q1, d);
  SuperTableau hmu = key_tableau(mu, n);
  std::vector<SuperTableau> s = rho_row_inverse(hmu, tableau_from_rational(qvee));

  // (kappa-3)
  std::vector<SuperTableau> u(n);
  for (int i = 0; i < n; ++i) {
    const Level1& ti = tuple.entries[i];
    int nu_i = i < static_cast<int>(s.size()) && s[i].row_count() > 0
                   ? s[i].outer[0]
                   : 0;
    SuperTableau tplus;
    tplus.alphabet = A;
    if (!ti.plus.empty()) {
      tplus.outer = {nu_i + static_cast<int>(ti.plus.size())};
      tplus.inner = {nu_i};
      tplus.rows = {ti.plus};
    } else {
      tplus = empty_tableau(A);
    }
    u[i] = glue(s[i], tplus);
  }
  RhoResult ur = rho_row(u);

  // (kappa-4)
  Alphabet nA = Alphabet::preset("[" + std::to_string(n) + "]");
  auto [h2, tplus_all] = split(ur.s, nA, A);
  if (!same_tableau(h2, hmu))
    throw ValidationError("kappa: [n]-part of U is not the key tableau");
  GenPartition lambda(n, 0);
  for (int i = 0; i < n; ++i)
    lambda[i] = (i < ur.s.row_count() ? ur.s.outer[i] : 0) - d;
  check_gen_partition(lambda, n);

  SuperTableau plus = tplus_all;
  plus.alphabet = A;
  std::vector<int> pouter(n), pinner(n);
  for (int i = 0; i < n; ++i) {
    pouter[i] = lambda[i] + d;
    pinner[i] = std::min(mu[i], pouter[i]);
  }
  plus.outer = pouter;
  plus.inner = pinner;
  plus.rows.resize(n);

  Psst pt = normalize_psst(A, B, n, d, mu, std::move(plus), std::move(t_minus));

  RationalTableau ur_rat = rational_from_tableau(n, ur.recording);
  for (int k = 0; k < d; ++k) ur_rat = sigma_inverse(ur_rat);
  if (!validate_rational(ur_rat))
    throw ValidationError("kappa: recording tableau invalid");
  return {std::move(pt), std::move(ur_rat)};
}

FockTuple kappa_inverse(const Psst& p, const RationalTableau& q) {
  int n = p.n;
  if (q.n != n || q.shape != p.lambda)
    throw ValidationError("kappa_inverse: incompatible shapes");
  if (!validate_rational(q))
    throw ValidationError("kappa_inverse: invalid rational tableau");
  const Alphabet& A = p.A;
  const Alphabet& B = p.B;
  int d = p.d;

  // Undo (kappa-4): U = H^mu * T+, U_R = sigma^d(Q).
  SuperTableau hmu = key_tableau(p.mu, n);
  SuperTableau u = glue(hmu, p.plus);
  RationalTableau ur_rat = q;
  for (int k = 0; k < d; ++k) ur_rat = sigma(ur_rat);
  SuperTableau ur = tableau_from_rational(ur_rat);

  // Undo (kappa-3).
  std::vector<SuperTableau> us = rho_row_inverse(u, ur);
  Alphabet nA = Alphabet::preset("[" + std::to_string(n) + "]");
  std::vector<std::vector<int>> plus_rows(n);
  std::vector<SuperTableau> s(n);
  for (int i = 0; i < n; ++i) {
    auto [si, ti] = split(us[i], nA, A);
    s[i] = std::move(si);
    if (ti.row_count() > 1)
      throw ValidationError("kappa_inverse: malformed U_i");
    if (ti.row_count() == 1) plus_rows[i] = ti.rows[0];
  }

  // Undo (kappa-2): recover Q from Q_vee.
  RhoResult hq = rho_row(s);
  if (!same_tableau(hq.s, hmu))
    throw ValidationError("kappa_inverse: S_i do not rebuild the key tableau");
  RationalTableau qvee = rational_from_tableau(n, hq.recording);
  RationalTableau q1 = delta_inverse(qvee, d);

  // Undo (kappa-1).
  SuperTableau p_col = strip_trailing_empty(rotate_pi(p.minus));
  std::vector<SuperTableau> rot =
      rho_col_inverse(p_col, tableau_from_rational(q1));

  FockTuple out;
  out.A = A;
  out.B = B;
  out.entries.resize(n);
  for (int i = 0; i < n; ++i) {
    out.entries[i].plus = plus_rows[i];
    std::vector<int> m;
    if (rot[i].row_count() == 1)
      for (int r : rot[i].rows[0]) m.push_back(B.size() - 1 - r);
    std::reverse(m.begin(), m.end());
    out.entries[i].minus = std::move(m);
  }
  return out;
}

namespace {

bool visit_fillings(const Alphabet& a, const Alphabet& b, int n, int d,
                    const Partition& mu, const GenPartition& lambda,
                    const std::function<bool(const Psst&)>& visit) {
  std::vector<int> pouter(n), douter(n, d), inner(mu);
  for (int i = 0; i < n; ++i) pouter[i] = lambda[i] + d;
  for (const SuperTableau& plus : enumerate_sst(a, pouter, inner))
    for (const SuperTableau& minus : enumerate_sst(b, douter, inner)) {
      Psst t = normalize_psst(a, b, n, d, mu, plus, minus);
      if (!visit(t)) return false;
    }
  return true;
}

}  // namespace

void visit_psst(const Alphabet& a, const Alphabet& b, int n,
                const GenPartition& lambda, const PsstBound& bound,
                const std::function<bool(const Psst&)>& visit) {
  check_gen_partition(lambda, n);
  for (int d = std::max(0, -lambda[n - 1]); d <= bound.d_max; ++d) {
    // canonical representatives only: mu_n = 0
    std::vector<int> cap(n);
    for (int i = 0; i < n; ++i) cap[i] = std::min(d, lambda[i] + d);
    std::function<bool(Partition&)> rec_done = [&](Partition& mu) {
      Partition padded = pad(mu, n);
      if (padded[n - 1] != 0) return true;
      return visit_fillings(a, b, n, d, padded, lambda, visit);
    };
    // enumerate mu with mu_i <= cap[i], weakly decreasing, mu_n = 0
    std::vector<int> mu;
    std::function<bool(int)> rec = [&](int i) -> bool {
      if (i == n) {
        Partition m = mu;
        return rec_done(m);
      }
      int hi = std::min(i == 0 ? cap[0] : std::min(mu[i - 1], cap[i]),
                        i == n - 1 ? 0 : cap[i]);
      for (int v = 0; v <= hi; ++v) {
        mu.push_back(v);
        bool cont = rec(i + 1);
        mu.pop_back();
        if (!cont) return false;
      }
      return true;
    };
    if (!rec(0)) return;
  }
}

std::vector<Psst> enumerate_psst(const Alphabet& a, const Alphabet& b, int n,
                                 const GenPartition& lambda,
                                 const PsstBound& bound) {
  std::vector<Psst> out;
  visit_psst(a, b, n, lambda, bound, [&](const Psst& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

namespace {

// Weakly increasing rows with odd letters strict: subsets interleaved with
// multiplicities on even letters.
void rows_of_length(const Alphabet& al, int len, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int r = lo; r < al.size(); ++r) {
    if (!cur.empty() && r == cur.back() && al.odd(r)) continue;
    cur.push_back(r);
    rows_of_length(al, len, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> all_rows(const Alphabet& al, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  rows_of_length(al, len, cur, out);
  return out;
}

}  // namespace

std::vector<Level1> enumerate_level1(const Alphabet& a, const Alphabet& b,
                                     int k, int d_max) {
  std::vector<Level1> out;
  for (int d = std::max(0, -k); d <= d_max; ++d) {
    for (const auto& pr : all_rows(a, k + d))
      for (const auto& mr : all_rows(b, d)) out.push_back({pr, mr});
  }
  return out;
}

std::vector<Level1> enumerate_level1_by_boxes(const Alphabet& a,
                                              const Alphabet& b,
                                              int max_boxes) {
  std::vector<Level1> out;
  for (int p = 0; p <= max_boxes; ++p)
    for (int d = 0; p + d <= max_boxes; ++d)
      for (const auto& pr : all_rows(a, p))
        for (const auto& mr : all_rows(b, d)) out.push_back({pr, mr});
  return out;
}

std::vector<GenPartition> shapes_nonempty(const Alphabet& a, const Alphabet& b,
                                          int n, const PsstBound& bound,
                                          int size_max) {
  std::vector<GenPartition> out;
  for (const GenPartition& la :
       gen_partitions(n, -size_max, size_max, 0, true)) {
    bool found = false;
    visit_psst(a, b, n, la, bound, [&](const Psst&) {
      found = true;
      return false;
    });
    if (found) out.push_back(la);
  }
  return out;
}

}  // namespace fock
