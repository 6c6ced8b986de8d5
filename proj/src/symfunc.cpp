#include "fock/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fock/crystal.hpp"
#include "fock/energy.hpp"
#include "fock/rational.hpp"

namespace fock {

QPoly QPoly::q_power(int k, long long c) {
  QPoly p;
  if (c != 0) p.c_[k] = c;
  return p;
}

long long QPoly::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? 0 : it->second;
}

long long QPoly::eval_at_one() const {
  long long s = 0;
  for (const auto& [k, c] : c_) s += c;
  return s;
}

void QPoly::set(int k, long long c) {
  if (c == 0)
    c_.erase(k);
  else
    c_[k] = c;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [k, c] : o.c_) set(k, coeff(k) + c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [k, c] : o.c_) set(k, coeff(k) - c);
  return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  r += o;
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r = *this;
  r -= o;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r;
  for (const auto& [k1, c1] : c_)
    for (const auto& [k2, c2] : o.c_) r.set(k1 + k2, r.coeff(k1 + k2) + c1 * c2);
  return r;
}

QPoly QPoly::divide_exact(const QPoly& d) const {
  if (d.is_zero()) throw ValidationError("QPoly division by zero");
  QPoly rem = *this, quo;
  int dd = d.degree();
  long long dl = d.c_.rbegin()->second;
  while (!rem.is_zero() && rem.degree() >= dd) {
    int k = rem.degree() - dd;
    long long c = rem.c_.rbegin()->second;
    if (c % dl != 0) throw ValidationError("QPoly division not exact");
    long long f = c / dl;
    quo.set(k, quo.coeff(k) + f);
    rem -= d * QPoly::q_power(k, f);
  }
  if (!rem.is_zero()) throw ValidationError("QPoly division not exact");
  return quo;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : c_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    long long a = std::llabs(c);
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "q";
      if (k != 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

int VarSet::index(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw ValidationError("unknown variable: " + name);
}

VarSet x_vars(int n) {
  VarSet v;
  for (int i = 1; i <= n; ++i) v.names.push_back("x" + std::to_string(i));
  return v;
}

VarSet ab_vars(const Alphabet& a, const Alphabet& b) {
  VarSet v;
  for (const auto& l : a.letters()) v.names.push_back("x(" + l.id + ")");
  for (const auto& l : b.letters()) v.names.push_back("x(" + l.id + ")");
  return v;
}

VarSet join(const VarSet& u, const VarSet& v) {
  VarSet w = u;
  w.names.insert(w.names.end(), v.names.begin(), v.names.end());
  return w;
}

GradedPoly GradedPoly::constant(VarSet vars, QPoly c) {
  GradedPoly p(std::move(vars));
  if (!c.is_zero()) p.t_[std::vector<int>(p.vars_.names.size(), 0)] = c;
  return p;
}

void GradedPoly::add_term(const std::vector<int>& exps, const QPoly& c) {
  if (exps.size() != vars_.names.size())
    throw ValidationError("exponent vector does not match variable set");
  auto it = t_.find(exps);
  if (it == t_.end()) {
    if (!c.is_zero()) t_[exps] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

QPoly GradedPoly::coeff(const std::vector<int>& exps) const {
  auto it = t_.find(exps);
  return it == t_.end() ? QPoly() : it->second;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  if (!(vars_ == o.vars_)) throw ValidationError("variable set mismatch");
  GradedPoly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
  if (!(vars_ == o.vars_)) throw ValidationError("variable set mismatch");
  GradedPoly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, QPoly() - c);
  return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
  if (!(vars_ == o.vars_)) throw ValidationError("variable set mismatch");
  GradedPoly r(vars_);
  std::vector<int> e(vars_.names.size());
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

GradedPoly GradedPoly::scaled(const QPoly& c) const {
  GradedPoly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : t_) r.add_term(e, k * c);
  return r;
}

GradedPoly GradedPoly::divide_exact(const GradedPoly& d) const {
  if (!(vars_ == d.vars_)) throw ValidationError("variable set mismatch");
  if (d.is_zero()) throw ValidationError("polynomial division by zero");
  GradedPoly rem = *this, quo(vars_);
  const auto& dl = *d.t_.rbegin();  // lex-leading term of the divisor
  while (!rem.is_zero()) {
    const auto& rl = *rem.t_.rbegin();
    std::vector<int> e(vars_.names.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = rl.first[i] - dl.first[i];
    QPoly f = rl.second.divide_exact(dl.second);
    GradedPoly m(vars_);
    m.add_term(e, f);
    quo = quo + m;
    rem = rem - m * d;
    // progress check: the leading term must strictly drop
    if (!rem.is_zero() && !(rem.t_.rbegin()->first < rl.first))
      throw ValidationError("polynomial division not exact");
  }
  return quo;
}

GradedPoly GradedPoly::divide_coeffs(const QPoly& c) const {
  GradedPoly r(vars_);
  for (const auto& [e, k] : t_) r.add_term(e, k.divide_exact(c));
  return r;
}

GradedPoly GradedPoly::shifted(const std::vector<int>& delta) const {
  if (delta.size() != vars_.names.size())
    throw ValidationError("shift vector does not match variable set");
  GradedPoly r(vars_);
  std::vector<int> e(delta.size());
  for (const auto& [e1, c] : t_) {
    for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + delta[i];
    r.add_term(e, c);
  }
  return r;
}

std::string GradedPoly::to_string() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, QPoly>> terms(t_.begin(), t_.end());
  auto absdeg = [](const std::vector<int>& e) {
    long long s = 0;
    for (int x : e) s += std::abs(x);
    return s;
  };
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) {
                     long long da = absdeg(a.first), db = absdeg(b.first);
                     if (da != db) return da < db;
                     return a.first < b.first;
                   });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << vars_.names[i];
      if (e[i] != 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}

GradedPoly tensor(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly r(join(a.vars(), b.vars()));
  for (const auto& [e1, c1] : a.terms())
    for (const auto& [e2, c2] : b.terms()) {
      std::vector<int> e = e1;
      e.insert(e.end(), e2.begin(), e2.end());
      r.add_term(e, c1 * c2);
    }
  return r;
}

GradedPoly schur(const GenPartition& lambda, int n) {
  check_gen_partition(lambda, n);
  GradedPoly r(x_vars(n));
  for (const RationalTableau& t : enumerate_rational(n, lambda))
    r.add_term(weight_rational(t), QPoly(1));
  return r;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

GradedPoly vandermonde(int n) {
  VarSet xs = x_vars(n);
  GradedPoly v = GradedPoly::constant(xs, QPoly(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GradedPoly f(xs);
      std::vector<int> e(n, 0);
      e[i] = 1;
      f.add_term(e, QPoly(1));
      e[i] = 0;
      e[j] = 1;
      f.add_term(e, QPoly(-1));
      v = v * f;
    }
  return v;
}

}  // namespace

GradedPoly schur_bialternant(const GenPartition& lambda, int n) {
  check_gen_partition(lambda, n);
  int d = std::max(0, -lambda[n - 1]);
  VarSet xs = x_vars(n);
  GradedPoly num(xs);
  for (const auto& p : all_permutations(n)) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < n; ++i) e[p[i]] = lambda[i] + d + (n - 1 - i);
    num.add_term(e, QPoly(perm_sign(p)));
  }
  GradedPoly s = num.divide_exact(vandermonde(n));
  return s.shifted(std::vector<int>(n, -d));
}

namespace {

QPoly q_factorial_bracket(int m) {
  QPoly r(1);
  for (int j = 1; j <= m; ++j) {
    QPoly f;
    for (int k = 0; k < j; ++k) f += QPoly::q_power(k);
    r = r * f;
  }
  return r;
}

QPoly v_mu(const Partition& mu_padded) {
  std::map<int, int> mult;
  for (int p : mu_padded) mult[p]++;
  QPoly r(1);
  for (const auto& [part, m] : mult) r = r * q_factorial_bracket(m);
  return r;
}

GradedPoly hl_partition(const Partition& mu, int n) {
  VarSet xs = x_vars(n);
  // F = x^mu * prod_{i<j} (x_i - q x_j)
  GradedPoly f(xs);
  {
    std::vector<int> e = pad(mu, n);
    e.resize(n);
    f.add_term(e, QPoly(1));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GradedPoly g(xs);
      std::vector<int> e(n, 0);
      e[i] = 1;
      g.add_term(e, QPoly(1));
      e[i] = 0;
      e[j] = 1;
      g.add_term(e, QPoly() - QPoly::q_power(1));
      f = f * g;
    }
  GradedPoly num(xs);
  for (const auto& p : all_permutations(n)) {
    GradedPoly w(xs);
    std::vector<int> e(n);
    for (const auto& [e1, c] : f.terms()) {
      for (int i = 0; i < n; ++i) e[p[i]] = e1[i];
      w.add_term(e, c);
    }
    num = num + (perm_sign(p) > 0 ? w : GradedPoly(xs) - w);
  }
  GradedPoly sym = num.divide_exact(vandermonde(n));
  return sym.divide_coeffs(v_mu(pad(mu, n)));
}

}  // namespace

GradedPoly hall_littlewood(const GenPartition& mu, int n) {
  check_gen_partition(mu, n);
  int d = std::max(0, -mu[n - 1]);
  auto padded = [&](int dd) {
    Partition m = mu;
    for (int& x : m) x += dd;
    return m;
  };
  GradedPoly p =
      hl_partition(padded(d), n).shifted(std::vector<int>(n, -d));
  GradedPoly p2 =
      hl_partition(padded(d + 1), n).shifted(std::vector<int>(n, -d - 1));
  if (!(p == p2))
    throw ValidationError("hall_littlewood: padding dependence detected");
  return p;
}

std::map<GenPartition, QPoly> kostka_charge_table(const GenPartition& lambda,
                                                  int n) {
  check_gen_partition(lambda, n);
  int d = std::max(0, -lambda[n - 1]);
  std::vector<int> outer(n);
  for (int i = 0; i < n; ++i) outer[i] = lambda[i] + d;
  Alphabet al = Alphabet::preset("[" + std::to_string(n) + "]");
  std::map<GenPartition, QPoly> table;
  for (const SuperTableau& t :
       enumerate_sst(al, outer, std::vector<int>(n, 0))) {
    std::vector<int> wt(n, 0);
    for (const auto& row : t.rows)
      for (int r : row) wt[r]++;
    if (!weakly_decreasing(wt)) continue;  // dominant weights only
    Word w;
    for (int r : word_col(t)) w.push_back(r + 1);
    int c = charge(w, n);
    GenPartition mu(n);
    for (int i = 0; i < n; ++i) mu[i] = wt[i] - d;
    table[mu] += QPoly::q_power(c);
  }
  return table;
}

QPoly kostka_foulkes_charge(const GenPartition& lambda, const GenPartition& mu,
                            int n) {
  check_gen_partition(mu, n);
  auto table = kostka_charge_table(lambda, n);
  auto it = table.find(mu);
  return it == table.end() ? QPoly() : it->second;
}

QPoly kostka_foulkes_hl(const GenPartition& lambda, const GenPartition& mu,
                        int n) {
  check_gen_partition(lambda, n);
  check_gen_partition(mu, n);
  GradedPoly f = schur(lambda, n);
  QPoly result;
  bool found = false;
  while (!f.is_zero()) {
    // dominance-maximal dominant monomial = lex-largest dominant exponent
    std::vector<int> best;
    bool have = false;
    for (const auto& [e, c] : f.terms()) {
      if (!weakly_decreasing(e)) continue;
      if (!have || best < e) {
        best = e;
        have = true;
      }
    }
    if (!have)
      throw ValidationError("kostka_foulkes_hl: no dominant monomial left");
    QPoly k = f.coeff(best);
    if (best == mu) {
      result = k;
      found = true;
    }
    f = f - hall_littlewood(best, n).scaled(k);
  }
  return found ? result : QPoly();
}

GradedPoly s_char(const Alphabet& a, const Alphabet& b, int n,
                  const GenPartition& lambda, const CharBound& bound) {
  GradedPoly r(ab_vars(a, b));
  visit_psst(a, b, n, lambda, {bound.d_max}, [&](const Psst& t) {
    std::vector<int> e(a.size() + b.size(), 0);
    for (const auto& row : t.plus.rows)
      for (int rk : row) e[rk]++;
    for (const auto& row : t.minus.rows)
      for (int rk : row) e[a.size() + rk]--;
    r.add_term(e, QPoly(1));
    return true;
  });
  return r;
}

namespace {

std::vector<int> tuple_exponents(const Alphabet& a, const Alphabet& b,
                                 const std::vector<Level1>& entries) {
  std::vector<int> e(a.size() + b.size(), 0);
  for (const Level1& t : entries) {
    for (int rk : t.plus) e[rk]++;
    for (int rk : t.minus) e[a.size() + rk]--;
  }
  return e;
}

}  // namespace

GradedPoly q_char_energy(const Alphabet& a, const Alphabet& b,
                         const GenPartition& mu, const CharBound& bound) {
  int n = static_cast<int>(mu.size());
  check_gen_partition(mu, n);
  std::vector<std::vector<Level1>> per_slot;
  for (int i = 0; i < n; ++i)
    per_slot.push_back(enumerate_level1(a, b, mu[i], bound.d_max));
  GradedPoly r(ab_vars(a, b));
  FockTuple t;
  t.A = a;
  t.B = b;
  t.entries.resize(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      long long d = global_d(t);
      r.add_term(tuple_exponents(a, b, t.entries),
                 QPoly::q_power(static_cast<int>(-d)));
      return;
    }
    for (const Level1& x : per_slot[i]) {
      t.entries[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return r;
}

GradedPoly q_char_kostka(const Alphabet& a, const Alphabet& b,
                         const GenPartition& mu, const CharBound& bound) {
  int n = static_cast<int>(mu.size());
  check_gen_partition(mu, n);
  GradedPoly r(ab_vars(a, b));
  for (const GenPartition& la :
       gen_partitions(n, -bound.degree_box, bound.degree_box, total(mu))) {
    if (!dominated(mu, la)) continue;
    QPoly k = kostka_foulkes_charge(la, mu, n);
    if (k.is_zero()) continue;
    r = r + s_char(a, b, n, la, bound).scaled(k);
  }
  return r;
}

namespace {

// deg_A and deg_B of a monomial over join(ab_vars, ...) or ab_vars.
std::pair<int, int> ab_degrees(const std::vector<int>& e, int asize,
                               int bsize) {
  int da = 0, db = 0;
  for (int i = 0; i < asize; ++i) da += e[i];
  for (int i = 0; i < bsize; ++i) db += -e[asize + i];
  return {da, db};
}

}  // namespace

CompareResult equal_on_captured(const GradedPoly& lhs, const GradedPoly& rhs,
                                const Alphabet& a, const Alphabet& b,
                                int box) {
  if (!(lhs.vars() == rhs.vars()))
    throw ValidationError("equal_on_captured: variable set mismatch");
  auto captured = [&](const std::vector<int>& e) {
    auto [da, db] = ab_degrees(e, a.size(), b.size());
    return da <= box && db <= box && da >= 0 && db >= 0;
  };
  CompareResult res;
  auto scan = [&](const GradedPoly& u, const GradedPoly& v) {
    for (const auto& [e, c] : u.terms()) {
      if (!captured(e)) continue;
      if (!(v.coeff(e) == c)) {
        res.ok = false;
        GradedPoly m(u.vars());
        m.add_term(e, c - v.coeff(e));
        res.mismatch = m.to_string();
        return false;
      }
    }
    return true;
  };
  if (scan(lhs, rhs)) scan(rhs, lhs);
  return res;
}

GradedPoly cauchy_product_side(const Alphabet& a, const Alphabet& b, int n,
                               int box) {
  VarSet vars = join(ab_vars(a, b), x_vars(n));
  int asize = a.size(), bsize = b.size();
  auto keep = [&](const std::vector<int>& e) {
    auto [da, db] = ab_degrees(e, asize, bsize);
    return da <= box && db <= box;
  };
  GradedPoly prod = GradedPoly::constant(vars, QPoly(1));
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < asize; ++r) {
      GradedPoly f(vars);
      std::vector<int> e(vars.names.size(), 0);
      int kmax = a.odd(r) ? 1 : box;
      for (int k = 0; k <= kmax; ++k) {
        e[r] = k;
        e[asize + bsize + i] = k;
        f.add_term(e, QPoly(1));
      }
      prod = (prod * f).filtered(keep);
    }
    for (int r = 0; r < bsize; ++r) {
      GradedPoly f(vars);
      std::vector<int> e(vars.names.size(), 0);
      int kmax = b.odd(r) ? 1 : box;
      for (int k = 0; k <= kmax; ++k) {
        e[asize + r] = -k;
        e[asize + bsize + i] = -k;
        f.add_term(e, QPoly(1));
      }
      prod = (prod * f).filtered(keep);
    }
  }
  return prod;
}

GradedPoly cauchy_sum_side(const Alphabet& a, const Alphabet& b, int n,
                           int box) {
  VarSet vars = join(ab_vars(a, b), x_vars(n));
  GradedPoly sum(vars);
  for (const GenPartition& la : gen_partitions(n, -box, box, 0, true)) {
    GradedPoly sc = s_char(a, b, n, la, {box, box});
    if (sc.is_zero()) continue;
    sum = sum + tensor(sc, schur(la, n));
  }
  return sum;
}

CompareResult cauchy_check(const Alphabet& a, const Alphabet& b, int n,
                           int box) {
  GradedPoly lhs = cauchy_product_side(a, b, n, box);
  GradedPoly rhs = cauchy_sum_side(a, b, n, box);
  return equal_on_captured(lhs, rhs, a, b, box);
}

}  // namespace fock
