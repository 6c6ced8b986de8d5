#pragma once

#include <map>
#include <string>
#include <vector>

#include "fock/partition.hpp"
#include "fock/psst.hpp"

namespace fock {

/// Exact polynomial in q with integer coefficients, exponents >= 0.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(long long c) {
    if (c != 0) c_[0] = c;
  }
  static QPoly q_power(int k, long long c = 1);

  bool is_zero() const { return c_.empty(); }
  long long coeff(int k) const;
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  long long eval_at_one() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  /// Exact division; throws ValidationError when the remainder is nonzero.
  QPoly divide_exact(const QPoly& d) const;

  std::string to_string() const;  // e.g. "q + q^2", "1", "0"
  const std::map<int, long long>& coeffs() const { return c_; }
  void set(int k, long long c);

 private:
  std::map<int, long long> c_;
};

/// Ordered list of variable names shared by GradedPoly values.
struct VarSet {
  std::vector<std::string> names;
  bool operator==(const VarSet& o) const { return names == o.names; }
  int index(const std::string& name) const;
};

/// x1..xn.
VarSet x_vars(int n);
/// Letter variables of A then of B (exponents of B-letters run negative).
VarSet ab_vars(const Alphabet& a, const Alphabet& b);
/// Concatenation.
VarSet join(const VarSet& u, const VarSet& v);

/// Sparse exact Laurent polynomial over a VarSet with QPoly coefficients.
class GradedPoly {
 public:
  GradedPoly() = default;
  explicit GradedPoly(VarSet vars) : vars_(std::move(vars)) {}
  static GradedPoly constant(VarSet vars, QPoly c);

  const VarSet& vars() const { return vars_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<std::vector<int>, QPoly>& terms() const { return t_; }

  void add_term(const std::vector<int>& exps, const QPoly& c);
  QPoly coeff(const std::vector<int>& exps) const;

  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly operator-(const GradedPoly& o) const;
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly scaled(const QPoly& c) const;
  bool operator==(const GradedPoly& o) const {
    return vars_ == o.vars_ && t_ == o.t_;
  }

  /// Divide exactly by d (lex leading-term division); throws on remainder.
  GradedPoly divide_exact(const GradedPoly& d) const;
  /// Divide every coefficient by c exactly.
  GradedPoly divide_coeffs(const QPoly& c) const;
  /// Shift every exponent vector by delta.
  GradedPoly shifted(const std::vector<int>& delta) const;
  /// Keep only terms accepted by the predicate.
  template <typename Pred>
  GradedPoly filtered(Pred keep) const {
    GradedPoly r(vars_);
    for (const auto& [e, c] : t_)
      if (keep(e)) r.add_term(e, c);
    return r;
  }

  /// Deterministic order: total |degree|, then lex.
  std::string to_string() const;

 private:
  VarSet vars_;
  std::map<std::vector<int>, QPoly> t_;
};

/// Tensor product into join(a.vars(), b.vars()).
GradedPoly tensor(const GradedPoly& a, const GradedPoly& b);

/// Laurent Schur polynomial via rational tableau enumeration, in x_vars(n).
GradedPoly schur(const GenPartition& lambda, int n);
/// Bialternant determinant route (test oracle).
GradedPoly schur_bialternant(const GenPartition& lambda, int n);

/// Hall-Littlewood P_mu(x_[n]; q) by Weyl symmetrization, Laurent-shifted for
/// generalized mu (the shift independence is asserted internally).
GradedPoly hall_littlewood(const GenPartition& mu, int n);

/// Kostka-Foulkes polynomials: charge generating function, and coefficients
/// extracted from s_lambda = sum_mu K_{lambda mu}(q) P_mu.
QPoly kostka_foulkes_charge(const GenPartition& lambda, const GenPartition& mu,
                            int n);
QPoly kostka_foulkes_hl(const GenPartition& lambda, const GenPartition& mu,
                        int n);
/// All charge-route K_{lambda mu}(q) for dominant mu at once.
std::map<GenPartition, QPoly> kostka_charge_table(const GenPartition& lambda,
                                                  int n);

struct CharBound {
  int d_max = 0;     // PSST witness bound
  int degree_box = 0;  // cap on deg_A and deg_B of monomials
};

/// Character of SST_{A/B}(lambda) truncated to the bound, in ab_vars(A,B).
GradedPoly s_char(const Alphabet& a, const Alphabet& b, int n,
                  const GenPartition& lambda, const CharBound& bound);

/// Graded characters of F^mu: energy route (sum of q^{-D} x^T) and
/// Kostka route (sum of K_{lambda mu}(q) S^{A/B}_lambda).
GradedPoly q_char_energy(const Alphabet& a, const Alphabet& b,
                         const GenPartition& mu, const CharBound& bound);
GradedPoly q_char_kostka(const Alphabet& a, const Alphabet& b,
                         const GenPartition& mu, const CharBound& bound);

struct CompareResult {
  bool ok = true;
  std::string mismatch;  // printable counterexample monomial when !ok
};

/// Coefficientwise equality on captured monomials (deg_A <= box, deg_B <= box).
CompareResult equal_on_captured(const GradedPoly& lhs, const GradedPoly& rhs,
                                const Alphabet& a, const Alphabet& b, int box);

/// Both sides of the Cauchy-type identity, truncated to the degree box.
GradedPoly cauchy_product_side(const Alphabet& a, const Alphabet& b, int n,
                               int box);
GradedPoly cauchy_sum_side(const Alphabet& a, const Alphabet& b, int n,
                           int box);
CompareResult cauchy_check(const Alphabet& a, const Alphabet& b, int n,
                           int box);

}  // namespace fock
