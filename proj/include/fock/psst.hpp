#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "fock/partition.hpp"
#include "fock/rational.hpp"
#include "fock/tableau.hpp"

namespace fock {

/// Level-1 parabolically semistandard tableau in canonical form: a straight
/// row over A (ranks, sorted) and a straight row over B. The shape is
/// k = |plus| - |minus|, the witness d is |minus|.
struct Level1 {
  std::vector<int> plus;
  std::vector<int> minus;
  int k() const {
    return static_cast<int>(plus.size()) - static_cast<int>(minus.size());
  }
  bool operator==(const Level1& o) const {
    return plus == o.plus && minus == o.minus;
  }
  bool operator<(const Level1& o) const {
    return std::pair(plus, minus) < std::pair(o.plus, o.minus);
  }
};

struct FockTuple {
  Alphabet A, B;
  std::vector<Level1> entries;
  int n() const { return static_cast<int>(entries.size()); }
};

/// Parabolically semistandard tableau of level n in canonical form
/// (mu_n = 0): plus in SST_A((lambda+(d^n))/mu), minus in SST_B((d^n)/mu),
/// both stored with exactly n rows.
struct Psst {
  Alphabet A, B;
  int n = 0;
  GenPartition lambda;  // length n
  int d = 0;
  Partition mu;  // length n, mu[n-1] == 0
  SuperTableau plus;
  SuperTableau minus;
};

bool operator==(const Psst& a, const Psst& b);

/// Validates the shape conditions and translates (d, mu) to the canonical
/// representative with mu_n = 0. Fillings pass through unchanged.
Psst normalize_psst(const Alphabet& a, const Alphabet& b, int n, int d,
                    Partition mu, SuperTableau plus, SuperTableau minus);

Psst empty_psst(const Alphabet& a, const Alphabet& b, int n);

Psst level1_psst(const Alphabet& a, const Alphabet& b, const Level1& t);

/// Sparse weight wt_A(T+) - wt_B(T-); keys are (in_A, rank).
using WeightAB = std::map<std::pair<bool, int>, int>;
WeightAB weight_ab(const Psst& t);
WeightAB weight_ab(const Alphabet& a, const Alphabet& b, const Level1& t);

struct KappaResult {
  Psst p;
  RationalTableau q;
};

/// The RSK-type bijection of level-1 tuples with pairs (P_T, Q_T).
KappaResult kappa(const FockTuple& t);
FockTuple kappa_inverse(const Psst& p, const RationalTableau& q);

struct PsstBound {
  int d_max = 0;
};

/// Visit all canonical PSST of shape lambda with d <= bound.d_max and entries
/// in the (finite) alphabets; deterministic order: d, then mu, then fillings.
/// Stops early when the visitor returns false.
void visit_psst(const Alphabet& a, const Alphabet& b, int n,
                const GenPartition& lambda, const PsstBound& bound,
                const std::function<bool(const Psst&)>& visit);

std::vector<Psst> enumerate_psst(const Alphabet& a, const Alphabet& b, int n,
                                 const GenPartition& lambda,
                                 const PsstBound& bound);

/// Level-1 elements of shape k with d <= d_max, in lexicographic order.
std::vector<Level1> enumerate_level1(const Alphabet& a, const Alphabet& b,
                                     int k, int d_max);

/// Level-1 elements with |plus| + |minus| <= max_boxes.
std::vector<Level1> enumerate_level1_by_boxes(const Alphabet& a,
                                              const Alphabet& b,
                                              int max_boxes);

/// Shapes realized within the bound (size_max caps |lambda_1| and |lambda_n|).
std::vector<GenPartition> shapes_nonempty(const Alphabet& a, const Alphabet& b,
                                          int n, const PsstBound& bound,
                                          int size_max);

}  // namespace fock
