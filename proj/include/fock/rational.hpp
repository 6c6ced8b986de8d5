#pragma once

#include <vector>

#include "fock/partition.hpp"
#include "fock/tableau.hpp"

namespace fock {

/// Rational semistandard tableau of rank n: a filling of a generalized
/// partition with entries in [n] (positive columns) and [-n] (negative
/// columns). rows[i] lists the entries of row i left to right; row i occupies
/// columns 1..shape[i] when shape[i] > 0 and columns shape[i]..-1 when < 0.
struct RationalTableau {
  int n = 0;
  GenPartition shape;  // length n
  std::vector<std::vector<int>> rows;  // signed entries, |rows[i]| == |shape[i]|

  bool structurally_ok() const;
};

RationalTableau make_rational(int n, GenPartition shape,
                              std::vector<std::vector<int>> rows);
RationalTableau empty_rational(int n);

bool operator==(const RationalTableau& a, const RationalTableau& b);

/// Conditions (1)-(3): positive part [n]-semistandard, negative part
/// [-n]-semistandard, and the first-column compatibility b_i'' <= b_i.
bool validate_rational(const RationalTableau& t);

/// Weight as a length-n vector of (occurrences of i) - (occurrences of -i).
std::vector<int> weight_rational(const RationalTableau& t);

/// Column-reading word over [n] and [-n] (columns right to left, top to
/// bottom), positive letters first.
std::vector<int> rational_word(const RationalTableau& t);

/// Shape-shifting bijections: sigma adds (1^n), sigma_inverse removes it.
RationalTableau sigma(const RationalTableau& t);
RationalTableau sigma_inverse(const RationalTableau& t);

/// delta_d(T) = (sigma^{-d}(T))^pi with -k in [-n]^pi read as k; requires a
/// partition shape with d >= shape[0].
RationalTableau delta(const RationalTableau& t, int d);

/// Inverse of delta given the same d: from shape mu back to shape
/// (d - mu_n, ..., d - mu_1).
RationalTableau delta_inverse(const RationalTableau& qvee, int d);

/// All rational semistandard tableaux of the given shape.
std::vector<RationalTableau> enumerate_rational(int n, const GenPartition& shape);

/// Conversions with the (all even) tableau layer: a partition-shaped rational
/// tableau is a SuperTableau over [n] and vice versa.
RationalTableau rational_from_tableau(int n, const SuperTableau& t);
SuperTableau tableau_from_rational(const RationalTableau& t);

}  // namespace fock
