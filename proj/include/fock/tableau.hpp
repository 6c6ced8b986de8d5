#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fock/alphabet.hpp"
#include "fock/partition.hpp"

namespace fock {

struct Box {
  int row = 0, col = 0;  // 0-based
  bool operator==(const Box& o) const { return row == o.row && col == o.col; }
};

/// A filling of a skew shape outer/inner with ranks of `alphabet`.
/// rows[i] holds the boxes of row i left to right (inner[i] boxes skipped).
struct SuperTableau {
  Alphabet alphabet;
  std::vector<int> outer;  // one entry per stored row, weakly decreasing
  std::vector<int> inner;  // same length as outer, inner[i] <= outer[i]
  std::vector<std::vector<int>> rows;

  int row_count() const { return static_cast<int>(outer.size()); }
  long long box_count() const;
  bool structurally_ok() const;  // shapes consistent, rows fit
  bool empty_shape() const { return box_count() == 0; }
};

SuperTableau make_tableau(Alphabet alphabet, std::vector<int> outer,
                          std::vector<int> inner,
                          std::vector<std::vector<int>> rows);

/// Straight-shape tableau from rows alone.
SuperTableau from_rows(Alphabet alphabet, std::vector<std::vector<int>> rows);

SuperTableau empty_tableau(Alphabet alphabet);

/// Structural equality after dropping empty rows and normalizing the inner
/// offset of fully-empty shapes.
bool same_tableau(const SuperTableau& a, const SuperTableau& b);

/// Super semistandard conditions: rows/columns weakly increasing, even
/// letters strict down columns, odd letters strict along rows.
/// Throws ValidationError if the filling does not fit the shape.
bool validate(const SuperTableau& t);

std::vector<int> word_col(const SuperTableau& t);
std::vector<int> word_row(const SuperTableau& t);

/// Schensted bumping on straight shapes; the added box is appended to *boxes
/// when given. Even row-bump: leftmost b > a. Odd row-bump: leftmost b >= a.
/// Even column-bump: topmost b >= a. Odd column-bump: topmost b > a.
SuperTableau row_insert(const SuperTableau& t, int rank, Box* box = nullptr);
SuperTableau col_insert(const SuperTableau& t, int rank, Box* box = nullptr);

/// Row i filled with letter i (rank i-1) over [r].
SuperTableau key_tableau(const Partition& mu, int r);

/// 180-degree rotation within the row_count x outer[0] bounding box, over the
/// pi-dual alphabet. Involutive for fixed stored row count.
SuperTableau rotate_pi(const SuperTableau& t);

/// Glue S (straight, over A) with T (skew with inner shape sh(S), over B)
/// into one tableau over star(A, B); validates the result.
SuperTableau glue(const SuperTableau& s, const SuperTableau& t);

/// Inverse of glue: split by alphabet membership, given |A|.
std::pair<SuperTableau, SuperTableau> split(const SuperTableau& g,
                                            const Alphabet& a,
                                            const Alphabet& b);

/// rho maps a tuple of one-row tableaux to (S, S_R) with S_R over [r]
/// recording sh(S_k)/sh(S_{k-1}) with letter k.
struct RhoResult {
  SuperTableau s;         // over the input alphabet
  SuperTableau recording; // over [r]
};

RhoResult rho_col(const std::vector<SuperTableau>& rows1);
RhoResult rho_row(const std::vector<SuperTableau>& rows1);
std::vector<SuperTableau> rho_col_inverse(const SuperTableau& s,
                                          const SuperTableau& recording);
std::vector<SuperTableau> rho_row_inverse(const SuperTableau& s,
                                          const SuperTableau& recording);

/// Enumerate SST_A(outer/inner) with entries drawn from the whole alphabet.
std::vector<SuperTableau> enumerate_sst(const Alphabet& a,
                                        const std::vector<int>& outer,
                                        const std::vector<int>& inner);

}  // namespace fock
