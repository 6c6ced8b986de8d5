#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fock/crystal.hpp"
#include "fock/psst.hpp"

namespace fock {

/// One sign of the (H-1) sequence, tagged with the letter occurrence that
/// produced it: side 1 means the letter sits in T1 (T1+ for A, T1- for B).
struct Sign {
  int sign;     // +1 or -1
  bool in_a;    // letter of A (else B)
  int rank;     // rank within its alphabet
  int side;     // 1 or 2
  bool operator==(const Sign& o) const {
    return sign == o.sign && in_a == o.in_a && rank == o.rank && side == o.side;
  }
};

using SignSeq = std::vector<Sign>;

struct ReducedSigns {
  int eps = 0, phi = 0;
  SignSeq surviving;  // eps minuses then phi pluses, original order kept
};

/// (H-1)/(H-2): per-letter blocks, A-blocks in decreasing letter order
/// followed by B-blocks in increasing order.
SignSeq sign_sequence(const Alphabet& a, const Alphabet& b, const Level1& t1,
                      const Level1& t2);

/// Cancel adjacent (+ -) pairs via the bracketing scan.
ReducedSigns reduce(const SignSeq& s);

/// H(T1,T2) = -min(eps, phi); asserts phi - eps = k1 - k2.
int local_h(const Alphabet& a, const Alphabet& b, const Level1& t1,
            const Level1& t2);

/// Combinatorial R-matrix: swaps the shapes (k1,k2) -> (k2,k1) by moving the
/// boxes indicated by the surviving signs. Involutive; outputs validate.
std::pair<Level1, Level1> r_matrix(const Alphabet& a, const Alphabet& b,
                                   const Level1& t1, const Level1& t2);

/// Apply sigma_i (the R-matrix on slots i, i+1; 1-based i).
FockTuple apply_r(const FockTuple& t, int i);

/// D(T) = sum over i<j of H_i(sigma_{i+1}...sigma_{j-1}(T)).
long long global_d(const FockTuple& t);

/// Matrix of the tuple: rows indexed by letters of A and B, columns by [n];
/// entry (i, j) is the multiplicity of letter i in T_j. {0,1} on odd rows.
struct AbMatrix {
  Alphabet A, B;
  int n = 0;
  std::vector<std::vector<int>> a_rows;  // |A| x n
  std::vector<std::vector<int>> b_rows;  // |B| x n
};

AbMatrix to_matrix(const FockTuple& t);
FockTuple from_matrix(const AbMatrix& m);

/// The rational one-row/one-column tableau carried by a matrix row.
RationalTableau row_tableau(const AbMatrix& m, bool in_a, int rank);

/// Tensor word of the tuple: factors T^(a) for a descending in A, then T^(b)
/// for b ascending in B; each factor contributes its column word. tags[i]
/// names the matrix row owning letter i.
struct TupleWord {
  Word word;
  std::vector<std::pair<bool, int>> tags;  // (in_a, rank)
};

TupleWord tuple_word(const FockTuple& t);

/// Crystal structure on tuples through the matrix model.
std::optional<FockTuple> e_tilde(const FockTuple& t, int j);
std::optional<FockTuple> f_tilde(const FockTuple& t, int j);
int tuple_eps(const FockTuple& t, int j);
int tuple_phi(const FockTuple& t, int j);
FockTuple tuple_weyl_s(const FockTuple& t, int j);

/// Root-sum form of the energy and the charge of a tuple.
long long d_via_roots(const FockTuple& t);
int tuple_charge(const FockTuple& t);

}  // namespace fock
