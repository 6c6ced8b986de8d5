#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fock/partition.hpp"
#include "fock/rational.hpp"

namespace fock {

/// A word in the A_{n-1}-crystal [n]^{(x)p} (x) [-n]^{(x)q}: letters are
/// nonzero signed ints with |l| <= n, leftmost tensor factor first. The letter
/// -k is the dual k^v (wt(-k) = -eps_k, eps_j(-j) = 1, phi_j(-(j+1)) = 1).
using Word = std::vector<int>;

std::vector<int> word_weight(const Word& w, int n);

/// Signature statistics for color j (closed form via the bracketing scan).
int eps(const Word& w, int n, int j);
int phi(const Word& w, int n, int j);

std::optional<Word> e_tilde(const Word& w, int n, int j);
std::optional<Word> f_tilde(const Word& w, int n, int j);

/// Same statistics by repeated operator application (test oracle).
int eps_by_application(const Word& w, int n, int j);
int phi_by_application(const Word& w, int n, int j);

/// Position acted on: index of the letter e/f would change, or -1.
int e_position(const Word& w, int n, int j);
int f_position(const Word& w, int n, int j);

/// Weyl group action S_j: f^k or e^{-k} with k = <wt, h_j>. Involutive.
Word weyl_S(const Word& w, int n, int j);

/// eps_alpha / phi_alpha for alpha = eps_s - eps_t (1 <= s < t <= n), with the
/// conjugating chain S_{s+1}...S_{t-1} applied right to left.
int eps_alpha(const Word& w, int n, int s, int t);
int phi_alpha(const Word& w, int n, int s, int t);

/// Applies S_j moves (bubble sort on the weight) until the weight is weakly
/// decreasing; second component lists the j's applied, in order.
std::pair<Word, std::vector<int>> to_dominant(const Word& w, int n);

/// charge(b) = sum over positive roots of min(eps_alpha, phi_alpha).
int charge(const Word& w, int n);

/// Lascoux-Schutzenberger charge; requires positive letters whose content,
/// sorted, is a partition.
int charge_ls(const Word& w, int n);

/// b1 == b2 in the crystal sense: same weight and the canonical raising paths
/// (always the least j with eps_j > 0) coincide. With mod_shift, weights are
/// compared modulo Z(1,...,1).
bool crystal_equiv(const Word& a, const Word& b, int n, bool mod_shift = false);

/// Crystal operators on rational tableaux through the column word.
std::optional<RationalTableau> e_tilde(const RationalTableau& t, int j);
std::optional<RationalTableau> f_tilde(const RationalTableau& t, int j);

int charge(const RationalTableau& t);

}  // namespace fock
