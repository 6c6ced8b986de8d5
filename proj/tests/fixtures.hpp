#pragma once

#include <vector>

#include "fock/alphabet.hpp"
#include "fock/psst.hpp"

// The running worked example: A = Z'_{>=0} (odd), B = Z'_{<0} (odd),
// T1 = ([0',1',3',4',5'], [-4',-3']), T2 = ([0',2',6',7'], [-4',-2',-1']),
// T3 = ([4',5'], [-2',-1']).
struct RunningExample {
  fock::Alphabet A = fock::Alphabet::preset("Z'>=0", 0, 7);
  fock::Alphabet B = fock::Alphabet::preset("Z'<0", -4, -1);

  int a(int v) const { return A.rank_of(std::to_string(v) + "'"); }
  int b(int v) const { return B.rank_of(std::to_string(v) + "'"); }

  std::vector<int> arow(std::initializer_list<int> vs) const {
    std::vector<int> r;
    for (int v : vs) r.push_back(a(v));
    return r;
  }
  std::vector<int> brow(std::initializer_list<int> vs) const {
    std::vector<int> r;
    for (int v : vs) r.push_back(b(v));
    return r;
  }

  fock::FockTuple tuple() const {
    fock::FockTuple t;
    t.A = A;
    t.B = B;
    t.entries.resize(3);
    t.entries[0] = {arow({0, 1, 3, 4, 5}), brow({-4, -3})};
    t.entries[1] = {arow({0, 2, 6, 7}), brow({-4, -2, -1})};
    t.entries[2] = {arow({4, 5}), brow({-2, -1})};
    return t;
  }
};
