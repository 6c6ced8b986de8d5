#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fock/alphabet.hpp"

namespace fock {

struct SuiteReport {
  std::string suite;
  bool pass = false;
  long long checked = 0;
  std::string detail;  // counterexample or summary
};

struct VerifyConfig {
  // Window for tuple suites: all-odd alphabets of the paper's running example.
  Alphabet A = Alphabet::preset("Z'>=0", 0, 3);
  Alphabet B = Alphabet::preset("Z'<0", -3, -1);
  std::vector<int> levels = {2, 3};  // tuple lengths n
  int max_boxes = 4;                 // per level-1 entry
  // Window for the polynomial suites.
  int cauchy_n = 2;
  int degree_box = 4;
  // Kostka window.
  int kf_n = 3;
  int kf_size = 6;
  // Charge window.
  int charge_n = 3;
  int charge_len = 7;
};

using SuiteFn = std::function<SuiteReport(const VerifyConfig&)>;

std::vector<std::string> suite_names();

/// Runs one of: bijection, energy-charge, crystal-isom, cauchy,
/// kf-equivalence, rmatrix-braid. Throws ValidationError on unknown names.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace fock
