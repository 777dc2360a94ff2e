#pragma once

// Exhaustive verification suites over H_1, ..., H_{n_max}. Each suite reports
// how many items it checked and a witness line for every failure.

#include <string>
#include <vector>

namespace chromsym {

inline constexpr int kVerifyMaxN = 8;

struct SuiteReport {
  std::string suite;
  int n_max = 0;
  int checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

// E_{m,k} = G_{m,k} for all k, E = S, g_{m,k}(x;1) e-positive, exact [k]_q division.
SuiteReport verify_egs(int n_max);
// Colorings = transition model = sum_k [k]_q G_{m,k} = P-tableaux = cycle sums.
SuiteReport verify_x_all(int n_max);
// Modular law on E_k, g_k, G_k, S and reduction soundness for E, G, S.
SuiteReport verify_modlaw(int n_max);
// Sink theorems, theta/inv agreement and the hook-shape subset counts.
SuiteReport verify_sink(int n_max);
// psi/phi relation, sum-to-one, area relation, total probability.
SuiteReport verify_appendix(int n_max);
// Path closed form, path recursion, peel round trips, S = E on paths.
SuiteReport verify_paths(int n_max);

// Dispatch by name. Throws ParseError for an unknown suite.
SuiteReport run_suite(const std::string& name, int n_max);

}  // namespace chromsym
