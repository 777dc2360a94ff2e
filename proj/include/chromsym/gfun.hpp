#pragma once

// g-functions: signed, q-weighted sums over permutations bounded by m,
// organised by the cycle structure of each permutation.

#include <vector>

#include "chromsym/hessenberg.hpp"
#include "chromsym/symfun.hpp"

namespace chromsym {

using Permutation = std::vector<int>;  // one-line notation, values 1..n

struct CycleWord {
  Permutation perm;
  std::vector<int> word;         // cycles concatenated, parentheses dropped
  std::vector<int> cycle_sizes;  // cycles ordered by their minima; first contains 1
};

// All sigma with sigma(i) <= m(i), lexicographic in one-line notation.
std::vector<Permutation> hess_permutations(const HessFn& m);

// Each cycle starts at its minimum; cycles sorted by minima. Throws
// InvalidFilling if sigma is not a permutation of [n].
CycleWord cycle_word(const Permutation& sigma);
// Pairs i < j <= m(i) with j before i in the cycle word.
int wt(const HessFn& m, const Permutation& sigma);

// rho_0 = 1, [k]_q h_k = sum_{i=1}^{k} h_{k-i} rho_i; e basis.
SymFun rho(int k);
// omega(rho_{mu_1} rho_{mu_2} ...), cached.
SymFun omega_rho(const Partition& mu);

// Degree k, 0 <= k < n. Throws IndexOutOfRange.
SymFun g(const HessFn& m, int k);
// e_k * g(m, n-k), 1 <= k <= n.
SymFun g_cap(const HessFn& m, int k);
SymFun g_total(const HessFn& m);
// G_{m,1}, ..., G_{m,n} (index 0 unused), sharing one permutation sweep.
std::vector<SymFun> g_caps(const HessFn& m);
// sum_sigma q^{wt(sigma)} omega(rho_{cycle type of sigma})
SymFun x_an(const HessFn& m);

}  // namespace chromsym
