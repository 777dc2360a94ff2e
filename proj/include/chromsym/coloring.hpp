#pragma once

// Reference computation of X_m(x;q) by enumerating proper colorings. Kept
// independent of every other model so it can serve as the oracle.

#include <vector>

#include "chromsym/hessenberg.hpp"
#include "chromsym/symfun.hpp"

namespace chromsym {

inline constexpr int kColoringMaxN = 7;

// Edges i<j <= m(i) with kappa(i) > kappa(j). Throws NotProper.
int inv_coloring(const HessFn& m, const std::vector<int>& kappa);

// sum of q^inv over proper colorings in which color c is used content[c-1]
// times. Content may be any weak composition of n.
QPoly coloring_coefficient(const HessFn& m, const std::vector<int>& content);

// Monomial expansion of X_m. Throws SizeLimitExceeded when n > max_n.
SymFun x_colorings(const HessFn& m, int max_n = kColoringMaxN);

}  // namespace chromsym
