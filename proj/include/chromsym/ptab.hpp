#pragma once

// P-tableaux and P-arrays for the poset <_m, their inversion statistic, the
// Schur-side symmetric functions, and the path-case peeling bijection.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "chromsym/combinat.hpp"
#include "chromsym/hessenberg.hpp"
#include "chromsym/symfun.hpp"

namespace chromsym {

inline constexpr int kPtabMaxN = 8;

// Row i occupies columns inner[i] .. inner[i] + rows[i].size() - 1 (0-based).
// Straight shapes have an empty inner; P-arrays may have empty rows.
struct PFilling {
  std::vector<int> inner;
  Tableau rows;

  int inner_at(std::size_t i) const { return i < inner.size() ? inner[i] : 0; }
  friend bool operator==(const PFilling& a, const PFilling& b) {
    return a.rows == b.rows && a.inner == b.inner;
  }
  friend bool operator<(const PFilling& a, const PFilling& b) {
    return a.rows != b.rows ? a.rows < b.rows : a.inner < b.inner;
  }
};

enum class FillingMode { Tableau, Array };

// Row condition, plus the column condition in tableau mode; entries distinct
// and within [n].
bool is_valid_filling(const HessFn& m, const PFilling& f, FillingMode mode);
// Edges i<j<=m(i) with j in a strictly higher row than i. Throws InvalidFilling.
int inv(const HessFn& m, const PFilling& f, FillingMode mode = FillingMode::Tableau);

// P-tableaux of straight shape lambda using exactly [n]; corner1 selects T(1,1)=1.
std::vector<PFilling> enumerate_pt(const HessFn& m, const Partition& lambda, bool corner1);
// P-tableaux of skew shape lambda/mu using exactly [n], n = |lambda/mu|.
std::vector<PFilling> enumerate_pt_skew(const HessFn& m, const Partition& lambda,
                                        const Partition& mu);
// P-arrays of row-diagram shape alpha with distinct entries from [n].
std::vector<PFilling> enumerate_pa(const HessFn& m, const Composition& alpha, bool corner1);

// sum of q^inv over a list of fillings
QPoly inv_generating(const HessFn& m, const std::vector<PFilling>& fs,
                     FillingMode mode = FillingMode::Tableau);

// Throws SizeLimitExceeded when n > max_n.
SymFun s_fun(const HessFn& m, int max_n = kPtabMaxN);
SymFun x_schur(const HessFn& m, int max_n = kPtabMaxN);

// w(lambda)_i = lambda_{w(i)} + i - w(i); w in one-line notation on [l(lambda)].
std::vector<int> w_shift(const Partition& lambda, const std::vector<int>& w);
// sum_w sign(w) sum_{PA(w(lambda))} q^inv; shapes with a negative row are empty.
QPoly signed_pa_sum(const HessFn& m, const Partition& lambda, bool corner1);

// q^inv sums over PA_m((a,b)) grouped by the set of entries used.
std::map<std::set<int>, QPoly> pa_grouped_by_entries(const HessFn& m, int a, int b);

// The single-column tableau 1, 2, ..., n.
PFilling staircase(int n);

struct Peeled {
  PFilling tableau;  // shape mu, entries 1..|mu|
  int j = 0;
};

// For T in PT'_{p_n}(lambda), T not the staircase. Throws IsBaseTableau on the
// staircase and InvalidTableau if no admissible strip exists.
Peeled path_peel(const PFilling& t);
// Inverse of path_peel for the outer shape lambda.
PFilling path_unpeel(const Peeled& p, const Partition& lambda);

// sum over PT'_{p_n}(lambda) of q^inv, by enumeration.
QPoly path_l(const Partition& lambda);

}  // namespace chromsym
