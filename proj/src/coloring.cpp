#include "chromsym/coloring.hpp"

#include "chromsym/errors.hpp"

namespace chromsym {

int inv_coloring(const HessFn& m, const std::vector<int>& kappa) {
  if (static_cast<int>(kappa.size()) != m.n()) {
    throw SizeMismatch("coloring has " + std::to_string(kappa.size()) + " entries, m has n = " +
                       std::to_string(m.n()));
  }
  int inv = 0;
  for (const auto& [i, j] : edges(m)) {
    const int ci = kappa[static_cast<std::size_t>(i - 1)];
    const int cj = kappa[static_cast<std::size_t>(j - 1)];
    if (ci == cj) {
      throw NotProper("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                      " share color " + std::to_string(ci));
    }
    if (ci > cj) ++inv;
  }
  return inv;
}

namespace {

// Assign colors to vertices 1..n in order, tracking remaining multiplicities.
// Only earlier neighbours matter for properness and inversions.
void color_rec(const HessFn& m, int v, std::vector<int>& remaining, std::vector<int>& kappa,
               int inv, std::vector<std::int64_t>& counts) {
  const int n = m.n();
  if (v > n) {
    if (static_cast<std::size_t>(inv) >= counts.size()) counts.resize(static_cast<std::size_t>(inv) + 1, 0);
    ++counts[static_cast<std::size_t>(inv)];
    return;
  }
  for (std::size_t c = 0; c < remaining.size(); ++c) {
    if (remaining[c] == 0) continue;
    const int color = static_cast<int>(c) + 1;
    int added = 0;
    bool proper = true;
    for (int u = 1; u < v; ++u) {
      if (m(u) < v) continue;  // no edge u-v
      const int cu = kappa[static_cast<std::size_t>(u - 1)];
      if (cu == color) {
        proper = false;
        break;
      }
      if (cu > color) ++added;
    }
    if (!proper) continue;
    --remaining[c];
    kappa[static_cast<std::size_t>(v - 1)] = color;
    color_rec(m, v + 1, remaining, kappa, inv + added, counts);
    ++remaining[c];
  }
}

}  // namespace

QPoly coloring_coefficient(const HessFn& m, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) total += c;
  if (total != m.n()) {
    throw SizeMismatch("content sums to " + std::to_string(total) + ", n = " + std::to_string(m.n()));
  }
  std::vector<int> remaining = content;
  std::vector<int> kappa(static_cast<std::size_t>(m.n()), 0);
  std::vector<std::int64_t> counts;
  color_rec(m, 1, remaining, kappa, 0, counts);
  return QPoly::from_counts(counts);
}

SymFun x_colorings(const HessFn& m, int max_n) {
  if (m.n() > max_n) {
    throw SizeLimitExceeded("coloring oracle limited to n <= " + std::to_string(max_n));
  }
  SymFun out(m.n(), Basis::M);
  for (const auto& lambda : partitions_of(m.n())) {
    out.add_term(lambda, QRat(coloring_coefficient(m, lambda)));
  }
  return out;
}

}  // namespace chromsym
