#include "chromsym/ptab.hpp"

#include <algorithm>

#include "chromsym/errors.hpp"

namespace chromsym {

namespace {

struct Cell {
  int row;  // 0-based
  int col;  // 0-based
};

// Position of every entry; (-1, -1) when absent. Throws InvalidFilling on
// duplicates or entries outside [n].
std::vector<Cell> positions(const PFilling& f, int n) {
  std::vector<Cell> pos(static_cast<std::size_t>(n) + 1, Cell{-1, -1});
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    for (std::size_t c = 0; c < f.rows[i].size(); ++c) {
      const int v = f.rows[i][c];
      if (v < 1 || v > n) throw InvalidFilling("entry " + std::to_string(v) + " outside [n]");
      auto& p = pos[static_cast<std::size_t>(v)];
      if (p.row >= 0) throw InvalidFilling("entry " + std::to_string(v) + " repeated");
      p = Cell{static_cast<int>(i), f.inner_at(i) + static_cast<int>(c)};
    }
  }
  return pos;
}

// Entry at (row, col) or 0 when the cell is not part of the filling.
int entry_at(const PFilling& f, int row, int col) {
  if (row < 0 || row >= static_cast<int>(f.rows.size())) return 0;
  const auto& r = f.rows[static_cast<std::size_t>(row)];
  const int c = col - f.inner_at(static_cast<std::size_t>(row));
  if (c < 0 || c >= static_cast<int>(r.size())) return 0;
  return r[static_cast<std::size_t>(c)];
}

bool less_m(const HessFn& m, int x, int y) { return m(x) < y; }

}  // namespace

bool is_valid_filling(const HessFn& m, const PFilling& f, FillingMode mode) {
  try {
    positions(f, m.n());
  } catch (const InvalidFilling&) {
    return false;
  }
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    const auto& row = f.rows[i];
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (!less_m(m, row[c - 1], row[c])) return false;
    }
    if (mode == FillingMode::Tableau) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        const int col = f.inner_at(i) + static_cast<int>(c);
        const int below = entry_at(f, static_cast<int>(i) + 1, col);
        if (below != 0 && less_m(m, below, row[c])) return false;
      }
    }
  }
  return true;
}

int inv(const HessFn& m, const PFilling& f, FillingMode mode) {
  if (!is_valid_filling(m, f, mode)) throw InvalidFilling("filling " + to_string(f.rows) + " is not valid for m");
  const auto pos = positions(f, m.n());
  int count = 0;
  for (const auto& [i, j] : edges(m)) {
    const Cell& pi = pos[static_cast<std::size_t>(i)];
    const Cell& pj = pos[static_cast<std::size_t>(j)];
    if (pi.row >= 0 && pj.row >= 0 && pj.row < pi.row) ++count;
  }
  return count;
}

namespace {

struct FillSpec {
  std::vector<int> inner;
  std::vector<int> lengths;  // cells per row
  FillingMode mode = FillingMode::Tableau;
  bool corner1 = false;
  bool use_all = true;  // entries exactly [n] rather than a subset
};

class Filler {
 public:
  Filler(const HessFn& m, FillSpec spec) : m_(m), spec_(std::move(spec)) {
    f_.inner = spec_.inner;
    f_.rows.resize(spec_.lengths.size());
    for (std::size_t i = 0; i < spec_.lengths.size(); ++i) {
      for (int c = 0; c < spec_.lengths[i]; ++c) cells_.push_back(Cell{static_cast<int>(i), c});
    }
    used_.assign(static_cast<std::size_t>(m.n()) + 1, false);
  }

  std::vector<PFilling> run() {
    if (spec_.use_all && static_cast<int>(cells_.size()) != m_.n()) return {};
    if (static_cast<int>(cells_.size()) > m_.n()) return {};
    if (spec_.corner1 && (spec_.lengths.empty() || spec_.lengths[0] == 0 || f_.inner_at(0) != 0)) {
      return {};
    }
    rec(0);
    return std::move(out_);
  }

 private:
  void rec(std::size_t idx) {
    if (idx == cells_.size()) {
      out_.push_back(f_);
      return;
    }
    const Cell cell = cells_[idx];
    auto& row = f_.rows[static_cast<std::size_t>(cell.row)];
    const int left = cell.col > 0 ? row[static_cast<std::size_t>(cell.col - 1)] : 0;
    int above = 0;
    if (spec_.mode == FillingMode::Tableau) {
      above = entry_at(f_, cell.row - 1, f_.inner_at(static_cast<std::size_t>(cell.row)) + cell.col);
    }
    for (int v = 1; v <= m_.n(); ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      if (spec_.corner1 && idx == 0 && v != 1) continue;
      if (left != 0 && !less_m(m_, left, v)) continue;
      if (above != 0 && less_m(m_, v, above)) continue;
      used_[static_cast<std::size_t>(v)] = true;
      row.push_back(v);
      rec(idx + 1);
      row.pop_back();
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  const HessFn& m_;
  FillSpec spec_;
  PFilling f_;
  std::vector<Cell> cells_;
  std::vector<bool> used_;
  std::vector<PFilling> out_;
};

}  // namespace

std::vector<PFilling> enumerate_pt(const HessFn& m, const Partition& lambda, bool corner1) {
  validate_partition(lambda);
  FillSpec spec;
  spec.lengths = lambda;
  spec.corner1 = corner1;
  return Filler(m, spec).run();
}

std::vector<PFilling> enumerate_pt_skew(const HessFn& m, const Partition& lambda,
                                        const Partition& mu) {
  validate_partition(lambda);
  validate_partition(mu);
  if (mu.size() > lambda.size()) return {};
  FillSpec spec;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const int inner = i < mu.size() ? mu[i] : 0;
    if (inner > lambda[i]) return {};
    spec.inner.push_back(inner);
    spec.lengths.push_back(lambda[i] - inner);
  }
  return Filler(m, spec).run();
}

std::vector<PFilling> enumerate_pa(const HessFn& m, const Composition& alpha, bool corner1) {
  for (int a : alpha) {
    if (a < 0) throw InvalidPartition("negative row length in " + to_string(alpha));
  }
  FillSpec spec;
  spec.lengths = alpha;
  spec.mode = FillingMode::Array;
  spec.corner1 = corner1;
  spec.use_all = false;
  return Filler(m, spec).run();
}

QPoly inv_generating(const HessFn& m, const std::vector<PFilling>& fs, FillingMode mode) {
  std::vector<std::int64_t> counts;
  for (const auto& f : fs) {
    const int k = inv(m, f, mode);
    if (static_cast<int>(counts.size()) <= k) counts.resize(static_cast<std::size_t>(k) + 1, 0);
    ++counts[static_cast<std::size_t>(k)];
  }
  return QPoly::from_counts(counts);
}

namespace {

SymFun schur_sum(const HessFn& m, int max_n, bool corner1) {
  if (m.n() > max_n) throw SizeLimitExceeded("P-tableau enumeration limited to n <= " + std::to_string(max_n));
  SymFun out(m.n(), Basis::S);
  for (const auto& lambda : partitions_of(m.n())) {
    out.add_term(lambda, QRat(inv_generating(m, enumerate_pt(m, lambda, corner1))));
  }
  return out;
}

}  // namespace

SymFun s_fun(const HessFn& m, int max_n) { return schur_sum(m, max_n, true); }
SymFun x_schur(const HessFn& m, int max_n) { return schur_sum(m, max_n, false); }

std::vector<int> w_shift(const Partition& lambda, const std::vector<int>& w) {
  if (w.size() != lambda.size()) throw SizeMismatch("w must permute the rows of lambda");
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int wi = w[i];
    out.push_back(lambda[static_cast<std::size_t>(wi - 1)] + static_cast<int>(i) + 1 - wi);
  }
  return out;
}

QPoly signed_pa_sum(const HessFn& m, const Partition& lambda, bool corner1) {
  validate_partition(lambda);
  std::vector<int> w(lambda.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<int>(i) + 1;
  QPoly total;
  do {
    const std::vector<int> alpha = w_shift(lambda, w);
    if (std::any_of(alpha.begin(), alpha.end(), [](int a) { return a < 0; })) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t k = i + 1; k < w.size(); ++k) inversions += w[i] > w[k] ? 1 : 0;
    }
    QPoly term = inv_generating(m, enumerate_pa(m, alpha, corner1), FillingMode::Array);
    if (inversions % 2 == 0) total += term;
    else total -= term;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

std::map<std::set<int>, QPoly> pa_grouped_by_entries(const HessFn& m, int a, int b) {
  std::map<std::set<int>, std::vector<std::int64_t>> counts;
  for (const auto& f : enumerate_pa(m, {a, b}, false)) {
    std::set<int> entries;
    for (const auto& row : f.rows) entries.insert(row.begin(), row.end());
    const int k = inv(m, f, FillingMode::Array);
    auto& c = counts[entries];
    if (static_cast<int>(c.size()) <= k) c.resize(static_cast<std::size_t>(k) + 1, 0);
    ++c[static_cast<std::size_t>(k)];
  }
  std::map<std::set<int>, QPoly> out;
  for (const auto& [entries, c] : counts) out.emplace(entries, QPoly::from_counts(c));
  return out;
}

PFilling staircase(int n) {
  PFilling s;
  for (int i = 1; i <= n; ++i) s.rows.push_back({i});
  return s;
}

// ---------------------------------------------------------------------------
// Peeling. "x below y" means x lies in a strictly lower row than y.

Peeled path_peel(const PFilling& t) {
  if (!t.inner.empty()) throw InvalidTableau("peeling needs a straight shape");
  const int n = size(shape_of(t.rows));
  if (t == staircase(n)) throw IsBaseTableau("the single-column tableau has no peel");
  const auto pos = positions(t, n);
  const auto row = [&](int v) { return pos[static_cast<std::size_t>(v)].row; };
  const auto below = [&](int x, int y) { return row(x) > row(y); };

  int top = 0;
  for (int v = n; v >= 2; --v) {
    if (below(v - 1, v)) {
      top = v;
      break;
    }
  }
  if (top == 0) throw InvalidTableau(to_string(t.rows) + " has no entry with its predecessor below");

  const Partition lambda = shape_of(t.rows);
  for (int ell = 2; ell <= top; ++ell) {
    std::vector<int> seq;
    for (int v = n; v > top; --v) seq.push_back(v);
    for (int v = ell; v <= top; ++v) seq.push_back(v);
    // Bottom to top: rows strictly decrease along the sequence.
    bool ok = true;
    for (std::size_t s = 1; s < seq.size() && ok; ++s) ok = row(seq[s]) < row(seq[s - 1]);
    if (!ok) continue;
    std::vector<int> lengths(lambda.begin(), lambda.end());
    for (int v : seq) {
      const Cell& c = pos[static_cast<std::size_t>(v)];
      if (c.col != lengths[static_cast<std::size_t>(c.row)] - 1) ok = false;
      --lengths[static_cast<std::size_t>(c.row)];
    }
    if (!ok) continue;
    while (!lengths.empty() && lengths.back() == 0) lengths.pop_back();
    if (!is_partition(lengths)) continue;

    Peeled out;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      out.tableau.rows.emplace_back(t.rows[i].begin(), t.rows[i].begin() + lengths[i]);
    }
    for (int v = ell; v <= top; ++v) out.j += below(v - 1, v) ? 1 : 0;
    return out;
  }
  throw InvalidTableau("no vertical strip found while peeling " + to_string(t.rows));
}

PFilling path_unpeel(const Peeled& p, const Partition& lambda) {
  validate_partition(lambda);
  const Partition mu = shape_of(p.tableau.rows);
  const int mu_size = size(mu);
  // Rows (0-based) holding the cells of lambda/mu, top to bottom.
  std::vector<int> strip;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const int inner = i < mu.size() ? mu[i] : 0;
    if (lambda[i] - inner > 1 || lambda[i] < inner) {
      throw InvalidTableau(to_string(lambda) + "/" + to_string(mu) + " is not a vertical strip");
    }
    if (lambda[i] - inner == 1) strip.push_back(static_cast<int>(i));
  }
  const int len = static_cast<int>(strip.size());
  if (p.j < 1 || p.j > len - 1) {
    throw IndexOutOfRange("j = " + std::to_string(p.j) + " outside [1, " + std::to_string(len - 1) + "]");
  }

  const int mu_row = mu_size > 0 ? row_of(p.tableau.rows, mu_size) - 1 : -1;
  int c = -1;
  for (int r : strip) {
    if (r <= mu_row) c = r;
  }
  if (c < 0) c = strip.front();

  std::vector<int> labelled;
  for (int r : strip) {
    if (r != c) labelled.push_back(r);
  }
  const int pivot = labelled[static_cast<std::size_t>(p.j - 1)];

  PFilling t;
  t.rows.resize(lambda.size());
  for (std::size_t i = 0; i < p.tableau.rows.size(); ++i) t.rows[i] = p.tableau.rows[i];
  int next = mu_size + 1;
  for (auto it = strip.rbegin(); it != strip.rend(); ++it) {
    if (*it <= pivot) t.rows[static_cast<std::size_t>(*it)].push_back(next++);
  }
  for (int r : strip) {
    if (r > pivot) t.rows[static_cast<std::size_t>(r)].push_back(next++);
  }
  return t;
}

QPoly path_l(const Partition& lambda) {
  const int n = size(lambda);
  if (n == 0) return {};
  const HessFn p = path(n);
  return inv_generating(p, enumerate_pt(p, lambda, true));
}

}  // namespace chromsym
