#include "chromsym/gfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "chromsym/errors.hpp"

namespace chromsym {

namespace {

void perm_rec(const HessFn& m, int i, std::vector<bool>& used, Permutation& cur,
              std::vector<Permutation>& out) {
  const int n = m.n();
  if (i > n) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v <= m(i); ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(v)] = true;
    cur.push_back(v);
    perm_rec(m, i + 1, used, cur, out);
    cur.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

}  // namespace

std::vector<Permutation> hess_permutations(const HessFn& m) {
  std::vector<Permutation> out;
  std::vector<bool> used(static_cast<std::size_t>(m.n()) + 1, false);
  Permutation cur;
  perm_rec(m, 1, used, cur, out);
  return out;
}

CycleWord cycle_word(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidFilling(to_string(sigma) + " is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  CycleWord cw;
  cw.perm = sigma;
  std::fill(seen.begin(), seen.end(), false);
  // Scanning starts in increasing order, so each new cycle begins at its minimum
  // and cycles come out sorted by minima.
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    int v = start;
    while (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      cw.word.push_back(v);
      ++len;
      v = sigma[static_cast<std::size_t>(v - 1)];
    }
    cw.cycle_sizes.push_back(len);
  }
  return cw;
}

namespace {

int wt_of_word(const HessFn& m, const std::vector<int>& word) {
  std::vector<int> pos(word.size() + 1, 0);
  for (std::size_t p = 0; p < word.size(); ++p) pos[static_cast<std::size_t>(word[p])] = static_cast<int>(p);
  int count = 0;
  for (const auto& [i, j] : edges(m)) {
    if (pos[static_cast<std::size_t>(j)] < pos[static_cast<std::size_t>(i)]) ++count;
  }
  return count;
}

}  // namespace

int wt(const HessFn& m, const Permutation& sigma) {
  if (static_cast<int>(sigma.size()) != m.n()) throw SizeMismatch("permutation length != n");
  return wt_of_word(m, cycle_word(sigma).word);
}

SymFun rho(int k) {
  static std::mutex mu;
  static std::map<int, SymFun> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  SymFun result;
  if (k == 0) {
    result = SymFun::one();
  } else {
    // rho_k = [k]_q h_k - sum_{i=1}^{k-1} h_{k-i} rho_i
    result = h_to_e(k) * QRat(q_int(k));
    for (int i = 1; i < k; ++i) result -= mul(h_to_e(k - i), rho(i));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(k, result);
  return result;
}

SymFun omega_rho(const Partition& mu) {
  static std::mutex mtx;
  static std::map<Partition, SymFun> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
  }
  SymFun prod = SymFun::one();
  for (int part : mu) prod = mul(prod, rho(part));
  SymFun result = omega(prod);
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(mu, result);
  return result;
}

namespace {

// For each (|tau_1|, sorted sizes of the other cycles), the polynomial
// sum of q^wt over permutations with that cycle data.
using CycleBuckets = std::map<std::pair<int, Partition>, std::vector<std::int64_t>>;

CycleBuckets bucket_permutations(const HessFn& m) {
  CycleBuckets buckets;
  for (const auto& sigma : hess_permutations(m)) {
    const CycleWord cw = cycle_word(sigma);
    const int w = wt_of_word(m, cw.word);
    Partition rest = sort_partition({cw.cycle_sizes.begin() + 1, cw.cycle_sizes.end()});
    auto& counts = buckets[{cw.cycle_sizes.front(), std::move(rest)}];
    if (static_cast<int>(counts.size()) <= w) counts.resize(static_cast<std::size_t>(w) + 1, 0);
    ++counts[static_cast<std::size_t>(w)];
  }
  return buckets;
}

SymFun g_from_buckets(const CycleBuckets& buckets, int n, int k) {
  SymFun out = SymFun::zero(k);
  for (const auto& [key, counts] : buckets) {
    const auto& [first, rest] = key;
    const int h_deg = first - n + k;
    if (h_deg < 0) continue;
    QRat coeff(QPoly::from_counts(counts));
    if (h_deg % 2 == 1) coeff = -coeff;
    out += mul(h_to_e(h_deg), omega_rho(rest)) * coeff;
  }
  return out;
}

}  // namespace

SymFun g(const HessFn& m, int k) {
  if (k < 0 || k >= m.n()) throw IndexOutOfRange("g requires 0 <= k < n");
  return g_from_buckets(bucket_permutations(m), m.n(), k);
}

SymFun g_cap(const HessFn& m, int k) {
  if (k < 1 || k > m.n()) throw IndexOutOfRange("G requires 1 <= k <= n");
  return mul(SymFun::e({k}), g(m, m.n() - k));
}

std::vector<SymFun> g_caps(const HessFn& m) {
  const int n = m.n();
  const CycleBuckets buckets = bucket_permutations(m);
  std::vector<SymFun> out;
  out.push_back(SymFun::zero(n));
  for (int k = 1; k <= n; ++k) out.push_back(mul(SymFun::e({k}), g_from_buckets(buckets, n, n - k)));
  return out;
}

SymFun g_total(const HessFn& m) {
  SymFun out = SymFun::zero(m.n());
  for (const auto& part : g_caps(m)) out += part;
  return out;
}

SymFun x_an(const HessFn& m) {
  SymFun out = SymFun::zero(m.n());
  for (const auto& [key, counts] : bucket_permutations(m)) {
    const auto& [first, rest] = key;
    Partition type = rest;
    type.push_back(first);
    out += omega_rho(sort_partition(type)) * QRat(QPoly::from_counts(counts));
  }
  return out;
}

}  // namespace chromsym
