#include "chromsym/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "chromsym/errors.hpp"

namespace chromsym {

bool is_partition(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

void validate_partition(const std::vector<int>& parts) {
  if (!is_partition(parts)) {
    throw InvalidPartition(to_string(parts) + " is not a weakly decreasing list of positive integers");
  }
}

int size(const std::vector<int>& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition conjugate(const Partition& lambda) {
  Partition out;
  if (lambda.empty()) return out;
  out.assign(static_cast<std::size_t>(lambda.front()), 0);
  for (int part : lambda) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return out;
}

Partition sort_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

Partition shape_of(const Tableau& t) {
  Partition p;
  for (const auto& row : t) {
    if (!row.empty()) p.push_back(static_cast<int>(row.size()));
  }
  return p;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  if (n >= 0) partitions_rec(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  if (n == 0) return {Composition{}};
  // Each of the n-1 gaps is either a cut or not.
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    Composition c;
    int run = 1;
    for (int g = 0; g < n - 1; ++g) {
      if (mask & (1u << g)) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  int a = 0;
  int b = 0;
  const std::size_t len = std::max(lambda.size(), mu.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < lambda.size() ? lambda[i] : 0;
    b += i < mu.size() ? mu[i] : 0;
    if (a < b) return false;
  }
  return true;
}

namespace {

// Horizontal strips of size k removable from lambda: each row i may lose up to
// lambda[i] - lambda[i+1] cells.
void horizontal_strips(const Partition& lambda, int k, std::size_t row, Partition& cur,
                       std::vector<Partition>& out) {
  if (row == lambda.size()) {
    if (k == 0) out.push_back(sort_partition(cur));
    return;
  }
  const int next = row + 1 < lambda.size() ? lambda[row + 1] : 0;
  const int slack = lambda[row] - next;
  for (int take = 0; take <= std::min(slack, k); ++take) {
    cur[row] = lambda[row] - take;
    horizontal_strips(lambda, k - take, row + 1, cur, out);
  }
  cur[row] = lambda[row];
}

std::int64_t kostka_sorted(const Partition& lambda, const Partition& alpha);

std::mutex kostka_mutex;
std::map<std::pair<Partition, Partition>, std::int64_t> kostka_memo;

std::int64_t kostka_sorted(const Partition& lambda, const Partition& alpha) {
  if (alpha.empty()) return lambda.empty() ? 1 : 0;
  if (!dominates(lambda, alpha)) return 0;
  {
    std::lock_guard<std::mutex> lock(kostka_mutex);
    auto it = kostka_memo.find({lambda, alpha});
    if (it != kostka_memo.end()) return it->second;
  }
  // The largest letter occupies a horizontal strip of size alpha.back(). Using
  // the smallest part as the last letter keeps the remaining content sorted.
  Partition rest(alpha.begin(), alpha.end() - 1);
  std::vector<Partition> strips;
  Partition cur = lambda;
  horizontal_strips(lambda, alpha.back(), 0, cur, strips);
  std::int64_t total = 0;
  for (const auto& mu : strips) total += kostka_sorted(mu, rest);
  std::lock_guard<std::mutex> lock(kostka_mutex);
  kostka_memo.emplace(std::make_pair(lambda, alpha), total);
  return total;
}

}  // namespace

std::int64_t kostka(const Partition& lambda, const Composition& alpha) {
  validate_partition(lambda);
  for (int a : alpha) {
    if (a < 0) throw InvalidPartition("negative content entry in " + to_string(alpha));
  }
  if (size(lambda) != size(alpha)) {
    throw SizeMismatch("kostka: |" + to_string(lambda) + "| != |" + to_string(alpha) + "|");
  }
  return kostka_sorted(lambda, sort_partition(alpha));
}

namespace {

void syt_rec(const Partition& lambda, int next, int n, Tableau& t, std::vector<Tableau>& out) {
  if (next > n) {
    out.push_back(t);
    return;
  }
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    const std::size_t len = t[r].size();
    if (static_cast<int>(len) == lambda[r]) continue;
    if (r > 0 && t[r - 1].size() <= len) continue;
    t[r].push_back(next);
    syt_rec(lambda, next + 1, n, t, out);
    t[r].pop_back();
  }
}

}  // namespace

std::vector<Tableau> enumerate_syt(const Partition& lambda) {
  validate_partition(lambda);
  std::vector<Tableau> out;
  Tableau t(lambda.size());
  syt_rec(lambda, 1, size(lambda), t, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> syt_k(const Partition& lambda, int k) {
  std::vector<Tableau> out;
  const int n = size(lambda);
  for (auto& t : enumerate_syt(lambda)) {
    if (column_of(t, n) == k) out.push_back(std::move(t));
  }
  return out;
}

std::int64_t hook_length_count(const Partition& lambda) {
  validate_partition(lambda);
  const Partition conj = conjugate(lambda);
  const int n = size(lambda);
  // n! / prod hooks, accumulated as a ratio of exact integers.
  std::int64_t num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  std::int64_t den = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      den *= (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    }
  }
  return num / den;
}

int column_of(const Tableau& t, int value) {
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == value) return static_cast<int>(j) + 1;
    }
  }
  return 0;
}

int row_of(const Tableau& t, int value) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::find(t[i].begin(), t[i].end(), value) != t[i].end()) return static_cast<int>(i) + 1;
  }
  return 0;
}

std::vector<Partition> vertical_strips(const Partition& lambda) {
  validate_partition(lambda);
  std::vector<Partition> out;
  Partition cur = lambda;
  // Row i may lose its last cell only if the result stays weakly decreasing,
  // i.e. lambda[i] - 1 >= new length of row i+1.
  std::function<void(int)> rec = [&](int row) {
    if (row < 0) {
      out.push_back(sort_partition(cur));
      return;
    }
    const std::size_t r = static_cast<std::size_t>(row);
    rec(row - 1);
    const int below = r + 1 < cur.size() ? cur[r + 1] : 0;
    if (lambda[r] - 1 >= below) {
      cur[r] = lambda[r] - 1;
      rec(row - 1);
      cur[r] = lambda[r];
    }
  };
  rec(static_cast<int>(lambda.size()) - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string to_string(const std::vector<int>& parts) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << "]";
  return os.str();
}

std::string to_string(const Tableau& t) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << to_string(t[i]);
  os << "]";
  return os.str();
}

}  // namespace chromsym
