#include "chromsym/hessenberg.hpp"

#include <sstream>

#include "chromsym/errors.hpp"

namespace chromsym {

HessFn::HessFn(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  for (int i = 1; i <= n; ++i) {
    const int v = values_[static_cast<std::size_t>(i - 1)];
    if (v < i) {
      throw InvalidHessenberg("m(" + std::to_string(i) + ") = " + std::to_string(v) + " < " +
                              std::to_string(i));
    }
    if (v > n) {
      throw InvalidHessenberg("m(" + std::to_string(i) + ") = " + std::to_string(v) + " > n = " +
                              std::to_string(n));
    }
    if (i > 1 && v < values_[static_cast<std::size_t>(i - 2)]) {
      throw InvalidHessenberg("not weakly increasing at position " + std::to_string(i));
    }
  }
}

int HessFn::operator()(int i) const {
  if (i < 1 || i > n()) {
    throw IndexOutOfRange("m(" + std::to_string(i) + ") with n = " + std::to_string(n()));
  }
  return values_[static_cast<std::size_t>(i - 1)];
}

HessFn parse_hess(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("cannot parse '" + item + "' as an integer in '" + text + "'");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size()) throw ParseError("trailing characters in '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw ParseError("empty Hessenberg function");
  return HessFn(std::move(values));
}

std::string to_string(const HessFn& m) {
  std::ostringstream os;
  for (int i = 1; i <= m.n(); ++i) os << (i > 1 ? "," : "") << m(i);
  return os.str();
}

int area(const HessFn& m) {
  int a = 0;
  for (int i = 1; i <= m.n(); ++i) a += m(i) - i;
  return a;
}

bool has_edge(const HessFn& m, int i, int j) {
  if (i > j) std::swap(i, j);
  return i < j && j <= m(i);
}

std::vector<std::pair<int, int>> edges(const HessFn& m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m.n(); ++i) {
    for (int j = i + 1; j <= m(i); ++j) out.emplace_back(i, j);
  }
  return out;
}

bool poset_less(const HessFn& m, int i, int j) {
  if (j < 1 || j > m.n()) {
    throw IndexOutOfRange("vertex " + std::to_string(j) + " with n = " + std::to_string(m.n()));
  }
  return m(i) < j;
}

HessFn operator+(const HessFn& a, const HessFn& b) {
  std::vector<int> v = a.values();
  for (int x : b.values()) v.push_back(x + a.n());
  return HessFn(std::move(v));
}

HessFn wedge(const HessFn& a, const HessFn& b) {
  std::vector<int> v(a.values().begin(), a.values().end() - 1);
  for (int x : b.values()) v.push_back(x + a.n() - 1);
  return HessFn(std::move(v));
}

HessFn path(int n) {
  if (n < 1) throw InvalidHessenberg("path length must be positive");
  std::vector<int> v;
  for (int i = 1; i < n; ++i) v.push_back(i + 1);
  v.push_back(n);
  return HessFn(std::move(v));
}

HessFn union_of_paths(const std::vector<int>& lengths) {
  HessFn m;
  for (int len : lengths) m = m + path(len);
  return m;
}

std::optional<std::vector<int>> is_union_of_paths(const HessFn& m) {
  // Components of an incomparability graph of a natural unit interval order are
  // intervals: a new component starts after i exactly when m(i) = i.
  std::vector<int> parts;
  int start = 1;
  for (int i = 1; i <= m.n(); ++i) {
    if (m(i) != i) continue;
    int edge_count = 0;
    std::vector<int> degree(static_cast<std::size_t>(i - start + 1), 0);
    for (int a = start; a <= i; ++a) {
      for (int b = a + 1; b <= m(a); ++b) {
        ++edge_count;
        ++degree[static_cast<std::size_t>(a - start)];
        ++degree[static_cast<std::size_t>(b - start)];
      }
    }
    // A connected graph is a path iff it is a tree with maximum degree 2.
    if (edge_count != i - start) return std::nullopt;
    for (int d : degree) {
      if (d > 2) return std::nullopt;
    }
    parts.push_back(i - start + 1);
    start = i + 1;
  }
  return parts;
}

namespace {

void hess_rec(int n, int i, std::vector<int>& cur, std::vector<HessFn>& out) {
  if (i > n) {
    out.emplace_back(cur);
    return;
  }
  const int lo = std::max(i, i > 1 ? cur.back() : 1);
  for (int v = lo; v <= n; ++v) {
    cur.push_back(v);
    hess_rec(n, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<HessFn> enumerate_hess(int n) {
  std::vector<HessFn> out;
  std::vector<int> cur;
  if (n >= 1) hess_rec(n, 1, cur, out);
  return out;
}

Classification classify(const HessFn& m) {
  Classification c;
  if (auto parts = is_union_of_paths(m)) {
    c.parts = std::move(*parts);
    return c;
  }
  const int n = m.n();
  for (int alpha = n - 1; alpha >= 1; --alpha) {
    bool hits_alpha = false;
    int beta = 0;
    for (int i = 1; i <= n; ++i) {
      if (m(i) == alpha) hits_alpha = true;
      if (m(i) == alpha + 1 && beta == 0) beta = i;
    }
    if (hits_alpha || beta == 0 || beta >= alpha) continue;
    c.alpha = alpha;
    c.beta = beta;
    if (m(alpha) == m(alpha + 1)) {
      c.kind = Classification::Kind::Flat;
    } else {
      c.kind = Classification::Kind::NonFlat;
      if (m(alpha + 1) != m(alpha) + 1) {
        throw InvalidHessenberg("non-flat " + to_string(m) + " has m(alpha+1) != m(alpha)+1");
      }
    }
    return c;
  }
  throw InvalidHessenberg("no admissible alpha for " + to_string(m));
}

}  // namespace chromsym
