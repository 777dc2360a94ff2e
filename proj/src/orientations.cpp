#include "chromsym/orientations.hpp"

#include <functional>

#include "chromsym/coloring.hpp"
#include "chromsym/errors.hpp"

namespace chromsym {

namespace {

// Directed adjacency: head of each edge under the orientation.
std::vector<std::vector<int>> out_adjacency(int n, const Orientation& o) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (std::size_t e = 0; e < o.edge_list.size(); ++e) {
    const auto [i, j] = o.edge_list[e];
    if (o.toward_larger[e]) adj[static_cast<std::size_t>(i)].push_back(j);
    else adj[static_cast<std::size_t>(j)].push_back(i);
  }
  return adj;
}

bool reaches(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    if (seen[static_cast<std::size_t>(v)]) continue;
    seen[static_cast<std::size_t>(v)] = true;
    for (int w : adj[static_cast<std::size_t>(v)]) stack.push_back(w);
  }
  return false;
}

}  // namespace

bool is_acyclic(int n, const Orientation& o) {
  const auto adj = out_adjacency(n, o);
  // Kahn's algorithm.
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    for (int w : adj[static_cast<std::size_t>(v)]) ++indeg[static_cast<std::size_t>(w)];
  }
  std::vector<int> ready;
  for (int v = 1; v <= n; ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
  }
  return seen == n;
}

std::vector<Orientation> enumerate_ao(const HessFn& m, bool require_1_sink) {
  const int n = m.n();
  Orientation cur;
  cur.edge_list = edges(m);
  cur.toward_larger.assign(cur.edge_list.size(), false);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  std::vector<Orientation> out;
  // Orient edges one at a time; u -> v is allowed unless v already reaches u.
  std::function<void(std::size_t)> rec = [&](std::size_t e) {
    if (e == cur.edge_list.size()) {
      out.push_back(cur);
      return;
    }
    const auto [i, j] = cur.edge_list[e];
    for (bool toward_j : {false, true}) {
      const int tail = toward_j ? i : j;
      const int head = toward_j ? j : i;
      if (require_1_sink && tail == 1) continue;
      if (reaches(adj, head, tail)) continue;
      cur.toward_larger[e] = toward_j;
      adj[static_cast<std::size_t>(tail)].push_back(head);
      rec(e + 1);
      adj[static_cast<std::size_t>(tail)].pop_back();
    }
  };
  rec(0);
  return out;
}

int asc(const Orientation& o) {
  int count = 0;
  for (bool b : o.toward_larger) count += b ? 1 : 0;
  return count;
}

std::vector<int> sinks(int n, const Orientation& o) {
  std::vector<bool> has_out(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t e = 0; e < o.edge_list.size(); ++e) {
    const auto [i, j] = o.edge_list[e];
    has_out[static_cast<std::size_t>(o.toward_larger[e] ? i : j)] = true;
  }
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (!has_out[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

int smallest_sink(const HessFn& m, const Orientation& o) {
  const std::vector<int> s = sinks(m.n(), o);
  if (s.empty()) throw Error("orientation has no sink");
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (!poset_less(m, s[a], s[b]) && !poset_less(m, s[b], s[a])) {
        throw Error("sinks " + std::to_string(s[a]) + " and " + std::to_string(s[b]) + " are incomparable");
      }
    }
  }
  // Sinks form a chain and are listed increasingly; i <_m j forces i < j.
  return s.front();
}

Orientation theta_of(const HessFn& m, const PFilling& t) {
  if (!is_valid_filling(m, t, FillingMode::Tableau)) {
    throw InvalidTableau(to_string(t.rows) + " is not a P-tableau for " + to_string(m));
  }
  std::vector<int> row(static_cast<std::size_t>(m.n()) + 1, -1);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (int v : t.rows[r]) row[static_cast<std::size_t>(v)] = static_cast<int>(r);
  }
  Orientation o;
  o.edge_list = edges(m);
  for (const auto& [i, j] : o.edge_list) {
    const int ri = row[static_cast<std::size_t>(i)];
    const int rj = row[static_cast<std::size_t>(j)];
    if (ri < 0 || rj < 0) throw InvalidTableau("tableau does not contain every vertex");
    if (ri == rj) throw InvalidTableau("adjacent vertices share a row");
    o.toward_larger.push_back(rj < ri);
  }
  return o;
}

std::vector<QRat> zeta(const SymFun& f) {
  std::vector<QRat> out;
  const SymFun fe = to_e(f);
  for (const auto& [lambda, c] : fe.coeffs()) {
    const std::size_t l = lambda.size();
    if (out.size() <= l) out.resize(l + 1, QRat(0));
    out[l] += c;
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

std::map<int, QRat> sink_distribution(const HessFn& m, SinkSource source) {
  const SymFun f = source == SinkSource::X ? to_e(x_colorings(m)) : to_e(s_fun(m));
  std::map<int, QRat> out;
  const std::vector<QRat> z = zeta(f);
  for (std::size_t l = 0; l < z.size(); ++l) {
    if (!z[l].is_zero()) out.emplace(static_cast<int>(l), z[l]);
  }
  return out;
}

std::map<int, QRat> orientation_sink_distribution(const HessFn& m, bool require_1_sink) {
  std::map<int, std::vector<std::int64_t>> counts;
  for (const auto& o : enumerate_ao(m, require_1_sink)) {
    auto& c = counts[static_cast<int>(sinks(m.n(), o).size())];
    const int a = asc(o);
    if (static_cast<int>(c.size()) <= a) c.resize(static_cast<std::size_t>(a) + 1, 0);
    ++c[static_cast<std::size_t>(a)];
  }
  std::map<int, QRat> out;
  for (const auto& [l, c] : counts) out.emplace(l, QRat(QPoly::from_counts(c)));
  return out;
}

int sink_subset_count(const HessFn& m, const Orientation& theta, int i) {
  const int n = m.n();
  if (i < 1 || i > n) throw IndexOutOfRange("hook arm outside [1, n]");
  Partition hook{i};
  for (int r = 0; r < n - i; ++r) hook.push_back(1);
  int count = 0;
  for (const auto& t : enumerate_pt(m, hook, true)) {
    if (theta_of(m, t) == theta) ++count;
  }
  return count;
}

}  // namespace chromsym
