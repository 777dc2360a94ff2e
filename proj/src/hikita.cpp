#include "chromsym/hikita.hpp"

#include <algorithm>

#include "chromsym/errors.hpp"

namespace chromsym {

DeltaVec decompose_delta(std::vector<int> bits) {
  DeltaVec d;
  d.bits = std::move(bits);
  const std::size_t len = d.bits.size();
  std::size_t pos = 0;
  int b0 = 0;
  while (pos < len && d.bits[pos] == 1) {
    ++b0;
    ++pos;
  }
  d.a.push_back(0);
  d.b.push_back(b0);
  while (pos < len) {
    int zeros = 0;
    while (pos < len && d.bits[pos] == 0) {
      ++zeros;
      ++pos;
    }
    int ones = 0;
    while (pos < len && d.bits[pos] == 1) {
      ++ones;
      ++pos;
    }
    d.a.push_back(zeros);
    if (ones == 0) break;  // trailing zeros: a_{l+1}
    d.b.push_back(ones);
  }
  d.l = static_cast<int>(d.b.size()) - 1;
  if (static_cast<int>(d.a.size()) == d.l + 1) d.a.push_back(0);
  return d;
}

DeltaVec delta_vec(const Tableau& t, int r, int length) {
  const Partition shape = shape_of(t);
  const int cols = shape.empty() ? 0 : shape.front();
  const int len = std::max(length < 0 ? size(shape) : length, cols);
  std::vector<int> bits(static_cast<std::size_t>(len), 0);
  // Columns increase downward, so the bottom entry is the column maximum.
  for (int c = 0; c < cols; ++c) {
    int bottom = 0;
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) > c) bottom = row[static_cast<std::size_t>(c)];
    }
    bits[static_cast<std::size_t>(c)] = bottom > r ? 1 : 0;
  }
  return decompose_delta(std::move(bits));
}

int insertion_column(const DeltaVec& d, int k) {
  if (k < 0 || k > d.l) {
    throw IndexOutOfRange("branch " + std::to_string(k) + " with l = " + std::to_string(d.l));
  }
  int c = 1;
  for (int i = 0; i <= k; ++i) c += d.b[static_cast<std::size_t>(i)];
  for (int i = 1; i <= k; ++i) c += d.a[static_cast<std::size_t>(i)];
  return c;
}

Tableau add_cell(const Tableau& t, int c, int value) {
  Tableau out = t;
  std::size_t row = 0;
  while (row < out.size() && static_cast<int>(out[row].size()) >= c) ++row;
  if (row == out.size()) out.emplace_back();
  if (static_cast<int>(out[row].size()) != c - 1) {
    throw InvalidTableau("cannot append to column " + std::to_string(c) + " of " + to_string(t));
  }
  out[row].push_back(value);
  return out;
}

std::vector<std::pair<int, Tableau>> insertions(const Tableau& t, int r) {
  const DeltaVec d = delta_vec(t, r);
  const int next = size(shape_of(t)) + 1;
  std::vector<std::pair<int, Tableau>> out;
  for (int k = 0; k <= d.l; ++k) out.emplace_back(k, add_cell(t, insertion_column(d, k), next));
  return out;
}

namespace {

// The common product of the two weights; they differ only in the q-power.
QRat weight_product(const DeltaVec& d, int k, int q_exponent) {
  const auto a = [&](int i) { return d.a[static_cast<std::size_t>(i)]; };
  const auto b = [&](int i) { return d.b[static_cast<std::size_t>(i)]; };
  QPoly num = q_pow(q_exponent);
  QPoly den(1);
  for (int i = 1; i <= k; ++i) {
    int top = 0;
    int bottom = 0;
    for (int j = i + 1; j <= k; ++j) top += a(j);
    for (int j = i; j <= k; ++j) {
      top += b(j);
      bottom += a(j) + b(j);
    }
    num *= q_int(top);
    den *= q_int(bottom);
  }
  for (int i = k + 1; i <= d.l; ++i) {
    int top = 0;
    int bottom = 0;
    for (int j = k + 1; j <= i; ++j) {
      top += a(j);
      bottom += a(j) + b(j);
    }
    for (int j = k + 1; j <= i - 1; ++j) top += b(j);
    num *= q_int(top);
    den *= q_int(bottom);
  }
  return QRat(std::move(num), std::move(den));
}

void check_branch(const DeltaVec& d, int k) {
  if (k < 0 || k > d.l) {
    throw IndexOutOfRange("branch " + std::to_string(k) + " with l = " + std::to_string(d.l));
  }
}

}  // namespace

QRat psi(const DeltaVec& d, int k) {
  check_branch(d, k);
  int e = 0;
  for (int i = k + 1; i <= d.l; ++i) e += d.b[static_cast<std::size_t>(i)];
  return weight_product(d, k, e);
}

QRat phi(const DeltaVec& d, int k) {
  check_branch(d, k);
  int e = 0;
  for (int i = 1; i <= k; ++i) e += d.a[static_cast<std::size_t>(i)];
  return weight_product(d, k, e);
}

QRat psi(const Tableau& t, int k, int r) { return psi(delta_vec(t, r), k); }
QRat phi(const Tableau& t, int k, int r) { return phi(delta_vec(t, r), k); }

namespace {

template <typename Weight>
ProbTable grow(const HessFn& m, int max_n, Weight weight) {
  const int n = m.n();
  if (n > max_n) throw SizeLimitExceeded("probability table limited to n <= " + std::to_string(max_n));
  ProbTable cur;
  cur.emplace(Tableau{}, QRat(1));
  for (int i = 1; i <= n; ++i) {
    const int r = n - m(n + 1 - i);
    ProbTable next;
    for (const auto& [t, p] : cur) {
      const DeltaVec d = delta_vec(t, r);
      for (int k = 0; k <= d.l; ++k) {
        QRat w = weight(d, k) * p;
        if (w.is_zero()) continue;
        Tableau grown = add_cell(t, insertion_column(d, k), i);
        auto [it, inserted] = next.try_emplace(std::move(grown), w);
        if (!inserted) {
          it->second += w;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

ProbTable p_table(const HessFn& m, int max_n) {
  return grow(m, max_n, [](const DeltaVec& d, int k) { return psi(d, k); });
}

ProbTable p_bar_table(const HessFn& m, int max_n) {
  return grow(m, max_n, [](const DeltaVec& d, int k) { return phi(d, k); });
}

bool check_area_relation(const HessFn& m) {
  const ProbTable p = p_table(m);
  const ProbTable pbar = p_bar_table(m);
  // Both tables are indexed by the same growth histories, so their supports agree.
  if (p.size() != pbar.size()) return false;
  const int a = area(m);
  for (const auto& [t, pv] : p) {
    auto it = pbar.find(t);
    if (it == pbar.end()) return false;
    int e = a;
    for (int len : shape_of(t)) e -= len * (len - 1) / 2;
    QRat scale = e >= 0 ? QRat(q_pow(e)) : QRat(QPoly(1), q_pow(-e));
    if (!(pv == scale * it->second)) return false;
  }
  return true;
}

namespace {

QPoly factorial_weight(const Partition& lambda) {
  QPoly w(1);
  for (int part : lambda) w *= q_fact(part);
  return w;
}

// sum over T of shape lambda with n in column k, keyed by (lambda, k).
std::map<std::pair<Partition, int>, QRat> grouped_sums(const ProbTable& table) {
  std::map<std::pair<Partition, int>, QRat> out;
  for (const auto& [t, p] : table) {
    const Partition shape = shape_of(t);
    const int k = column_of(t, size(shape));
    out[{shape, k}] += p;
  }
  return out;
}

}  // namespace

QPoly c_lambda_k(const HessFn& m, const Partition& lambda, int k) {
  validate_partition(lambda);
  if (size(lambda) != m.n()) throw SizeMismatch("|lambda| != n");
  QRat sum(0);
  for (const auto& [t, p] : p_table(m)) {
    if (shape_of(t) == lambda && column_of(t, m.n()) == k) sum += p;
  }
  return (sum * QRat(factorial_weight(lambda))).as_polynomial();
}

std::vector<SymFun> e_parts(const HessFn& m) {
  const int n = m.n();
  std::vector<SymFun> out;
  for (int k = 0; k <= n; ++k) out.push_back(SymFun::zero(n));
  for (const auto& [key, p] : grouped_sums(p_table(m))) {
    const auto& [lambda, k] = key;
    const QPoly c = (p * QRat(factorial_weight(lambda))).as_polynomial();
    out[static_cast<std::size_t>(k)].add_term(lambda, QRat(exact_div(c, q_int(k))));
  }
  return out;
}

SymFun e_part(const HessFn& m, int k) {
  if (k < 1 || k > m.n()) throw IndexOutOfRange("k = " + std::to_string(k) + " outside [1, n]");
  return e_parts(m)[static_cast<std::size_t>(k)];
}

SymFun e_total(const HessFn& m) {
  SymFun out = SymFun::zero(m.n());
  for (const auto& part : e_parts(m)) out += part;
  return out;
}

SymFun x_hikita(const HessFn& m) {
  SymFun out = SymFun::zero(m.n());
  for (const auto& [t, p] : p_table(m)) {
    const Partition shape = shape_of(t);
    out.add_term(shape, p * QRat(factorial_weight(shape)));
  }
  return out;
}

std::vector<TraceNode> trace_hikita(const HessFn& m, int max_n) {
  const int n = m.n();
  if (n > max_n) throw SizeLimitExceeded("trace limited to n <= " + std::to_string(max_n));
  std::vector<TraceNode> nodes;
  nodes.push_back(TraceNode{0, -1, Tableau{}, 0, 0, QRat(1), QRat(1)});
  std::size_t level_begin = 0;
  for (int i = 1; i <= n; ++i) {
    const int r = n - m(n + 1 - i);
    const std::size_t level_end = nodes.size();
    for (std::size_t idx = level_begin; idx < level_end; ++idx) {
      const DeltaVec d = delta_vec(nodes[idx].tableau, r);
      for (int k = 0; k <= d.l; ++k) {
        TraceNode child;
        child.id = static_cast<int>(nodes.size());
        child.parent = nodes[idx].id;
        child.tableau = add_cell(nodes[idx].tableau, insertion_column(d, k), i);
        child.k = k;
        child.r = r;
        child.weight = psi(d, k);
        child.probability = nodes[idx].probability * child.weight;
        nodes.push_back(std::move(child));
      }
    }
    level_begin = level_end;
  }
  return nodes;
}

}  // namespace chromsym
