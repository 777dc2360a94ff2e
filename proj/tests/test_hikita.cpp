#include <doctest.h>

#include <random>

#include "chromsym/coloring.hpp"
#include "chromsym/errors.hpp"
#include "chromsym/hikita.hpp"

using namespace chromsym;

namespace {

struct Runs {
  int l = 0;
  std::vector<int> a{0};  // a[1..l+1]
  std::vector<int> b;     // b[0..l]
};

Runs runs_oracle(const std::vector<int>& bits) {
  Runs r;
  std::size_t i = 0;
  int ones = 0;
  while (i < bits.size() && bits[i] == 1) ++ones, ++i;
  r.b.push_back(ones);
  while (i < bits.size()) {
    int zeros = 0;
    while (i < bits.size() && bits[i] == 0) ++zeros, ++i;
    ones = 0;
    while (i < bits.size() && bits[i] == 1) ++ones, ++i;
    r.a.push_back(zeros);
    if (ones == 0) break;
    r.b.push_back(ones);
    ++r.l;
  }
  if (static_cast<int>(r.a.size()) == r.l + 1) r.a.push_back(0);
  return r;
}

QRat q_ratio(int num, int den) { return QRat(q_int(num), q_int(den)); }

// The transition weight, from the displayed product formula.
QRat psi_oracle(const std::vector<int>& bits, int k, bool hikita_power) {
  const Runs d = runs_oracle(bits);
  auto a = [&](int i) { return d.a[static_cast<std::size_t>(i)]; };
  auto b = [&](int i) { return d.b[static_cast<std::size_t>(i)]; };
  int exponent = 0;
  if (hikita_power) {
    for (int i = 1; i <= k; ++i) exponent += a(i);
  } else {
    for (int i = k + 1; i <= d.l; ++i) exponent += b(i);
  }
  QRat w(q_pow(exponent));
  for (int i = 1; i <= k; ++i) {
    int num = 0, den = 0;
    for (int j = i + 1; j <= k; ++j) num += a(j);
    for (int j = i; j <= k; ++j) num += b(j), den += a(j) + b(j);
    w *= q_ratio(num, den);
  }
  for (int i = k + 1; i <= d.l; ++i) {
    int num = 0, den = 0;
    for (int j = k + 1; j <= i; ++j) num += a(j), den += a(j) + b(j);
    for (int j = k + 1; j <= i - 1; ++j) num += b(j);
    w *= q_ratio(num, den);
  }
  return w;
}

std::vector<int> delta_oracle(const Tableau& t, int r, int length) {
  std::vector<int> bits(static_cast<std::size_t>(length), 0);
  for (const auto& row : t) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] > r) bits[c] = 1;
    }
  }
  return bits;
}

Tableau insert_oracle(Tableau t, int column, int value) {
  for (auto& row : t) {
    if (static_cast<int>(row.size()) == column - 1) {
      row.push_back(value);
      return t;
    }
  }
  t.push_back({value});
  return t;
}

// Top-down recursive definition of p_m(T;q).
QRat p_oracle(const HessFn& m, const Tableau& t) {
  const int n = m.n();
  if (n == 0) return QRat(1);
  Tableau prev;
  for (const auto& row : t) {
    std::vector<int> kept;
    for (int v : row) {
      if (v != n) kept.push_back(v);
    }
    if (!kept.empty()) prev.push_back(kept);
  }
  std::vector<int> mp;
  for (int i = 1; i < n; ++i) mp.push_back(m(i + 1) - 1);
  const int r = n - m(1);
  const std::vector<int> bits = delta_oracle(prev, r, std::max(n - 1, prev.empty() ? 0 : static_cast<int>(prev[0].size())));
  const Runs d = runs_oracle(bits);
  for (int k = 0; k <= d.l; ++k) {
    int c = 1 + d.b[0];
    for (int i = 1; i <= k; ++i) c += d.a[static_cast<std::size_t>(i)] + d.b[static_cast<std::size_t>(i)];
    if (insert_oracle(prev, c, n) == t) return psi_oracle(bits, k, false) * p_oracle(HessFn(mp), prev);
  }
  return QRat(0);
}

}  // namespace

TEST_CASE("delta vectors") {
  const Tableau row3{{1, 2, 3}};
  CHECK(delta_vec(row3, 2).bits == std::vector<int>{0, 0, 1});
  CHECK(delta_vec(row3, 2, 5).bits == std::vector<int>{0, 0, 1, 0, 0});
  CHECK(delta_vec(row3, 3).bits == std::vector<int>{0, 0, 0});
  const Tableau t{{1, 3, 4}, {2}};
  CHECK(delta_vec(t, 0).bits == std::vector<int>{1, 1, 1, 0});
  std::mt19937 rng(3);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> bits(static_cast<std::size_t>(trial % 10));
    for (auto& x : bits) x = coin(rng) ? 1 : 0;
    const DeltaVec d = decompose_delta(bits);
    const Runs o = runs_oracle(bits);
    CHECK(d.l == o.l);
    CHECK(d.b == o.b);
    CHECK(d.a == o.a);
  }
}

TEST_CASE("insertions") {
  const auto ins = insertions(Tableau{{1, 2, 3}}, 2);
  REQUIRE(ins.size() == 2);
  CHECK(ins[0].second == Tableau{{1, 2, 3}, {4}});
  CHECK(ins[1].second == Tableau{{1, 2, 3, 4}});
  const auto from_empty = insertions(Tableau{}, 0);
  REQUIRE(from_empty.size() == 1);
  CHECK(from_empty[0].second == Tableau{{1}});
  const DeltaVec d = delta_vec(Tableau{{1, 2}}, 0);
  CHECK(d.l == 0);
  CHECK(insertion_column(d, 0) == 3);
  CHECK_THROWS_AS(add_cell(Tableau{{1}}, 3, 2), InvalidTableau);
}

TEST_CASE("transition weights") {
  const Tableau row3{{1, 2, 3}};
  CHECK(psi(row3, 0, 2) == QRat(q_pow(1) * q_int(2), q_int(3)));
  CHECK(psi(row3, 1, 2) == QRat(QPoly(1), q_int(3)));
  const Tableau row4{{1, 2, 3, 4}};
  CHECK(psi(row4, 0, 3) == QRat(q_pow(1) * q_int(3), q_int(4)));
  CHECK(psi(row4, 1, 3) == QRat(QPoly(1), q_int(4)));
  CHECK(psi(Tableau{{1, 2}}, 0, 0) == QRat(1));
  CHECK_THROWS_AS(psi(row3, 2, 2), IndexOutOfRange);
}

TEST_CASE("weights match the product formula and sum to one on random delta vectors") {
  std::mt19937 rng(17);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<int> bits(static_cast<std::size_t>(1 + trial % 9));
    for (auto& x : bits) x = coin(rng) ? 1 : 0;
    const DeltaVec d = decompose_delta(bits);
    QRat psi_sum(0), phi_sum(0);
    for (int k = 0; k <= d.l; ++k) {
      CHECK(psi(d, k) == psi_oracle(bits, k, false));
      CHECK(phi(d, k) == psi_oracle(bits, k, true));
      psi_sum += psi(d, k);
      phi_sum += phi(d, k);
    }
    CHECK(psi_sum == QRat(1));
    // Neither weight reads b_0 or a_{l+1}, so an empty trailing run is harmless.
    CHECK(phi_sum == QRat(1));
  }
}

TEST_CASE("the five-vertex probability table") {
  const HessFn m({2, 3, 5, 5, 5});
  const ProbTable p = p_table(m);
  const ProbTable expected{
      {Tableau{{1, 2, 3}, {4, 5}}, QRat(q_pow(1) * q_int(2), q_int(3))},
      {Tableau{{1, 2, 3, 4}, {5}}, QRat(q_pow(1), q_int(4))},
      {Tableau{{1, 2, 3, 4, 5}}, QRat(QPoly(1), q_int(3) * q_int(4))},
  };
  CHECK(p == expected);
  CHECK(c_lambda_k(m, {3, 2}, 2) == q_pow(1) * q_int(2) * q_int(2) * q_int(2));
  CHECK(e_part(m, 2).coeff({3, 2}) == QRat(q_pow(1) * q_int(2) * q_int(2)));
  CHECK(check_area_relation(m));
}

TEST_CASE("probability tables agree with the recursive definition") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      const ProbTable p = p_table(m);
      QRat total(0);
      for (const auto& lambda : partitions_of(n)) {
        for (const auto& t : enumerate_syt(lambda)) {
          const QRat expected = p_oracle(m, t);
          const auto it = p.find(t);
          CHECK((it == p.end() ? QRat(0) : it->second) == expected);
        }
      }
      for (const auto& [t, v] : p) {
        total += v;
        const Rational at1 = v.eval_at(Rational(1));
        CHECK(at1 > 0);
        CHECK(at1 <= 1);
      }
      CHECK(total == QRat(1));
      CHECK(check_area_relation(m));
    }
  }
}

TEST_CASE("chains and complete graphs") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> id;
    for (int i = 1; i <= n; ++i) id.push_back(i);
    Tableau column;
    for (int i = 1; i <= n; ++i) column.push_back({i});
    CHECK(p_table(HessFn(id)) == ProbTable{{column, QRat(1)}});
  }
  CHECK(p_table(HessFn({1})) == p_bar_table(HessFn({1})));
  CHECK_THROWS_AS(p_table(path(11)), SizeLimitExceeded);
}

TEST_CASE("small refinements") {
  CHECK(e_part(path(1), 1) == SymFun::e({1}));
  CHECK(e_part(path(2), 1).is_zero());
  CHECK(e_part(path(2), 2) == SymFun::e({2}));
}

TEST_CASE("the transition model reproduces X") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      const SymFun x = x_hikita(m);
      const auto parts = e_parts(m);
      SymFun unwound = SymFun::zero(n);
      for (int k = 1; k <= n; ++k) unwound += parts[static_cast<std::size_t>(k)] * QRat(q_int(k));
      CHECK(x == unwound);
      CHECK(x == to_e(x_colorings(m)));
    }
  }
}

TEST_CASE("growth tree") {
  const auto nodes = trace_hikita(HessFn({2, 3, 5, 5, 5}));
  REQUIRE_FALSE(nodes.empty());
  CHECK(nodes[0].parent == -1);
  CHECK(nodes[0].probability == QRat(1));
  QRat leaves(0);
  for (const auto& node : nodes) {
    if (node.parent >= 0) {
      const auto& parent = nodes[static_cast<std::size_t>(node.parent)];
      CHECK(node.probability == parent.probability * node.weight);
    }
    if (size(shape_of(node.tableau)) == 5) leaves += node.probability;
  }
  CHECK(leaves == QRat(1));
  bool found = false;
  for (const auto& node : nodes) {
    if (node.tableau == Tableau{{1, 2, 3, 4}} && node.k == 1 && node.r == 2) {
      found = node.weight == QRat(QPoly(1), q_int(3));
    }
  }
  CHECK(found);
}
