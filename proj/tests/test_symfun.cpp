#include <doctest.h>

#include <functional>
#include <random>

#include "chromsym/errors.hpp"
#include "chromsym/symfun.hpp"

using namespace chromsym;

namespace {

// Number of matrices with entries in [0, cap] (cap < 0: unbounded) having
// row sums `rows` and column sums `cols`.
std::int64_t matrix_count(const std::vector<int>& rows, const std::vector<int>& cols, int cap) {
  std::vector<int> left = cols;
  std::function<std::int64_t(std::size_t, std::size_t, int)> go = [&](std::size_t r, std::size_t c,
                                                                     int remaining) -> std::int64_t {
    if (r == rows.size()) {
      for (int x : left) {
        if (x != 0) return 0;
      }
      return 1;
    }
    if (c == cols.size()) return remaining == 0 ? go(r + 1, 0, r + 1 < rows.size() ? rows[r + 1] : 0) : 0;
    std::int64_t total = 0;
    const int hi = cap < 0 ? std::min(remaining, left[c]) : std::min({remaining, left[c], cap});
    for (int v = 0; v <= hi; ++v) {
      left[c] -= v;
      total += go(r, c + 1, remaining - v);
      left[c] += v;
    }
    return total;
  };
  return rows.empty() ? (size(cols) == 0 ? 1 : 0) : go(0, 0, rows[0]);
}

// SSYT count of shape lambda with content mu, by direct filling.
std::int64_t ssyt_count(const Partition& lambda, const Partition& mu) {
  std::vector<std::vector<int>> t;
  for (int len : lambda) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> used(mu.size(), 0);
  std::function<std::int64_t(std::size_t, std::size_t)> go = [&](std::size_t r, std::size_t c) -> std::int64_t {
    if (r == t.size()) return used == std::vector<int>(mu.begin(), mu.end()) ? 1 : 0;
    if (c == t[r].size()) return go(r + 1, 0);
    std::int64_t total = 0;
    for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && t[r - 1][c] >= v) continue;
      if (used[static_cast<std::size_t>(v - 1)] == mu[static_cast<std::size_t>(v - 1)]) continue;
      t[r][c] = v;
      ++used[static_cast<std::size_t>(v - 1)];
      total += go(r, c + 1);
      --used[static_cast<std::size_t>(v - 1)];
    }
    return total;
  };
  return go(0, 0);
}

SymFun random_symfun(std::mt19937& rng, int n, Basis b) {
  std::uniform_int_distribution<int> coef(-3, 3);
  SymFun f = SymFun::zero(n, b);
  for (const auto& l : partitions_of(n)) {
    const int c0 = coef(rng), c1 = coef(rng);
    f.add_term(l, QRat(QPoly(std::vector<Rational>{Rational(c0), Rational(c1)})));
  }
  return f;
}

}  // namespace

TEST_CASE("e to s") {
  CHECK(to_schur(SymFun::e({2})) == SymFun::s({1, 1}));
  CHECK(to_schur(SymFun::e({1, 1})) == SymFun::s({2}) + SymFun::s({1, 1}));
  CHECK(to_schur(SymFun::zero(3)).is_zero());
}

TEST_CASE("s to e") {
  CHECK(schur_to_e(SymFun::s({1, 1})) == SymFun::e({2}));
  CHECK(schur_to_e(SymFun::s({2})) == SymFun::e({1, 1}) - SymFun::e({2}));
  for (int n = 1; n <= 6; ++n) CHECK(schur_to_e(SymFun::s(Partition(static_cast<std::size_t>(n), 1))) == SymFun::e({n}));
}

TEST_CASE("h in the e basis") {
  CHECK(h_to_e(0) == SymFun::one());
  CHECK(h_to_e(1) == SymFun::e({1}));
  CHECK(h_to_e(2) == SymFun::e({1, 1}) - SymFun::e({2}));
  // Newton: sum_{i=0}^n (-1)^i e_i h_{n-i} = 0.
  for (int n = 1; n <= 6; ++n) {
    SymFun acc = SymFun::zero(n);
    for (int i = 0; i <= n; ++i) {
      const SymFun ei = i == 0 ? SymFun::one() : SymFun::e({i});
      const SymFun term = mul(ei, h_to_e(n - i));
      acc += i % 2 == 0 ? term : term * QRat(-1);
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("omega") {
  CHECK(omega(SymFun::e({1})) == SymFun::e({1}));
  CHECK(omega(SymFun::e({2})) == SymFun::e({1, 1}) - SymFun::e({2}));
  std::mt19937 rng(5);
  for (int n = 1; n <= 5; ++n) {
    const SymFun f = random_symfun(rng, n, Basis::E);
    CHECK(omega(omega(f)) == f);
    for (const auto& l : partitions_of(n)) CHECK(omega(SymFun::s(l)) == schur_to_e(SymFun::s(conjugate(l))));
  }
}

TEST_CASE("products") {
  CHECK(mul(SymFun::e({2}), SymFun::e({2, 1})) == SymFun::e({2, 2, 1}));
  const SymFun f = SymFun::e({3, 1}) * QRat(q_int(2));
  CHECK(mul(f, SymFun::one()) == f);
  CHECK(to_schur(mul(SymFun::e({1}), SymFun::e({1}))) == SymFun::s({2}) + SymFun::s({1, 1}));
}

TEST_CASE("monomial expansions against matrix counts") {
  CHECK(to_monomial(SymFun::e({2})) == SymFun::basis_element(Basis::M, {1, 1}));
  CHECK(to_monomial(SymFun::s({2})) ==
        SymFun::basis_element(Basis::M, {2}) + SymFun::basis_element(Basis::M, {1, 1}));
  CHECK(to_monomial(SymFun::e({1})) == SymFun::basis_element(Basis::M, {1}));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const SymFun em = to_monomial(SymFun::e(mu));
      const SymFun hm = to_monomial(h_product(mu));
      const SymFun sm = to_monomial(SymFun::s(mu));
      for (const auto& l : partitions_of(n)) {
        CHECK(em.coeff(l) == QRat(matrix_count(mu, l, 1)));
        CHECK(hm.coeff(l) == QRat(matrix_count(mu, l, -1)));
        CHECK(sm.coeff(l) == QRat(ssyt_count(mu, l)));
      }
    }
  }
}

TEST_CASE("basis round trips") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const SymFun f = random_symfun(rng, n, Basis::E);
      for (Basis b : {Basis::E, Basis::H, Basis::M, Basis::S}) {
        const SymFun g = to_basis(f, b);
        CHECK(g.basis() == b);
        CHECK(to_e(g) == f);
      }
    }
  }
}

TEST_CASE("sums across bases and degrees") {
  SymFun a = SymFun::e({2});
  a += SymFun::s({2});
  CHECK(a == SymFun::e({1, 1}));
  SymFun z = SymFun::zero(2, Basis::S);
  z += SymFun::e({2});
  CHECK(z == SymFun::e({2}));
  SymFun d = SymFun::e({2});
  CHECK_THROWS_AS(d += SymFun::e({3}), DegreeMismatch);
  CHECK_THROWS_AS(d.add_term({1}, QRat(1)), DegreeMismatch);
  CHECK_THROWS_AS(parse_basis("x"), ParseError);
  CHECK(parse_basis("S") == Basis::S);
}

TEST_CASE("specialization and positivity") {
  const SymFun f = SymFun::e({2}) * QRat(q_int(2)) - SymFun::e({1, 1}) * QRat(q_pow(1));
  CHECK(specialize(f, Rational(1)) == SymFun::e({2}) * QRat(2) - SymFun::e({1, 1}));
  CHECK_FALSE(is_e_positive_at_one(f));
  CHECK(is_e_positive_at_one(SymFun::e({2}) * QRat(q_int(3))));
}

TEST_CASE("printing") {
  const SymFun f = SymFun::e({2}) * QRat(q_int(2)) + SymFun::e({1, 1}) * QRat(q_pow(1));
  CHECK(to_string(f) == "e[2]: 1 + q\ne[1,1]: q");
  CHECK(to_string(SymFun::one()) == "1");
  CHECK(to_string(SymFun::zero(3)) == "0");
}
