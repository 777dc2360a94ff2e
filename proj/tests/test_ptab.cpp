#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "chromsym/coloring.hpp"
#include "chromsym/errors.hpp"
#include "chromsym/hikita.hpp"
#include "chromsym/ptab.hpp"

using namespace chromsym;

namespace {

bool less_m(const HessFn& m, int a, int b) { return m(a) < b; }

int inv_oracle(const HessFn& m, const Tableau& rows) {
  std::map<int, int> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int v : rows[r]) row_index[v] = static_cast<int>(r);
  }
  int count = 0;
  for (int i = 1; i <= m.n(); ++i) {
    for (int j = i + 1; j <= m(i); ++j) count += row_index.at(j) < row_index.at(i) ? 1 : 0;
  }
  return count;
}

// Every bijective filling of lambda, kept when rows increase in <_m and no
// column entry is >_m the entry below it.
std::vector<Tableau> pt_oracle(const HessFn& m, const Partition& lambda, bool corner1) {
  const int n = m.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Tableau> out;
  do {
    Tableau t;
    std::size_t idx = 0;
    for (int len : lambda) {
      t.emplace_back(perm.begin() + static_cast<long>(idx), perm.begin() + static_cast<long>(idx + static_cast<std::size_t>(len)));
      idx += static_cast<std::size_t>(len);
    }
    bool ok = !corner1 || t[0][0] == 1;
    for (std::size_t r = 0; r < t.size() && ok; ++r) {
      for (std::size_t c = 0; c < t[r].size() && ok; ++c) {
        if (c + 1 < t[r].size() && !less_m(m, t[r][c], t[r][c + 1])) ok = false;
        if (r + 1 < t.size() && c < t[r + 1].size() && less_m(m, t[r + 1][c], t[r][c])) ok = false;
      }
    }
    if (ok) out.push_back(t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> rows_of(const std::vector<PFilling>& fs) {
  std::vector<Tableau> out;
  for (const auto& f : fs) out.push_back(f.rows);
  std::sort(out.begin(), out.end());
  return out;
}

PFilling straight(Tableau rows) { return PFilling{{}, std::move(rows)}; }

}  // namespace

TEST_CASE("inversions of a filling") {
  const HessFn m({2, 4, 4, 5, 5});
  const PFilling t = straight({{1, 5}, {3}, {4}, {2}});
  CHECK(is_valid_filling(m, t, FillingMode::Tableau));
  CHECK(inv(m, t) == 3);
  CHECK(inv(path(4), staircase(4)) == 0);
  CHECK(inv(HessFn({1, 2, 3}), straight({{1, 2, 3}})) == 0);
  CHECK_THROWS_AS(inv(path(2), straight({{1, 2}})), InvalidFilling);
}

TEST_CASE("P-tableaux on small examples") {
  CHECK(enumerate_pt(path(2), {2}, true).empty());
  const auto col = enumerate_pt(path(2), {1, 1}, true);
  REQUIRE(col.size() == 1);
  CHECK(col[0].rows == Tableau{{1}, {2}});
  CHECK(inv(path(2), col[0]) == 0);
  const auto chain = enumerate_pt(HessFn({1, 2, 3, 4}), {4}, true);
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].rows == Tableau{{1, 2, 3, 4}});
}

TEST_CASE("P-tableaux agree with brute force") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      for (const auto& lambda : partitions_of(n)) {
        for (bool corner1 : {false, true}) {
          const auto fs = enumerate_pt(m, lambda, corner1);
          CHECK(rows_of(fs) == pt_oracle(m, lambda, corner1));
          for (const auto& f : fs) CHECK(inv(m, f) == inv_oracle(m, f.rows));
        }
      }
    }
  }
}

TEST_CASE("Schur-side functions") {
  CHECK(s_fun(path(2)) == SymFun::s({1, 1}));
  CHECK(s_fun(path(1)) == SymFun::s({1}));
  CHECK(x_schur(path(2)) == SymFun::basis_element(Basis::S, {1, 1}, QRat(q_int(2))));
  CHECK_THROWS_AS(s_fun(path(9)), SizeLimitExceeded);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : enumerate_hess(n)) CHECK(to_e(x_schur(m)) == to_e(x_colorings(m)));
  }
}

TEST_CASE("signed P-array sums recover P-tableaux") {
  CHECK(enumerate_pa(path(3), {0, 2, 1}, true).empty());
  CHECK(w_shift({3, 1}, {2, 1}) == std::vector<int>{0, 4});
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      for (const auto& lambda : partitions_of(n)) {
        CHECK(signed_pa_sum(m, lambda, true) == inv_generating(m, enumerate_pt(m, lambda, true)));
        CHECK(signed_pa_sum(m, lambda, false) == inv_generating(m, enumerate_pt(m, lambda, false)));
      }
    }
  }
}

TEST_CASE("two-row P-arrays are symmetric entry set by entry set") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      for (int a = 0; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) CHECK(pa_grouped_by_entries(m, a, b) == pa_grouped_by_entries(m, b, a));
      }
    }
  }
}

TEST_CASE("skew P-tableaux multiply by s_mu") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      const SymFun x = x_schur(m);
      for (int k = 0; k <= 2; ++k) {
        for (const auto& mu : partitions_of(k)) {
          SymFun lhs = SymFun::zero(n + k, Basis::S);
          for (const auto& lambda : partitions_of(n + k)) {
            bool contains = lambda.size() >= mu.size();
            for (std::size_t i = 0; i < mu.size() && contains; ++i) contains = lambda[i] >= mu[i];
            if (!contains) continue;
            const QPoly c = inv_generating(m, enumerate_pt_skew(m, lambda, mu));
            if (!c.is_zero()) lhs.add_term(lambda, QRat(c));
          }
          const SymFun smu = k == 0 ? SymFun::one() : SymFun::s(mu);
          CHECK(to_e(lhs) == mul(smu, x));
        }
      }
    }
  }
}

TEST_CASE("S is multiplicative") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; a + b <= 5; ++b) {
      for (const auto& m1 : enumerate_hess(a)) {
        for (const auto& m2 : enumerate_hess(b)) CHECK(to_e(s_fun(m1 + m2)) == mul(s_fun(m1), x_schur(m2)));
      }
    }
  }
}

TEST_CASE("path tableaux: recursion and S = E") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      QPoly rhs = lambda == Partition(static_cast<std::size_t>(n), 1) ? QPoly(1) : QPoly();
      for (const auto& mu : vertical_strips(lambda)) {
        if (mu == lambda || mu.empty()) continue;
        rhs += (q_int(size(lambda) - size(mu)) - QPoly(1)) * path_l(mu);
      }
      CHECK(path_l(lambda) == rhs);
    }
    CHECK(to_e(s_fun(path(n))) == e_total(path(n)));
  }
  CHECK(path_l({}).is_zero());
}

TEST_CASE("peeling on the worked examples") {
  const PFilling t1 = straight({{1, 4, 7, 12, 18}, {3, 5, 10, 14, 17}, {2, 9, 13}, {6, 8, 16}, {11, 15, 19}, {20}, {21}});
  const PFilling t2 = straight({{1, 4, 7, 12, 18}, {3, 5, 10, 14, 17}, {2, 9, 15}, {6, 8, 16}, {11, 13, 19}, {20}, {21}});
  const HessFn p21 = path(21);
  REQUIRE(is_valid_filling(p21, t1, FillingMode::Tableau));
  REQUIRE(is_valid_filling(p21, t2, FillingMode::Tableau));
  const Peeled a = path_peel(t1);
  const Peeled b = path_peel(t2);
  CHECK(a.j == 3);
  CHECK(b.j == 2);
  for (const auto& [t, pe] : {std::pair{t1, a}, std::pair{t2, b}}) {
    const int mu = size(shape_of(pe.tableau.rows));
    CHECK(inv(p21, t) == inv(path(mu), pe.tableau) + pe.j);
    CHECK(path_unpeel(pe, shape_of(t.rows)) == t);
  }
  const auto small = enumerate_pt(path(3), {2, 1}, true);
  REQUIRE(small.size() == 1);
  CHECK(small[0].rows == Tableau{{1, 3}, {2}});
  const Peeled s = path_peel(small[0]);
  CHECK(s.tableau.rows == Tableau{{1}});
  CHECK(s.j == 1);
  CHECK_THROWS_AS(path_peel(staircase(4)), IsBaseTableau);
}

TEST_CASE("peeling is a bijection onto strip data") {
  for (int n = 1; n <= 7; ++n) {
    const HessFn p = path(n);
    for (const auto& lambda : partitions_of(n)) {
      std::set<std::pair<Tableau, int>> images;
      std::size_t count = 0;
      for (const auto& t : enumerate_pt(p, lambda, true)) {
        if (t == staircase(n)) continue;
        ++count;
        const Peeled pe = path_peel(t);
        const Partition mu = shape_of(pe.tableau.rows);
        const int strip = n - size(mu);
        CHECK(pe.j >= 1);
        CHECK(pe.j <= strip - 1);
        CHECK(inv(p, t) == inv(path(size(mu)), pe.tableau) + pe.j);
        CHECK(path_unpeel(pe, lambda) == t);
        images.emplace(pe.tableau.rows, pe.j);
      }
      CHECK(images.size() == count);
      std::size_t expected = 0;
      for (const auto& mu : vertical_strips(lambda)) {
        if (mu == lambda || mu.empty()) continue;
        const std::size_t strip = static_cast<std::size_t>(n - size(mu));
        expected += enumerate_pt(path(size(mu)), mu, true).size() * (strip - 1);
      }
      CHECK(count == expected);
    }
  }
}
