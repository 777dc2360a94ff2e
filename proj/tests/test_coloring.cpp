#include <doctest.h>

#include <algorithm>

#include "chromsym/coloring.hpp"
#include "chromsym/errors.hpp"

using namespace chromsym;

namespace {

// sum over all proper kappa: [n] -> [k] of q^inv, by brute force over k^n maps.
QPoly principal_oracle(const HessFn& m, int k) {
  const int n = m.n();
  std::vector<std::int64_t> counts;
  std::vector<int> kappa(static_cast<std::size_t>(n), 1);
  while (true) {
    bool proper = true;
    int inversions = 0;
    for (int i = 1; i <= n && proper; ++i) {
      for (int j = i + 1; j <= m(i); ++j) {
        const int ci = kappa[static_cast<std::size_t>(i - 1)], cj = kappa[static_cast<std::size_t>(j - 1)];
        if (ci == cj) proper = false;
        if (ci > cj) ++inversions;
      }
    }
    if (proper) {
      if (static_cast<int>(counts.size()) <= inversions) counts.resize(static_cast<std::size_t>(inversions) + 1, 0);
      ++counts[static_cast<std::size_t>(inversions)];
    }
    int pos = 0;
    while (pos < n && kappa[static_cast<std::size_t>(pos)] == k) kappa[static_cast<std::size_t>(pos++)] = 1;
    if (pos == n) break;
    ++kappa[static_cast<std::size_t>(pos)];
  }
  return QPoly::from_counts(counts);
}

// Number of distinct rearrangements of lambda padded with zeros to length k.
std::int64_t monomial_count(const Partition& lambda, int k) {
  if (static_cast<int>(lambda.size()) > k) return 0;
  std::vector<int> v(lambda.begin(), lambda.end());
  v.resize(static_cast<std::size_t>(k), 0);
  std::sort(v.begin(), v.end());
  std::int64_t c = 0;
  do ++c;
  while (std::next_permutation(v.begin(), v.end()));
  return c;
}

}  // namespace

TEST_CASE("inversions of a coloring") {
  CHECK(inv_coloring(path(2), {2, 1}) == 1);
  CHECK(inv_coloring(path(2), {1, 2}) == 0);
  CHECK(inv_coloring(HessFn({3, 3, 3}), {1, 2, 3}) == 0);
  CHECK_THROWS_AS(inv_coloring(path(2), {1, 1}), NotProper);
  CHECK_THROWS_AS(inv_coloring(path(2), {1}), SizeMismatch);
}

TEST_CASE("small chromatic functions") {
  CHECK(x_colorings(path(1)) == SymFun::basis_element(Basis::M, {1}));
  CHECK(x_colorings(path(2)) == SymFun::basis_element(Basis::M, {1, 1}, QRat(q_int(2))));
  CHECK(to_e(x_colorings(path(2))) == SymFun::e({2}) * QRat(q_int(2)));
  const SymFun e111 = to_monomial(SymFun::e({1, 1, 1}));
  CHECK(x_colorings(HessFn({1, 2, 3})) == e111);
  CHECK_THROWS_AS(x_colorings(path(8)), SizeLimitExceeded);
}

TEST_CASE("coefficients do not depend on the chosen monomial") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      for (const auto& lambda : partitions_of(n)) {
        std::vector<int> content(lambda.begin(), lambda.end());
        content.push_back(0);
        const QPoly base = coloring_coefficient(m, content);
        std::sort(content.begin(), content.end());
        do CHECK(coloring_coefficient(m, content) == base);
        while (std::next_permutation(content.begin(), content.end()));
      }
    }
  }
}

TEST_CASE("principal specialization agrees with brute force") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      const SymFun x = x_colorings(m);
      for (int k = 1; k <= 4; ++k) {
        QRat predicted(0);
        for (const auto& [lambda, c] : x.coeffs()) predicted += c * QRat(monomial_count(lambda, k));
        CHECK(predicted == QRat(principal_oracle(m, k)));
      }
    }
  }
}

TEST_CASE("X is multiplicative over disjoint unions") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; a + b <= 5; ++b) {
      for (const auto& m1 : enumerate_hess(a)) {
        for (const auto& m2 : enumerate_hess(b)) {
          CHECK(to_e(x_colorings(m1 + m2)) == mul(x_colorings(m1), x_colorings(m2)));
        }
      }
    }
  }
}
