#pragma once

// Homogeneous symmetric functions of a fixed degree over Q(q), stored as sparse
// coordinate maps in one of the bases e, h, m, s. The e basis is canonical:
// products and omega are computed there and other bases are views.

#include <map>
#include <string>

#include "chromsym/combinat.hpp"
#include "chromsym/qalg.hpp"

namespace chromsym {

enum class Basis { E, H, M, S };

char basis_letter(Basis b);
// Accepts "e", "h", "m", "s" (case-insensitive). Throws ParseError.
Basis parse_basis(const std::string& s);

class SymFun {
 public:
  using Coeffs = std::map<Partition, QRat>;

  SymFun() = default;
  SymFun(int degree, Basis basis) : degree_(degree), basis_(basis) {}

  static SymFun zero(int degree, Basis basis = Basis::E) { return SymFun(degree, basis); }
  static SymFun one() { return scalar(QRat(1)); }
  static SymFun scalar(const QRat& c);
  static SymFun basis_element(Basis b, const Partition& lambda, const QRat& c = QRat(1));
  static SymFun e(const Partition& lambda) { return basis_element(Basis::E, lambda); }
  static SymFun s(const Partition& lambda) { return basis_element(Basis::S, lambda); }

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  QRat coeff(const Partition& lambda) const;

  // Adds c to the coefficient of lambda. Throws DegreeMismatch.
  void add_term(const Partition& lambda, const QRat& c);

  SymFun& operator+=(const SymFun& o);
  SymFun& operator-=(const SymFun& o);
  SymFun& operator*=(const QRat& c);

  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  friend SymFun operator*(SymFun a, const QRat& c) { return a *= c; }
  friend SymFun operator*(const QRat& c, SymFun a) { return a *= c; }
  // Structural: same degree, basis and coefficients.
  friend bool operator==(const SymFun& a, const SymFun& b) {
    return a.degree_ == b.degree_ && a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int degree_ = 0;
  Basis basis_ = Basis::E;
  Coeffs coeffs_;
};

// e-expansion of the Schur expansion via Kostka numbers.
SymFun to_schur(const SymFun& f);
SymFun schur_to_e(const SymFun& f);
SymFun to_e(const SymFun& f);
SymFun to_monomial(const SymFun& f);
SymFun to_basis(const SymFun& f, Basis b);

// e-expansion of h_n.
SymFun h_to_e(int n);
// e-expansion of h_lambda.
SymFun h_product(const Partition& lambda);
SymFun omega(const SymFun& f);
// Product; result is in the e basis.
SymFun mul(const SymFun& f, const SymFun& g);

// Substitute q = q0 in every coefficient; result has constant coefficients.
SymFun specialize(const SymFun& f, const Rational& q0);
// Every e-coefficient at q = 1 is >= 0.
bool is_e_positive_at_one(const SymFun& f);

// "e[2,1]: 1 + q" lines, partitions in reverse lexicographic order. A degree 0
// function prints as its scalar.
std::string to_string(const SymFun& f);

}  // namespace chromsym
