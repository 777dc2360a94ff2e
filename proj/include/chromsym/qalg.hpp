#pragma once

// Exact arithmetic in Q[q] and Q(q).
//
// QPoly stores coefficients in ascending degree with trailing zeros stripped,
// so the zero polynomial is the empty vector. QRat keeps a canonical form:
// monic denominator and gcd(num, den) = 1, which makes operator== structural.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace chromsym {

using Rational = mpq_class;

class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor): constants promote freely
  explicit QPoly(const Rational& c);
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly monomial(const Rational& c, int degree);
  // sum_i counts[i] q^i
  static QPoly from_counts(const std::vector<std::int64_t>& counts);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational eval(const Rational& q0) const;
  QPoly monic() const;
  QPoly scaled(const Rational& c) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  QPoly quotient;
  QPoly remainder;
};

// Long division over Q. Throws DivisionByZero if b is zero.
DivMod divmod(const QPoly& a, const QPoly& b);
// c with c*b == a; throws NotDivisible when the remainder is nonzero.
QPoly exact_div(const QPoly& a, const QPoly& b);
// Monic gcd (zero only when both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

QPoly q_pow(int k);
// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0.
QPoly q_int(int k);
// [k]_q! = [1]_q [2]_q ... [k]_q; [0]_q! = 1.
QPoly q_fact(int k);

class QRat {
 public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  // Throws DivisionByZero on a zero denominator.
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  // Throws NotPolynomial unless the denominator is 1.
  const QPoly& as_polynomial() const;

  QRat inverse() const;
  Rational eval_at(const Rational& q0) const;

  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend QRat operator-(const QRat& a);
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Raw {};
  QRat(Raw, QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  QPoly num_;
  QPoly den_;
};

std::string to_string(const Rational& r);
// Human-readable, ascending powers: "1 + 2*q + q^2".
std::string to_string(const QPoly& p);
std::string to_string(const QRat& r);

}  // namespace chromsym
