#include "chromsym/qalg.hpp"

#include <sstream>
#include <utility>

#include "chromsym/errors.hpp"

namespace chromsym {

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const Rational& c) {
  if (c != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

QPoly QPoly::monomial(const Rational& c, int degree) {
  QPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = c;
  p.coeffs_.back().canonicalize();
  return p;
}

QPoly QPoly::from_counts(const std::vector<std::int64_t>& counts) {
  std::vector<Rational> c;
  c.reserve(counts.size());
  for (auto v : counts) c.emplace_back(static_cast<long>(v));
  return QPoly(std::move(c));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool QPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& QPoly::leading() const {
  if (coeffs_.empty()) throw IndexOutOfRange("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational QPoly::eval(const Rational& q0) const {
  Rational x = q0;
  x.canonicalize();
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

QPoly QPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Rational cc = c;
  cc.canonicalize();
  QPoly r = *this;
  for (auto& x : r.coeffs_) x *= cc;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly operator-(const QPoly& a) { return a.scaled(Rational(-1)); }

DivMod divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {QPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1, Rational(0));
  const Rational inv_lead = Rational(1) / b.leading();
  for (int i = da; i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) {
    throw NotDivisible("(" + to_string(a) + ") is not divisible by (" + to_string(b) + ")");
  }
  return quot;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a.monic();
  QPoly y = b.monic();
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

QPoly q_pow(int k) { return QPoly::monomial(Rational(1), k); }

QPoly q_int(int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k > 0 ? k : 0), Rational(1));
  return QPoly(std::move(c));
}

QPoly q_fact(int k) {
  QPoly p(1);
  for (int i = 2; i <= k; ++i) p *= q_int(i);
  return p;
}

// ---------------------------------------------------------------------------

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

void QRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).quotient;
      den_ = divmod(den_, g).quotient;
    }
  }
  if (den_.leading() != 1) {
    const Rational s = Rational(1) / den_.leading();
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

const QPoly& QRat::as_polynomial() const {
  if (!is_polynomial()) throw NotPolynomial("expected a polynomial, got " + to_string(*this));
  return num_;
}

QRat QRat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return QRat(den_, num_);
}

Rational QRat::eval_at(const Rational& q0) const {
  const Rational d = den_.eval(q0);
  if (d == 0) throw PoleAtPoint("denominator vanishes at q = " + q0.get_str());
  return num_.eval(q0) / d;
}

QRat& QRat::operator+=(const QRat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = QPoly(1);
    return *this;
  }
  *this = QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  *this = QRat(num_ * o.num_, den_ * o.den_);
  return *this;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat operator-(const QRat& a) { return QRat(QRat::Raw{}, -a.num_, a.den_); }

// ---------------------------------------------------------------------------

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "q";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string to_string(const QRat& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

}  // namespace chromsym
