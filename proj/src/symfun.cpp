#include "chromsym/symfun.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

#include "chromsym/errors.hpp"

namespace chromsym {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::E: return 'e';
    case Basis::H: return 'h';
    case Basis::M: return 'm';
    case Basis::S: return 's';
  }
  return '?';
}

Basis parse_basis(const std::string& s) {
  if (s.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(s[0]))) {
      case 'e': return Basis::E;
      case 'h': return Basis::H;
      case 'm': return Basis::M;
      case 's': return Basis::S;
      default: break;
    }
  }
  throw ParseError("unknown basis '" + s + "' (expected e, h, m or s)");
}

SymFun SymFun::scalar(const QRat& c) {
  SymFun f(0, Basis::E);
  f.add_term({}, c);
  return f;
}

SymFun SymFun::basis_element(Basis b, const Partition& lambda, const QRat& c) {
  validate_partition(lambda);
  SymFun f(size(lambda), b);
  f.add_term(lambda, c);
  return f;
}

QRat SymFun::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? QRat(0) : it->second;
}

void SymFun::add_term(const Partition& lambda, const QRat& c) {
  if (size(lambda) != degree_) {
    throw DegreeMismatch("term " + to_string(lambda) + " in a degree " + std::to_string(degree_) +
                         " symmetric function");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

SymFun& SymFun::operator+=(const SymFun& o) {
  if (degree_ != o.degree_) {
    throw DegreeMismatch("adding degree " + std::to_string(o.degree_) + " to degree " +
                         std::to_string(degree_));
  }
  if (o.is_zero()) return *this;
  if (basis_ != o.basis_) {
    if (is_zero()) {
      basis_ = o.basis_;
    } else {
      return *this += to_basis(o, basis_);
    }
  }
  for (const auto& [lambda, c] : o.coeffs_) add_term(lambda, c);
  return *this;
}

SymFun& SymFun::operator-=(const SymFun& o) { return *this += o * QRat(-1); }

SymFun& SymFun::operator*=(const QRat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [lambda, v] : coeffs_) v *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// Basis changes. Every transition matrix used here is a Kostka matrix, which is
// unitriangular with respect to dominance and hence with respect to the
// lexicographic order that refines it.

SymFun to_schur(const SymFun& f) {
  if (f.basis() == Basis::S) return f;
  if (f.basis() == Basis::M) {
    // m_nu = sum_lambda (K^{-1})_{nu, lambda} s_lambda; solve
    // coeff_m(nu) = sum_lambda a_lambda K_{lambda, nu} from the top of the order.
    SymFun out(f.degree(), Basis::S);
    const auto& parts = partitions_of(f.degree());
    SymFun::Coeffs a;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      QRat v = f.coeff(*it);
      for (const auto& [lambda, c] : a) {
        if (lambda > *it) {
          const auto k = kostka(lambda, *it);
          if (k != 0) v -= c * QRat(static_cast<long>(k));
        }
      }
      if (!v.is_zero()) a.emplace(*it, v);
    }
    for (const auto& [lambda, c] : a) out.add_term(lambda, c);
    return out;
  }
  if (f.basis() == Basis::H) {
    // h_mu = sum_lambda K_{lambda, mu} s_lambda.
    SymFun out(f.degree(), Basis::S);
    for (const auto& [mu, c] : f.coeffs()) {
      for (const auto& lambda : partitions_of(f.degree())) {
        const auto k = kostka(lambda, mu);
        if (k != 0) out.add_term(lambda, c * QRat(static_cast<long>(k)));
      }
    }
    return out;
  }
  // e_mu = sum_lambda K_{lambda', mu} s_lambda.
  SymFun out(f.degree(), Basis::S);
  for (const auto& [mu, c] : f.coeffs()) {
    for (const auto& lambda : partitions_of(f.degree())) {
      const auto k = kostka(conjugate(lambda), mu);
      if (k != 0) out.add_term(lambda, c * QRat(static_cast<long>(k)));
    }
  }
  return out;
}

SymFun schur_to_e(const SymFun& f) {
  if (f.basis() != Basis::S) throw BasisMismatch("schur_to_e expects the s basis");
  // a_{nu'} = sum_{mu <= nu} c_mu K_{nu, mu}; walk nu upward in lex order.
  SymFun out(f.degree(), Basis::E);
  SymFun::Coeffs c;
  for (const auto& nu : partitions_of(f.degree())) {
    QRat v = f.coeff(conjugate(nu));
    for (const auto& [mu, cm] : c) {
      const auto k = kostka(nu, mu);
      if (k != 0) v -= cm * QRat(static_cast<long>(k));
    }
    if (!v.is_zero()) c.emplace(nu, v);
  }
  for (const auto& [mu, cm] : c) out.add_term(mu, cm);
  return out;
}

SymFun h_to_e(int n) {
  static std::mutex mu;
  static std::map<int, SymFun> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  SymFun result;
  if (n == 0) {
    result = SymFun::one();
  } else {
    // h_n = sum_{i=1}^n (-1)^{i-1} e_i h_{n-i}
    result = SymFun::zero(n);
    for (int i = 1; i <= n; ++i) {
      SymFun term = mul(SymFun::e({i}), h_to_e(n - i));
      result += term * QRat(i % 2 == 1 ? 1 : -1);
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, result);
  return result;
}

SymFun h_product(const Partition& lambda) {
  SymFun out = SymFun::one();
  for (int part : lambda) out = mul(out, h_to_e(part));
  return out;
}

SymFun to_e(const SymFun& f) {
  switch (f.basis()) {
    case Basis::E: return f;
    case Basis::S: return schur_to_e(f);
    case Basis::M: return schur_to_e(to_schur(f));
    case Basis::H: {
      SymFun out = SymFun::zero(f.degree());
      for (const auto& [lambda, c] : f.coeffs()) out += h_product(lambda) * c;
      return out;
    }
  }
  return f;
}

SymFun to_monomial(const SymFun& f) {
  if (f.basis() == Basis::M) return f;
  const SymFun s = to_schur(f);
  SymFun out(f.degree(), Basis::M);
  for (const auto& [lambda, c] : s.coeffs()) {
    for (const auto& nu : partitions_of(f.degree())) {
      const auto k = kostka(lambda, nu);
      if (k != 0) out.add_term(nu, c * QRat(static_cast<long>(k)));
    }
  }
  return out;
}

SymFun to_basis(const SymFun& f, Basis b) {
  if (f.basis() == b) return f;
  switch (b) {
    case Basis::E: return to_e(f);
    case Basis::S: return to_schur(f);
    case Basis::M: return to_monomial(f);
    case Basis::H: {
      // f = sum c_lambda h_lambda  iff  omega(f) = sum c_lambda e_lambda.
      SymFun w = omega(f);
      SymFun out(f.degree(), Basis::H);
      for (const auto& [lambda, c] : w.coeffs()) out.add_term(lambda, c);
      return out;
    }
  }
  return f;
}

SymFun omega(const SymFun& f) {
  if (f.basis() == Basis::H) {
    SymFun out(f.degree(), Basis::E);
    for (const auto& [lambda, c] : f.coeffs()) out.add_term(lambda, c);
    return out;
  }
  const SymFun fe = to_e(f);
  SymFun out = SymFun::zero(f.degree());
  for (const auto& [lambda, c] : fe.coeffs()) out += h_product(lambda) * c;
  return out;
}

SymFun mul(const SymFun& f, const SymFun& g) {
  const SymFun a = to_e(f);
  const SymFun b = to_e(g);
  SymFun out(a.degree() + b.degree(), Basis::E);
  for (const auto& [la, ca] : a.coeffs()) {
    for (const auto& [lb, cb] : b.coeffs()) {
      Partition merged;
      merged.reserve(la.size() + lb.size());
      std::merge(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(merged),
                 std::greater<>());
      out.add_term(merged, ca * cb);
    }
  }
  return out;
}

SymFun specialize(const SymFun& f, const Rational& q0) {
  SymFun out(f.degree(), f.basis());
  for (const auto& [lambda, c] : f.coeffs()) out.add_term(lambda, QRat(QPoly(c.eval_at(q0))));
  return out;
}

bool is_e_positive_at_one(const SymFun& f) {
  const SymFun fe = to_e(f);
  for (const auto& [lambda, c] : fe.coeffs()) {
    if (c.eval_at(Rational(1)) < 0) return false;
  }
  return true;
}

std::string to_string(const SymFun& f) {
  if (f.degree() == 0) return to_string(f.coeff({}));
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    if (!first) os << "\n";
    first = false;
    os << basis_letter(f.basis()) << to_string(it->first) << ": " << to_string(it->second);
  }
  return os.str();
}

}  // namespace chromsym
