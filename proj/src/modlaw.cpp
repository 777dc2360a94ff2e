#include "chromsym/modlaw.hpp"

#include <algorithm>
#include <sstream>

#include "chromsym/errors.hpp"
#include "chromsym/gfun.hpp"
#include "chromsym/hikita.hpp"
#include "chromsym/ptab.hpp"

namespace chromsym {

const char* to_string(TripleKind kind) {
  switch (kind) {
    case TripleKind::TypeI: return "TypeI";
    case TripleKind::TypeII: return "TypeII";
    case TripleKind::RestrictedTypeII: return "RestrictedTypeII";
  }
  return "?";
}

namespace {

bool agree_off(const HessFn& a, const HessFn& b, int lo, int hi) {
  for (int j = 1; j <= a.n(); ++j) {
    if (j >= lo && j <= hi) continue;
    if (a(j) != b(j)) return false;
  }
  return true;
}

bool same_size(const HessFn& m, const HessFn& mp, const HessFn& mpp) {
  return m.n() == mp.n() && mp.n() == mpp.n();
}

}  // namespace

bool is_type_one(const HessFn& m, const HessFn& mp, const HessFn& mpp, int i) {
  const int n = mp.n();
  if (!same_size(m, mp, mpp) || i < 1 || i > n - 1) return false;
  if (m(i) + 1 != mp(i) || mp(i) != mpp(i) - 1) return false;
  const int prev = i > 1 ? mp(i - 1) : 0;
  if (!(prev < mp(i) && mp(i) < mp(i + 1))) return false;
  if (!agree_off(m, mp, i, i) || !agree_off(mpp, mp, i, i)) return false;
  const int v = mp(i);
  if (v + 1 > n) return false;
  return mp(v) == mp(v + 1);
}

bool is_type_two(const HessFn& m, const HessFn& mp, const HessFn& mpp, int i) {
  const int n = mp.n();
  if (!same_size(m, mp, mpp) || i < 1 || i > n - 1) return false;
  if (mp(i) + 1 != mp(i + 1)) return false;
  if (m(i) != mp(i) || mp(i) != mpp(i) - 1) return false;
  if (m(i + 1) + 1 != mp(i + 1) || mp(i + 1) != mpp(i + 1)) return false;
  if (!agree_off(m, mp, i, i + 1) || !agree_off(mpp, mp, i, i + 1)) return false;
  for (int j = 1; j <= n; ++j) {
    if (mp(j) == i) return false;
  }
  return true;
}

bool is_restricted_type_two(const HessFn& m, const HessFn& mp, const HessFn& mpp, int i) {
  return i != 1 && is_type_two(m, mp, mpp, i);
}

bool is_triple(const ModularTriple& t) {
  switch (t.kind) {
    case TripleKind::TypeI: return is_type_one(t.m, t.m_prime, t.m_dprime, t.index);
    case TripleKind::TypeII: return is_type_two(t.m, t.m_prime, t.m_dprime, t.index);
    case TripleKind::RestrictedTypeII:
      return is_restricted_type_two(t.m, t.m_prime, t.m_dprime, t.index);
  }
  return false;
}

namespace {

std::optional<HessFn> try_hess(std::vector<int> v) {
  try {
    return HessFn(std::move(v));
  } catch (const InvalidHessenberg&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<ModularTriple> enumerate_triples(int n, TripleKind kind) {
  std::vector<ModularTriple> out;
  for (const auto& mp : enumerate_hess(n)) {
    for (int i = 1; i <= n - 1; ++i) {
      std::vector<int> lo = mp.values();
      std::vector<int> hi = mp.values();
      const auto at = [](std::vector<int>& v, int idx) -> int& { return v[static_cast<std::size_t>(idx - 1)]; };
      if (kind == TripleKind::TypeI) {
        --at(lo, i);
        ++at(hi, i);
      } else {
        --at(lo, i + 1);
        ++at(hi, i);
      }
      auto m = try_hess(std::move(lo));
      auto mpp = try_hess(std::move(hi));
      if (!m || !mpp) continue;
      ModularTriple t{*m, mp, *mpp, kind, i};
      if (is_triple(t)) out.push_back(std::move(t));
    }
  }
  return out;
}

FlatSplit split_flat(const HessFn& m) {
  const Classification c = classify(m);
  if (c.kind != Classification::Kind::Flat) throw NotFlat(to_string(m) + " is not flat");
  std::vector<int> v0 = m.values();
  std::vector<int> v1 = m.values();
  v0[static_cast<std::size_t>(c.beta - 1)] -= 2;
  v1[static_cast<std::size_t>(c.beta - 1)] -= 1;
  return {HessFn(std::move(v0)), HessFn(std::move(v1))};
}

NonFlatSplit split_nonflat(const HessFn& m) {
  const Classification c = classify(m);
  if (c.kind != Classification::Kind::NonFlat) throw NotNonFlat(to_string(m) + " is not non-flat");
  std::vector<int> v0 = m.values();
  v0[static_cast<std::size_t>(c.alpha)] -= 1;  // position alpha+1
  std::vector<int> v2 = m.values();
  v2[static_cast<std::size_t>(c.alpha - 1)] += 1;
  std::vector<int> v01 = v2;
  std::vector<int> v1 = v2;
  v01[static_cast<std::size_t>(c.beta - 1)] -= 2;
  v1[static_cast<std::size_t>(c.beta - 1)] -= 1;
  return {HessFn(std::move(v0)), HessFn(std::move(v01)), HessFn(std::move(v1)), HessFn(std::move(v2))};
}

// ---------------------------------------------------------------------------

PathCombination PathCombination::single(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  PathCombination c(n);
  c.add(parts, QRat(1));
  return c;
}

void PathCombination::add(const std::vector<int>& parts, const QRat& c) {
  int total = 0;
  for (int p : parts) total += p;
  if (total != n_) throw DegreeMismatch("path lengths sum to " + std::to_string(total) + ", n = " + std::to_string(n_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(parts, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PathCombination& PathCombination::operator+=(const PathCombination& o) {
  if (o.n_ != n_) throw DegreeMismatch("combining certificates of different sizes");
  for (const auto& [parts, c] : o.terms_) add(parts, c);
  return *this;
}

PathCombination& PathCombination::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [parts, v] : terms_) v *= c;
  return *this;
}

namespace {

class Reducer {
 public:
  explicit Reducer(ReduceStats* stats) : stats_(stats) {}

  PathCombination run(const HessFn& m, int depth) {
    if (stats_ != nullptr) stats_->max_depth = std::max(stats_->max_depth, depth);
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    PathCombination result = step(m, depth);
    if (stats_ != nullptr) ++stats_->nodes;
    memo_.emplace(m, result);
    return result;
  }

 private:
  PathCombination step(const HessFn& m, int depth) {
    const Classification c = classify(m);
    const QPoly one_plus_q = q_int(2);
    switch (c.kind) {
      case Classification::Kind::UnionOfPaths:
        return PathCombination::single(c.parts);
      case Classification::Kind::Flat: {
        const FlatSplit s = split_flat(m);
        if (!is_type_one(s.m0, s.m1, m, c.beta)) {
          throw Error("flat step on " + to_string(m) + " produced an invalid type I triple");
        }
        return run(s.m1, depth + 1) * QRat(one_plus_q) + run(s.m0, depth + 1) * QRat(-q_pow(1));
      }
      case Classification::Kind::NonFlat: {
        const NonFlatSplit s = split_nonflat(m);
        if (!is_restricted_type_two(s.m0, m, s.m2, c.alpha) ||
            !is_type_one(s.m0_1, s.m_1, s.m2, c.beta)) {
          throw Error("non-flat step on " + to_string(m) + " produced an invalid triple");
        }
        const QRat w(q_pow(1), one_plus_q);
        return run(s.m_1, depth + 1) + run(s.m0, depth + 1) * w + run(s.m0_1, depth + 1) * (-w);
      }
    }
    throw Error("unreachable classification");
  }

  ReduceStats* stats_;
  std::map<HessFn, PathCombination> memo_;
};

}  // namespace

PathCombination reduce(const HessFn& m, ReduceStats* stats, int max_n) {
  if (m.n() > max_n) throw SizeLimitExceeded("reduce limited to n <= " + std::to_string(max_n));
  if (stats != nullptr) *stats = ReduceStats{};
  return Reducer(stats).run(m, 0);
}

LawReport check_restricted_modular_law(const HessFunction& f, int n, const std::vector<TripleKind>& kinds) {
  LawReport report;
  std::map<HessFn, SymFun> cache;
  const auto value = [&](const HessFn& m) -> const SymFun& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, to_e(f(m))).first;
    return it->second;
  };
  const QRat q(q_pow(1));
  const QRat one_plus_q(q_int(2));
  for (TripleKind kind : kinds) {
    for (const auto& t : enumerate_triples(n, kind)) {
      ++report.checked;
      const SymFun lhs = value(t.m_prime) * one_plus_q;
      const SymFun rhs = value(t.m) * q + value(t.m_dprime);
      if (!(lhs == rhs)) {
        report.violations.push_back({t, "(1+q) f(m') - q f(m) - f(m'') = " + to_string(lhs - rhs)});
      }
    }
  }
  return report;
}

SymFun evaluate(const PathCombination& c, const PathBase& base) {
  SymFun out = SymFun::zero(c.n());
  for (const auto& [parts, coeff] : c.terms()) {
    const SymFun v = base(parts);
    if (v.degree() != c.n()) {
      throw DegreeMismatch("base value has degree " + std::to_string(v.degree()) + ", certificate n = " +
                           std::to_string(c.n()));
    }
    out += to_e(v) * coeff;
  }
  return out;
}

const char* to_string(Refinement r) {
  switch (r) {
    case Refinement::E: return "E";
    case Refinement::G: return "G";
    case Refinement::S: return "S";
  }
  return "?";
}

PathBase direct_base(Refinement r) {
  return [r](const std::vector<int>& parts) -> SymFun {
    const HessFn m = union_of_paths(parts);
    switch (r) {
      case Refinement::E: return e_total(m);
      case Refinement::G: return g_total(m);
      case Refinement::S: return to_e(s_fun(m));
    }
    throw Error("unknown refinement");
  };
}

SymFun path_part_closed_form(int n, int k) {
  if (k < 1 || k > n) throw IndexOutOfRange("k outside [1, n]");
  SymFun sum = SymFun::zero(n - k);
  for (const auto& alpha : compositions_of(n - k)) {
    QPoly w(1);
    for (int a : alpha) w *= q_int(a) - QPoly(1);
    if (w.is_zero()) continue;
    sum.add_term(sort_partition(alpha), QRat(w));
  }
  return mul(SymFun::e({k}), sum);
}

SymFun path_x_closed_form(int n) {
  SymFun out = SymFun::zero(n);
  for (int k = 1; k <= n; ++k) out += path_part_closed_form(n, k) * QRat(q_int(k));
  return out;
}

PathBase closed_form_base(Refinement) {
  // The three refinements agree on paths, and each factors as
  // F(m1 + m2) = F(m1) X(m2) over disjoint unions.
  return [](const std::vector<int>& parts) -> SymFun {
    SymFun out = SymFun::one();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i == 0) {
        SymFun first = SymFun::zero(parts[0]);
        for (int k = 1; k <= parts[0]; ++k) first += path_part_closed_form(parts[0], k);
        out = mul(out, first);
      } else {
        out = mul(out, path_x_closed_form(parts[i]));
      }
    }
    return out;
  };
}

std::string to_string(const PathCombination& c) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [parts, coeff] : c.terms()) {
    os << (first ? "" : ", ") << to_string(parts) << ": " << to_string(coeff);
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace chromsym
