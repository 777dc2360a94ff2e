#pragma once

// Modular triples, the restricted modular law, and reduction of any Hessenberg
// function to a Q(q)-combination of disjoint unions of paths.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chromsym/hessenberg.hpp"
#include "chromsym/symfun.hpp"

namespace chromsym {

enum class TripleKind { TypeI, TypeII, RestrictedTypeII };

const char* to_string(TripleKind kind);

struct ModularTriple {
  HessFn m;
  HessFn m_prime;
  HessFn m_dprime;
  TripleKind kind = TripleKind::TypeI;
  int index = 0;
};

// Definition predicates on (m, m', m'') at position i.
bool is_type_one(const HessFn& m, const HessFn& mp, const HessFn& mpp, int i);
bool is_type_two(const HessFn& m, const HessFn& mp, const HessFn& mpp, int i);
bool is_restricted_type_two(const HessFn& m, const HessFn& mp, const HessFn& mpp, int i);
bool is_triple(const ModularTriple& t);

std::vector<ModularTriple> enumerate_triples(int n, TripleKind kind);

struct FlatSplit {
  HessFn m0;
  HessFn m1;
};
struct NonFlatSplit {
  HessFn m0;
  HessFn m0_1;
  HessFn m_1;
  HessFn m2;
};

// f(m) = (1+q) f(m1) - q f(m0). Throws NotFlat.
FlatSplit split_flat(const HessFn& m);
// f(m) = f(m_1) + q/(1+q) (f(m0) - f(m0_1)). Throws NotNonFlat.
NonFlatSplit split_nonflat(const HessFn& m);

// Keys are ordered lists of path lengths: the base functions are not
// symmetric under reordering the components.
class PathCombination {
 public:
  using Terms = std::map<std::vector<int>, QRat>;

  PathCombination() = default;
  explicit PathCombination(int n) : n_(n) {}
  static PathCombination single(const std::vector<int>& parts);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  void add(const std::vector<int>& parts, const QRat& c);

  PathCombination& operator+=(const PathCombination& o);
  PathCombination& operator*=(const QRat& c);
  friend PathCombination operator+(PathCombination a, const PathCombination& b) { return a += b; }
  friend PathCombination operator*(PathCombination a, const QRat& c) { return a *= c; }
  friend bool operator==(const PathCombination& a, const PathCombination& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_ = 0;
  Terms terms_;
};

inline constexpr int kReduceMaxN = 10;

struct ReduceStats {
  int nodes = 0;      // distinct Hessenberg functions visited
  int max_depth = 0;  // longest recursion chain
};

// Throws SizeLimitExceeded when n > max_n. Every step re-validates its triples.
PathCombination reduce(const HessFn& m, ReduceStats* stats = nullptr, int max_n = kReduceMaxN);

using HessFunction = std::function<SymFun(const HessFn&)>;
using PathBase = std::function<SymFun(const std::vector<int>&)>;

struct LawViolation {
  ModularTriple triple;
  std::string detail;
};

struct LawReport {
  int checked = 0;
  std::vector<LawViolation> violations;
  bool ok() const { return violations.empty(); }
};

// (1+q) f(m') = q f(m) + f(m'') on every triple of each requested kind in H_n.
LawReport check_restricted_modular_law(const HessFunction& f, int n,
                                       const std::vector<TripleKind>& kinds = {
                                           TripleKind::TypeI, TripleKind::RestrictedTypeII});

// sum of c * base(paths). Throws DegreeMismatch.
SymFun evaluate(const PathCombination& c, const PathBase& base);

enum class Refinement { E, G, S };
const char* to_string(Refinement r);
// Total E, G or S computed directly on the union of paths.
PathBase direct_base(Refinement r);
// Closed forms on a single path and multiplicativity over components.
PathBase closed_form_base(Refinement r);
// sum_{alpha composition of n-k} e_k e_alpha prod ([alpha_i]_q - 1)
SymFun path_part_closed_form(int n, int k);
// sum_k [k]_q path_part_closed_form(n, k)
SymFun path_x_closed_form(int n);

std::string to_string(const PathCombination& c);

}  // namespace chromsym
