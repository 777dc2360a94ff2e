#pragma once

// Hessenberg functions m: [n] -> [n], weakly increasing with i <= m(i).
// All public indices are 1-based to match the combinatorial conventions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chromsym {

class HessFn {
 public:
  HessFn() = default;
  // Throws InvalidHessenberg naming the violated constraint.
  explicit HessFn(std::vector<int> values);

  int n() const { return static_cast<int>(values_.size()); }
  // m(i), 1 <= i <= n. Throws IndexOutOfRange.
  int operator()(int i) const;
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const HessFn& a, const HessFn& b) { return a.values_ == b.values_; }
  friend bool operator<(const HessFn& a, const HessFn& b) { return a.values_ < b.values_; }

 private:
  std::vector<int> values_;
};

// "2,3,5,5,5". Throws ParseError or InvalidHessenberg.
HessFn parse_hess(const std::string& text);
std::string to_string(const HessFn& m);

int area(const HessFn& m);
// i < j <= m(i)
bool has_edge(const HessFn& m, int i, int j);
std::vector<std::pair<int, int>> edges(const HessFn& m);
// i <_m j iff m(i) < j. Throws IndexOutOfRange.
bool poset_less(const HessFn& m, int i, int j);

// Disjoint union of incomparability graphs.
HessFn operator+(const HessFn& a, const HessFn& b);
// Glue the last vertex of a to the first vertex of b.
HessFn wedge(const HessFn& a, const HessFn& b);
HessFn path(int n);
// Sum of paths with the given lengths, in order.
HessFn union_of_paths(const std::vector<int>& lengths);
// Component sizes from left to right when every component is a path graph.
std::optional<std::vector<int>> is_union_of_paths(const HessFn& m);

// All of H_n in lexicographic order.
std::vector<HessFn> enumerate_hess(int n);

struct Classification {
  enum class Kind { UnionOfPaths, Flat, NonFlat };
  Kind kind = Kind::UnionOfPaths;
  std::vector<int> parts;  // UnionOfPaths only
  int alpha = 0;
  int beta = 0;
};

// Throws InvalidHessenberg if a non-path m has no admissible alpha, or if a
// non-flat m has m(alpha+1) != m(alpha)+1.
Classification classify(const HessFn& m);

}  // namespace chromsym
