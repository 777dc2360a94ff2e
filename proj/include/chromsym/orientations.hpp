#pragma once

// Acyclic orientations of the incomparability graph, their sinks and ascents,
// the orientation attached to a P-tableau, and the sink theorems.

#include <map>
#include <utility>
#include <vector>

#include "chromsym/hessenberg.hpp"
#include "chromsym/ptab.hpp"
#include "chromsym/symfun.hpp"

namespace chromsym {

// toward_larger[e] says whether edges(m)[e] = (i, j), i < j, points at j.
struct Orientation {
  std::vector<std::pair<int, int>> edge_list;
  std::vector<bool> toward_larger;

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.edge_list == b.edge_list && a.toward_larger == b.toward_larger;
  }
  friend bool operator<(const Orientation& a, const Orientation& b) {
    return a.toward_larger < b.toward_larger;
  }
};

bool is_acyclic(int n, const Orientation& o);
// require_1_sink restricts to orientations in which vertex 1 is a sink.
std::vector<Orientation> enumerate_ao(const HessFn& m, bool require_1_sink);

int asc(const Orientation& o);
std::vector<int> sinks(int n, const Orientation& o);
// Minimum among the sinks under <_m. Throws Error if two sinks are incomparable.
int smallest_sink(const HessFn& m, const Orientation& o);

// Each edge points toward the endpoint in the higher row. Throws InvalidTableau.
Orientation theta_of(const HessFn& m, const PFilling& t);

// Image under e_i -> t: coefficient of t^l is the sum of e-coefficients over
// partitions of length l.
std::vector<QRat> zeta(const SymFun& f);

enum class SinkSource { X, S };
// sum over l(lambda) = l of the e-coefficients of X_m or S_m.
std::map<int, QRat> sink_distribution(const HessFn& m, SinkSource source);
// sum over orientations with exactly l sinks of q^asc.
std::map<int, QRat> orientation_sink_distribution(const HessFn& m, bool require_1_sink);

// Number of T in PT'_m((i, 1^{n-i})) with theta(T) = theta.
int sink_subset_count(const HessFn& m, const Orientation& theta, int i);

}  // namespace chromsym
