#pragma once

// Transition-probability model on standard Young tableaux. A tableau grows one
// entry at a time; at step i the threshold r_i = n - m(n+1-i) determines the
// admissible columns and their weights psi_k. Products of weights along the
// growth give p_m(T;q), from which the e-expansion refinement E_{m,k} is read off.

#include <map>
#include <vector>

#include "chromsym/combinat.hpp"
#include "chromsym/hessenberg.hpp"
#include "chromsym/symfun.hpp"

namespace chromsym {

inline constexpr int kHikitaMaxN = 10;

// bits = (1^{b_0}, 0^{a_1}, 1^{b_1}, ..., 0^{a_l}, 1^{b_l}, 0^{a_{l+1}})
struct DeltaVec {
  std::vector<int> bits;
  int l = 0;
  std::vector<int> a;  // a[1..l+1]; a[0] unused
  std::vector<int> b;  // b[0..l]
};

// Run decomposition of an arbitrary 0/1 vector.
DeltaVec decompose_delta(std::vector<int> bits);
// bit i = 1 iff column i of t holds an entry > r. The vector has length
// max(length, number of columns); length < 0 means |t|.
DeltaVec delta_vec(const Tableau& t, int r, int length = -1);

// Column (1-based) receiving the new entry for branch k.
int insertion_column(const DeltaVec& d, int k);
// t with `value` appended at the bottom of column c. Throws InvalidTableau if
// the result would not be a partition shape.
Tableau add_cell(const Tableau& t, int c, int value);
// (k, f_k(t)) for k = 0..l, new entry |t|+1.
std::vector<std::pair<int, Tableau>> insertions(const Tableau& t, int r);

// Throws IndexOutOfRange unless 0 <= k <= l.
QRat psi(const DeltaVec& d, int k);
QRat phi(const DeltaVec& d, int k);
QRat psi(const Tableau& t, int k, int r);
QRat phi(const Tableau& t, int k, int r);

using ProbTable = std::map<Tableau, QRat>;

// Throws SizeLimitExceeded when n > max_n.
ProbTable p_table(const HessFn& m, int max_n = kHikitaMaxN);
ProbTable p_bar_table(const HessFn& m, int max_n = kHikitaMaxN);
// p = q^{area(m) - sum_j C(lambda_j, 2)} p_bar entrywise.
bool check_area_relation(const HessFn& m);

// prod [lambda_i]_q! * sum over SYT_k(lambda) of p_m(T;q). Throws NotPolynomial.
QPoly c_lambda_k(const HessFn& m, const Partition& lambda, int k);
// E_{m,1}, ..., E_{m,n} (index 0 unused). Throws NotDivisible if some
// c_{lambda,k} is not divisible by [k]_q.
std::vector<SymFun> e_parts(const HessFn& m);
SymFun e_part(const HessFn& m, int k);
SymFun e_total(const HessFn& m);
// sum_lambda prod [lambda_i]_q! sum_{SYT(lambda)} p_m(T;q) e_lambda
SymFun x_hikita(const HessFn& m);

struct TraceNode {
  int id = 0;
  int parent = -1;
  Tableau tableau;
  int k = 0;
  int r = 0;
  QRat weight;       // psi of the edge from the parent
  QRat probability;  // product of weights from the root
};

// The full growth tree, root = empty tableau, nodes in breadth-first order.
std::vector<TraceNode> trace_hikita(const HessFn& m, int max_n = 7);

}  // namespace chromsym
