#pragma once

// Partitions, weak compositions, standard Young tableaux, Kostka numbers.
//
// Partitions and compositions are plain integer vectors; Tableau is a ragged
// array of rows, row 0 on top (English convention).

#include <cstdint>
#include <string>
#include <vector>

namespace chromsym {

using Partition = std::vector<int>;
using Composition = std::vector<int>;
using Tableau = std::vector<std::vector<int>>;

bool is_partition(const std::vector<int>& parts);
// Throws InvalidPartition.
void validate_partition(const std::vector<int>& parts);

int size(const std::vector<int>& parts);
Partition conjugate(const Partition& lambda);
// Sort descending and drop zeros.
Partition sort_partition(std::vector<int> parts);
Partition shape_of(const Tableau& t);

// Partitions of n in increasing lexicographic order: (1^n) first, (n) last.
const std::vector<Partition>& partitions_of(int n);
// Compositions (positive parts) of n, lexicographic.
std::vector<Composition> compositions_of(int n);
bool dominates(const Partition& lambda, const Partition& mu);

// Number of SSYT of shape lambda and content alpha. Throws SizeMismatch.
std::int64_t kostka(const Partition& lambda, const Composition& alpha);

std::vector<Tableau> enumerate_syt(const Partition& lambda);
// Tableaux whose largest entry sits in column k (1-based).
std::vector<Tableau> syt_k(const Partition& lambda, int k);
std::int64_t hook_length_count(const Partition& lambda);
// Column (1-based) of the entry `value`; 0 if absent.
int column_of(const Tableau& t, int value);
// Row (1-based) of the entry `value`; 0 if absent.
int row_of(const Tableau& t, int value);

// All mu contained in lambda with lambda/mu a vertical strip, including mu = lambda.
std::vector<Partition> vertical_strips(const Partition& lambda);

std::int64_t binomial(int n, int k);

std::string to_string(const std::vector<int>& parts);
std::string to_string(const Tableau& t);

}  // namespace chromsym
