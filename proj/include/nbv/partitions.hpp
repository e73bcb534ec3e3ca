#pragma once

#include <utility>
#include <vector>

#include "nbv/rational.hpp"
#include "nbv/shape.hpp"

namespace nbv {

// Ordered tuple of disjoint subsets of {1..size} labeled lo..hi (empty parts
// allowed) that together cover the ground set.
struct PartitionTuple {
  int lo = 1;
  int hi = 0;
  std::vector<std::vector<int>> parts;  // parts[k] <-> label lo+k, sorted ascending

  int size() const;
  const std::vector<int>& part(int label) const {
    return parts.at(static_cast<std::size_t>(label - lo));
  }
  bool operator==(const PartitionTuple&) const = default;
  std::string str() const;
};

// Positions j with seq[j] == label form the part of that label (1-based
// positions). Inverse of seq_from_partition.
PartitionTuple partition_from_seq(const std::vector<int>& seq, int lo, int hi);
std::vector<int> seq_from_partition(const PartitionTuple& p, int size);

// Element map e -> size+1-e applied to every part (the longest permutation).
PartitionTuple reversed_elements(const PartitionTuple& p, int size);
// Element map e -> sigma[e-1] (sigma is a 1-based image table).
PartitionTuple mapped_elements(const PartitionTuple& p, const std::vector<int>& sigma);

// Nonnegative matrix (q_{sp}), s = m+1..n, p = 1..m, with its tail sums:
// eta_k = sum of rows s > k, zeta_l = sum of columns p <= l.
struct QMatrix {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> cells;  // [s-m-1][p-1]
  int total = 0;
  std::vector<int> eta;   // eta_{m+1}..eta_{n-1}
  std::vector<int> zeta;  // zeta_1..zeta_{m-1}

  int q(int s, int p) const {
    return cells.at(static_cast<std::size_t>(s - m - 1)).at(static_cast<std::size_t>(p - 1));
  }
  int eta_at(int k) const { return eta.at(static_cast<std::size_t>(k - m - 1)); }
  int zeta_at(int l) const { return zeta.at(static_cast<std::size_t>(l - 1)); }
  std::string str() const;
};

// All matrices with total xi_m whose tail sums stay within the shape,
// in lexicographic order of the flattened rows. May be empty.
std::vector<QMatrix> enumerate_q_set(int n, int m, const Shape& shape);

// Pair (I, J): I labeled m+1..n, J labeled 1..m, |I_s ∩ J_p| = q_{sp}.
using PartitionPair = std::pair<PartitionTuple, PartitionTuple>;

// Fills cells in row-major (s, p) order with consecutive integers.
PartitionPair canonical_pair(const QMatrix& q);
// Every pair with the prescribed intersection cardinalities.
std::vector<PartitionPair> enumerate_pairs(const QMatrix& q);
// xi_m! / prod q_{sp}!
Rat pair_count(const QMatrix& q);

}  // namespace nbv
