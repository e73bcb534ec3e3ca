#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "nbv/errors.hpp"
#include "nbv/rational.hpp"

namespace nbv {

// All permutations of {0..k-1} in lexicographic order.
std::vector<std::vector<int>> permutations(int k);

template <typename T>
std::vector<T> permuted(const std::vector<T>& xs, const std::vector<int>& perm) {
  std::vector<T> out;
  out.reserve(xs.size());
  for (int p : perm) out.push_back(xs[static_cast<std::size_t>(p)]);
  return out;
}

// Visits every element of the product of symmetric groups, one S_{|block|}
// per block, calling visit(permuted_blocks). Deterministic order: the last
// block varies fastest, each block in lexicographic permutation order.
template <typename T, typename Fn>
void for_each_block_permutation(const std::vector<std::vector<T>>& blocks, Fn&& visit) {
  std::vector<std::vector<T>> current = blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      visit(const_cast<const std::vector<std::vector<T>>&>(current));
      return;
    }
    for (const auto& perm : permutations(static_cast<int>(blocks[b].size()))) {
      current[b] = permuted(blocks[b], perm);
      rec(b + 1);
    }
    current[b] = blocks[b];
  };
  rec(0);
}

// Nested orbit sum over the listed groups of positions into a flat variable
// vector, applied left-to-right. f is evaluated at every permuted point;
// a pole raised by f is rethrown with the offending permutation attached.
Rat symmetrize(const std::function<Rat(const std::vector<Rat>&)>& f,
               const std::vector<std::vector<int>>& groups,
               const std::vector<Rat>& point);

}  // namespace nbv
