#pragma once

#include "nbv/partitions.hpp"
#include "nbv/rational.hpp"

namespace nbv {

// Layered variable conventions. For the I-side functions, layers[0] is the
// cut block (one value per ground-set element) and layers[k] is the layer
// m+k with |union of parts above m+k| values. For the J-side functions,
// layers[l-1] is the layer l (l = 1..m), the last one being the cut block.

// Triple product over layers of merge-position factors; the index sequences
// come from the unions of the partition parts above each layer.
Rat u_weight(const PartitionTuple& I, const std::vector<std::vector<Rat>>& layers);

// Mirror with unions taken below each layer and the inequality reversed.
Rat u_tilde_weight(const PartitionTuple& J, const std::vector<std::vector<Rat>>& layers);

// Blockwise orbit sums of the two functions above over every layer except
// the cut block.
Rat w_weight(const PartitionTuple& I, const std::vector<std::vector<Rat>>& layers);
Rat w_tilde_weight(const PartitionTuple& J, const std::vector<std::vector<Rat>>& layers);

// prod_{a<b} (z_a - z_b - 1)/(z_a - z_b).
Rat phi_product(const std::vector<Rat>& z);

// Scalar prefactor of the tail-side reduction: cross-layer shifts between
// the kept head slices and dropped tails, and the (t - x + Lambda)/(t - x)
// factors over the kept slices. tail_blocks are the full blocks
// t^{m+1}..t^{n-1}; lambda is the subalgebra weight slice (1-based).
Rat l_scalar(const std::vector<std::vector<Rat>>& tail_blocks, const std::vector<int>& eta,
             const Rat& x, const std::vector<Rat>& lambda, int m);

// Head-side mirror: kept slices sit at the block ends, the weight index is
// shifted by one. head_blocks are the full blocks t^1..t^{m-1}.
Rat l_tilde_scalar(const std::vector<std::vector<Rat>>& head_blocks, const std::vector<int>& zeta,
                   const Rat& x, const std::vector<Rat>& lambda);

// Slice helpers: first counts[b] / last counts[b] values per block.
std::vector<std::vector<Rat>> take_head(const std::vector<std::vector<Rat>>& blocks,
                                        const std::vector<int>& counts);
std::vector<std::vector<Rat>> take_tail(const std::vector<std::vector<Rat>>& blocks,
                                        const std::vector<int>& counts);
std::vector<Rat> reversed(std::vector<Rat> xs);

}  // namespace nbv
