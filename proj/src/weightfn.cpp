#include "nbv/weightfn.hpp"

#include <algorithm>

#include "nbv/errors.hpp"
#include "nbv/symmetrize.hpp"

namespace nbv {

namespace {

Rat ratio_shift(const Rat& diff, const std::string& what) {
  // (diff + 1) / diff
  if (is_zero(diff)) throw PoleError("pole: " + what);
  return (diff + 1) / diff;
}

// sets[k] = sorted union of parts with labels above layer (base + k).
std::vector<std::vector<int>> suffix_unions(const PartitionTuple& I) {
  const int layers = I.hi - I.lo + 1;  // one per l = m..n-1
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(layers));
  std::vector<int> acc;
  for (int k = layers - 1; k >= 0; --k) {
    // layer l = (I.lo - 1) + k collects parts with labels > l
    acc.insert(acc.end(), I.parts[static_cast<std::size_t>(k)].begin(),
               I.parts[static_cast<std::size_t>(k)].end());
    std::sort(acc.begin(), acc.end());
    sets[static_cast<std::size_t>(k)] = acc;
  }
  return sets;
}

std::vector<std::vector<int>> prefix_unions(const PartitionTuple& J) {
  const int layers = J.hi - J.lo + 1;
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(layers));
  std::vector<int> acc;
  for (int k = 0; k < layers; ++k) {
    acc.insert(acc.end(), J.parts[static_cast<std::size_t>(k)].begin(),
               J.parts[static_cast<std::size_t>(k)].end());
    std::sort(acc.begin(), acc.end());
    sets[static_cast<std::size_t>(k)] = acc;
  }
  return sets;
}

void check_layer_sizes(const std::vector<std::vector<int>>& sets,
                       const std::vector<std::vector<Rat>>& layers) {
  if (sets.size() != layers.size())
    throw InvalidConfigError("layer count does not match the partition");
  for (std::size_t k = 0; k < sets.size(); ++k)
    if (sets[k].size() != layers[k].size())
      throw InvalidConfigError("layer size does not match the partition");
}

}  // namespace

Rat u_weight(const PartitionTuple& I, const std::vector<std::vector<Rat>>& layers) {
  const auto sets = suffix_unions(I);
  check_layer_sizes(sets, layers);
  Rat val(1);
  for (std::size_t li = 1; li < layers.size(); ++li) {
    const auto& cur = layers[li];
    const auto& below = layers[li - 1];
    const auto& cur_set = sets[li];
    const auto& below_set = sets[li - 1];
    for (std::size_t a = 0; a < cur.size(); ++a) {
      const int ia = cur_set[a];
      for (std::size_t c = 0; c < below.size(); ++c) {
        const Rat diff = cur[a] - below[c];
        if (below_set[c] == ia)
          val *= rat_div(Rat(1), diff, "coincident merge variables");
        else if (below_set[c] > ia)
          val *= ratio_shift(diff, "coincident adjacent-layer variables");
      }
      for (std::size_t b = a + 1; b < cur.size(); ++b)
        val *= ratio_shift(cur[b] - cur[a], "coincident same-layer variables");
    }
  }
  return val;
}

Rat u_tilde_weight(const PartitionTuple& J, const std::vector<std::vector<Rat>>& layers) {
  const auto sets = prefix_unions(J);
  check_layer_sizes(sets, layers);
  Rat val(1);
  for (std::size_t li = 1; li < layers.size(); ++li) {
    const auto& cur = layers[li];
    const auto& below = layers[li - 1];
    const auto& cur_set = sets[li];
    const auto& below_set = sets[li - 1];
    for (std::size_t a = 0; a < cur.size(); ++a) {
      const int ja = cur_set[a];
      for (std::size_t c = 0; c < below.size(); ++c) {
        const Rat diff = cur[a] - below[c];
        if (below_set[c] == ja)
          val *= rat_div(Rat(1), diff, "coincident merge variables");
        else if (below_set[c] < ja)
          val *= ratio_shift(diff, "coincident adjacent-layer variables");
      }
    }
  }
  // same-layer factors live on every layer except the cut one; the cut
  // block's pairwise product enters separately through the closed formula
  for (std::size_t li = 0; li + 1 < layers.size(); ++li) {
    const auto& lay = layers[li];
    for (std::size_t a = 0; a < lay.size(); ++a)
      for (std::size_t b = a + 1; b < lay.size(); ++b)
        val *= ratio_shift(lay[a] - lay[b], "coincident same-layer variables");
  }
  return val;
}

namespace {

// Orbit sum over the layers in [first, last); the others stay put.
template <typename F>
Rat sym_layers(const std::vector<std::vector<Rat>>& layers, std::size_t first, std::size_t last,
               F&& f) {
  std::vector<std::vector<Rat>> moving(layers.begin() + static_cast<long>(first),
                                       layers.begin() + static_cast<long>(last));
  Rat sum(0);
  for_each_block_permutation(moving, [&](const std::vector<std::vector<Rat>>& perm) {
    std::vector<std::vector<Rat>> all = layers;
    for (std::size_t k = 0; k < perm.size(); ++k) all[first + k] = perm[k];
    sum += f(all);
  });
  return sum;
}

}  // namespace

Rat w_weight(const PartitionTuple& I, const std::vector<std::vector<Rat>>& layers) {
  if (layers.empty()) throw InvalidConfigError("missing cut-block layer");
  return sym_layers(layers, 1, layers.size(),
                    [&](const std::vector<std::vector<Rat>>& ls) { return u_weight(I, ls); });
}

Rat w_tilde_weight(const PartitionTuple& J, const std::vector<std::vector<Rat>>& layers) {
  if (layers.empty()) throw InvalidConfigError("missing cut-block layer");
  return sym_layers(layers, 0, layers.size() - 1, [&](const std::vector<std::vector<Rat>>& ls) {
    return u_tilde_weight(J, ls);
  });
}

Rat phi_product(const std::vector<Rat>& z) {
  Rat val(1);
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = a + 1; b < z.size(); ++b) {
      const Rat diff = z[a] - z[b];
      if (is_zero(diff)) throw PoleError("pole: coincident cut-block variables");
      val *= (diff - 1) / diff;
    }
  return val;
}

Rat l_scalar(const std::vector<std::vector<Rat>>& tail_blocks, const std::vector<int>& eta,
             const Rat& x, const std::vector<Rat>& lambda, int m) {
  if (eta.size() != tail_blocks.size()) throw InvalidConfigError("eta length mismatch");
  const int blocks = static_cast<int>(tail_blocks.size());  // blocks m+1..n-1
  Rat val(1);
  // cross-layer factors between kept upper slices and dropped lower tails
  for (int a = 0; a + 1 < blocks; ++a) {
    const auto& lower = tail_blocks[static_cast<std::size_t>(a)];
    const auto& upper = tail_blocks[static_cast<std::size_t>(a) + 1];
    for (int i = 0; i < eta[static_cast<std::size_t>(a) + 1]; ++i)
      for (int j = eta[static_cast<std::size_t>(a)]; j < static_cast<int>(lower.size()); ++j)
        val *= ratio_shift(upper[static_cast<std::size_t>(i)] - lower[static_cast<std::size_t>(j)],
                           "coincident adjacent-block variables");
  }
  // evaluation-point factors over the kept slices
  for (int b = 0; b < blocks; ++b) {
    const int l = m + 1 + b;
    const Rat& lam = lambda.at(static_cast<std::size_t>(l) - 1);
    for (int i = 0; i < eta[static_cast<std::size_t>(b)]; ++i) {
      const Rat diff = tail_blocks[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)] - x;
      val *= rat_div(diff + lam, diff, "variable hits the evaluation point");
    }
  }
  // in-block factors between the dropped tail and the kept head of each block
  for (int b = 0; b < blocks; ++b) {
    const auto& block = tail_blocks[static_cast<std::size_t>(b)];
    for (int i = 0; i < eta[static_cast<std::size_t>(b)]; ++i)
      for (int j = eta[static_cast<std::size_t>(b)]; j < static_cast<int>(block.size()); ++j)
        val *= ratio_shift(block[static_cast<std::size_t>(j)] - block[static_cast<std::size_t>(i)],
                           "coincident in-block variables");
  }
  return val;
}

Rat l_tilde_scalar(const std::vector<std::vector<Rat>>& head_blocks, const std::vector<int>& zeta,
                   const Rat& x, const std::vector<Rat>& lambda) {
  if (zeta.size() != head_blocks.size()) throw InvalidConfigError("zeta length mismatch");
  const int blocks = static_cast<int>(head_blocks.size());  // blocks 1..m-1
  Rat val(1);
  for (int a = 0; a + 1 < blocks; ++a) {
    const auto& lower = head_blocks[static_cast<std::size_t>(a)];
    const auto& upper = head_blocks[static_cast<std::size_t>(a) + 1];
    const int keep_upper = static_cast<int>(upper.size()) - zeta[static_cast<std::size_t>(a) + 1];
    for (int i = 0; i < keep_upper; ++i)
      for (int j = static_cast<int>(lower.size()) - zeta[static_cast<std::size_t>(a)];
           j < static_cast<int>(lower.size()); ++j)
        val *= ratio_shift(upper[static_cast<std::size_t>(i)] - lower[static_cast<std::size_t>(j)],
                           "coincident adjacent-block variables");
  }
  for (int b = 0; b < blocks; ++b) {
    const int l = 1 + b;
    const Rat& lam = lambda.at(static_cast<std::size_t>(l));  // Lambda^{l+1}
    const auto& block = head_blocks[static_cast<std::size_t>(b)];
    for (int i = 0; i < zeta[static_cast<std::size_t>(b)]; ++i) {
      const Rat diff = block[block.size() - 1 - static_cast<std::size_t>(i)] - x;
      val *= rat_div(diff + lam, diff, "variable hits the evaluation point");
    }
  }
  // in-block factors, mirrored: kept slice sits at the block end
  for (int b = 0; b < blocks; ++b) {
    const auto& block = head_blocks[static_cast<std::size_t>(b)];
    const int drop = static_cast<int>(block.size()) - zeta[static_cast<std::size_t>(b)];
    for (int j = 0; j < drop; ++j)
      for (int i = drop; i < static_cast<int>(block.size()); ++i)
        val *= ratio_shift(block[static_cast<std::size_t>(i)] - block[static_cast<std::size_t>(j)],
                           "coincident in-block variables");
  }
  return val;
}

std::vector<std::vector<Rat>> take_head(const std::vector<std::vector<Rat>>& blocks,
                                        const std::vector<int>& counts) {
  std::vector<std::vector<Rat>> out(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    out[b].assign(blocks[b].begin(), blocks[b].begin() + counts[b]);
  return out;
}

std::vector<std::vector<Rat>> take_tail(const std::vector<std::vector<Rat>>& blocks,
                                        const std::vector<int>& counts) {
  std::vector<std::vector<Rat>> out(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    out[b].assign(blocks[b].end() - counts[b], blocks[b].end());
  return out;
}

std::vector<Rat> reversed(std::vector<Rat> xs) {
  std::reverse(xs.begin(), xs.end());
  return xs;
}

}  // namespace nbv
