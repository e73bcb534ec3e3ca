#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nbv/rational.hpp"
#include "nbv/shape.hpp"

namespace nbv {

// Entry R^{ab}_{cd}(u) = d_ac d_bd + (1/u) d_ad d_bc of the rational R-matrix.
Rat r_entry(const Rat& u, int a, int b, int c, int d);

// Letters 1..n, one per auxiliary site.
using AuxIndex = std::vector<unsigned char>;
// Sparse vector (or matrix row/column) on the auxiliary space.
using AuxVector = std::map<AuxIndex, Rat>;
using AuxMatrix = std::map<std::pair<AuxIndex, AuxIndex>, Rat>;

// One two-site R-matrix factor; sites are 1-based, first tensor leg on
// site_a. The argument is the already-evaluated spectral difference.
struct RFactor {
  int site_a;
  int site_b;
  Rat arg;
  std::string label;  // diagnostic, names the variable difference
};

// v -> v + (1/arg) * (v with the two site letters swapped). Because the swap
// term is symmetric this is simultaneously R.column and row.R.
AuxVector apply_r_factor(const AuxVector& v, const RFactor& f);

enum class RProductKind {
  Full,        // double arrow-ordered product over all block pairs
  HeadBlocks,  // plain-ordered product over block pairs inside 1..m
  TailBlocks,  // plain-ordered product over block pairs m..n-1 (the cut
               // block participates only as the lower index)
};

// Factors of the requested ordered product, listed left to right.
std::vector<RFactor> r_factors(const Shape& shape, const std::vector<std::vector<Rat>>& t,
                               RProductKind kind, int m = 0);

// product * column and row * product; factors are consumed from the
// appropriate end so the matrix order is respected exactly.
AuxVector r_apply_to_column(const std::vector<RFactor>& fs, AuxVector col);
AuxVector r_apply_to_row(AuxVector row, const std::vector<RFactor>& fs);

// Materializes the ordered product as a sparse matrix over the whole
// n^N basis; intended for small shapes (tests, hand checks).
AuxMatrix r_block_product(int n, const Shape& shape, const std::vector<std::vector<Rat>>& t,
                          RProductKind kind, int m = 0);

// R12(u-v) R13(u) R23(v) == R23(v) R13(u) R12(u-v) entrywise on three sites.
bool yang_baxter_check(int n, const Rat& u, const Rat& v);

// R(u) R(-u) == (1 - 1/u^2) Id on two sites.
bool r_unitarity_check(int n, const Rat& u);

}  // namespace nbv
