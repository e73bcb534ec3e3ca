#include "nbv/rmatrix.hpp"

#include <functional>

#include "nbv/errors.hpp"

namespace nbv {

Rat r_entry(const Rat& u, int a, int b, int c, int d) {
  Rat val(0);
  if (a == c && b == d) val += 1;
  if (a == d && b == c) {
    if (is_zero(u)) throw PoleError("pole: R-matrix argument is zero");
    val += rat_div(Rat(1), u, "R-matrix argument is zero");
  }
  return val;
}

AuxVector apply_r_factor(const AuxVector& v, const RFactor& f) {
  AuxVector out = v;
  const std::size_t a = static_cast<std::size_t>(f.site_a) - 1;
  const std::size_t b = static_cast<std::size_t>(f.site_b) - 1;
  const Rat inv = rat_div(Rat(1), f.arg, "vanishing R-matrix argument " + f.label);
  for (const auto& [idx, val] : v) {
    AuxIndex swapped = idx;
    std::swap(swapped[a], swapped[b]);
    auto [it, fresh] = out.try_emplace(swapped, Rat(0));
    it->second += inv * val;
    if (is_zero(it->second)) out.erase(it);
  }
  return out;
}

namespace {

// Factors of one inter-block product: for i = 1..xi_k ascending, the inner
// run over l = xi_j..1 descending, matching the arrow pattern of the
// two-block factor in the ordered product.
void append_block_pair(std::vector<RFactor>& out, const Shape& shape,
                       const std::vector<std::vector<Rat>>& t, int k, int j) {
  for (int i = 1; i <= shape.at(k); ++i)
    for (int l = shape.at(j); l >= 1; --l) {
      const Rat arg = t[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(i) - 1] -
                      t[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(l) - 1];
      std::string label = "t[" + std::to_string(k) + "][" + std::to_string(i) + "] - t[" +
                          std::to_string(j) + "][" + std::to_string(l) + "]";
      if (is_zero(arg)) throw PoleError("pole: vanishing R-matrix argument " + label);
      out.push_back({shape.site(k, i), shape.site(j, l), arg, std::move(label)});
    }
}

}  // namespace

std::vector<RFactor> r_factors(const Shape& shape, const std::vector<std::vector<Rat>>& t,
                               RProductKind kind, int m) {
  const int n = shape.rank();
  std::vector<RFactor> out;
  switch (kind) {
    case RProductKind::Full:
      // reversed outer product over the upper block, reversed inner over
      // the lower one
      for (int i = n - 1; i >= 2; --i)
        for (int j = i - 1; j >= 1; --j) append_block_pair(out, shape, t, i, j);
      break;
    case RProductKind::HeadBlocks:
      for (int j = 2; j <= m; ++j)
        for (int i = 1; i < j; ++i) append_block_pair(out, shape, t, j, i);
      break;
    case RProductKind::TailBlocks:
      for (int j = m + 1; j <= n - 1; ++j)
        for (int i = m; i < j; ++i) append_block_pair(out, shape, t, j, i);
      break;
  }
  return out;
}

AuxVector r_apply_to_column(const std::vector<RFactor>& fs, AuxVector col) {
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) col = apply_r_factor(col, *it);
  return col;
}

AuxVector r_apply_to_row(AuxVector row, const std::vector<RFactor>& fs) {
  for (const auto& f : fs) row = apply_r_factor(row, f);
  return row;
}

namespace {

void for_each_index(int n, int sites, const std::function<void(const AuxIndex&)>& visit) {
  AuxIndex idx(static_cast<std::size_t>(sites), 1);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == sites) {
      visit(idx);
      return;
    }
    for (int a = 1; a <= n; ++a) {
      idx[static_cast<std::size_t>(pos)] = static_cast<unsigned char>(a);
      rec(pos + 1);
    }
  };
  rec(0);
}

}  // namespace

AuxMatrix r_block_product(int n, const Shape& shape, const std::vector<std::vector<Rat>>& t,
                          RProductKind kind, int m) {
  const auto fs = r_factors(shape, t, kind, m);
  AuxMatrix out;
  for_each_index(n, shape.total(), [&](const AuxIndex& col) {
    AuxVector e;
    e.emplace(col, Rat(1));
    for (const auto& [row, val] : r_apply_to_column(fs, std::move(e)))
      out.emplace(std::make_pair(row, col), val);
  });
  return out;
}

bool yang_baxter_check(int n, const Rat& u, const Rat& v) {
  if (is_zero(u) || is_zero(v) || u == v)
    throw PoleError("pole: Yang-Baxter needs u, v, u-v nonzero");
  const RFactor r12{1, 2, u - v, "u-v"}, r13{1, 3, u, "u"}, r23{2, 3, v, "v"};
  bool ok = true;
  for_each_index(n, 3, [&](const AuxIndex& col) {
    if (!ok) return;
    AuxVector e;
    e.emplace(col, Rat(1));
    const AuxVector lhs = apply_r_factor(apply_r_factor(apply_r_factor(e, r23), r13), r12);
    const AuxVector rhs = apply_r_factor(apply_r_factor(apply_r_factor(e, r12), r13), r23);
    ok = lhs == rhs;
  });
  return ok;
}

bool r_unitarity_check(int n, const Rat& u) {
  if (is_zero(u)) throw PoleError("pole: unitarity needs u nonzero");
  const RFactor plus{1, 2, u, "u"}, minus{1, 2, -u, "-u"};
  const Rat scale = Rat(1) - rat_div(Rat(1), u * u, "u^2");
  bool ok = true;
  for_each_index(n, 2, [&](const AuxIndex& col) {
    if (!ok) return;
    AuxVector e;
    e.emplace(col, Rat(1));
    AuxVector prod = apply_r_factor(apply_r_factor(e, minus), plus);
    AuxVector want;
    want.emplace(col, scale);
    ok = prod == want;
  });
  return ok;
}

}  // namespace nbv
