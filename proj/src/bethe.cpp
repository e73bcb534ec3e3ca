#include "nbv/bethe.hpp"

#include "nbv/errors.hpp"

namespace nbv {

ModuleVector t_entry_apply(const EvalModule& mod, int a, int b, const Rat& u,
                           const ModuleVector& vec) {
  if (u == mod.x) throw PoleError("pole: spectral parameter hits the evaluation point");
  ModuleVector out = mod.verma.act(b, a, vec);
  out *= rat_div(Rat(1), u - mod.x, "u - x");
  if (a == b) out += vec;
  return out;
}

std::vector<Rat> SubBethe::lambda_slice(const EvalModule& mod) const {
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(rank_r));
  for (int c = 1; c <= rank_r; ++c)
    out.push_back(mod.verma.highest_weight().entries[static_cast<std::size_t>(offset + c) - 1]);
  return out;
}

SubBethe top_problem(int n, const Shape& shape, const VarAssignment& vars) {
  if (shape.rank() != n) throw InvalidConfigError("shape length must be n-1");
  return SubBethe{n, 0, shape, vars.t};
}

ModuleVector bethe_apply_direct(const EvalModule& mod, const SubBethe& sub,
                                const ModuleVector& target) {
  const int r = sub.rank_r;
  const Shape& shape = sub.shape;
  if (shape.rank() != r) throw InvalidConfigError("sub-shape length must be r-1");
  const int N = shape.total();
  if (N == 0) return target;

  // column letters: block j carries letter j+1 (in the subalgebra alphabet)
  AuxIndex col;
  col.reserve(static_cast<std::size_t>(N));
  std::vector<int> block_of_site, pos_of_site;
  for (int j = 1; j <= r - 1; ++j)
    for (int i = 1; i <= shape.at(j); ++i) {
      col.push_back(static_cast<unsigned char>(j + 1));
      block_of_site.push_back(j);
      pos_of_site.push_back(i);
    }

  AuxVector e;
  e.emplace(col, Rat(1));
  const AuxVector w =
      r_apply_to_column(r_factors(shape, sub.t, RProductKind::Full), std::move(e));

  ModuleVector result;
  for (const auto& [c, coeff] : w) {
    ModuleVector vec = target;
    for (int k = N; k >= 1; --k) {
      const int j = block_of_site[static_cast<std::size_t>(k) - 1];
      const int i = pos_of_site[static_cast<std::size_t>(k) - 1];
      const Rat& u = sub.t[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i) - 1];
      vec = t_entry_apply(mod, j + sub.offset, c[static_cast<std::size_t>(k) - 1] + sub.offset,
                          u, vec);
      if (vec.is_zero()) break;
    }
    result += coeff * vec;
  }
  return result;
}

ModuleVector bethe_direct(const EvalModule& mod, const Shape& shape,
                          const VarAssignment& vars) {
  return bethe_apply_direct(mod, top_problem(mod.rank(), shape, vars),
                            ModuleVector::vacuum());
}

bool rtt_check(const EvalModule& mod, int a, int b, int c, int d, const Rat& u,
               const Rat& v, const ModuleVector& probe) {
  if (u == v) throw PoleError("pole: coincident spectral parameters");
  const ModuleVector lhs =
      (u - v) * (t_entry_apply(mod, a, b, u, t_entry_apply(mod, c, d, v, probe)) -
                 t_entry_apply(mod, c, d, v, t_entry_apply(mod, a, b, u, probe)));
  const ModuleVector rhs = t_entry_apply(mod, a, d, u, t_entry_apply(mod, c, b, v, probe)) -
                           t_entry_apply(mod, a, d, v, t_entry_apply(mod, c, b, u, probe));
  return lhs == rhs;
}

}  // namespace nbv
