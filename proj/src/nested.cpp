#include "nbv/nested.hpp"

#include "nbv/errors.hpp"
#include "nbv/symmetrize.hpp"

namespace nbv {

int SplitPlan::cut(int rank) const {
  auto it = cuts.find(rank);
  const int m = (it != cuts.end()) ? it->second : rank / 2;
  if (m < 1 || m >= rank)
    throw InvalidPlanError("cut " + std::to_string(m) + " out of range for rank " +
                           std::to_string(rank));
  return m;
}

namespace {

std::vector<std::vector<std::vector<Rat>>> all_block_permutations(
    const std::vector<std::vector<Rat>>& blocks) {
  std::vector<std::vector<std::vector<Rat>>> out;
  for_each_block_permutation(blocks, [&](const std::vector<std::vector<Rat>>& p) {
    out.push_back(p);
  });
  return out;
}

struct CutView {
  std::vector<std::vector<Rat>> head;  // blocks 1..m-1
  std::vector<std::vector<Rat>> tail;  // blocks m+1..r-1
  std::vector<Rat> tm;                 // block m
  std::vector<int> xi_head;
  std::vector<int> xi_tail;
};

CutView split_blocks(const SubBethe& sub, int m) {
  const int r = sub.rank_r;
  if (m < 1 || m >= r) throw InvalidConfigError("cut must satisfy 1 <= m < rank");
  if (static_cast<int>(sub.t.size()) != r - 1)
    throw InvalidConfigError("variable block count must be rank-1");
  CutView cv;
  for (int a = 1; a <= m - 1; ++a) {
    cv.head.push_back(sub.t[static_cast<std::size_t>(a) - 1]);
    cv.xi_head.push_back(sub.shape.at(a));
  }
  for (int b = m + 1; b <= r - 1; ++b) {
    cv.tail.push_back(sub.t[static_cast<std::size_t>(b) - 1]);
    cv.xi_tail.push_back(sub.shape.at(b));
  }
  cv.tm = sub.t[static_cast<std::size_t>(m) - 1];
  return cv;
}

SubBethe head_subproblem(const SubBethe& sub, int m, const std::vector<std::vector<Rat>>& head,
                         const std::vector<int>& zeta) {
  Shape sh;
  std::vector<std::vector<Rat>> t;
  std::vector<int> keep;
  for (std::size_t a = 0; a < head.size(); ++a)
    keep.push_back(static_cast<int>(head[a].size()) - zeta[a]);
  t = take_head(head, keep);
  sh.xi = keep;
  return SubBethe{m, sub.offset, sh, t};
}

SubBethe tail_subproblem(const SubBethe& sub, int m, const std::vector<std::vector<Rat>>& tail,
                         const std::vector<int>& eta) {
  Shape sh;
  std::vector<int> keep;
  for (std::size_t b = 0; b < tail.size(); ++b)
    keep.push_back(static_cast<int>(tail[b].size()) - eta[b]);
  sh.xi = keep;
  return SubBethe{sub.rank_r - m, sub.offset + m, sh, take_tail(tail, keep)};
}

Rat inverse_tm_product(const std::vector<Rat>& tm, const Rat& x) {
  Rat pref(1);
  for (const Rat& t : tm)
    pref *= rat_div(Rat(1), t - x, "cut-block variable hits the evaluation point");
  return pref;
}

Rat shape_factorials(const SubBethe& sub, int m, const QMatrix& q) {
  Rat f(1);
  for (int a = 1; a <= m - 1; ++a) f /= factorial(sub.shape.at(a) - q.zeta_at(a));
  for (int b = m + 1; b <= sub.rank_r - 1; ++b) f /= factorial(sub.shape.at(b) - q.eta_at(b));
  return f;
}

std::map<Gen, int> cut_monomial(const QMatrix& q, int offset) {
  std::map<Gen, int> exps;
  for (int s = q.m + 1; s <= q.n; ++s)
    for (int p = 1; p <= q.m; ++p)
      if (q.q(s, p) > 0) exps[{s + offset, p + offset}] = q.q(s, p);
  return exps;
}

}  // namespace

ModuleVector eval_sub_bethe(const EvalModule& mod, const SubBethe& sub,
                            const ModuleVector& target, const NestedOptions& opt) {
  if (sub.rank_r == 1 || sub.shape.total() == 0) return target;
  if (opt.sub_eval == SubEval::Direct) return bethe_apply_direct(mod, sub, target);
  return main_formula_rhs(mod, sub, opt.plan.cut(sub.rank_r), target, opt);
}

ModuleVector splitting_rhs(const EvalModule& mod, const SubBethe& sub, int m,
                           const ModuleVector& target) {
  const int r = sub.rank_r;
  const CutView cv = split_blocks(sub, m);
  const int M = static_cast<int>(cv.tm.size());
  const Shape& xi = sub.shape;
  const int N = xi.total();

  std::vector<int> block_of_site(static_cast<std::size_t>(N)), pos_of_site(static_cast<std::size_t>(N));
  for (int j = 1; j <= r - 1; ++j)
    for (int i = 1; i <= xi.at(j); ++i) {
      block_of_site[static_cast<std::size_t>(xi.site(j, i)) - 1] = j;
      pos_of_site[static_cast<std::size_t>(xi.site(j, i)) - 1] = i;
    }
  std::vector<int> cut_sites;
  for (int i = 1; i <= M; ++i) cut_sites.push_back(xi.site(m, i));

  // tail side: column of the truncated product, then T-chains over blocks
  // m+1..r-1 into the target, grouped by the letters at the cut block
  AuxIndex col(static_cast<std::size_t>(N));
  for (int k = 1; k <= N; ++k)
    col[static_cast<std::size_t>(k) - 1] =
        static_cast<unsigned char>(block_of_site[static_cast<std::size_t>(k) - 1] + 1);
  AuxVector e_col;
  e_col.emplace(col, Rat(1));
  const AuxVector tail_mids = r_apply_to_column(
      r_factors(xi, sub.t, RProductKind::TailBlocks, m), std::move(e_col));

  std::map<std::vector<int>, ModuleVector> by_bseq;
  for (const auto& [mid, coeff] : tail_mids) {
    ModuleVector vec = target;
    for (int j = r - 1; j >= m + 1 && !vec.is_zero(); --j)
      for (int i = xi.at(j); i >= 1; --i) {
        const Rat& u = sub.t[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i) - 1];
        vec = t_entry_apply(mod, j + sub.offset,
                            mid[static_cast<std::size_t>(xi.site(j, i)) - 1] + sub.offset, u, vec);
        if (vec.is_zero()) break;
      }
    std::vector<int> bseq;
    for (int s : cut_sites) bseq.push_back(mid[static_cast<std::size_t>(s) - 1]);
    vec *= coeff;
    auto [it, fresh] = by_bseq.try_emplace(std::move(bseq), ModuleVector{});
    it->second += vec;
  }

  // head side: row of the head-block product
  AuxIndex row(static_cast<std::size_t>(N));
  for (int k = 1; k <= N; ++k)
    row[static_cast<std::size_t>(k) - 1] =
        static_cast<unsigned char>(block_of_site[static_cast<std::size_t>(k) - 1]);
  AuxVector e_row;
  e_row.emplace(row, Rat(1));
  const AuxVector head_mids =
      r_apply_to_row(std::move(e_row), r_factors(xi, sub.t, RProductKind::HeadBlocks, m));

  ModuleVector result;
  for (const auto& [bseq, w_tail] : by_bseq) {
    if (w_tail.is_zero()) continue;
    for (const auto& [mid, coeff] : head_mids) {
      ModuleVector vec = w_tail;
      for (int j = 1; j <= m - 1 && !vec.is_zero(); ++j)
        for (int i = xi.at(j); i >= 1; --i) {
          const Rat& u = sub.t[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i) - 1];
          vec = t_entry_apply(mod, mid[static_cast<std::size_t>(xi.site(j, i)) - 1] + sub.offset,
                              j + 1 + sub.offset, u, vec);
        }
      // T-entry chain at the cut block itself
      for (int i = M; i >= 1 && !vec.is_zero(); --i) {
        const int a = mid[static_cast<std::size_t>(cut_sites[static_cast<std::size_t>(i) - 1]) - 1];
        const int b = bseq[static_cast<std::size_t>(i) - 1];
        vec = t_entry_apply(mod, a + sub.offset, b + sub.offset,
                            cv.tm[static_cast<std::size_t>(i) - 1], vec);
      }
      vec *= coeff;
      result += vec;
    }
  }
  return result;
}

namespace {

// Shared skeleton of the two combinatorial right-hand sides. The caller
// provides the scalar weight for one permuted point of (head, tail, cut)
// variables; the skeleton owns the orbit sums, the embedded sub-vectors and
// the exponent-matrix monomial.
struct FormulaFlavor {
  bool sym_cut = false;      // orbit-sum the cut block too
  bool monomial_factorials = false;
};

ModuleVector combinatorial_rhs(
    const EvalModule& mod, const SubBethe& sub, int m, const ModuleVector& target,
    const NestedOptions& opt, const FormulaFlavor& flavor,
    const std::function<Rat(const QMatrix&, const PartitionPair&,
                            const std::vector<std::vector<Rat>>& head_perm,
                            const std::vector<std::vector<Rat>>& tail_perm,
                            const std::vector<Rat>& tm_perm)>& pair_sum) {
  const int r = sub.rank_r;
  const CutView cv = split_blocks(sub, m);
  const int M = static_cast<int>(cv.tm.size());
  const std::vector<Rat> lam = sub.lambda_slice(mod);

  const Rat pref = inverse_tm_product(cv.tm, mod.x);
  const auto head_perms = all_block_permutations(cv.head);
  const auto tail_perms = all_block_permutations(cv.tail);
  const auto cut_perms =
      flavor.sym_cut ? permutations(M) : std::vector<std::vector<int>>{permutations(M).front()};

  ModuleVector total;
  for (const QMatrix& q : enumerate_q_set(r, m, sub.shape)) {
    const PartitionPair pair = canonical_pair(q);
    Rat fact = shape_factorials(sub, m, q);
    if (flavor.monomial_factorials)
      for (const auto& rowq : q.cells)
        for (int vq : rowq) fact /= factorial(vq);

    ModuleVector inner;
    for (const auto& tail_perm : tail_perms) {
      const Rat lpre = l_scalar(tail_perm, q.eta, mod.x, lam, m);
      ModuleVector w_psi;
      if (opt.phi_after_psi)
        w_psi = eval_sub_bethe(mod, tail_subproblem(sub, m, tail_perm, q.eta), target, opt);
      for (const auto& head_perm : head_perms) {
        const Rat ltpre = l_tilde_scalar(head_perm, q.zeta, mod.x, lam);
        ModuleVector w;
        if (opt.phi_after_psi) {
          w = eval_sub_bethe(mod, head_subproblem(sub, m, head_perm, q.zeta), w_psi, opt);
        } else {
          const ModuleVector w_phi =
              eval_sub_bethe(mod, head_subproblem(sub, m, head_perm, q.zeta), target, opt);
          w = eval_sub_bethe(mod, tail_subproblem(sub, m, tail_perm, q.eta), w_phi, opt);
        }
        for (const auto& cp : cut_perms) {
          const std::vector<Rat> zm = permuted(cv.tm, cp);
          const Rat scal = lpre * ltpre * pair_sum(q, pair, head_perm, tail_perm, zm);
          if (!is_zero(scal)) inner += scal * w;
        }
      }
    }
    if (inner.is_zero()) continue;
    ModuleVector applied = mod.verma.apply_monomial(cut_monomial(q, sub.offset), inner);
    applied *= fact;
    total += applied;
  }
  total *= pref;
  return total;
}

std::vector<std::vector<Rat>> with_cut_layer_first(const std::vector<Rat>& zm,
                                                   const std::vector<std::vector<Rat>>& rest) {
  std::vector<std::vector<Rat>> layers;
  layers.reserve(rest.size() + 1);
  layers.push_back(zm);
  layers.insert(layers.end(), rest.begin(), rest.end());
  return layers;
}

std::vector<std::vector<Rat>> with_cut_layer_last(const std::vector<std::vector<Rat>>& rest,
                                                  const std::vector<Rat>& zm) {
  std::vector<std::vector<Rat>> layers = rest;
  layers.push_back(zm);
  return layers;
}

}  // namespace

ModuleVector intermediate_rhs(const EvalModule& mod, const SubBethe& sub, int m,
                              const ModuleVector& target, const NestedOptions& opt) {
  FormulaFlavor flavor;  // no cut-block orbit, no monomial factorials
  return combinatorial_rhs(
      mod, sub, m, target, opt, flavor,
      [&](const QMatrix& q, const PartitionPair&, const std::vector<std::vector<Rat>>& head_perm,
          const std::vector<std::vector<Rat>>& tail_perm, const std::vector<Rat>& zm) {
        const auto u_layers = take_tail(head_perm, q.zeta);
        const auto v_layers = take_head(tail_perm, q.eta);
        Rat sum(0);
        for (const auto& [I, J] : enumerate_pairs(q))
          sum += u_tilde_weight(J, with_cut_layer_last(u_layers, zm)) *
                 u_weight(I, with_cut_layer_first(zm, v_layers));
        return sum;
      });
}

ModuleVector main_formula_rhs(const EvalModule& mod, const SubBethe& sub, int m,
                              const ModuleVector& target, const NestedOptions& opt) {
  const int M = sub.shape.at(m);
  FormulaFlavor flavor;
  flavor.sym_cut = true;
  flavor.monomial_factorials = true;
  return combinatorial_rhs(
      mod, sub, m, target, opt, flavor,
      [&](const QMatrix& q, const PartitionPair& pair,
          const std::vector<std::vector<Rat>>& head_perm,
          const std::vector<std::vector<Rat>>& tail_perm, const std::vector<Rat>& zm) -> Rat {
        const auto u_layers = take_tail(head_perm, q.zeta);
        const auto v_layers = take_head(tail_perm, q.eta);
        const PartitionTuple rev_I = reversed_elements(pair.first, M);
        return u_tilde_weight(pair.second, with_cut_layer_last(u_layers, reversed(zm))) *
               u_weight(rev_I, with_cut_layer_first(zm, v_layers)) * phi_product(zm);
      });
}

ModuleVector factorized_rhs(const EvalModule& mod, const SubBethe& sub, int m,
                            const ModuleVector& target, const NestedOptions& opt) {
  const CutView cv = split_blocks(sub, m);
  if (!cv.tm.empty())
    throw InvalidConfigError("product form needs an empty cut block");
  Shape tail_shape, head_shape;
  tail_shape.xi = cv.xi_tail;
  head_shape.xi = cv.xi_head;
  const SubBethe tail{sub.rank_r - m, sub.offset + m, tail_shape, cv.tail};
  const SubBethe head{m, sub.offset, head_shape, cv.head};
  const ModuleVector w = eval_sub_bethe(mod, tail, target, opt);
  return eval_sub_bethe(mod, head, w, opt);
}

ModuleVector bethe_recursive(const EvalModule& mod, const Shape& shape,
                             const VarAssignment& vars, const SplitPlan& plan) {
  NestedOptions opt;
  opt.sub_eval = SubEval::Recursive;
  opt.plan = plan;
  const SubBethe top = top_problem(mod.rank(), shape, vars);
  if (top.rank_r == 1 || shape.total() == 0) return ModuleVector::vacuum();
  return main_formula_rhs(mod, top, plan.cut(top.rank_r), ModuleVector::vacuum(), opt);
}

}  // namespace nbv
