#pragma once

#include <map>

#include "nbv/bethe.hpp"
#include "nbv/partitions.hpp"
#include "nbv/weightfn.hpp"

namespace nbv {

enum class SubEval { Direct, Recursive };

// Cut choice per rank for the recursive strategy; ranks without an explicit
// entry split at floor(rank/2).
struct SplitPlan {
  std::map<int, int> cuts;

  int cut(int rank) const;
};

struct NestedOptions {
  SubEval sub_eval = SubEval::Direct;
  SplitPlan plan;
  // Apply the tail-embedded factor to the target first, then the head one.
  // The flipped order exists for the commutation probe.
  bool phi_after_psi = true;
  // Use the last enumerated partition pair instead of the canonical fill;
  // the closed formula accepts any representative.
  bool alt_pair = false;
};

// Evaluates an embedded sub-problem (identity at rank 1 or empty shape),
// either by the matrix-entry definition or by recursing on the formula.
ModuleVector eval_sub_bethe(const EvalModule& mod, const SubBethe& sub,
                            const ModuleVector& target, const NestedOptions& opt);

// Rank split across the cut: sum over letter sequences at the cut block of
// T-entry chains times the two one-sided matrix entries, everything built
// from the direct machinery.
ModuleVector splitting_rhs(const EvalModule& mod, const SubBethe& sub, int m,
                           const ModuleVector& target);

// Cut-block variables integrated out: sum over the constrained exponent
// matrices with the full partition-pair sum inside the two-sided orbit sum.
ModuleVector intermediate_rhs(const EvalModule& mod, const SubBethe& sub, int m,
                              const ModuleVector& target, const NestedOptions& opt);

// The closed combinatorial form: one canonical partition pair per exponent
// matrix, cut-block orbit sum against the pairwise shift product.
ModuleVector main_formula_rhs(const EvalModule& mod, const SubBethe& sub, int m,
                              const ModuleVector& target, const NestedOptions& opt);

// Product form for a vanishing cut block: head factor after tail factor.
ModuleVector factorized_rhs(const EvalModule& mod, const SubBethe& sub, int m,
                            const ModuleVector& target, const NestedOptions& opt);

// Full recursion over rank splits down to rank one.
ModuleVector bethe_recursive(const EvalModule& mod, const Shape& shape,
                             const VarAssignment& vars, const SplitPlan& plan);

}  // namespace nbv
