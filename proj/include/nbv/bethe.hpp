#pragma once

#include "nbv/rmatrix.hpp"
#include "nbv/shape.hpp"
#include "nbv/verma.hpp"

namespace nbv {

// The evaluation module V(x): the Verma module together with the evaluation
// point. T^a_b(u) acts as d_ab + e_ba / (u - x).
struct EvalModule {
  VermaModule verma;
  Rat x;

  EvalModule(GlWeight lambda, Rat x_) : verma(std::move(lambda)), x(std::move(x_)) {}
  int rank() const { return verma.rank(); }
};

// d_ab vec + (u - x)^{-1} e_ba vec; PoleError when u == x.
ModuleVector t_entry_apply(const EvalModule& mod, int a, int b, const Rat& u,
                           const ModuleVector& vec);

// A rank-r Bethe-vector problem embedded into gl_n with generator indices
// shifted by `offset` (0 for the head embedding, n-r for the tail one).
struct SubBethe {
  int rank_r;
  int offset;
  Shape shape;                       // length rank_r - 1
  std::vector<std::vector<Rat>> t;   // one block of values per sub-block

  // Weight slice (Lambda_{offset+1},...,Lambda_{offset+r}) seen by the
  // embedded subalgebra.
  std::vector<Rat> lambda_slice(const EvalModule& mod) const;
};

SubBethe top_problem(int n, const Shape& shape, const VarAssignment& vars);

// Matrix-entry definition, evaluated literally: the sparse column of the
// arrow-ordered R-product drives a sum of T-entry chains applied to target.
ModuleVector bethe_apply_direct(const EvalModule& mod, const SubBethe& sub,
                                const ModuleVector& target);

ModuleVector bethe_direct(const EvalModule& mod, const Shape& shape,
                          const VarAssignment& vars);

// (u-v)[T^a_b(u),T^c_d(v)] == T^a_d(u)T^c_b(v) - T^a_d(v)T^c_b(u) on probe.
bool rtt_check(const EvalModule& mod, int a, int b, int c, int d, const Rat& u,
               const Rat& v, const ModuleVector& probe);

}  // namespace nbv
