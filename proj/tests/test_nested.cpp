#include <doctest.h>

#include "nbv/nested.hpp"
#include "nbv/rng.hpp"
#include "nbv/sampling.hpp"

using namespace nbv;

namespace {

Monomial mono(std::initializer_list<Gen> gens) {
  std::vector<Gen> w(gens);
  return Monomial::from_sorted_word(w);
}

VarAssignment assignment(const Shape& shape, std::uint64_t seed) {
  return sample_assignment(shape, seed, separated_predicate());
}

EvalModule module_of(const VarAssignment& va) { return EvalModule(GlWeight{va.lambda}, va.x); }

}  // namespace

TEST_CASE("split at rank 2 gives the single lowering step") {
  Shape shape;
  shape.xi = {1};
  const auto va = assignment(shape, 21);
  EvalModule mod = module_of(va);
  const SubBethe top = top_problem(2, shape, va);
  ModuleVector expect;
  expect.add(mono({{2, 1}}), Rat(1) / (va.tv(1, 1) - va.x));
  CHECK(splitting_rhs(mod, top, 1, ModuleVector::vacuum()) == expect);
}

TEST_CASE("split equals the direct value at rank 3") {
  Rng seeds(1001);
  Shape shape;
  shape.xi = {1, 1};
  for (int trial = 0; trial < 5; ++trial) {
    const auto va = assignment(shape, seeds.next());
    EvalModule mod = module_of(va);
    const SubBethe top = top_problem(3, shape, va);
    const ModuleVector direct = bethe_direct(mod, shape, va);
    CHECK(splitting_rhs(mod, top, 1, ModuleVector::vacuum()) == direct);
    CHECK(splitting_rhs(mod, top, 2, ModuleVector::vacuum()) == direct);
  }
}

TEST_CASE("empty cut block reduces the split to the two-factor product") {
  Rng seeds(1002);
  Shape shape;
  shape.xi = {1, 0, 1};
  const auto va = assignment(shape, seeds.next());
  EvalModule mod = module_of(va);
  const SubBethe top = top_problem(4, shape, va);
  NestedOptions opt;
  const ModuleVector direct = bethe_direct(mod, shape, va);
  CHECK(splitting_rhs(mod, top, 2, ModuleVector::vacuum()) == direct);
  CHECK(factorized_rhs(mod, top, 2, ModuleVector::vacuum(), opt) == direct);
}

TEST_CASE("cut-block-integrated form at rank 2 leaves plain lowering chains") {
  for (int k = 1; k <= 3; ++k) {
    Shape shape;
    shape.xi = {k};
    const auto va = assignment(shape, static_cast<std::uint64_t>(60 + k));
    EvalModule mod = module_of(va);
    const SubBethe top = top_problem(2, shape, va);
    NestedOptions opt;
    Rat coeff(1);
    std::vector<Gen> word;
    for (int i = 1; i <= k; ++i) {
      coeff /= va.tv(1, i) - va.x;
      word.push_back({2, 1});
    }
    ModuleVector expect;
    expect.add(Monomial::from_sorted_word(word), coeff);
    CHECK(intermediate_rhs(mod, top, 1, ModuleVector::vacuum(), opt) == expect);
    CHECK(main_formula_rhs(mod, top, 1, ModuleVector::vacuum(), opt) == expect);
  }
}

TEST_CASE("intermediate form equals direct at rank 3") {
  Rng seeds(1003);
  Shape shape;
  shape.xi = {1, 1};
  for (int trial = 0; trial < 5; ++trial) {
    const auto va = assignment(shape, seeds.next());
    EvalModule mod = module_of(va);
    const SubBethe top = top_problem(3, shape, va);
    NestedOptions opt;
    const ModuleVector direct = bethe_direct(mod, shape, va);
    for (int m = 1; m <= 2; ++m) {
      CHECK(intermediate_rhs(mod, top, m, ModuleVector::vacuum(), opt) == direct);
    }
  }
}

TEST_CASE("closed formula: forced exponent matrix at rank 3") {
  Shape shape;
  shape.xi = {1, 0};
  const auto va = assignment(shape, 77);
  EvalModule mod = module_of(va);
  const SubBethe top = top_problem(3, shape, va);
  NestedOptions opt;
  ModuleVector expect;
  expect.add(mono({{2, 1}}), Rat(1) / (va.tv(1, 1) - va.x));
  CHECK(main_formula_rhs(mod, top, 1, ModuleVector::vacuum(), opt) == expect);
}

TEST_CASE("closed formula equals direct at rank 3, both cuts") {
  Rng seeds(1004);
  Shape shape;
  shape.xi = {1, 1};
  for (int trial = 0; trial < 5; ++trial) {
    const auto va = assignment(shape, seeds.next());
    EvalModule mod = module_of(va);
    const SubBethe top = top_problem(3, shape, va);
    NestedOptions opt;
    const ModuleVector direct = bethe_direct(mod, shape, va);
    CHECK(main_formula_rhs(mod, top, 1, ModuleVector::vacuum(), opt) == direct);
    CHECK(main_formula_rhs(mod, top, 2, ModuleVector::vacuum(), opt) == direct);
  }
}

TEST_CASE("closed formula at the motivating rank-4 middle cut") {
  Rng seeds(1005);
  Shape shape;
  shape.xi = {1, 1, 1};
  const auto va = assignment(shape, seeds.next());
  EvalModule mod = module_of(va);
  const SubBethe top = top_problem(4, shape, va);
  NestedOptions opt;
  const ModuleVector direct = bethe_direct(mod, shape, va);
  CHECK(main_formula_rhs(mod, top, 2, ModuleVector::vacuum(), opt) == direct);
}

TEST_CASE("wider cut block at the rank-4 middle cut") {
  Shape shape;
  shape.xi = {1, 2, 1};
  const auto va = assignment(shape, 4207);
  EvalModule mod = module_of(va);
  const SubBethe top = top_problem(4, shape, va);
  NestedOptions opt;
  const ModuleVector direct = bethe_direct(mod, shape, va);
  CHECK(main_formula_rhs(mod, top, 2, ModuleVector::vacuum(), opt) == direct);
}

TEST_CASE("recursion to rank one matches the direct value") {
  Rng seeds(1006);
  SUBCASE("rank 3, both plans") {
    Shape shape;
    shape.xi = {1, 1};
    const auto va = assignment(shape, seeds.next());
    EvalModule mod = module_of(va);
    const ModuleVector direct = bethe_direct(mod, shape, va);
    for (int m = 1; m <= 2; ++m) {
      SplitPlan plan;
      plan.cuts[3] = m;
      CHECK(bethe_recursive(mod, shape, va, plan) == direct);
    }
  }
  SUBCASE("rank 4, middle cut then unit sub-cuts") {
    Shape shape;
    shape.xi = {1, 1, 1};
    const auto va = assignment(shape, seeds.next());
    EvalModule mod = module_of(va);
    const ModuleVector direct = bethe_direct(mod, shape, va);
    SplitPlan plan;
    plan.cuts[4] = 2;
    plan.cuts[3] = 1;
    plan.cuts[2] = 1;
    CHECK(bethe_recursive(mod, shape, va, plan) == direct);
  }
  SUBCASE("all-zero shape returns the vacuum") {
    Shape shape;
    shape.xi = {0, 0, 0};
    const auto va = assignment(shape, seeds.next());
    EvalModule mod = module_of(va);
    CHECK(bethe_recursive(mod, shape, va, SplitPlan{}) == ModuleVector::vacuum());
  }
}

TEST_CASE("invalid plans are rejected") {
  SplitPlan plan;
  plan.cuts[3] = 3;
  CHECK_THROWS_AS(plan.cut(3), InvalidPlanError);
  plan.cuts[3] = 0;
  CHECK_THROWS_AS(plan.cut(3), InvalidPlanError);
  SplitPlan defaulted;
  CHECK(defaulted.cut(4) == 2);
  CHECK(defaulted.cut(3) == 1);
}

TEST_CASE("embedded factors commute on these vectors") {
  Shape shape;
  shape.xi = {1, 1, 1};
  const auto va = assignment(shape, 31415);
  EvalModule mod = module_of(va);
  const SubBethe top = top_problem(4, shape, va);
  NestedOptions psi_first, phi_first;
  phi_first.phi_after_psi = false;
  CHECK(main_formula_rhs(mod, top, 2, ModuleVector::vacuum(), psi_first) ==
        main_formula_rhs(mod, top, 2, ModuleVector::vacuum(), phi_first));
}
