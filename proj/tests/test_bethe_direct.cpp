#include <doctest.h>

#include "nbv/bethe.hpp"
#include "nbv/rng.hpp"
#include "nbv/sampling.hpp"

using namespace nbv;

namespace {

GlWeight weight(std::initializer_list<const char*> vals) {
  GlWeight w;
  for (const char* v : vals) w.entries.push_back(rat_parse(v));
  return w;
}

Monomial mono(std::initializer_list<Gen> gens) {
  std::vector<Gen> w(gens);
  return Monomial::from_sorted_word(w);
}

VarAssignment assignment(const Shape& shape, std::uint64_t seed) {
  return sample_assignment(shape, seed, separated_predicate());
}

}  // namespace

TEST_CASE("T-entry action on the vacuum") {
  EvalModule mod(weight({"3", "1/2", "-2"}), Rat(1, 3));
  const ModuleVector v = ModuleVector::vacuum();
  const Rat u(4);
  // diagonal: (1 + L1/(u-x)) v
  CHECK(t_entry_apply(mod, 1, 1, u, v) == (Rat(1) + Rat(3) / (u - mod.x)) * v);
  // above the diagonal: e_21 v / (u-x)
  ModuleVector lower;
  lower.add(mono({{2, 1}}), Rat(1) / (u - mod.x));
  CHECK(t_entry_apply(mod, 1, 2, u, v) == lower);
  // below: raising kills the vacuum
  CHECK(t_entry_apply(mod, 2, 1, u, v).is_zero());
  CHECK_THROWS_AS(t_entry_apply(mod, 1, 1, mod.x, v), PoleError);
}

TEST_CASE("all-zero shape returns the vacuum") {
  Shape shape;
  shape.xi = {0, 0, 0};
  const auto va = assignment(shape, 12);
  EvalModule mod(GlWeight{va.lambda}, va.x);
  CHECK(bethe_direct(mod, shape, va) == ModuleVector::vacuum());
}

TEST_CASE("rank 2 chains of simple lowering steps") {
  for (int k = 1; k <= 3; ++k) {
    Shape shape;
    shape.xi = {k};
    const auto va = assignment(shape, static_cast<std::uint64_t>(40 + k));
    EvalModule mod(GlWeight{va.lambda}, va.x);
    Rat coeff(1);
    std::vector<Gen> word;
    for (int i = 1; i <= k; ++i) {
      coeff /= va.tv(1, i) - va.x;
      word.push_back({2, 1});
    }
    ModuleVector expect;
    expect.add(Monomial::from_sorted_word(word), coeff);
    CHECK(bethe_direct(mod, shape, va) == expect);
  }
}

TEST_CASE("rank 3 one-one shape, frozen coefficients") {
  Shape shape;
  shape.xi = {1, 1};
  VarAssignment va;
  va.t = {{Rat(2)}, {Rat(5)}};
  va.x = Rat(1, 3);
  va.lambda = {rat_parse("3"), rat_parse("1/2"), rat_parse("-2")};
  EvalModule mod(GlWeight{va.lambda}, va.x);

  const Rat d1 = Rat(2) - va.x, d2 = Rat(5) - va.x, delta = Rat(5) - Rat(2);
  ModuleVector expect;
  expect.add(mono({{3, 2}, {2, 1}}), Rat(1) / (d1 * d2));
  expect.add(mono({{3, 1}}),
             Rat(-1) / (d1 * d2) + (Rat(1) + va.lambda[1] / d2) / (delta * d1));
  CHECK(bethe_direct(mod, shape, va) == expect);
}

TEST_CASE("weight of the result matches the shape shift") {
  Rng seeds(7);
  for (int n = 2; n <= 4; ++n) {
    Shape shape;
    shape.xi.assign(static_cast<std::size_t>(n) - 1, 1);
    const auto va = assignment(shape, seeds.next());
    EvalModule mod(GlWeight{va.lambda}, va.x);
    const ModuleVector b = bethe_direct(mod, shape, va);
    REQUIRE(!b.is_zero());
    GlWeight expect{va.lambda};
    for (int a = 1; a <= n - 1; ++a) {
      expect.entries[static_cast<std::size_t>(a) - 1] -= shape.at(a);
      expect.entries[static_cast<std::size_t>(a)] += shape.at(a);
    }
    CHECK(mod.verma.weight_of(b) == expect);
  }
}

TEST_CASE("value is symmetric within each variable block") {
  Shape shape;
  shape.xi = {2, 1};
  const auto va = assignment(shape, 77);
  EvalModule mod(GlWeight{va.lambda}, va.x);
  const ModuleVector base = bethe_direct(mod, shape, va);
  VarAssignment swapped = va;
  std::swap(swapped.t[0][0], swapped.t[0][1]);
  CHECK(bethe_direct(mod, shape, swapped) == base);
}

TEST_CASE("exchange relation on evaluation-module probes") {
  Rng rng(4242);
  for (int n = 2; n <= 4; ++n) {
    Shape shape;
    shape.xi.assign(static_cast<std::size_t>(n) - 1, 0);
    const auto va = assignment(shape, rng.next());
    EvalModule mod(GlWeight{va.lambda}, va.x);
    Rat u = random_rational(rng), v = random_rational(rng);
    while (u == mod.x) u = random_rational(rng);
    while (v == mod.x || v == u) v = random_rational(rng);

    ModuleVector probe;  // e_21 v + 2 e_n1 v
    probe.add(mono({{2, 1}}), Rat(1));
    probe.add(mono({{n, 1}}), Rat(2));

    // the diagonal case and a crossing case singled out, then the sweep
    CHECK(rtt_check(mod, 1, 1, 1, 1, u, v, probe));
    CHECK(rtt_check(mod, 1, 2, 1, 2, u, v, probe));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = 1; d <= n; ++d) CHECK(rtt_check(mod, a, b, c, d, u, v, probe));
  }
}
