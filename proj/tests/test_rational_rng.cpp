#include <doctest.h>

#include "nbv/rational.hpp"
#include "nbv/rng.hpp"
#include "nbv/sampling.hpp"

using namespace nbv;

TEST_CASE("rationals are canonical and exact") {
  Rat a(2, 4);
  a.canonicalize();
  CHECK(a == Rat(1, 2));
  CHECK(rat_str(a) == "1/2");
  CHECK(rat_parse("-6/4") == Rat(-3, 2));
  CHECK(rat_parse("7") == Rat(7));
  CHECK_THROWS_AS(rat_parse("abc"), InvalidConfigError);
  CHECK_THROWS_AS(rat_div(Rat(1), Rat(0), "denominator"), PoleError);
}

TEST_CASE("rational arithmetic round-trips") {
  Rng rng(42);
  SampleOptions opt;
  for (int i = 0; i < 200; ++i) {
    const Rat a = random_rational(rng, opt);
    Rat b = random_rational(rng, opt);
    CHECK((a + b) - b == a);
    if (!is_zero(b)) CHECK((a * b) / b == a);
  }
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == Rat(1));
  CHECK(factorial(1) == Rat(1));
  CHECK(factorial(5) == Rat(120));
}

TEST_CASE("rng streams are deterministic and distinct") {
  Rng a(7), b(7), c(8);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  bool differ = false;
  Rng a2(7);
  for (int i = 0; i < 100; ++i)
    if (a2.next() != c.next()) differ = true;
  CHECK(differ);
  Rng d(3);
  for (int i = 0; i < 1000; ++i) {
    const long long v = d.in_range(-5, 5);
    CHECK(v >= -5);
    CHECK(v <= 5);
  }
}

TEST_CASE("same seed gives the identical assignment") {
  Shape shape;
  shape.xi = {2, 1};
  const auto a = sample_assignment(shape, 99, separated_predicate());
  const auto b = sample_assignment(shape, 99, separated_predicate());
  CHECK(a.t == b.t);
  CHECK(a.x == b.x);
  CHECK(a.lambda == b.lambda);
  const auto c = sample_assignment(shape, 100, separated_predicate());
  CHECK(a.t != c.t);
}

TEST_CASE("predicate rejection resamples until satisfied") {
  Shape shape;
  shape.xi = {2};
  int calls = 0;
  Predicate pred = [&](const VarAssignment& va) {
    ++calls;
    return calls > 3 && va.t[0][0] != va.t[0][1];
  };
  const auto va = sample_assignment(shape, 5, pred);
  CHECK(calls >= 4);
  CHECK(va.t[0][0] != va.t[0][1]);
}

TEST_CASE("retry limit zero with an unsatisfiable predicate") {
  Shape shape;
  shape.xi = {1};
  SampleOptions opt;
  opt.retries = 0;
  Predicate never = [](const VarAssignment&) { return false; };
  CHECK_THROWS_AS(sample_assignment(shape, 1, never, opt), ResampleExhausted);
}
