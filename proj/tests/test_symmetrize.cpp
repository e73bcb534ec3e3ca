#include <doctest.h>

#include "nbv/rng.hpp"
#include "nbv/sampling.hpp"
#include "nbv/symmetrize.hpp"

using namespace nbv;

namespace {

std::vector<Rat> pts(std::initializer_list<long> vals) {
  std::vector<Rat> out;
  for (long v : vals) out.push_back(Rat(v));
  return out;
}

Rat pairwise_shift_ratio(const std::vector<Rat>& z) {
  // prod_{a<b} (z_a - z_b - 1)/(z_a - z_b)
  Rat val(1);
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = a + 1; b < z.size(); ++b)
      val *= rat_div(z[a] - z[b] - 1, z[a] - z[b], "coincident points");
  return val;
}

}  // namespace

TEST_CASE("orbit sum of a coordinate") {
  auto f = [](const std::vector<Rat>& p) -> Rat { return p[0]; };
  CHECK(symmetrize(f, {{0, 1}}, pts({2, 5})) == Rat(7));
}

TEST_CASE("symmetric integrand picks up k!") {
  auto f = [](const std::vector<Rat>& p) -> Rat { return p[0] * p[1] + p[0] + p[1]; };
  const auto point = pts({3, 11});
  CHECK(symmetrize(f, {{0, 1}}, point) == Rat(2) * f(point));
  auto g = [](const std::vector<Rat>& p) -> Rat { return p[0] + p[1] + p[2]; };
  const auto point3 = pts({3, 11, -4});
  CHECK(symmetrize(g, {{0, 1, 2}}, point3) == Rat(6) * g(point3));
}

TEST_CASE("two-point shift ratio sums to 2") {
  auto f = [](const std::vector<Rat>& p) -> Rat {
    return rat_div(p[0] - p[1] - 1, p[0] - p[1], "coincident points");
  };
  CHECK(symmetrize(f, {{0, 1}}, pts({9, 4})) == Rat(2));
}

TEST_CASE("pairwise shift product symmetrizes to k! for k <= 4") {
  Rng rng(2024);
  for (int k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rat> point;
      for (int i = 0; i < k; ++i) point.push_back(random_rational(rng));
      bool sep = true;
      for (int i = 0; i < k && sep; ++i)
        for (int j = i + 1; j < k && sep; ++j) {
          const Rat d = point[i] - point[j];
          if (d == 0 || d == 1 || d == -1) sep = false;
        }
      if (!sep) {
        --trial;
        continue;
      }
      std::vector<int> group;
      for (int i = 0; i < k; ++i) group.push_back(i);
      CHECK(symmetrize(pairwise_shift_ratio, {group}, point) == factorial(k));
    }
  }
}

TEST_CASE("multiple groups compose left to right") {
  // f(x1,x2,y1) = x1 * y1: orbit over {x1,x2} x {y1} = (x1+x2)*y1
  auto f = [](const std::vector<Rat>& p) -> Rat { return p[0] * p[2]; };
  CHECK(symmetrize(f, {{0, 1}, {2}}, pts({2, 3, 7})) == Rat(35));
}

TEST_CASE("pole inside the orbit names the permutation") {
  auto f = [](const std::vector<Rat>& p) -> Rat {
    return rat_div(Rat(1), p[0] - 3, "difference with 3");
  };
  CHECK_THROWS_WITH_AS(symmetrize(f, {{0, 1}}, pts({3, 5})),
                       doctest::Contains("permutation"), PoleError);
}
