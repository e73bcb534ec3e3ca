#include <doctest.h>

#include "nbv/partitions.hpp"
#include "nbv/rng.hpp"

using namespace nbv;

TEST_CASE("sequence to partition by positions") {
  // values 1..m label the parts, positions land in them
  const PartitionTuple J = partition_from_seq({1, 1, 2}, 1, 2);
  CHECK(J.part(1) == std::vector<int>{1, 2});
  CHECK(J.part(2) == std::vector<int>{3});

  const PartitionTuple I = partition_from_seq({4, 3}, 3, 4);
  CHECK(I.part(3) == std::vector<int>{2});
  CHECK(I.part(4) == std::vector<int>{1});
}

TEST_CASE("sequence-partition roundtrip") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(3));
    const int len = static_cast<int>(rng.below(5));
    std::vector<int> seq;
    for (int i = 0; i < len; ++i) seq.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m))));
    const PartitionTuple p = partition_from_seq(seq, 1, m);
    CHECK(seq_from_partition(p, len) == seq);
    CHECK(partition_from_seq(seq_from_partition(p, len), 1, m) == p);
  }
}

TEST_CASE("element reversal is an involution") {
  const PartitionTuple I = partition_from_seq({4, 3, 4}, 3, 4);
  const PartitionTuple rev = reversed_elements(I, 3);
  CHECK(rev.part(4) == std::vector<int>{1, 3});
  CHECK(rev.part(3) == std::vector<int>{2});
  CHECK(reversed_elements(rev, 3) == I);
}

TEST_CASE("forced exponent matrix at rank 2") {
  Shape shape;
  shape.xi = {3};
  const auto qs = enumerate_q_set(2, 1, shape);
  REQUIRE(qs.size() == 1);
  CHECK(qs[0].q(2, 1) == 3);
  CHECK(qs[0].eta.empty());
  CHECK(qs[0].zeta.empty());
}

TEST_CASE("unit-total matrices at the middle cut of rank 4") {
  Shape shape;
  shape.xi = {1, 1, 1};
  const auto qs = enumerate_q_set(4, 2, shape);
  CHECK(qs.size() == 4);
  for (const auto& q : qs) {
    int total = 0;
    for (int s = 3; s <= 4; ++s)
      for (int p = 1; p <= 2; ++p) total += q.q(s, p);
    CHECK(total == 1);
    CHECK(q.eta_at(3) <= 1);
    CHECK(q.zeta_at(1) <= 1);
  }
}

TEST_CASE("tail-sum constraints cut the set down") {
  Shape shape;
  shape.xi = {0, 2, 0};
  const auto qs = enumerate_q_set(4, 2, shape);
  REQUIRE(qs.size() == 1);
  CHECK(qs[0].q(3, 2) == 2);
  CHECK(qs[0].q(3, 1) == 0);
  CHECK(qs[0].q(4, 1) == 0);
  CHECK(qs[0].q(4, 2) == 0);
}

TEST_CASE("pair enumeration matches the multinomial count") {
  Shape shape;
  shape.xi = {2, 3, 2};
  for (int m = 1; m <= 3; ++m) {
    for (const auto& q : enumerate_q_set(4, m, shape)) {
      const auto pairs = enumerate_pairs(q);
      CHECK(Rat(static_cast<long>(pairs.size())) == pair_count(q));
      for (const auto& [I, J] : pairs)
        for (int s = m + 1; s <= 4; ++s)
          for (int p = 1; p <= m; ++p) {
            int inter = 0;
            for (int e : I.part(s))
              for (int f : J.part(p))
                if (e == f) ++inter;
            CHECK(inter == q.q(s, p));
          }
    }
  }
}

TEST_CASE("single-cell matrices admit exactly one pair") {
  Shape shape;
  shape.xi = {0, 2, 2};
  for (const auto& q : enumerate_q_set(4, 2, shape)) {
    int nonzero = 0;
    for (int s = 3; s <= 4; ++s)
      for (int p = 1; p <= 2; ++p)
        if (q.q(s, p) > 0) ++nonzero;
    if (nonzero == 1) CHECK(enumerate_pairs(q).size() == 1);
  }
}

TEST_CASE("canonical pair realizes the prescribed intersections") {
  Shape shape;
  shape.xi = {2, 3, 2};
  for (const auto& q : enumerate_q_set(4, 2, shape)) {
    const auto [I, J] = canonical_pair(q);
    CHECK(I.size() == q.total);
    CHECK(J.size() == q.total);
    for (int s = 3; s <= 4; ++s)
      for (int p = 1; p <= 2; ++p) {
        int inter = 0;
        for (int e : I.part(s))
          for (int f : J.part(p))
            if (e == f) ++inter;
        CHECK(inter == q.q(s, p));
      }
  }
}
