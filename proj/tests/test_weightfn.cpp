#include <doctest.h>

#include "nbv/weightfn.hpp"

using namespace nbv;

namespace {

std::vector<Rat> vals(std::initializer_list<const char*> xs) {
  std::vector<Rat> out;
  for (const char* s : xs) out.push_back(rat_parse(s));
  return out;
}

PartitionTuple parts(int lo, int hi, std::initializer_list<std::vector<int>> ps) {
  PartitionTuple p;
  p.lo = lo;
  p.hi = hi;
  p.parts.assign(ps.begin(), ps.end());
  return p;
}

}  // namespace

TEST_CASE("empty ground set gives the empty products") {
  const PartitionTuple I = parts(2, 3, {{}, {}});
  CHECK(u_weight(I, {{}, {}}) == Rat(1));
  const PartitionTuple J = parts(1, 1, {{}});
  CHECK(u_tilde_weight(J, {{}}) == Rat(1));
}

TEST_CASE("single element across two upper layers") {
  // one element sitting in the top part: a single merge factor against the
  // cut variable
  const PartitionTuple I = parts(2, 3, {{}, {1}});
  const Rat vm(3), v2(8);
  CHECK(u_weight(I, {{vm}, {v2}}) == Rat(1) / (v2 - vm));
}

TEST_CASE("two elements split between layers") {
  // I_2 = {2}, I_3 = {1}: upper layer keeps element 1, the factor list per
  // the merge rule: equal-index inverse plus the shifted ratio where the
  // lower index exceeds it
  const PartitionTuple I = parts(2, 3, {{2}, {1}});
  const Rat a(2), b(9), c(20);  // v^m = (a, b), v^2 = (c)
  // i^(m) = (1,2); i^(2) = (1): c=1 equal -> 1/(c-a); d=2 greater -> (c-b+1)/(c-b)
  const Rat expect = Rat(1) / (c - a) * (c - b + 1) / (c - b);
  CHECK(u_weight(I, {{a, b}, {c}}) == expect);
}

TEST_CASE("mirror function at the lowest cut is trivial") {
  // a single layer (the cut block itself) leaves no products
  const PartitionTuple J = parts(1, 1, {{1, 2}});
  CHECK(u_tilde_weight(J, {{Rat(4), Rat(7)}}) == Rat(1));
}

TEST_CASE("mirror function keeps its same-layer factors off the cut layer") {
  // everything in the last part: the cut layer carries no pairwise factors
  const PartitionTuple J = parts(1, 2, {{}, {1, 2}});
  const Rat u1(11), u2(4);
  CHECK(u_tilde_weight(J, {{}, {u1, u2}}) == Rat(1));
  // a lower layer of two does carry them
  const PartitionTuple J2 = parts(1, 2, {{1, 2}, {}});
  const Rat a(11), b(4), z1(30), z2(50);
  const Rat expect = rat_div(Rat(1), z1 - a, "z1-a") * ((z2 - a + 1) / (z2 - a)) *
                     rat_div(Rat(1), z2 - b, "z2-b") * ((a - b + 1) / (a - b));
  CHECK(u_tilde_weight(J2, {{a, b}, {z1, z2}}) == expect);
}

TEST_CASE("mirror merge factors use the reversed inequality") {
  // J_1 = {2}, J_2 = {1}: for the layer-2 element 1, the lower index 2 is
  // greater, so only the equal-index inverse appears
  const PartitionTuple J = parts(1, 2, {{2}, {1}});
  const Rat u1(5);            // layer 1 holds element 2
  const Rat w1(12), w2(30);   // layer 2 = cut holds elements 1, 2
  const Rat expect = Rat(1) / (w2 - u1);
  CHECK(u_tilde_weight(J, {{u1}, {w1, w2}}) == expect);
}

TEST_CASE("orbit-summed variants reduce to the plain ones for singleton layers") {
  const PartitionTuple I = parts(2, 3, {{2}, {1}});
  const std::vector<std::vector<Rat>> layers{{Rat(2), Rat(9)}, {Rat(20)}};
  CHECK(w_weight(I, layers) == u_weight(I, layers));
  const PartitionTuple J = parts(1, 2, {{2}, {1}});
  const std::vector<std::vector<Rat>> jlayers{{Rat(5)}, {Rat(12), Rat(30)}};
  CHECK(w_tilde_weight(J, jlayers) == u_tilde_weight(J, jlayers));
}

TEST_CASE("orbit sum over a two-variable layer has two addends") {
  const PartitionTuple I = parts(2, 3, {{2}, {1}});
  const Rat a(2), b(9), c(20), d(-6);
  const std::vector<std::vector<Rat>> layers{{a, b}, {c, d}};
  // fails sizes: layer 2 needs exactly |I_3| = 1 entries; use a fatter partition
  const PartitionTuple I2 = parts(2, 3, {{}, {1, 2}});
  const std::vector<std::vector<Rat>> ls{{a, b}, {c, d}};
  const std::vector<std::vector<Rat>> swapped{{a, b}, {d, c}};
  CHECK(w_weight(I2, ls) == u_weight(I2, ls) + u_weight(I2, swapped));
  (void)layers;
}

TEST_CASE("pairwise shift product") {
  CHECK(phi_product({}) == Rat(1));
  CHECK(phi_product({Rat(5)}) == Rat(1));
  CHECK(phi_product({Rat(3), Rat(1)}) == Rat(1, 2));
  CHECK_THROWS_AS(phi_product({Rat(3), Rat(3)}), PoleError);
}

TEST_CASE("tail prefactor: trivial ranges") {
  // no kept slices
  CHECK(l_scalar({{Rat(4), Rat(9)}}, {0}, Rat(1), vals({"1", "2", "3"}), 1) == Rat(1));
  // no tail blocks at all
  CHECK(l_scalar({}, {}, Rat(1), vals({"1", "2"}), 1) == Rat(1));
}

TEST_CASE("tail prefactor: single kept variable") {
  // one tail block with one kept variable out of one
  const Rat t(7), x(1);
  const auto lam = vals({"3", "1/2", "-2"});
  CHECK(l_scalar({{t}}, {1}, x, lam, 1) == (t - x + lam[1]) / (t - x));
}

TEST_CASE("tail prefactor: cross-block factor between kept top and dropped bottom") {
  // blocks (t^2) = (a1, a2), (t^3) = (b1); eta = (1, 1): kept: a1, b1;
  // cross factor pairs b1 against the dropped a2
  const Rat a1(3), a2(10), b1(21), x(0);
  const auto lam = vals({"1", "2", "5", "7"});
  const Rat expect = ((b1 - a2 + 1) / (b1 - a2)) * ((a1 - x + lam[1]) / (a1 - x)) *
                     ((b1 - x + lam[2]) / (b1 - x)) * ((a2 - a1 + 1) / (a2 - a1));
  CHECK(l_scalar({{a1, a2}, {b1}}, {1, 1}, x, lam, 1) == expect);
}

TEST_CASE("head prefactor: trivial and shifted-weight cases") {
  const auto lam = vals({"3", "1/2", "-2"});
  CHECK(l_tilde_scalar({{Rat(5), Rat(6)}}, {0}, Rat(0), lam) == Rat(1));
  // one block, one kept variable at the block end, weight index shifted,
  // plus the in-block factor pairing it with the dropped head
  const Rat t1(4), t2(9), x(1);
  CHECK(l_tilde_scalar({{t1, t2}}, {1}, x, lam) ==
        (t2 - x + lam[1]) / (t2 - x) * ((t2 - t1 + 1) / (t2 - t1)));
}

TEST_CASE("slices keep order and concatenation restores the block") {
  const std::vector<std::vector<Rat>> blocks{{Rat(1), Rat(2), Rat(3)}, {Rat(4), Rat(5)}};
  const auto head = take_head(blocks, {2, 1});
  const auto tail = take_tail(blocks, {1, 1});
  CHECK(head[0] == std::vector<Rat>{Rat(1), Rat(2)});
  CHECK(tail[0] == std::vector<Rat>{Rat(3)});
  CHECK(head[1] == std::vector<Rat>{Rat(4)});
  CHECK(tail[1] == std::vector<Rat>{Rat(5)});
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<Rat> joined = head[b];
    joined.insert(joined.end(), tail[b].begin(), tail[b].end());
    CHECK(joined == blocks[b]);
  }
  CHECK(reversed({Rat(1), Rat(2)}) == std::vector<Rat>{Rat(2), Rat(1)});
}
