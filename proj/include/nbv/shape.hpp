#pragma once

#include <numeric>
#include <vector>

#include "nbv/errors.hpp"
#include "nbv/rational.hpp"

namespace nbv {

// The tuple (xi_1,...,xi_{n-1}) of block sizes. Block a carries the variables
// t^a_1..t^a_{xi_a}; the auxiliary space has one site per variable.
struct Shape {
  std::vector<int> xi;

  int rank() const { return static_cast<int>(xi.size()) + 1; }

  int at(int a) const { return xi.at(static_cast<std::size_t>(a) - 1); }  // 1-based

  // xi^a = xi_1 + ... + xi_a; prefix(0) == 0.
  int prefix(int a) const {
    int s = 0;
    for (int b = 1; b <= a; ++b) s += at(b);
    return s;
  }

  int total() const { return prefix(rank() - 1); }

  // 1-based site of variable t^a_i.
  int site(int a, int i) const { return prefix(a - 1) + i; }

  void validate() const {
    for (int v : xi)
      if (v < 0) throw InvalidConfigError("negative block size in shape");
  }

  bool operator==(const Shape&) const = default;
};

// Rational values for every t^a_i plus the evaluation point x and the
// highest weight (Lambda_1,...,Lambda_n).
struct VarAssignment {
  std::vector<std::vector<Rat>> t;  // t[a-1][i-1]
  Rat x;
  std::vector<Rat> lambda;

  const Rat& tv(int a, int i) const {
    return t.at(static_cast<std::size_t>(a) - 1).at(static_cast<std::size_t>(i) - 1);
  }
};

}  // namespace nbv
