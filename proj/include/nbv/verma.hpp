#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nbv/rational.hpp"

namespace nbv {

using Gen = std::pair<int, int>;  // e_{ij}

// Eigenvalues of e_11..e_nn on a weight vector.
struct GlWeight {
  std::vector<Rat> entries;

  int rank() const { return static_cast<int>(entries.size()); }
  bool operator==(const GlWeight&) const = default;
  std::string str() const;
};

// Normal-ordered product of lowering generators e_ij (i > j) with positive
// exponents. Factor e_ij stands left of e_kl when i > k, or i == k and j > l;
// the comparator below is the single place that convention lives.
struct Monomial {
  std::vector<std::pair<Gen, int>> factors;  // descending (i,j)

  int degree() const;
  bool empty() const { return factors.empty(); }
  std::vector<Gen> word() const;  // expanded with multiplicity, left to right
  std::string str() const;        // "e32^2.e21", "1" for the empty product

  auto operator<=>(const Monomial&) const = default;

  static Monomial from_sorted_word(const std::vector<Gen>& w);
};

// True when e_ab belongs strictly left of e_cd in a normal-ordered word.
bool left_of(const Gen& a, const Gen& b);

// Finite linear combination of normal-ordered monomials applied to the
// highest weight vector. No zero coefficients are stored.
struct ModuleVector {
  std::map<Monomial, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Monomial& m, const Rat& c);
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator*=(const Rat& c);
  bool operator==(const ModuleVector&) const = default;
  std::string str() const;

  static ModuleVector vacuum();  // the highest weight vector itself
};

ModuleVector operator*(const Rat& c, ModuleVector v);
ModuleVector operator+(ModuleVector a, const ModuleVector& b);
ModuleVector operator-(ModuleVector a, const ModuleVector& b);

// Verma module with generic highest weight: generator action, straightening
// into the normal-ordered basis, weight bookkeeping. All methods are pure;
// the memo only caches straightened words.
class VermaModule {
 public:
  explicit VermaModule(GlWeight lambda) : lambda_(std::move(lambda)) {}

  int rank() const { return lambda_.rank(); }
  const GlWeight& highest_weight() const { return lambda_; }

  // e_ij * vec expanded in the normal-ordered basis. Total on 1 <= i,j <= n.
  ModuleVector act(int i, int j, const ModuleVector& vec) const;

  // Applies a word of generators, rightmost factor first.
  ModuleVector apply_word(const std::vector<Gen>& word, const ModuleVector& vec) const;

  // Applies prod e_ij^{exps[(i,j)]} in ascending (i,j) written order. All
  // pairs must be lowering; when they pairwise commute any order agrees.
  ModuleVector apply_monomial(const std::map<Gen, int>& exps, const ModuleVector& vec) const;

  // Common weight of all terms; MixedWeightError when they disagree.
  GlWeight weight_of(const ModuleVector& vec) const;

  // Rewrites an arbitrary word (applied to the highest weight vector) into
  // the normal-ordered basis.
  ModuleVector straighten(const std::vector<Gen>& word) const;

 private:
  GlWeight lambda_;
  mutable std::map<std::vector<Gen>, ModuleVector> memo_;
};

}  // namespace nbv
