#include "nbv/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nbv/bethe.hpp"
#include "nbv/errors.hpp"
#include "nbv/nested.hpp"
#include "nbv/partitions.hpp"
#include "nbv/rng.hpp"
#include "nbv/sampling.hpp"
#include "nbv/symmetrize.hpp"
#include "nbv/weightfn.hpp"

namespace nbv {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::string point_string(const VarAssignment& va) {
  std::string s = "x=" + rat_str(va.x) + ";lambda=";
  for (std::size_t i = 0; i < va.lambda.size(); ++i) {
    if (i) s += ",";
    s += rat_str(va.lambda[i]);
  }
  for (std::size_t a = 0; a < va.t.size(); ++a) {
    s += ";t" + std::to_string(a + 1) + "=";
    for (std::size_t i = 0; i < va.t[a].size(); ++i) {
      if (i) s += ",";
      s += rat_str(va.t[a][i]);
    }
  }
  return s;
}

struct Outcome {
  bool pass = true;
  std::string monomial, lhs, rhs, note;
};

Outcome compare_vectors(const ModuleVector& a, const ModuleVector& b, const std::string& note) {
  if (a == b) return {};
  Outcome out;
  out.pass = false;
  out.note = note;
  auto ia = a.terms.begin();
  auto ib = b.terms.begin();
  while (ia != a.terms.end() || ib != b.terms.end()) {
    if (ib == b.terms.end() || (ia != a.terms.end() && ia->first < ib->first)) {
      out.monomial = ia->first.str();
      out.lhs = rat_str(ia->second);
      out.rhs = "0";
      return out;
    }
    if (ia == a.terms.end() || ib->first < ia->first) {
      out.monomial = ib->first.str();
      out.lhs = "0";
      out.rhs = rat_str(ib->second);
      return out;
    }
    if (ia->second != ib->second) {
      out.monomial = ia->first.str();
      out.lhs = rat_str(ia->second);
      out.rhs = rat_str(ib->second);
      return out;
    }
    ++ia;
    ++ib;
  }
  return out;
}

Outcome compare_scalars(const Rat& a, const Rat& b, const std::string& note) {
  if (a == b) return {};
  Outcome out;
  out.pass = false;
  out.monomial = "(scalar)";
  out.lhs = rat_str(a);
  out.rhs = rat_str(b);
  out.note = note;
  return out;
}

ModuleVector flipped(ModuleVector v, bool flip) {
  if (flip) v *= Rat(-1);
  return v;
}

Rat flipped(Rat v, bool flip) { return flip ? Rat(-v) : v; }

// ---- sampled raw material ------------------------------------------------

Rat nonzero_rational(Rng& rng) {
  Rat r = random_rational(rng);
  while (is_zero(r)) r = random_rational(rng);
  return r;
}

// count values whose pairwise differences avoid {0, +1, -1}
std::vector<Rat> separated_values(Rng& rng, int count) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rat> vals;
    for (int i = 0; i < count; ++i) vals.push_back(random_rational(rng));
    bool ok = true;
    for (std::size_t i = 0; i < vals.size() && ok; ++i)
      for (std::size_t j = i + 1; j < vals.size() && ok; ++j) {
        const Rat d = vals[i] - vals[j];
        if (d == 0 || d == 1 || d == -1) ok = false;
      }
    if (ok) return vals;
  }
  throw ResampleExhausted("no separated tuple found");
}

VarAssignment sampled_point(const CheckSpec& spec, const Shape& shape, std::uint64_t trial_seed) {
  Rng mix(trial_seed);
  VarAssignment va = sample_assignment(shape, mix.next(), separated_predicate());
  if (spec.lambda) {
    if (static_cast<int>(spec.lambda->size()) != spec.n)
      throw InvalidConfigError("lambda must have n entries");
    va.lambda = *spec.lambda;
  }
  if (spec.x) va.x = *spec.x;
  return va;
}

EvalModule make_module(const CheckSpec& spec, const VarAssignment& va) {
  GlWeight w;
  w.entries = va.lambda;
  (void)spec;
  return EvalModule(w, va.x);
}

ModuleVector random_probe(Rng& rng, int n) {
  ModuleVector probe;
  const int terms = 1 + static_cast<int>(rng.below(3));
  for (int t = 0; t < terms; ++t) {
    std::vector<Gen> word;
    const int deg = static_cast<int>(rng.below(3));
    for (int d = 0; d < deg; ++d) {
      const int i = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
      const int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(i - 1)));
      word.push_back({i, j});
    }
    std::sort(word.begin(), word.end(),
              [](const Gen& a, const Gen& b) { return left_of(a, b); });
    probe.add(Monomial::from_sorted_word(word), rat_int(rng.in_range(1, 9)));
  }
  return probe;
}

// ---- budget --------------------------------------------------------------

long long orbit_estimate(const CheckSpec& spec, const Shape& shape) {
  double est = 1.0;
  for (int a = 1; a < shape.rank(); ++a)
    for (int k = 2; k <= shape.at(a); ++k) est *= k;
  for (int k = 2; k <= shape.total(); ++k) est *= k;  // column orbit bound
  if (spec.m) {
    const auto qs = enumerate_q_set(spec.n, *spec.m, shape);
    est *= static_cast<double>(std::max<std::size_t>(qs.size(), 1));
  }
  if (est > 9e17) return 900000000000000000LL;
  return static_cast<long long>(est);
}

void enforce_budget(const CheckSpec& spec, const Shape& shape, bool uses_cut) {
  if (shape.total() > spec.max_sites)
    throw BudgetExceededError("size budget: " + std::to_string(shape.total()) + " sites > " +
                                  std::to_string(spec.max_sites),
                              shape.total());
  if (uses_cut && spec.m && shape.at(*spec.m) > spec.max_cut)
    throw BudgetExceededError("size budget: cut block " + std::to_string(shape.at(*spec.m)) +
                                  " > " + std::to_string(spec.max_cut),
                              shape.at(*spec.m));
  const long long est = orbit_estimate(spec, shape);
  if (est > spec.budget)
    throw BudgetExceededError("orbit estimate " + std::to_string(est) + " exceeds budget " +
                                  std::to_string(spec.budget),
                              est);
}

// ---- individual checks ----------------------------------------------------

using TrialFn = std::function<Outcome(const CheckSpec&, std::uint64_t, VarAssignment&)>;

Outcome trial_yang_baxter(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment&) {
  Rng rng(trial_seed);
  Rat u = nonzero_rational(rng), v = nonzero_rational(rng);
  while (u == v) v = nonzero_rational(rng);
  const bool ok = yang_baxter_check(spec.n, u, v) != spec.inject_sign_flip;
  Outcome out;
  out.pass = ok;
  if (!ok) out.note = "triple products differ at u=" + rat_str(u) + " v=" + rat_str(v);
  return out;
}

Outcome trial_rtt(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment& va) {
  Shape shape;
  shape.xi.assign(static_cast<std::size_t>(spec.n) - 1, 0);
  va = sampled_point(spec, shape, trial_seed);
  Rng rng(trial_seed ^ 0x5bf0f1ebULL);
  const EvalModule mod = make_module(spec, va);
  Rat u = random_rational(rng), v = random_rational(rng);
  while (u == mod.x) u = random_rational(rng);
  while (v == mod.x || v == u) v = random_rational(rng);
  const ModuleVector probe = random_probe(rng, spec.n);
  for (int a = 1; a <= spec.n; ++a)
    for (int b = 1; b <= spec.n; ++b)
      for (int c = 1; c <= spec.n; ++c)
        for (int d = 1; d <= spec.n; ++d) {
          const bool ok = rtt_check(mod, a, b, c, d, u, v, probe) != spec.inject_sign_flip;
          if (!ok) {
            Outcome out;
            out.pass = false;
            out.note = "exchange relation fails at (" + std::to_string(a) + "," +
                       std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) +
                       "), u=" + rat_str(u) + ", v=" + rat_str(v) + ", probe=" + probe.str();
            return out;
          }
        }
  return {};
}

struct CutData {
  QMatrix q;
  PartitionPair pair;
};

CutData sampled_cut_data(const CheckSpec& spec, const Shape& shape, Rng& rng) {
  const auto qs = enumerate_q_set(spec.n, *spec.m, shape);
  if (qs.empty()) throw InvalidConfigError("empty exponent-matrix set for this shape");
  CutData cd;
  cd.q = qs[static_cast<std::size_t>(rng.below(qs.size()))];
  const auto pairs = enumerate_pairs(cd.q);
  cd.pair = pairs[static_cast<std::size_t>(rng.below(pairs.size()))];
  return cd;
}

Outcome trial_exchange_wcor(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment&) {
  Shape shape;
  shape.xi = spec.xi;
  Rng rng(trial_seed);
  const CutData cd = sampled_cut_data(spec, shape, rng);
  const int M = cd.q.total;
  if (M < 2) return {};  // nothing to exchange
  const int vcount = [&] {
    int s = 0;
    for (int e : cd.q.eta) s += e;
    return s;
  }();
  const int ucount = [&] {
    int s = 0;
    for (int z : cd.q.zeta) s += z;
    return s;
  }();
  const auto flat = separated_values(rng, vcount + ucount + M);
  std::vector<std::vector<Rat>> v_layers, u_layers;
  std::size_t posn = 0;
  for (int e : cd.q.eta) {
    v_layers.push_back({flat.begin() + static_cast<long>(posn), flat.begin() + static_cast<long>(posn) + e});
    posn += static_cast<std::size_t>(e);
  }
  for (int z : cd.q.zeta) {
    u_layers.push_back({flat.begin() + static_cast<long>(posn), flat.begin() + static_cast<long>(posn) + z});
    posn += static_cast<std::size_t>(z);
  }
  std::vector<Rat> z(flat.begin() + static_cast<long>(posn), flat.end());

  auto stack_v = [&](const std::vector<Rat>& zz) {
    std::vector<std::vector<Rat>> ls;
    ls.push_back(zz);
    ls.insert(ls.end(), v_layers.begin(), v_layers.end());
    return ls;
  };
  auto stack_u = [&](const std::vector<Rat>& zz) {
    std::vector<std::vector<Rat>> ls = u_layers;
    ls.push_back(zz);
    return ls;
  };

  for (int a = 1; a < M; ++a) {
    std::vector<Rat> zs = z;
    std::swap(zs[static_cast<std::size_t>(a) - 1], zs[static_cast<std::size_t>(a)]);
    std::vector<int> swap_table(static_cast<std::size_t>(M));
    for (int i = 1; i <= M; ++i) swap_table[static_cast<std::size_t>(i) - 1] = i;
    std::swap(swap_table[static_cast<std::size_t>(a) - 1], swap_table[static_cast<std::size_t>(a)]);

    const Rat d = z[static_cast<std::size_t>(a)] - z[static_cast<std::size_t>(a) - 1];
    {
      const Rat lhs = flipped(w_weight(cd.pair.first, stack_v(zs)), spec.inject_sign_flip);
      const Rat rhs =
          rat_div(d, d - 1, "shifted difference") *
              w_weight(mapped_elements(cd.pair.first, swap_table), stack_v(z)) -
          rat_div(Rat(1), d - 1, "shifted difference") * w_weight(cd.pair.first, stack_v(z));
      if (auto out = compare_scalars(lhs, rhs, "first exchange relation, a=" + std::to_string(a));
          !out.pass)
        return out;
    }
    {
      const Rat lhs = flipped(w_tilde_weight(cd.pair.second, stack_u(zs)), spec.inject_sign_flip);
      const Rat rhs =
          rat_div(-d, -d - 1, "shifted difference") *
              w_tilde_weight(mapped_elements(cd.pair.second, swap_table), stack_u(z)) -
          rat_div(Rat(1), -d - 1, "shifted difference") * w_tilde_weight(cd.pair.second, stack_u(z));
      if (auto out = compare_scalars(lhs, rhs, "second exchange relation, a=" + std::to_string(a));
          !out.pass)
        return out;
    }
  }
  return {};
}

Outcome trial_sym_factorization(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment&) {
  Rng rng(trial_seed);
  const int l = 1 + static_cast<int>(rng.below(3));
  const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(l)));
  const auto point = separated_values(rng, l);

  // F: dense quadratic in x_1..x_k; G: product of symmetric pieces of the
  // two groups, so it is symmetric inside each group but not across
  std::vector<Rat> fc;
  for (int i = 0; i < 1 + k + k * k; ++i) fc.push_back(rat_int(rng.in_range(-9, 9)));
  auto F = [&](const std::vector<Rat>& xs) -> Rat {
    Rat s = fc[0];
    for (int i = 0; i < k; ++i) s += fc[static_cast<std::size_t>(1 + i)] * xs[static_cast<std::size_t>(i)];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        s += fc[static_cast<std::size_t>(1 + k + i * k + j)] * xs[static_cast<std::size_t>(i)] *
             xs[static_cast<std::size_t>(j)];
    return s;
  };
  const Rat g1 = rat_int(rng.in_range(-9, 9)), g2 = rat_int(rng.in_range(-9, 9));
  const Rat g3 = rat_int(rng.in_range(-9, 9)), g4 = rat_int(rng.in_range(-9, 9));
  auto G = [&](const std::vector<Rat>& xs) -> Rat {
    Rat e1(0), p1(1), e2(0), p2(1);
    for (int i = 0; i < k; ++i) {
      e1 += xs[static_cast<std::size_t>(i)];
      p1 *= xs[static_cast<std::size_t>(i)];
    }
    for (int i = k; i < l; ++i) {
      e2 += xs[static_cast<std::size_t>(i)];
      p2 *= xs[static_cast<std::size_t>(i)];
    }
    return (g1 + g2 * e1 + p1) * (g3 + g4 * e2 * e2 + p2);
  };

  std::vector<int> all(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<int> first(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) first[static_cast<std::size_t>(i)] = i;

  const Rat lhs = flipped(
      symmetrize([&](const std::vector<Rat>& xs) -> Rat { return F(xs) * G(xs); }, {all}, point),
      spec.inject_sign_flip);
  const Rat rhs = symmetrize(
                      [&](const std::vector<Rat>& xs) -> Rat {
                        return symmetrize(F, {first}, xs) * G(xs);
                      },
                      {all}, point) /
                  factorial(k);
  return compare_scalars(lhs, rhs, "orbit-sum factorization, k=" + std::to_string(k) +
                                       ", l=" + std::to_string(l));
}

Outcome trial_ulem(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment& va) {
  Shape shape;
  shape.xi = spec.xi;
  va = sampled_point(spec, shape, trial_seed);
  Rng rng(trial_seed ^ 0x77138ca9ULL);
  const CutData cd = sampled_cut_data(spec, shape, rng);
  const int m = *spec.m;
  const int n = spec.n;
  const std::vector<Rat> lam = va.lambda;
  const std::vector<Rat>& tm = va.t[static_cast<std::size_t>(m) - 1];

  std::vector<std::vector<Rat>> tail_blocks, head_blocks;
  for (int b = m + 1; b <= n - 1; ++b) tail_blocks.push_back(va.t[static_cast<std::size_t>(b) - 1]);
  for (int a = 1; a <= m - 1; ++a) head_blocks.push_back(va.t[static_cast<std::size_t>(a) - 1]);

  // random placeholder symmetric in the kept slice and in the rest of each
  // block, standing in for the operator part
  std::vector<Rat> gc;
  for (int i = 0; i < 4 * std::max<int>(1, n); ++i) gc.push_back(rat_int(rng.in_range(-9, 9)));
  auto placeholder = [&](const std::vector<std::vector<Rat>>& blocks,
                         const std::vector<int>& head_counts, bool head_first) {
    Rat val(1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const int keep = head_first ? head_counts[b]
                                  : static_cast<int>(blocks[b].size()) - head_counts[b];
      Rat e1(0), e2(0);
      for (int i = 0; i < static_cast<int>(blocks[b].size()); ++i) {
        if (i < keep)
          e1 += blocks[b][static_cast<std::size_t>(i)];
        else
          e2 += blocks[b][static_cast<std::size_t>(i)];
      }
      val *= gc[4 * b] + gc[4 * b + 1] * e1 + gc[4 * b + 2] * e2 + gc[4 * b + 3] * e1 * e2;
    }
    return val;
  };

  // first equality: tail side
  {
    Rat lhs(0), rhs(0);
    for_each_block_permutation(tail_blocks, [&](const std::vector<std::vector<Rat>>& perm) {
      const Rat common = l_scalar(perm, cd.q.eta, va.x, lam, m) *
                         placeholder(perm, cd.q.eta, /*head_first=*/true);
      std::vector<std::vector<Rat>> layers;
      layers.push_back(tm);
      for (const auto& col : take_head(perm, cd.q.eta)) layers.push_back(col);
      lhs += u_weight(cd.pair.first, layers) * common;
      rhs += w_weight(cd.pair.first, layers) * common;
    });
    for (int e : cd.q.eta) rhs /= factorial(e);
    if (auto out = compare_scalars(flipped(lhs, spec.inject_sign_flip), rhs,
                                   "tail-side rescaling, q=" + cd.q.str());
        !out.pass)
      return out;
  }
  // second equality: head side, cut block reversed
  {
    Rat lhs(0), rhs(0);
    for_each_block_permutation(head_blocks, [&](const std::vector<std::vector<Rat>>& perm) {
      const Rat common = l_tilde_scalar(perm, cd.q.zeta, va.x, lam) *
                         placeholder(perm, cd.q.zeta, /*head_first=*/false);
      std::vector<std::vector<Rat>> layers = take_tail(perm, cd.q.zeta);
      layers.push_back(reversed(tm));
      lhs += u_tilde_weight(cd.pair.second, layers) * common;
      rhs += w_tilde_weight(cd.pair.second, layers) * common;
    });
    for (int z : cd.q.zeta) rhs /= factorial(z);
    if (auto out = compare_scalars(flipped(lhs, spec.inject_sign_flip), rhs,
                                   "head-side rescaling, q=" + cd.q.str());
        !out.pass)
      return out;
  }
  return {};
}

Outcome trial_wstat(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment&) {
  Shape shape;
  shape.xi = spec.xi;
  Rng rng(trial_seed);
  const CutData cd = sampled_cut_data(spec, shape, rng);
  const int M = cd.q.total;
  int vcount = 0, ucount = 0;
  for (int e : cd.q.eta) vcount += e;
  for (int z : cd.q.zeta) ucount += z;
  const auto flat = separated_values(rng, vcount + ucount + M);
  std::vector<std::vector<Rat>> v_layers, u_layers;
  std::size_t posn = 0;
  for (int e : cd.q.eta) {
    v_layers.push_back({flat.begin() + static_cast<long>(posn), flat.begin() + static_cast<long>(posn) + e});
    posn += static_cast<std::size_t>(e);
  }
  for (int z : cd.q.zeta) {
    u_layers.push_back({flat.begin() + static_cast<long>(posn), flat.begin() + static_cast<long>(posn) + z});
    posn += static_cast<std::size_t>(z);
  }
  const std::vector<Rat> z(flat.begin() + static_cast<long>(posn), flat.end());

  auto stack_v = [&](const std::vector<Rat>& zz) {
    std::vector<std::vector<Rat>> ls;
    ls.push_back(zz);
    ls.insert(ls.end(), v_layers.begin(), v_layers.end());
    return ls;
  };
  auto stack_u = [&](const std::vector<Rat>& zz) {
    std::vector<std::vector<Rat>> ls = u_layers;
    ls.push_back(zz);
    return ls;
  };

  Rat lhs(0);
  for (const auto& perm : permutations(M)) {
    std::vector<int> table(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) table[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i)] + 1;
    lhs += w_weight(mapped_elements(cd.pair.first, table), stack_v(z)) *
           w_tilde_weight(mapped_elements(cd.pair.second, table), stack_u(z));
  }

  const PartitionTuple rev_I = reversed_elements(cd.pair.first, M);
  Rat rhs(0);
  for (const auto& perm : permutations(M)) {
    std::vector<Rat> zp;
    for (int p : perm) zp.push_back(z[static_cast<std::size_t>(p)]);
    rhs += w_weight(rev_I, stack_v(zp)) * w_tilde_weight(cd.pair.second, stack_u(reversed(zp))) *
           phi_product(zp);
  }
  return compare_scalars(flipped(lhs, spec.inject_sign_flip), rhs,
                         "permutation-sum identity, q=" + cd.q.str());
}

Outcome trial_formula_vs_direct(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment& va,
                                const std::string& which) {
  Shape shape;
  shape.xi = spec.xi;
  va = sampled_point(spec, shape, trial_seed);
  const EvalModule mod = make_module(spec, va);
  const ModuleVector direct = bethe_direct(mod, shape, va);
  const SubBethe top = top_problem(spec.n, shape, va);
  NestedOptions opt;

  ModuleVector rhs;
  if (which == "splitting")
    rhs = splitting_rhs(mod, top, *spec.m, ModuleVector::vacuum());
  else if (which == "uprop")
    rhs = intermediate_rhs(mod, top, *spec.m, ModuleVector::vacuum(), opt);
  else
    rhs = main_formula_rhs(mod, top, *spec.m, ModuleVector::vacuum(), opt);
  return compare_vectors(flipped(rhs, spec.inject_sign_flip), direct,
                         which + " vs direct evaluation, m=" + std::to_string(*spec.m));
}

Outcome trial_m_independence(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment& va) {
  Shape shape;
  shape.xi = spec.xi;
  va = sampled_point(spec, shape, trial_seed);
  const EvalModule mod = make_module(spec, va);
  const SubBethe top = top_problem(spec.n, shape, va);
  NestedOptions opt;
  ModuleVector first;
  for (int m = 1; m <= spec.n - 1; ++m) {
    ModuleVector cur = main_formula_rhs(mod, top, m, ModuleVector::vacuum(), opt);
    if (m == 1) {
      first = flipped(cur, spec.inject_sign_flip);
      continue;
    }
    if (auto out = compare_vectors(first, cur, "cut m=1 vs m=" + std::to_string(m)); !out.pass)
      return out;
  }
  return {};
}

Outcome trial_xi_m_zero(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment& va) {
  Shape shape;
  shape.xi = spec.xi;
  if (shape.at(*spec.m) != 0)
    throw InvalidConfigError("this check needs an empty cut block");
  va = sampled_point(spec, shape, trial_seed);
  const EvalModule mod = make_module(spec, va);
  const SubBethe top = top_problem(spec.n, shape, va);
  NestedOptions opt;
  const ModuleVector direct = bethe_direct(mod, shape, va);
  const ModuleVector product = factorized_rhs(mod, top, *spec.m, ModuleVector::vacuum(), opt);
  const ModuleVector formula = main_formula_rhs(mod, top, *spec.m, ModuleVector::vacuum(), opt);
  if (auto out = compare_vectors(flipped(product, spec.inject_sign_flip), direct,
                                 "product form vs direct");
      !out.pass)
    return out;
  return compare_vectors(flipped(formula, spec.inject_sign_flip), product,
                         "formula vs product form");
}

Outcome trial_order_probe(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment& va) {
  Shape shape;
  shape.xi = spec.xi;
  va = sampled_point(spec, shape, trial_seed);
  const EvalModule mod = make_module(spec, va);
  const SubBethe top = top_problem(spec.n, shape, va);
  NestedOptions head_last, head_first;
  head_first.phi_after_psi = false;
  const ModuleVector a = main_formula_rhs(mod, top, *spec.m, ModuleVector::vacuum(), head_last);
  const ModuleVector b = main_formula_rhs(mod, top, *spec.m, ModuleVector::vacuum(), head_first);
  return compare_vectors(flipped(a, spec.inject_sign_flip), b,
                         "embedded factors applied in both orders");
}

Outcome trial_weight_invariant(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment& va) {
  Shape shape;
  shape.xi = spec.xi;
  va = sampled_point(spec, shape, trial_seed);
  const EvalModule mod = make_module(spec, va);
  const ModuleVector b = bethe_direct(mod, shape, va);
  Outcome out;
  if (b.is_zero()) return out;  // nothing to measure
  GlWeight expect;
  expect.entries = va.lambda;
  for (int a = 1; a <= spec.n - 1; ++a) {
    expect.entries[static_cast<std::size_t>(a)] += shape.at(a);
    expect.entries[static_cast<std::size_t>(a) - 1] -= shape.at(a);
  }
  try {
    const GlWeight got = mod.verma.weight_of(b);
    const bool ok = (got == expect) != spec.inject_sign_flip;
    if (!ok) {
      out.pass = false;
      out.lhs = got.str();
      out.rhs = expect.str();
      out.note = "weight of the result vs the shape-shifted weight";
    }
  } catch (const MixedWeightError& e) {
    out.pass = false;
    out.note = e.what();
  }
  return out;
}

Outcome trial_block_symmetry(const CheckSpec& spec, std::uint64_t trial_seed, VarAssignment& va) {
  Shape shape;
  shape.xi = spec.xi;
  va = sampled_point(spec, shape, trial_seed);
  Rng rng(trial_seed ^ 0x2545f491ULL);
  const EvalModule mod = make_module(spec, va);
  const ModuleVector base = bethe_direct(mod, shape, va);
  for (int a = 1; a <= spec.n - 1; ++a) {
    if (shape.at(a) < 2) continue;
    const auto perms = permutations(shape.at(a));
    const auto& perm = perms[1 + rng.below(perms.size() - 1)];  // nontrivial
    VarAssignment vb = va;
    vb.t[static_cast<std::size_t>(a) - 1] = permuted(va.t[static_cast<std::size_t>(a) - 1], perm);
    const ModuleVector moved = bethe_direct(mod, shape, vb);
    if (auto out = compare_vectors(flipped(base, spec.inject_sign_flip), moved,
                                   "block " + std::to_string(a) + " permuted");
        !out.pass)
      return out;
  }
  if (spec.inject_sign_flip) {
    Outcome out;
    out.pass = false;
    out.note = "sign flip injected";
    return out;
  }
  return {};
}

// ---- dispatch --------------------------------------------------------------

struct CheckInfo {
  bool needs_m;
  bool needs_shape;
  TrialFn fn;
};

const std::map<std::string, CheckInfo>& check_table() {
  static const std::map<std::string, CheckInfo> table = {
      {"yang-baxter", {false, false, trial_yang_baxter}},
      {"rtt", {false, false, trial_rtt}},
      {"exchange-wcor", {true, true, trial_exchange_wcor}},
      {"sym-factorization", {false, false, trial_sym_factorization}},
      {"ulem", {true, true, trial_ulem}},
      {"wstat", {true, true, trial_wstat}},
      {"splitting",
       {true, true,
        [](const CheckSpec& s, std::uint64_t ts, VarAssignment& va) {
          return trial_formula_vs_direct(s, ts, va, "splitting");
        }}},
      {"uprop",
       {true, true,
        [](const CheckSpec& s, std::uint64_t ts, VarAssignment& va) {
          return trial_formula_vs_direct(s, ts, va, "uprop");
        }}},
      {"mainth",
       {true, true,
        [](const CheckSpec& s, std::uint64_t ts, VarAssignment& va) {
          return trial_formula_vs_direct(s, ts, va, "mainth");
        }}},
      {"m-independence", {false, true, trial_m_independence}},
      {"xi-m-zero", {true, true, trial_xi_m_zero}},
      {"order-probe", {true, true, trial_order_probe}},
      {"weight-invariant", {false, true, trial_weight_invariant}},
      {"block-symmetry", {false, true, trial_block_symmetry}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, info] : check_table()) v.push_back(name);
    return v;
  }();
  return names;
}

namespace {

Json materialized_config(const CheckSpec& spec) {
  Json c;
  c["check"] = spec.check;
  c["n"] = spec.n;
  if (spec.m) c["m"] = *spec.m;
  c["xi"] = spec.xi;
  if (spec.lambda) {
    std::vector<std::string> ls;
    for (const auto& r : *spec.lambda) ls.push_back(rat_str(r));
    c["lambda"] = ls;
  } else {
    c["lambda"] = "random";
  }
  c["x"] = spec.x ? Json(rat_str(*spec.x)) : Json("random");
  c["trials"] = spec.trials;
  c["seed"] = spec.seed;
  c["budget"] = spec.budget;
  if (spec.inject_sign_flip) c["inject_sign_flip"] = true;
  return c;
}

void validate_spec(const CheckSpec& spec, const CheckInfo& info) {
  if (spec.n < 2) throw InvalidConfigError("need n >= 2");
  if (spec.trials < 0) throw InvalidConfigError("negative trial count");
  if (info.needs_shape || !spec.xi.empty()) {
    if (static_cast<int>(spec.xi.size()) != spec.n - 1)
      throw InvalidConfigError("xi must have n-1 entries");
    for (int v : spec.xi)
      if (v < 0) throw InvalidConfigError("negative entry in xi");
  }
  if (info.needs_m) {
    if (!spec.m) throw InvalidConfigError("check '" + spec.check + "' needs m");
    if (*spec.m < 1 || *spec.m >= spec.n) throw InvalidConfigError("m must satisfy 1 <= m < n");
  } else if (spec.m && (*spec.m < 1 || *spec.m >= spec.n)) {
    throw InvalidConfigError("m must satisfy 1 <= m < n");
  }
  if (spec.lambda && static_cast<int>(spec.lambda->size()) != spec.n)
    throw InvalidConfigError("lambda must have n entries");
}

}  // namespace

CheckReport run_check(const CheckSpec& spec) {
  const auto& table = check_table();
  auto it = table.find(spec.check);
  if (it == table.end()) throw InvalidConfigError("unknown check '" + spec.check + "'");
  const CheckInfo& info = it->second;
  validate_spec(spec, info);
  if (info.needs_shape) {
    Shape shape;
    shape.xi = spec.xi;
    enforce_budget(spec, shape, info.needs_m);
  }

  CheckReport report;
  report.config = materialized_config(spec);
  for (int trial = 0; trial < spec.trials; ++trial) {
    const std::uint64_t trial_seed = derived_rng(spec.seed, static_cast<std::uint64_t>(trial)).next();
    TrialRecord rec;
    rec.index = trial;
    VarAssignment va;
    try {
      const Outcome out = info.fn(spec, trial_seed, va);
      rec.pass = out.pass;
      rec.monomial = out.monomial;
      rec.lhs = out.lhs;
      rec.rhs = out.rhs;
      rec.note = out.note;
    } catch (const PoleError& e) {
      rec.pass = false;
      rec.note = e.what();
    }
    const std::string pt = point_string(va);
    rec.digest = hex64(fnv1a(std::to_string(trial_seed) + "|" + pt));
    if (!rec.pass) rec.point = pt;
    report.trials.push_back(std::move(rec));
    if (report.trials.back().pass)
      ++report.passed;
    else
      ++report.failed;
  }
  return report;
}

Json CheckReport::to_json() const {
  Json j;
  j["config"] = config;
  Json ts = Json::array();
  for (const auto& t : trials) {
    Json tj;
    tj["trial"] = t.index;
    tj["digest"] = t.digest;
    tj["pass"] = t.pass;
    if (!t.pass) {
      if (!t.monomial.empty()) {
        tj["monomial"] = t.monomial;
        tj["lhs"] = t.lhs;
        tj["rhs"] = t.rhs;
      }
      if (!t.note.empty()) tj["note"] = t.note;
      if (!t.point.empty()) tj["point"] = t.point;
    }
    ts.push_back(tj);
  }
  j["trials"] = ts;
  j["summary"] = Json{{"total", trials.size()}, {"passed", passed}, {"failed", failed}};
  return j;
}

bool SweepReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.all_passed()) return false;
  return true;
}

Json SweepReport::to_json() const {
  Json j;
  j["config"] = config;
  Json cs = Json::array();
  int passed = 0, failed = 0, trials = 0;
  for (const auto& c : checks) {
    cs.push_back(c.to_json());
    passed += c.passed;
    failed += c.failed;
    trials += static_cast<int>(c.trials.size());
  }
  j["checks"] = cs;
  j["summary"] = Json{{"checks", checks.size()},
                      {"trials", trials},
                      {"passed", passed},
                      {"failed", failed},
                      {"all_passed", failed == 0}};
  return j;
}

namespace {

std::vector<Rat> parse_rat_list(const Json& j) {
  std::vector<Rat> out;
  for (const auto& v : j) {
    if (v.is_string())
      out.push_back(rat_parse(v.get<std::string>()));
    else if (v.is_number_integer())
      out.push_back(Rat(v.get<long>()));
    else
      throw InvalidConfigError("rationals must be strings like \"3/4\" or integers");
  }
  return out;
}

}  // namespace

CheckSpec check_spec_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidConfigError("check spec must be an object");
  CheckSpec spec;
  for (const auto& [key, value] : j.items()) {
    if (key == "check")
      spec.check = value.get<std::string>();
    else if (key == "n")
      spec.n = value.get<int>();
    else if (key == "m")
      spec.m = value.get<int>();
    else if (key == "xi")
      spec.xi = value.get<std::vector<int>>();
    else if (key == "lambda")
      spec.lambda = parse_rat_list(value);
    else if (key == "x")
      spec.x = value.is_string() ? rat_parse(value.get<std::string>()) : Rat(value.get<long>());
    else if (key == "trials")
      spec.trials = value.get<int>();
    else if (key == "seed")
      spec.seed = value.get<std::uint64_t>();
    else if (key == "budget")
      spec.budget = value.get<long long>();
    else if (key == "max_sites")
      spec.max_sites = value.get<int>();
    else if (key == "max_cut")
      spec.max_cut = value.get<int>();
    else if (key == "inject_sign_flip")
      spec.inject_sign_flip = value.get<bool>();
    else
      throw InvalidConfigError("unknown field '" + key + "' in check spec");
  }
  if (spec.check.empty()) throw InvalidConfigError("missing 'check' name");
  return spec;
}

SweepConfig sweep_config_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidConfigError("sweep config must be an object");
  SweepConfig cfg;
  if (!j.contains("checks") || !j["checks"].is_array())
    throw InvalidConfigError("sweep config needs a 'checks' array");
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
  if (j.contains("fail_fast")) cfg.fail_fast = j["fail_fast"].get<bool>();
  if (j.contains("budget")) cfg.budget = j["budget"].get<long long>();
  std::size_t index = 0;
  for (const auto& cj : j["checks"]) {
    CheckSpec spec = check_spec_from_json(cj);
    if (!cj.contains("seed")) spec.seed = derived_rng(cfg.seed, index).next();
    if (!cj.contains("trials")) spec.trials = cfg.trials;
    if (!cj.contains("budget")) spec.budget = cfg.budget;
    cfg.checks.push_back(std::move(spec));
    ++index;
  }
  return cfg;
}

SweepReport run_sweep(const SweepConfig& config) {
  SweepReport report;
  Json cj;
  cj["seed"] = config.seed;
  cj["trials"] = config.trials;
  cj["fail_fast"] = config.fail_fast;
  cj["budget"] = config.budget;
  cj["checks"] = static_cast<int>(config.checks.size());
  report.config = cj;
  for (const auto& spec : config.checks) {
    report.checks.push_back(run_check(spec));
    if (config.fail_fast && !report.checks.back().all_passed()) break;
  }
  return report;
}

}  // namespace nbv
