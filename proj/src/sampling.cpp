#include "nbv/sampling.hpp"

namespace nbv {

Rat random_rational(Rng& rng, const SampleOptions& opt) {
  const long long num = rng.in_range(-opt.num_abs, opt.num_abs);
  const long long den = rng.in_range(1, opt.den_max);
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

VarAssignment sample_assignment(const Shape& shape, std::uint64_t seed,
                                const Predicate& accept,
                                const SampleOptions& opt) {
  shape.validate();
  Rng rng(seed);
  for (int attempt = 0; attempt <= opt.retries; ++attempt) {
    VarAssignment va;
    va.t.resize(static_cast<std::size_t>(shape.rank()) - 1);
    for (int a = 1; a < shape.rank(); ++a) {
      auto& block = va.t[static_cast<std::size_t>(a) - 1];
      block.reserve(static_cast<std::size_t>(shape.at(a)));
      for (int i = 0; i < shape.at(a); ++i) block.push_back(random_rational(rng, opt));
    }
    va.x = random_rational(rng, opt);
    va.lambda.reserve(static_cast<std::size_t>(shape.rank()));
    for (int i = 0; i < shape.rank(); ++i) va.lambda.push_back(random_rational(rng, opt));
    if (!accept || accept(va)) return va;
  }
  throw ResampleExhausted("no admissible point after " +
                          std::to_string(opt.retries + 1) + " draws");
}

Predicate separated_predicate() {
  return [](const VarAssignment& va) {
    std::vector<const Rat*> vals;
    for (const auto& block : va.t)
      for (const auto& r : block) vals.push_back(&r);
    vals.push_back(&va.x);
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = i + 1; j < vals.size(); ++j) {
        const Rat d = *vals[i] - *vals[j];
        if (d == 0 || d == 1 || d == -1) return false;
      }
    return true;
  };
}

}  // namespace nbv
