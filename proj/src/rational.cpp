#include "nbv/rational.hpp"

namespace nbv {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw InvalidConfigError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw InvalidConfigError("bad rational literal: '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw InvalidConfigError("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat factorial(int k) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(k < 0 ? 0 : k));
  return Rat(z);
}

}  // namespace nbv
