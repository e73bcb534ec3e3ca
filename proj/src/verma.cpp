#include "nbv/verma.hpp"

#include "nbv/errors.hpp"

namespace nbv {

std::string GlWeight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += rat_str(entries[i]);
  }
  return s + ")";
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [g, e] : factors) d += e;
  return d;
}

std::vector<Gen> Monomial::word() const {
  std::vector<Gen> w;
  w.reserve(static_cast<std::size_t>(degree()));
  for (const auto& [g, e] : factors)
    for (int k = 0; k < e; ++k) w.push_back(g);
  return w;
}

std::string Monomial::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [g, e] : factors) {
    if (!s.empty()) s += ".";
    s += "e" + std::to_string(g.first) + std::to_string(g.second);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Monomial Monomial::from_sorted_word(const std::vector<Gen>& w) {
  Monomial m;
  for (const auto& g : w) {
    if (!m.factors.empty() && m.factors.back().first == g)
      ++m.factors.back().second;
    else
      m.factors.push_back({g, 1});
  }
  return m;
}

namespace {

// Sorting key: lowering generators first, then Cartans, then raising ones,
// and inside each class by descending (i,j). With a word arranged this way
// the raising tail hits the highest weight vector first, the Cartans reduce
// to scalars, and the lowering head is a basis monomial.
int gen_class(const Gen& g) {
  if (g.first > g.second) return 2;
  if (g.first == g.second) return 1;
  return 0;
}

}  // namespace

bool left_of(const Gen& a, const Gen& b) {
  const int ca = gen_class(a), cb = gen_class(b);
  if (ca != cb) return ca > cb;
  return a > b;
}

void ModuleVector::add(const Monomial& m, const Rat& c) {
  if (nbv::is_zero(c)) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (nbv::is_zero(it->second)) terms.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [m, c] : o.terms) add(m, c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rat& c) {
  if (nbv::is_zero(c)) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

std::string ModuleVector::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms) {
    if (!s.empty()) s += " + ";
    s += "(" + rat_str(c) + ")*" + m.str();
  }
  return s;
}

ModuleVector ModuleVector::vacuum() {
  ModuleVector v;
  v.terms.emplace(Monomial{}, Rat(1));
  return v;
}

ModuleVector operator*(const Rat& c, ModuleVector v) {
  v *= c;
  return v;
}

ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
  a += b;
  return a;
}

ModuleVector operator-(ModuleVector a, const ModuleVector& b) {
  a += Rat(-1) * b;
  return a;
}

ModuleVector VermaModule::straighten(const std::vector<Gen>& word) const {
  for (const auto& [i, j] : word)
    if (i < 1 || i > rank() || j < 1 || j > rank())
      throw InvalidConfigError("generator index out of range");

  if (auto it = memo_.find(word); it != memo_.end()) return it->second;

  ModuleVector result;
  bool sorted = true;
  for (std::size_t s = 0; s + 1 < word.size(); ++s) {
    const Gen &f = word[s], &g = word[s + 1];
    if (f != g && !left_of(f, g)) {
      sorted = false;
      // f g = g f + [f, g],  [e_ab, e_cd] = d_bc e_ad - d_da e_cb
      std::vector<Gen> swapped = word;
      std::swap(swapped[s], swapped[s + 1]);
      result = straighten(swapped);
      const auto [a, b] = f;
      const auto [c, d] = g;
      if (b == c) {
        std::vector<Gen> shorter(word.begin(), word.begin() + static_cast<long>(s));
        shorter.push_back({a, d});
        shorter.insert(shorter.end(), word.begin() + static_cast<long>(s) + 2, word.end());
        result += straighten(shorter);
      }
      if (d == a) {
        std::vector<Gen> shorter(word.begin(), word.begin() + static_cast<long>(s));
        shorter.push_back({c, b});
        shorter.insert(shorter.end(), word.begin() + static_cast<long>(s) + 2, word.end());
        result += Rat(-1) * straighten(shorter);
      }
      break;
    }
  }
  if (sorted) {
    // lowering... cartan... raising...; rightmost factor acts first
    Rat scalar(1);
    std::vector<Gen> lowering;
    for (const auto& g : word) {
      switch (gen_class(g)) {
        case 0:
          scalar = 0;  // raising kills the highest weight vector
          break;
        case 1:
          scalar *= lambda_.entries[static_cast<std::size_t>(g.first) - 1];
          break;
        default:
          lowering.push_back(g);
      }
      if (nbv::is_zero(scalar)) break;
    }
    if (!nbv::is_zero(scalar))
      result.add(Monomial::from_sorted_word(lowering), scalar);
  }
  memo_.emplace(word, result);
  return result;
}

ModuleVector VermaModule::act(int i, int j, const ModuleVector& vec) const {
  ModuleVector out;
  for (const auto& [m, c] : vec.terms) {
    std::vector<Gen> word;
    word.reserve(static_cast<std::size_t>(m.degree()) + 1);
    word.push_back({i, j});
    for (const auto& g : m.word()) word.push_back(g);
    out += c * straighten(word);
  }
  return out;
}

ModuleVector VermaModule::apply_word(const std::vector<Gen>& word, const ModuleVector& vec) const {
  ModuleVector cur = vec;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act(it->first, it->second, cur);
  return cur;
}

ModuleVector VermaModule::apply_monomial(const std::map<Gen, int>& exps,
                                         const ModuleVector& vec) const {
  std::vector<Gen> word;
  for (const auto& [g, e] : exps) {
    if (g.first <= g.second) throw InvalidConfigError("apply_monomial wants lowering pairs");
    if (e < 0) throw InvalidConfigError("negative exponent");
    for (int k = 0; k < e; ++k) word.push_back(g);
  }
  return apply_word(word, vec);
}

GlWeight VermaModule::weight_of(const ModuleVector& vec) const {
  if (vec.is_zero()) throw MixedWeightError("weight of the zero vector is undefined");
  bool have = false;
  GlWeight w;
  for (const auto& [m, c] : vec.terms) {
    GlWeight cur = lambda_;
    for (const auto& [g, e] : m.factors) {
      cur.entries[static_cast<std::size_t>(g.first) - 1] += e;
      cur.entries[static_cast<std::size_t>(g.second) - 1] -= e;
    }
    if (!have) {
      w = cur;
      have = true;
    } else if (!(w == cur)) {
      throw MixedWeightError("vector mixes weights " + w.str() + " and " + cur.str());
    }
  }
  return w;
}

}  // namespace nbv
