#include "nbv/symmetrize.hpp"

namespace nbv {

std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> idx(static_cast<std::size_t>(std::max(k, 0)));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

namespace {

std::string perm_str(const std::vector<std::vector<int>>& perms) {
  std::string s = "(";
  for (std::size_t g = 0; g < perms.size(); ++g) {
    if (g) s += "; ";
    for (std::size_t i = 0; i < perms[g].size(); ++i) {
      if (i) s += " ";
      s += std::to_string(perms[g][i] + 1);
    }
  }
  return s + ")";
}

}  // namespace

Rat symmetrize(const std::function<Rat(const std::vector<Rat>&)>& f,
               const std::vector<std::vector<int>>& groups,
               const std::vector<Rat>& point) {
  for (const auto& g : groups)
    for (int pos : g)
      if (pos < 0 || static_cast<std::size_t>(pos) >= point.size())
        throw InvalidConfigError("symmetrize: group position out of range");

  Rat sum = 0;
  std::vector<Rat> work = point;
  std::vector<std::vector<int>> active(groups.size());

  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == groups.size()) {
      try {
        sum += f(work);
      } catch (const PoleError& e) {
        throw PoleError(std::string(e.what()) + " at permutation " + perm_str(active));
      }
      return;
    }
    const auto& positions = groups[g];
    std::vector<Rat> orig;
    orig.reserve(positions.size());
    for (int pos : positions) orig.push_back(point[static_cast<std::size_t>(pos)]);
    for (const auto& perm : permutations(static_cast<int>(positions.size()))) {
      for (std::size_t i = 0; i < positions.size(); ++i)
        work[static_cast<std::size_t>(positions[i])] = orig[static_cast<std::size_t>(perm[i])];
      active[g] = perm;
      rec(g + 1);
    }
    for (std::size_t i = 0; i < positions.size(); ++i)
      work[static_cast<std::size_t>(positions[i])] = orig[i];
  };
  rec(0);
  return sum;
}

}  // namespace nbv
