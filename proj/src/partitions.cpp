#include "nbv/partitions.hpp"

#include <algorithm>
#include <functional>

#include "nbv/errors.hpp"

namespace nbv {

int PartitionTuple::size() const {
  int s = 0;
  for (const auto& p : parts) s += static_cast<int>(p.size());
  return s;
}

std::string PartitionTuple::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += ",";
    s += "{";
    for (std::size_t i = 0; i < parts[k].size(); ++i) {
      if (i) s += " ";
      s += std::to_string(parts[k][i]);
    }
    s += "}";
  }
  return s + ")";
}

PartitionTuple partition_from_seq(const std::vector<int>& seq, int lo, int hi) {
  PartitionTuple p;
  p.lo = lo;
  p.hi = hi;
  p.parts.assign(static_cast<std::size_t>(hi - lo + 1), {});
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (seq[j] < lo || seq[j] > hi)
      throw InvalidConfigError("sequence value outside the label range");
    p.parts[static_cast<std::size_t>(seq[j] - lo)].push_back(static_cast<int>(j) + 1);
  }
  return p;
}

std::vector<int> seq_from_partition(const PartitionTuple& p, int size) {
  std::vector<int> seq(static_cast<std::size_t>(size), 0);
  for (int label = p.lo; label <= p.hi; ++label)
    for (int e : p.part(label)) {
      if (e < 1 || e > size) throw InvalidConfigError("partition element outside 1..size");
      seq[static_cast<std::size_t>(e) - 1] = label;
    }
  for (int v : seq)
    if (v == 0) throw InvalidConfigError("partition does not cover the ground set");
  return seq;
}

PartitionTuple reversed_elements(const PartitionTuple& p, int size) {
  PartitionTuple out = p;
  for (auto& part : out.parts) {
    for (int& e : part) e = size + 1 - e;
    std::sort(part.begin(), part.end());
  }
  return out;
}

PartitionTuple mapped_elements(const PartitionTuple& p, const std::vector<int>& sigma) {
  PartitionTuple out = p;
  for (auto& part : out.parts) {
    for (int& e : part) e = sigma.at(static_cast<std::size_t>(e) - 1);
    std::sort(part.begin(), part.end());
  }
  return out;
}

std::string QMatrix::str() const {
  std::string s = "[";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (r) s += ";";
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      if (c) s += " ";
      s += std::to_string(cells[r][c]);
    }
  }
  return s + "]";
}

namespace {

void fill_tail_sums(QMatrix& q) {
  q.eta.assign(static_cast<std::size_t>(std::max(q.n - q.m - 1, 0)), 0);
  q.zeta.assign(static_cast<std::size_t>(std::max(q.m - 1, 0)), 0);
  for (int k = q.m + 1; k <= q.n - 1; ++k) {
    int s = 0;
    for (int row = k + 1; row <= q.n; ++row)
      for (int p = 1; p <= q.m; ++p) s += q.q(row, p);
    q.eta[static_cast<std::size_t>(k - q.m - 1)] = s;
  }
  for (int l = 1; l <= q.m - 1; ++l) {
    int s = 0;
    for (int row = q.m + 1; row <= q.n; ++row)
      for (int p = 1; p <= l; ++p) s += q.q(row, p);
    q.zeta[static_cast<std::size_t>(l - 1)] = s;
  }
}

}  // namespace

std::vector<QMatrix> enumerate_q_set(int n, int m, const Shape& shape) {
  if (m < 1 || m >= n) throw InvalidConfigError("cut must satisfy 1 <= m < n");
  if (shape.rank() != n) throw InvalidConfigError("shape length must be n-1");
  const int total = shape.at(m);
  const int rows = n - m, colsn = m;
  std::vector<int> flat(static_cast<std::size_t>(rows * colsn), 0);
  std::vector<QMatrix> out;

  std::function<void(int, int)> rec = [&](int cell, int remaining) {
    if (cell == rows * colsn) {
      if (remaining != 0) return;
      QMatrix q;
      q.n = n;
      q.m = m;
      q.total = total;
      q.cells.assign(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(colsn), 0));
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < colsn; ++c)
          q.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
              flat[static_cast<std::size_t>(r * colsn + c)];
      fill_tail_sums(q);
      for (int k = m + 1; k <= n - 1; ++k)
        if (q.eta_at(k) > shape.at(k)) return;
      for (int l = 1; l <= m - 1; ++l)
        if (q.zeta_at(l) > shape.at(l)) return;
      out.push_back(std::move(q));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      flat[static_cast<std::size_t>(cell)] = v;
      rec(cell + 1, remaining - v);
    }
    flat[static_cast<std::size_t>(cell)] = 0;
  };
  rec(0, total);
  return out;
}

PartitionPair canonical_pair(const QMatrix& q) {
  PartitionTuple I, J;
  I.lo = q.m + 1;
  I.hi = q.n;
  I.parts.assign(static_cast<std::size_t>(q.n - q.m), {});
  J.lo = 1;
  J.hi = q.m;
  J.parts.assign(static_cast<std::size_t>(q.m), {});
  int next = 1;
  for (int s = q.m + 1; s <= q.n; ++s)
    for (int p = 1; p <= q.m; ++p)
      for (int k = 0; k < q.q(s, p); ++k) {
        I.parts[static_cast<std::size_t>(s - q.m - 1)].push_back(next);
        J.parts[static_cast<std::size_t>(p - 1)].push_back(next);
        ++next;
      }
  for (auto& part : J.parts) std::sort(part.begin(), part.end());
  return {I, J};
}

std::vector<PartitionPair> enumerate_pairs(const QMatrix& q) {
  // assign each element of {1..total} to a cell (s,p), respecting counts
  const int rows = q.n - q.m, colsn = q.m;
  std::vector<int> room(static_cast<std::size_t>(rows * colsn));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < colsn; ++c)
      room[static_cast<std::size_t>(r * colsn + c)] =
          q.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  std::vector<int> cell_of(static_cast<std::size_t>(q.total), -1);
  std::vector<PartitionPair> out;

  std::function<void(int)> rec = [&](int elem) {
    if (elem == q.total) {
      PartitionTuple I, J;
      I.lo = q.m + 1;
      I.hi = q.n;
      I.parts.assign(static_cast<std::size_t>(rows), {});
      J.lo = 1;
      J.hi = q.m;
      J.parts.assign(static_cast<std::size_t>(colsn), {});
      for (int e = 1; e <= q.total; ++e) {
        const int cell = cell_of[static_cast<std::size_t>(e) - 1];
        I.parts[static_cast<std::size_t>(cell / colsn)].push_back(e);
        J.parts[static_cast<std::size_t>(cell % colsn)].push_back(e);
      }
      out.push_back({std::move(I), std::move(J)});
      return;
    }
    for (int cell = 0; cell < rows * colsn; ++cell) {
      if (room[static_cast<std::size_t>(cell)] == 0) continue;
      --room[static_cast<std::size_t>(cell)];
      cell_of[static_cast<std::size_t>(elem)] = cell;
      rec(elem + 1);
      ++room[static_cast<std::size_t>(cell)];
    }
  };
  rec(0);
  return out;
}

Rat pair_count(const QMatrix& q) {
  Rat c = factorial(q.total);
  for (const auto& row : q.cells)
    for (int v : row) c /= factorial(v);
  return c;
}

}  // namespace nbv
