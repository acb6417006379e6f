#include "nonsos/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace nonsos {

std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<Rat> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat s;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

namespace {

// Clears denominators row by row so the Bareiss recurrence stays integral.
void integerize_rows(RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).den());
    if (l == 1) continue;
    Rat f((l));
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= f;
  }
}

struct Echelon {
  RatMatrix m;
  std::vector<std::size_t> pivot_cols;  // pivot of row r is at pivot_cols[r]
};

// Fraction-free (Bareiss) forward elimination. Pivot choice: first row with a
// nonzero entry in the leftmost unresolved column.
Echelon bareiss_echelon(RatMatrix work) {
  integerize_rows(work);
  const std::size_t nr = work.rows(), nc = work.cols();
  std::vector<std::size_t> pivots;
  Rat prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && work(p, c).is_zero()) ++p;
    if (p == nr) continue;
    if (p != r)
      for (std::size_t j = 0; j < nc; ++j) std::swap(work(r, j), work(p, j));
    const Rat piv = work(r, c);
    for (std::size_t i = r + 1; i < nr; ++i) {
      const Rat f = work(i, c);
      for (std::size_t j = c; j < nc; ++j) work(i, j) = (piv * work(i, j) - f * work(r, j)) / prev;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return {std::move(work), std::move(pivots)};
}

// Normalizes an echelon form to the reduced one: unit pivots, zeros above.
void reduce_echelon(Echelon& e) {
  const std::size_t nc = e.m.cols();
  for (std::size_t ri = e.pivot_cols.size(); ri-- > 0;) {
    const std::size_t pc = e.pivot_cols[ri];
    const Rat inv = e.m(ri, pc).inverse();
    for (std::size_t j = pc; j < nc; ++j) e.m(ri, j) *= inv;
    for (std::size_t i = 0; i < ri; ++i) {
      const Rat f = e.m(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < nc; ++j) e.m(i, j) -= f * e.m(ri, j);
    }
  }
}

}  // namespace

NullspaceResult nullspace(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("nullspace: empty matrix");
  Echelon e = bareiss_echelon(m);
  reduce_echelon(e);
  const std::size_t nc = m.cols();
  NullspaceResult res;
  res.rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t pc : e.pivot_cols) is_pivot[pc] = true;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(nc);
    v[f] = Rat(1);
    for (std::size_t ri = 0; ri < e.pivot_cols.size(); ++ri) v[e.pivot_cols[ri]] = -e.m(ri, f);
    res.basis.push_back(std::move(v));
  }
  return res;
}

std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_echelon(m).pivot_cols.size();
}

Rat det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  // Plain fraction-preserving elimination with row swaps.
  RatMatrix w = m;
  Rat d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w(p, c).is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(c, j), w(p, j));
      d = -d;
    }
    d *= w(c, c);
    const Rat inv = w(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rat f = w(i, c) * inv;
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < n; ++j) w(i, j) -= f * w(c, j);
    }
  }
  return d;
}

PsdReport psd_rank(const RatMatrix& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("psd_rank: matrix not symmetric");
  const std::size_t n = g.rows();
  RatMatrix w = g;
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), std::size_t(0));
  std::size_t pivots = 0;
  while (!active.empty()) {
    // First positive diagonal entry in the active block.
    std::size_t chosen = active.size();
    for (std::size_t t = 0; t < active.size(); ++t) {
      if (w(active[t], active[t]).sign() > 0) {
        chosen = t;
        break;
      }
    }
    if (chosen == active.size()) {
      // No positive pivot left: PSD iff the active block is identically zero.
      for (std::size_t a : active)
        for (std::size_t b : active)
          if (!w(a, b).is_zero()) return {false, rank(g)};
      return {true, pivots};
    }
    const std::size_t p = active[chosen];
    const Rat inv = w(p, p).inverse();
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(chosen));
    for (std::size_t a : active) {
      const Rat f = w(a, p) * inv;
      if (f.is_zero()) continue;
      for (std::size_t b : active) w(a, b) -= f * w(p, b);
    }
    ++pivots;
  }
  return {true, pivots};
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t(0));
  while (true) {
    if (!fn(idx)) return;
    bool advanced = false;
    for (std::size_t i = k; i-- > 0;) {
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

SubmatrixRanks rank_of_submatrices(const RatMatrix& m, std::size_t subset_size) {
  if (subset_size == 0 || subset_size > m.rows())
    throw std::invalid_argument("rank_of_submatrices: bad subset size");
  SubmatrixRanks out{0, m.cols() + 1};
  for_each_subset(m.rows(), subset_size, [&](const std::vector<std::size_t>& idx) {
    RatMatrix sub(subset_size, m.cols());
    for (std::size_t i = 0; i < subset_size; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) sub(i, j) = m(idx[i], j);
    const std::size_t r = rank(sub);
    out.max_rank = std::max(out.max_rank, r);
    out.min_rank = std::min(out.min_rank, r);
    return true;
  });
  return out;
}

}  // namespace nonsos
