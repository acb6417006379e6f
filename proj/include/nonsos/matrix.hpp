#ifndef NONSOS_MATRIX_HPP
#define NONSOS_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "nonsos/rat.hpp"

namespace nonsos {

/// Dense matrix of exact rationals, row major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  std::vector<Rat> row(std::size_t i) const {
    return std::vector<Rat>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v);

struct NullspaceResult {
  std::size_t rank = 0;
  /// Canonical basis: one vector per free column (ascending column index),
  /// entry 1 at its free column, pivot entries taken from the reduced
  /// echelon form, 0 at the other free columns.
  std::vector<std::vector<Rat>> basis;
};

/// Rank and canonical nullspace basis via fraction-free elimination followed
/// by back-substitution to the reduced echelon form.
NullspaceResult nullspace(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

Rat det(const RatMatrix& m);

struct PsdReport {
  bool is_psd = false;
  std::size_t rank = 0;
};

/// Exact PSD decision for a symmetric matrix by LDL^T elimination with
/// positive diagonal pivoting. A symmetric matrix is PSD iff the elimination
/// runs to a zero active block using only positive diagonal pivots. The
/// reported rank is always the matrix rank (equal to the pivot count when
/// PSD). Throws std::invalid_argument on non-symmetric input.
PsdReport psd_rank(const RatMatrix& g);

struct SubmatrixRanks {
  std::size_t max_rank = 0;
  std::size_t min_rank = 0;
};

/// Exact max/min rank over all row subsets of the given size.
/// Requires 1 <= subset_size <= rows.
SubmatrixRanks rank_of_submatrices(const RatMatrix& m, std::size_t subset_size);

/// Visits all size-k subsets of {0..n-1} in lexicographic order until the
/// callback returns false.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn);

}  // namespace nonsos

#endif  // NONSOS_MATRIX_HPP
