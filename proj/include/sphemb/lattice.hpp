#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphemb/errors.hpp"

namespace sphemb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over a commutative ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw UsageError("matrix entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw UsageError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const T> entries() const { return entries_; }

  std::vector<T> row(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& x);
RationalMatrix to_rational(const IntegerMatrix& a);

/// U * A * V == D with U, V unimodular and D in Smith normal form.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix V;
  IntegerMatrix D;

  std::size_t rank() const;
  /// Diagonal entries d_1 | d_2 | ... (length min(rows, cols)).
  IntegerVector diagonal() const;
};

/// Z^free_rank (+) Z/f_1 (+) ... (+) Z/f_k with f_i | f_{i+1}, every f_i >= 2.
struct AbelianGroupPresentation {
  std::size_t free_rank = 0;
  IntegerVector invariant_factors;

  bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroupPresentation&, const AbelianGroupPresentation&) = default;
};

/// Smallest-absolute-value pivoting; deterministic for a fixed input.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Z^cols / rowspan(relations).
AbelianGroupPresentation cokernel(const IntegerMatrix& relations);
AbelianGroupPresentation cokernel(const SmithDecomposition& snf);

/// Outcome of solving A x = b over the integers.
struct IntegerSolution {
  std::optional<IntegerVector> x;
  // When x is empty: index into the SNF diagonal where the obstruction sits,
  // i.e. d_i does not divide (U b)_i, or (U b)_i != 0 beyond the rank.
  std::optional<std::size_t> obstruction;
};

IntegerSolution solve_integer(const IntegerMatrix& a, const IntegerVector& b);
IntegerSolution solve_integer(const IntegerMatrix& a, const SmithDecomposition& snf,
                              const IntegerVector& b);

Integer determinant(const IntegerMatrix& a);
std::size_t rank(const RationalMatrix& a);
std::size_t rank(const IntegerMatrix& a);

/// Rational reduced to lowest terms with positive denominator.
Rational canonical(Rational q);
bool is_integral(const Rational& q);
Integer to_integer(const Rational& q);  // throws DomainError unless integral

std::string to_string(const Rational& q);  // "p" or "p/q"
Rational parse_rational(const std::string& text);

}  // namespace sphemb
