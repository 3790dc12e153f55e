#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphemb/lattice.hpp"

namespace sphemb {

/// Laurent polynomial in one variable t with exact rational coefficients.
class Laurent {
 public:
  Laurent() = default;
  Laurent(int c) : Laurent(Rational(c)) {}  // NOLINT: implicit so matrices can use T(0)
  Laurent(const Rational& c);               // NOLINT
  static Laurent monomial(const Rational& c, int exponent);
  static Laurent t(int exponent = 1) { return monomial(1, exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  // Lowest exponent with a nonzero coefficient; empty for the zero polynomial.
  std::optional<int> order() const;
  std::optional<int> degree() const;
  Rational coefficient(int exponent) const;
  Rational constant() const { return coefficient(0); }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  Laurent operator-() const;
  friend bool operator==(const Laurent&, const Laurent&) = default;

  Rational evaluate(const Rational& t) const;  // t != 0 when negative powers occur
  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies t^(low_ + k)
};

using PolyMatrix = Matrix<Laurent>;

PolyMatrix to_poly(const RationalMatrix& m);
/// Substitutes t = 0; throws DomainError if a negative power occurs.
RationalMatrix at_zero(const PolyMatrix& m);
/// Lowest exponent over all entries; empty for the zero matrix.
std::optional<int> min_order(const PolyMatrix& m);
/// Entrywise coefficient of t^exponent.
RationalMatrix coefficient_matrix(const PolyMatrix& m, int exponent);

/// Determinant by expansion over column subsets; any commutative ring.
template <typename T>
T determinant_expansion(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw UsageError("determinant of a non-square matrix");
  if (n == 0) return T(1);
  // dp[mask]: signed sum over bijections from the first popcount(mask) rows
  // onto the columns in mask.
  std::vector<T> dp(std::size_t(1) << n, T(0));
  dp[0] = T(1);
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask] == T(0)) continue;
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    int above = 0;  // columns in mask greater than j give the sign
    for (std::size_t j = n; j-- > 0;) {
      if (mask & (std::size_t(1) << j)) {
        ++above;
        continue;
      }
      if (m(row, j) == T(0)) continue;
      T term = dp[mask] * m(row, j);
      if (above % 2) term = T(0) - term;
      dp[mask | (std::size_t(1) << j)] += term;
    }
  }
  return dp.back();
}

/// Square submatrix on the given rows and columns.
template <typename T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix<T> s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

/// Gauss-Jordan inverse; empty if singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace sphemb
