#include "sphemb/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace sphemb {

IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& x) {
  if (a.cols() != x.size()) throw UsageError("matrix-vector shape mismatch");
  IntegerVector y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

RationalMatrix to_rational(const IntegerMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t k = 0;
  std::size_t n = std::min(D.rows(), D.cols());
  while (k < n && D(k, k) != 0) ++k;
  return k;
}

IntegerVector SmithDecomposition::diagonal() const {
  IntegerVector d;
  std::size_t n = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < n; ++i) d.push_back(D(i, i));
  return d;
}

std::string AbelianGroupPresentation::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const auto& f : invariant_factors) {
    if (!first) out << " + ";
    out << "Z/" << f.get_str();
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

namespace {

// Floor division keeps remainders nonnegative, which makes the reduction
// sequence depend only on the input.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> smallest_nonzero(const IntegerMatrix& d, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Pivot{i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntegerMatrix d = a;
  IntegerMatrix u = IntegerMatrix::identity(m);
  IntegerMatrix v = IntegerMatrix::identity(n);

  auto move_pivot = [&](std::size_t t, Pivot p) {
    d.swap_rows(t, p.row);
    u.swap_rows(t, p.row);
    d.swap_cols(t, p.col);
    v.swap_cols(t, p.col);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto p = smallest_nonzero(d, t);
    if (!p) break;
    move_pivot(t, *p);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = floor_div(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = floor_div(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder is now strictly smaller than the pivot; restart with it.
        std::optional<Pivot> best;
        Integer best_abs;
        for (std::size_t i = t; i < m; ++i) {
          if (d(i, t) != 0 && (!best || abs(d(i, t)) < best_abs)) {
            best = Pivot{i, t};
            best_abs = abs(d(i, t));
          }
        }
        for (std::size_t j = t; j < n; ++j) {
          if (d(t, j) != 0 && (!best || abs(d(t, j)) < best_abs)) {
            best = Pivot{t, j};
            best_abs = abs(d(t, j));
          }
        }
        move_pivot(t, *best);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      d.add_row(t, *bad_row, 1);
      u.add_row(t, *bad_row, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(v), std::move(d)};
}

AbelianGroupPresentation cokernel(const SmithDecomposition& snf) {
  AbelianGroupPresentation g;
  std::size_t r = snf.rank();
  g.free_rank = snf.D.cols() - r;
  for (std::size_t i = 0; i < r; ++i)
    if (snf.D(i, i) > 1) g.invariant_factors.push_back(snf.D(i, i));
  return g;
}

AbelianGroupPresentation cokernel(const IntegerMatrix& relations) {
  return cokernel(smith_normal_form(relations));
}

IntegerSolution solve_integer(const IntegerMatrix& a, const SmithDecomposition& snf,
                              const IntegerVector& b) {
  if (b.size() != a.rows()) throw UsageError("right-hand side length does not match row count");
  // D y = U b, x = V y
  IntegerVector c = snf.U * b;
  std::size_t r = snf.rank();
  IntegerVector y(a.cols(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (c[i] % snf.D(i, i) != 0) return {std::nullopt, i};
      y[i] = c[i] / snf.D(i, i);
    } else if (c[i] != 0) {
      return {std::nullopt, i};
    }
  }
  return {snf.V * y, std::nullopt};
}

IntegerSolution solve_integer(const IntegerMatrix& a, const IntegerVector& b) {
  if (b.size() != a.rows()) throw UsageError("right-hand side length does not match row count");
  return solve_integer(a, smith_normal_form(a), b);
}

Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntegerMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      m.add_row(i, r, -f);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntegerMatrix& a) { return rank(to_rational(a)); }

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

bool is_integral(const Rational& q) { return canonical(q).get_den() == 1; }

Integer to_integer(const Rational& q) {
  Rational c = canonical(q);
  if (c.get_den() != 1) throw DomainError("expected an integer, got " + c.get_str());
  return c.get_num();
}

std::string to_string(const Rational& q) { return canonical(q).get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw UsageError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
  return canonical(q);
}

}  // namespace sphemb
