#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's Smith normal form or solver.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "sphemb/divisor_model.hpp"
#include "sphemb/lattice.hpp"

namespace testsupport {

using sphemb::Integer;
using sphemb::IntegerMatrix;
using sphemb::IntegerVector;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntegerMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

// Product of random elementary matrices and a permutation.
inline IntegerMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && uniform(rng, 0, 1)) u(0, 0) = -1;
    return u;
  }
  for (int k = 0; k < steps; ++k) {
    std::size_t i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1);
    if (i == j) {
      u.negate_row(i);
      continue;
    }
    u.add_row(i, j, Integer(uniform(rng, -3, 3)));
    if (uniform(rng, 0, 3) == 0) u.swap_rows(i, j);
  }
  return u;
}

/// Leibniz expansion.
inline Integer leibniz_det(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Fraction-free elimination with row swaps; for minors too big to expand.
inline Integer bareiss_det(IntegerMatrix m) {
  const std::size_t n = m.rows();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * m(n - 1, n - 1));
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(k, n)), true);
  if (k > n) return;
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    f(idx);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

/// gcd of all k x k minors (0 if they all vanish).
inline Integer determinantal_divisor(const IntegerMatrix& a, std::size_t k) {
  if (k == 0) return 1;
  Integer g = 0;
  for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
      if (g == 1) return;
      IntegerMatrix s(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) s(i, j) = a(rows[i], cols[j]);
      Integer d = k <= 5 ? leibniz_det(s) : bareiss_det(s);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

struct MinorProfile {
  std::size_t rank = 0;
  IntegerVector factors;  // nonzero invariant factors d_k / d_{k-1}
};

inline MinorProfile minor_profile(const IntegerMatrix& a) {
  MinorProfile p;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Integer dk = determinantal_divisor(a, k);
    if (dk == 0) break;
    p.rank = k;
    p.factors.push_back(dk / prev);
    prev = dk;
  }
  return p;
}

/// Cokernel shape from the determinantal divisors.
inline sphemb::AbelianGroupPresentation reference_cokernel(const IntegerMatrix& relations) {
  auto p = minor_profile(relations);
  sphemb::AbelianGroupPresentation g;
  g.free_rank = relations.cols() - p.rank;
  for (const auto& f : p.factors)
    if (f != 1) g.invariant_factors.push_back(f);
  return g;
}

inline IntegerMatrix stack(const IntegerMatrix& a, const std::vector<IntegerVector>& extra) {
  IntegerMatrix s(a.rows() + extra.size(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t e = 0; e < extra.size(); ++e)
    for (std::size_t j = 0; j < a.cols(); ++j) s(a.rows() + e, j) = extra[e][j];
  return s;
}

/// v in the Z-row span of a: adding v changes neither the rank nor the top
/// determinantal divisor.
inline bool in_row_lattice(const IntegerMatrix& a, const IntegerVector& v) {
  IntegerMatrix s = stack(a, {v});
  auto pa = minor_profile(a);
  auto ps = minor_profile(s);
  if (pa.rank != ps.rank) return false;
  if (pa.rank == 0) return true;
  return determinantal_divisor(a, pa.rank) == determinantal_divisor(s, ps.rank);
}

/// The given vectors map onto a basis of Z^cols / rowspan(a), which must be free.
inline bool generates_free_quotient(const IntegerMatrix& a, const std::vector<IntegerVector>& gens) {
  auto pa = minor_profile(a);
  for (const auto& f : pa.factors)
    if (f != 1) return false;
  if (pa.rank + gens.size() != a.cols()) return false;
  IntegerMatrix s = stack(a, gens);
  return determinantal_divisor(s, a.cols()) == 1;
}

/// Divisor as a vector over the model's label order.
inline IntegerVector divisor_vector(const sphemb::SphericalDivisorModel& model, const sphemb::Divisor& d) {
  auto labels = model.labels();
  IntegerVector v(labels.size(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) v[i] = d.coefficient(labels[i]);
  return v;
}

inline sphemb::Divisor single(const sphemb::SphericalDivisorModel& model, const std::string& id, long k = 1) {
  sphemb::Divisor d;
  d.add(model.resolve(id), k);
  return d;
}

/// Admissible circular parameters with m <= n <= bound.
struct Circ {
  int m, n, r, s;
};

inline std::vector<Circ> admissible_circular(int bound) {
  std::vector<Circ> out;
  for (int m = 1; m <= bound; ++m)
    for (int n = m; n <= bound; ++n)
      for (int r = 0; r <= m; ++r)
        for (int s = 0; r + s <= m; ++s) {
          if (r == 0 && s == 0) continue;
          if (r + s == m && (r == 0 || s == 0)) continue;
          out.push_back({m, n, r, s});
        }
  return out;
}

}  // namespace testsupport
