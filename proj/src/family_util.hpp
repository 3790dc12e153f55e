#pragma once

// Helpers shared by the family constructors. Not installed.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphemb/families.hpp"

namespace sphemb::detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("family construction check failed: " + what);
}

using FactorVectors = std::vector<IntegerVector>;

inline FactorVectors zero_factors(const std::vector<std::size_t>& sizes) {
  FactorVectors v;
  for (auto n : sizes) v.emplace_back(n, 0);
  return v;
}

/// <W(chi), gamma> summed over factors.
inline Integer pair_factors(const FactorVectors& w, const FactorVectors& gamma) {
  Integer s = 0;
  for (std::size_t f = 0; f < w.size(); ++f)
    for (std::size_t i = 0; i < w[f].size(); ++i) s += w[f][i] * gamma[f][i];
  return s;
}

/// Functional chi -> <W(chi), gamma> on the basis of `lattice`.
template <typename WeightMap>
Covector functional_from_coroot(const LatticePtr& lattice, const WeightMap& weight_map, const FactorVectors& gamma) {
  RationalVector coords;
  for (std::size_t k = 0; k < lattice->rank(); ++k)
    coords.push_back(Rational(pair_factors(weight_map(Character::unit(lattice, k)), gamma)));
  return Covector(lattice, coords);
}

/// gamma^vee = sign * (-e_i^* + e_{i+1}^*) on one factor (0-based i).
inline FactorVectors gl_coroot(const std::vector<std::size_t>& sizes, std::size_t factor, std::size_t i, int sign) {
  FactorVectors g = zero_factors(sizes);
  g[factor][i] = -sign;
  g[factor][i + 1] = sign;
  return g;
}

/// Coefficients of 2 rho over the positive roots of a GL block [lo, hi)
/// (0-based) on one factor. Lower Borel: roots e_j - e_i for j > i.
inline IntegerVector two_rho_block(std::size_t size, std::size_t lo, std::size_t hi, bool lower) {
  IntegerVector c(size, 0);
  for (std::size_t i = lo; i < hi; ++i)
    for (std::size_t j = i + 1; j < hi; ++j) {
      int sgn = lower ? 1 : -1;
      c[j] += sgn;
      c[i] -= sgn;
    }
  return c;
}

inline std::vector<std::size_t> iota(std::size_t n) { return index_range(0, n); }

inline std::string index_label(const std::string& prefix, long i) { return prefix + std::to_string(i); }

/// "X_{a,b}"
inline std::string pair_label(long a, long b) { return "X_{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

/// Random element with zero entries where allowed(i, j) is false; rejection for invertibility.
template <typename Allowed>
RationalMatrix random_patterned(Rng& rng, std::size_t n, long bound, Allowed allowed) {
  for (;;) {
    RationalMatrix m = random_matrix(rng, n, n, bound);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!allowed(i, j)) m(i, j) = 0;
    if (rank(m) == n) return m;
  }
}

/// Block index of position p for consecutive block sizes.
inline std::size_t block_of(std::size_t p, const std::vector<std::size_t>& sizes) {
  std::size_t b = 0, end = 0;
  for (; b < sizes.size(); ++b) {
    end += sizes[b];
    if (p < end) return b;
  }
  return sizes.size();
}

/// E_ij in each factor in turn, zero elsewhere.
inline std::vector<std::vector<RationalMatrix>> gl_lie_basis(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<RationalMatrix>> basis;
  for (std::size_t f = 0; f < sizes.size(); ++f)
    for (std::size_t i = 0; i < sizes[f]; ++i)
      for (std::size_t j = 0; j < sizes[f]; ++j) {
        std::vector<RationalMatrix> dir;
        for (auto n : sizes) dir.emplace_back(n, n);
        dir[f](i, j) = 1;
        basis.push_back(std::move(dir));
      }
  return basis;
}

inline std::vector<RationalMatrix> random_factors(Rng& rng, const std::vector<std::size_t>& sizes,
                                                  const std::vector<Triangle>& shapes) {
  std::vector<RationalMatrix> f;
  for (std::size_t k = 0; k < sizes.size(); ++k) f.push_back(random_invertible(rng, sizes[k], kSampleBound, shapes[k]));
  return f;
}

inline void copy_block(const RationalMatrix& from, RationalMatrix& to, std::size_t from0, std::size_t to0,
                       std::size_t size) {
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) to(to0 + i, to0 + j) = from(from0 + i, from0 + j);
}

}  // namespace sphemb::detail
