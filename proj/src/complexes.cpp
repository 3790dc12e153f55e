#include "family_util.hpp"

namespace sphemb {

using namespace detail;

MatrixRealization complexes_realization(int l_in, int m_in, int n_in, int r_in, int s_in, std::uint64_t seed) {
  if (l_in < 1 || m_in < 1 || n_in < 1 || r_in < 0 || s_in < 0 || r_in > l_in || s_in > n_in || r_in + s_in > m_in)
    throw UsageError("complexes need 0 <= r <= l, 0 <= s <= n, r + s <= m");
  const std::size_t l = l_in, m = m_in, n = n_in, r = r_in, s = s_in;
  MatrixRealization real;
  real.family = "complexes:l=" + std::to_string(l) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                ",r=" + std::to_string(r) + ",s=" + std::to_string(s);
  real.blocks = {{"A", l, m}, {"B", m, n}};
  real.factor_sizes = {l, m, n};
  real.base_point = to_point({block_identity(l, m, 0, 0, r), block_identity(m, n, m - s, n - s, s)});

  real.membership = [r, s](const std::vector<RationalMatrix>& x) {
    RationalMatrix ab = x.at(0) * x.at(1);
    return ab == RationalMatrix(ab.rows(), ab.cols()) && rank(x[0]) <= r && rank(x[1]) <= s;
  };
  real.action = [](const GroupElement& g, const Point& x) {
    return Point{g.factors[0] * x[0] * g.inverses[1], g.factors[1] * x[1] * g.inverses[2]};
  };
  real.group_sampler = [l, m, n](Rng& rng) {
    return make_group_element(random_factors(rng, {l, m, n}, {Triangle::Full, Triangle::Full, Triangle::Full}));
  };
  real.borel_sampler = [l, m, n](Rng& rng) {
    return make_group_element(random_factors(rng, {l, m, n}, {Triangle::Lower, Triangle::Upper, Triangle::Lower}));
  };
  // A block upper (r, l-r); B block lower (r, m-r-s, s); C block upper (n-s, s);
  // A_11 = B_11 and B_33 = C_22.
  real.stabilizer_sampler = [l, m, n, r, s](Rng& rng, bool respect) {
    std::vector<std::size_t> bl{r, l - r}, bm{r, m - r - s, s}, bn{n - s, s};
    for (;;) {
      RationalMatrix a = random_patterned(rng, l, kSampleBound,
                                          [&](auto i, auto j) { return block_of(i, bl) <= block_of(j, bl); });
      RationalMatrix b = random_patterned(rng, m, kSampleBound,
                                          [&](auto i, auto j) { return block_of(i, bm) >= block_of(j, bm); });
      RationalMatrix c = random_patterned(rng, n, kSampleBound,
                                          [&](auto i, auto j) { return block_of(i, bn) <= block_of(j, bn); });
      copy_block(a, b, 0, 0, r);
      copy_block(b, c, m - s, n - s, s);
      if (!respect) {
        if (r > 0)
          b(0, 0) += 1;
        else
          c(n - 1, n - 1) += 1;
      }
      if (rank(a) == l && rank(b) == m && rank(c) == n) return make_group_element({a, b, c});
    }
  };

  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= r; ++i) labels.push_back(index_label("eps_", i));
  for (std::size_t j = 1; j <= s; ++j) labels.push_back(index_label("delta_", j));
  real.weight_lattice = make_lattice(labels);
  real.weight_map = [l, m, n, r, s](const Character& chi) {
    FactorVectors w = zero_factors({l, m, n});
    for (std::size_t i = 0; i < r; ++i) {
      w[0][i] -= chi[i];
      w[1][i] += chi[i];
    }
    for (std::size_t j = 0; j < s; ++j) {
      w[1][m - s + j] -= chi[r + j];
      w[2][n - s + j] += chi[r + j];
    }
    return w;
  };
  for (std::size_t i = 0; i < r; ++i) {
    FactorVectors e = zero_factors({l, m, n});
    e[0][i] = 1;
    real.torus_probes.push_back({index_label("eps_", i + 1), e, std::nullopt});
  }
  for (std::size_t j = 0; j < s; ++j) {
    FactorVectors e = zero_factors({l, m, n});
    e[2][n - s + j] = -1;
    real.torus_probes.push_back({index_label("delta_", j + 1), e, std::nullopt});
  }

  real.lie_basis = gl_lie_basis({l, m, n});
  real.semi_invariants = filter_semi_invariants(real, minor_candidates(real.blocks), 4, seed);
  return real;
}

}  // namespace sphemb
