#include "family_util.hpp"

namespace sphemb {

using namespace detail;

CircularParameters circular_parameters(int m, int n, int r, int s) {
  CircularParameters p{m, n, r, s, false};
  if (m < 0 || n < 0 || r < 0 || s < 0) throw UsageError("circular complexes need nonnegative parameters");
  if (p.m > p.n) p = {n, m, s, r, true};
  if (p.r + p.s > p.m) throw UsageError("circular complexes need r + s <= min(m, n)");
  if (p.r == 0 && p.s == 0) throw UsageError("circular complexes exclude r = s = 0");
  if (p.r + p.s == p.m && (p.r == 0 || p.s == 0))
    throw UsageError("circular complexes exclude the open subsets X_{m,0} and X_{0,m}");
  return p;
}

namespace {

std::vector<std::string> circular_labels(int r, int s) {
  std::vector<std::string> labels;
  for (int i = 1; i <= r; ++i) labels.push_back(index_label("eps_", i));
  for (int j = 1; j <= s; ++j) labels.push_back(index_label("delta_", j));
  return labels;
}

std::string circular_name(const CircularParameters& p) {
  return "circular:m=" + std::to_string(p.m) + ",n=" + std::to_string(p.n) + ",r=" + std::to_string(p.r) +
         ",s=" + std::to_string(p.s);
}

// epsilon_i -> -eps_{i1} + eps_{i2};  delta_j -> eps_{m-s+j,1} - eps_{n-s+j,2}
FactorVectors circular_weight(const CircularParameters& p, const Character& chi) {
  const std::size_t m = p.m, n = p.n;
  FactorVectors w = zero_factors({m, n});
  for (int i = 0; i < p.r; ++i) {
    w[0][i] -= chi[i];
    w[1][i] += chi[i];
  }
  for (int j = 0; j < p.s; ++j) {
    w[0][p.m - p.s + j] += chi[p.r + j];
    w[1][p.n - p.s + j] -= chi[p.r + j];
  }
  return w;
}

struct ColorDraft {
  std::string id;
  Covector functional;
  Integer coefficient;
  FactorVectors coroot;  // simple coroot of the big group, for the cross-check
  bool levi_type;        // coefficient comes from rho_Q rather than -2
};

}  // namespace

SphericalDivisorModel circular_complexes_model(int m_in, int n_in, int r_in, int s_in) {
  const auto p = circular_parameters(m_in, n_in, r_in, s_in);
  const int m = p.m, n = p.n, r = p.r, s = p.s;
  const std::vector<std::size_t> sizes{static_cast<std::size_t>(m), static_cast<std::size_t>(n)};

  SphericalDivisorModel model;
  model.name = circular_name(p);
  model.lattice = make_lattice(circular_labels(r, s));
  const auto& lat = model.lattice;
  for (std::size_t k = 0; k < lat->rank(); ++k) model.basis_characters.push_back(Character::unit(lat, k));
  auto eps = [&](int i) { return Covector::dual_basis(lat, i - 1); };
  auto delta = [&](int j) { return Covector::dual_basis(lat, r + j - 1); };

  std::vector<SimpleRoot> roots = gl_simple_roots(lat, index_range(0, r), "alpha_", 1);
  auto betas = gl_simple_roots(lat, index_range(r, r + s), "beta_", -1);
  roots.insert(roots.end(), betas.begin(), betas.end());
  model.simple_roots = SimpleRootSet(lat, roots);

  std::vector<ColorDraft> drafts;
  for (int i = 1; i < r; ++i)
    drafts.push_back({index_label("D_", i), eps(i) + -eps(i + 1), -2, gl_coroot(sizes, 0, i - 1, 1), false});
  for (int j = 1; j < s; ++j)
    drafts.push_back(
        {index_label("E_", j), -delta(j) + delta(j + 1), -2, gl_coroot(sizes, 0, m - s + j - 1, 1), false});
  const Integer k1 = -(m - (r + s) + 1);
  const Integer k2 = -(n - (r + s) + 1);
  if (r > 0) {
    drafts.push_back({"D_r1", eps(r), k1, gl_coroot(sizes, 0, r - 1, 1), true});
    drafts.push_back({"D_r2", eps(r), k2, gl_coroot(sizes, 1, r - 1, -1), true});
  }
  if (s > 0) {
    drafts.push_back({"D_s1", delta(1), k1, gl_coroot(sizes, 0, m - s - 1, 1), true});
    drafts.push_back({"D_s2", delta(1), k2, gl_coroot(sizes, 1, n - s - 1, -1), true});
  }

  // gamma_{r1} = gamma_{s1} when r + s = m, gamma_{r2} = gamma_{s2} when r + s = n.
  auto merge = [&](const std::string& from, const std::string& into) {
    auto src = std::find_if(drafts.begin(), drafts.end(), [&](const auto& d) { return d.id == from; });
    auto dst = std::find_if(drafts.begin(), drafts.end(), [&](const auto& d) { return d.id == into; });
    require(src != drafts.end() && dst != drafts.end(), "merge " + from + " into " + into);
    require(src->coroot == dst->coroot, from + " and " + into + " have different coroots");
    dst->functional = dst->functional + src->functional;
    dst->coefficient += src->coefficient;
    drafts.erase(src);
    model.aliases.push_back({from, into});
  };
  if (r > 0 && s > 0 && r + s == m) merge("D_s1", "D_r1");
  if (r > 0 && s > 0 && r + s == n) merge("D_s2", "D_r2");

  // Cross-checks: functionals against the weight map paired with the coroots,
  // coefficients against -<2 rho_Q, gamma^vee> = -2 + <2 rho_rs, gamma^vee>.
  FactorVectors two_rho_rs{two_rho_block(m, r, m - s, true), two_rho_block(n, r, n - s, false)};
  auto weight = [&](const Character& chi) { return circular_weight(p, chi); };
  for (const auto& d : drafts) {
    require(functional_from_coroot(lat, weight, d.coroot) == d.functional, "functional of " + d.id);
    if (d.levi_type) require(-2 + pair_factors(two_rho_rs, d.coroot) == d.coefficient, "coefficient of " + d.id);
  }

  for (auto& d : drafts) model.colors.push_back({color_label(d.id), d.functional, d.coefficient});
  if (m == n && r + s == m) {
    model.boundaries.push_back({boundary_label(pair_label(r - 1, m - r)), eps(r)});
    model.boundaries.push_back({boundary_label(pair_label(r, m - r - 1)), delta(1)});
  }
  return model;
}

MatrixRealization circular_complexes_realization(int m_in, int n_in, int r_in, int s_in, std::uint64_t seed) {
  const auto p = circular_parameters(m_in, n_in, r_in, s_in);
  const std::size_t m = p.m, n = p.n, r = p.r, s = p.s;
  MatrixRealization real;
  real.family = circular_name(p);
  real.blocks = {{"A", m, n}, {"B", n, m}};
  real.factor_sizes = {m, n};
  real.base_point = to_point({block_identity(m, n, 0, 0, r), block_identity(n, m, n - s, m - s, s)});

  real.membership = [r, s](const std::vector<RationalMatrix>& x) {
    const auto& a = x.at(0);
    const auto& b = x.at(1);
    RationalMatrix ab = a * b, ba = b * a;
    return ab == RationalMatrix(ab.rows(), ab.cols()) && ba == RationalMatrix(ba.rows(), ba.cols()) &&
           rank(a) <= r && rank(b) <= s;
  };
  real.action = [](const GroupElement& g, const Point& x) {
    return Point{g.factors[0] * x[0] * g.inverses[1], g.factors[1] * x[1] * g.inverses[0]};
  };
  real.group_sampler = [m, n](Rng& rng) {
    return make_group_element(random_factors(rng, {m, n}, {Triangle::Full, Triangle::Full}));
  };
  real.borel_sampler = [m, n](Rng& rng) {
    return make_group_element(random_factors(rng, {m, n}, {Triangle::Lower, Triangle::Upper}));
  };
  // Block upper triangular on GL_m, block lower on GL_n, A_11 = B_11, A_33 = B_33.
  real.stabilizer_sampler = [m, n, r, s](Rng& rng, bool respect) {
    std::vector<std::size_t> bm{r, m - r - s, s}, bn{r, n - r - s, s};
    for (;;) {
      RationalMatrix a = random_patterned(rng, m, kSampleBound,
                                          [&](auto i, auto j) { return block_of(i, bm) <= block_of(j, bm); });
      RationalMatrix b = random_patterned(rng, n, kSampleBound,
                                          [&](auto i, auto j) { return block_of(i, bn) >= block_of(j, bn); });
      copy_block(a, b, 0, 0, r);
      copy_block(a, b, m - s, n - s, s);
      if (!respect) {
        if (r > 0)
          b(0, 0) += 1;
        else
          b(n - 1, n - 1) += 1;
      }
      if (rank(a) == m && rank(b) == n) return make_group_element({a, b});
    }
  };

  real.weight_lattice = make_lattice(circular_labels(p.r, p.s));
  real.weight_map = [p](const Character& chi) { return circular_weight(p, chi); };
  for (std::size_t i = 0; i < r; ++i) {
    FactorVectors e = zero_factors({m, n});
    e[0][i] = 1;
    real.torus_probes.push_back({index_label("eps_", i + 1), e, std::nullopt});
  }
  for (std::size_t j = 0; j < s; ++j) {
    FactorVectors e = zero_factors({m, n});
    e[0][m - s + j] = -1;
    real.torus_probes.push_back({index_label("delta_", j + 1), e, std::nullopt});
  }

  if (m == n && r + s == m) {
    FactorVectors lambda = zero_factors({m, n});
    lambda[0][r - 1] = 1;
    real.curves.push_back({"lambda_r", lambda, pair_label(p.r - 1, p.m - p.r)});
    FactorVectors mu = zero_factors({m, n});
    mu[1][r] = 1;
    real.curves.push_back({"mu_r", mu, pair_label(p.r, p.m - p.r - 1)});
  }

  real.lie_basis = gl_lie_basis({m, n});
  real.semi_invariants = filter_semi_invariants(real, minor_candidates(real.blocks), 4, seed);
  return real;
}

}  // namespace sphemb
