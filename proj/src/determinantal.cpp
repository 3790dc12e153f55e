#include "family_util.hpp"

namespace sphemb {

using namespace detail;

namespace {

void check_parameters(int m, int n, int r) {
  if (m < 1 || n < 1 || r <= 0 || r >= std::min(m, n))
    throw UsageError("determinantal varieties need 0 < r < min(m, n)");
}

std::vector<std::string> eps_labels(int r) {
  std::vector<std::string> labels;
  for (int i = 1; i <= r; ++i) labels.push_back(index_label("eps_", i));
  return labels;
}

std::string det_name(int m, int n, int r) {
  return "determinantal:m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",r=" + std::to_string(r);
}

// eps_i -> -eps_{i1} + eps_{i2}
FactorVectors det_weight(std::size_t m, std::size_t n, const Character& chi) {
  FactorVectors w = zero_factors({m, n});
  for (std::size_t i = 0; i < chi.coords().size(); ++i) {
    w[0][i] -= chi[i];
    w[1][i] += chi[i];
  }
  return w;
}

}  // namespace

MatrixRealization determinantal_realization(int m_in, int n_in, int r_in, std::uint64_t seed) {
  check_parameters(m_in, n_in, r_in);
  const std::size_t m = m_in, n = n_in, r = r_in;
  MatrixRealization real;
  real.family = det_name(m_in, n_in, r_in);
  real.blocks = {{"A", m, n}};
  real.factor_sizes = {m, n};
  real.base_point = to_point({block_identity(m, n, 0, 0, r)});
  real.membership = [r](const std::vector<RationalMatrix>& x) { return rank(x.at(0)) <= r; };
  real.action = [](const GroupElement& g, const Point& x) { return Point{g.factors[0] * x[0] * g.inverses[1]}; };
  real.group_sampler = [m, n](Rng& rng) {
    return make_group_element(random_factors(rng, {m, n}, {Triangle::Full, Triangle::Full}));
  };
  real.borel_sampler = [m, n](Rng& rng) {
    return make_group_element(random_factors(rng, {m, n}, {Triangle::Lower, Triangle::Upper}));
  };
  real.stabilizer_sampler = [m, n, r](Rng& rng, bool respect) {
    std::vector<std::size_t> bm{r, m - r}, bn{r, n - r};
    for (;;) {
      RationalMatrix a = random_patterned(rng, m, kSampleBound,
                                          [&](auto i, auto j) { return block_of(i, bm) <= block_of(j, bm); });
      RationalMatrix b = random_patterned(rng, n, kSampleBound,
                                          [&](auto i, auto j) { return block_of(i, bn) >= block_of(j, bn); });
      copy_block(a, b, 0, 0, r);
      if (!respect) b(0, 0) += 1;
      if (rank(a) == m && rank(b) == n) return make_group_element({a, b});
    }
  };

  real.weight_lattice = make_lattice(eps_labels(r_in));
  real.weight_map = [m, n](const Character& chi) { return det_weight(m, n, chi); };
  for (std::size_t i = 0; i < r; ++i) {
    FactorVectors e = zero_factors({m, n});
    e[0][i] = 1;
    real.torus_probes.push_back({index_label("eps_", i + 1), e, std::nullopt});
  }
  // diag(1, .., t, 1, ..) with t in position r: degenerates E_r to E_{r-1}.
  FactorVectors lambda = zero_factors({m, n});
  lambda[0][r - 1] = 1;
  real.curves.push_back({"lambda_r", lambda, std::nullopt});

  real.lie_basis = gl_lie_basis({m, n});
  real.semi_invariants = filter_semi_invariants(real, minor_candidates(real.blocks), 4, seed);
  return real;
}

SphericalDivisorModel determinantal_provisional_model(int m, int n, int r) {
  check_parameters(m, n, r);
  const std::vector<std::size_t> sizes{static_cast<std::size_t>(m), static_cast<std::size_t>(n)};
  SphericalDivisorModel model;
  model.name = det_name(m, n, r);
  model.lattice = make_lattice(eps_labels(r));
  const auto& lat = model.lattice;
  for (std::size_t k = 0; k < lat->rank(); ++k) model.basis_characters.push_back(Character::unit(lat, k));
  model.simple_roots = SimpleRootSet(lat, gl_simple_roots(lat, index_range(0, r), "alpha_", 1));

  auto eps = [&](int i) { return Covector::dual_basis(lat, i - 1); };
  auto weight = [&](const Character& chi) { return det_weight(m, n, chi); };
  FactorVectors two_rho{two_rho_block(m, r, m, true), two_rho_block(n, r, n, false)};
  for (int i = 1; i < r; ++i) {
    Covector f = eps(i) + -eps(i + 1);
    require(functional_from_coroot(lat, weight, gl_coroot(sizes, 0, i - 1, 1)) == f, "determinantal D_i");
    model.colors.push_back({color_label(index_label("D_", i)), f, -2});
  }
  const std::pair<const char*, FactorVectors> levi[] = {{"D_r1", gl_coroot(sizes, 0, r - 1, 1)},
                                                        {"D_r2", gl_coroot(sizes, 1, r - 1, -1)}};
  for (const auto& [id, gamma] : levi) {
    Covector f = functional_from_coroot(lat, weight, gamma);
    require(f == eps(r), std::string("determinantal ") + id);
    model.colors.push_back({color_label(id), f, -2 + pair_factors(two_rho, gamma)});
  }
  require(model.colors[r - 1].canonical_coefficient == -(m - r + 1), "determinantal D_r1 coefficient");
  require(model.colors[r].canonical_coefficient == -(n - r + 1), "determinantal D_r2 coefficient");
  model.provisional = true;
  return model;
}

DeterminantalCompletion complete_determinantal_model(int m, int n, int r, std::size_t trials, std::uint64_t seed) {
  DeterminantalCompletion out{determinantal_provisional_model(m, n, r), std::nullopt, 0, 0, {}};
  MatrixRealization real = determinantal_realization(m, n, r, seed);

  auto derived = derive_valuation(real, "lambda_r", trials, seed);
  out.records = derived.records;
  if (!derived.valuation) throw OracleInstability("could not solve the valuation of the rank-drop curve");
  out.curve_valuation = derived.valuation;

  out.orbit_dimension = orbit_dimension(real, seed);
  auto limit = limit_signature(real, "lambda_r");
  out.limit_orbit_dimension = orbit_dimension_at(real, to_point(limit.limit_point));
  std::size_t codim = out.orbit_dimension - out.limit_orbit_dimension;

  OracleRecord rec;
  rec.check = "limit_codimension";
  rec.inputs = Json{{"curve", "lambda_r"}};
  rec.model_value = nullptr;
  rec.oracle_value = Json{{"orbit_dimension", out.orbit_dimension},
                          {"limit_orbit_dimension", out.limit_orbit_dimension},
                          {"codimension", codim}};
  rec.match = true;
  rec.trials = 1;
  out.records.push_back(rec);

  Covector nu(out.model.lattice, derived.valuation->coords());
  if (codim == 1)
    out.model.boundaries.push_back({boundary_label(index_label("X_", r - 1)), nu});
  out.model.provisional = false;
  return out;
}

}  // namespace sphemb
