#include "family_util.hpp"

namespace sphemb {

using namespace detail;

namespace {

std::vector<std::string> monoid_labels(int m) {
  std::vector<std::string> labels;
  for (int k = 1; k <= m + 1; ++k) labels.push_back(index_label("eps_", k));
  return labels;
}

// Exponents of lambda_r on [A_g, B_g, A_h, B_h].
FactorVectors lambda_exponents(int m, int r) {
  FactorVectors e = zero_factors(std::vector<std::size_t>(4, static_cast<std::size_t>(m)));
  for (int k = 0; k < m; ++k) {
    e[0][k] = k >= r ? 1 : 0;
    e[1][k] = k < r ? 1 : 0;
  }
  return e;
}

// Character values on a cocharacter of T: eps_k reads the A exponent at k,
// eps_{m+1} the B exponent at 1.
IntegerVector read_cocharacter(int m, const FactorVectors& e) {
  IntegerVector v;
  for (int k = 0; k < m; ++k) v.push_back(e[0][k]);
  v.push_back(e[1][0]);
  return v;
}

void check_against_cocharacters(const SphericalDivisorModel& model, int m) {
  // Color functionals are the coroots alpha_i^vee = (diag(t at i, 1/t at i+1), its inverse).
  for (int i = 1; i < m; ++i) {
    FactorVectors e = zero_factors(std::vector<std::size_t>(4, static_cast<std::size_t>(m)));
    e[0][i - 1] = 1;
    e[0][i] = -1;
    for (int k = 0; k < m; ++k) e[1][k] = -e[0][k];
    auto v = read_cocharacter(m, e);
    const auto& phi = model.colors[i - 1].functional.coords();
    for (int k = 0; k <= m; ++k) require(phi[k] == Rational(v[k]), "monoid color D_" + std::to_string(i));
  }
  for (int r = 0; r <= m; ++r) {
    auto v = read_cocharacter(m, lambda_exponents(m, r));
    const auto& nu = model.boundaries[r].valuation.coords();
    for (int k = 0; k <= m; ++k) require(nu[k] == Rational(v[k]), "monoid boundary X_" + std::to_string(r));
  }
}

}  // namespace

SphericalDivisorModel monoid_model(int m) {
  if (m < 1) throw UsageError("monoid needs m >= 1");
  SphericalDivisorModel model;
  model.name = "monoid:m=" + std::to_string(m);
  model.lattice = make_lattice(monoid_labels(m));
  const auto& lat = model.lattice;
  for (std::size_t k = 0; k < lat->rank(); ++k) model.basis_characters.push_back(Character::unit(lat, k));

  for (int r = 0; r <= m; ++r) {
    std::vector<long> nu;
    for (int k = 1; k <= m; ++k) nu.push_back(k > r ? 1 : 0);
    nu.push_back(r >= 1 ? 1 : 0);
    model.boundaries.push_back({boundary_label(index_label("X_", r)), Covector::from_integers(lat, nu)});
  }

  std::vector<SimpleRoot> roots;
  for (int i = 1; i < m; ++i) {
    std::vector<long> phi(m + 1, 0);
    phi[i - 1] = 1;
    phi[i] = -1;
    if (i == 1) phi[m] = -1;
    Covector f = Covector::from_integers(lat, phi);
    model.colors.push_back({color_label(index_label("D_", i)), f, -2});
    roots.push_back({index_label("alpha_", i), Character::unit(lat, i - 1) - Character::unit(lat, i), f});
  }
  model.simple_roots = SimpleRootSet(lat, roots);
  check_against_cocharacters(model, m);
  return model;
}

MatrixRealization monoid_realization(int m, std::uint64_t seed) {
  if (m < 1) throw UsageError("monoid needs m >= 1");
  const std::size_t n = static_cast<std::size_t>(m);
  MatrixRealization real;
  real.family = "monoid:m=" + std::to_string(m);
  real.blocks = {{"A", n, n}, {"B", n, n}};
  real.factor_sizes = {n, n, n, n};
  real.base_point = to_point({RationalMatrix::identity(n), RationalMatrix::identity(n)});

  real.membership = [n](const std::vector<RationalMatrix>& x) {
    const auto& a = x.at(0);
    const auto& b = x.at(1);
    RationalMatrix p = a.transpose() * b;
    RationalMatrix q = a * b.transpose();
    Rational d = p(0, 0);
    RationalMatrix di(n, n);
    for (std::size_t i = 0; i < n; ++i) di(i, i) = d;
    return p == di && q == di;
  };
  real.action = [](const GroupElement& g, const Point& x) {
    return Point{g.factors[0] * x[0] * g.inverses[2], g.factors[1] * x[1] * g.inverses[3]};
  };

  // (A, d A^{-T}) with A of the given shape.
  auto unit = [n](Rng& rng, Triangle shape) {
    RationalMatrix a = random_invertible(rng, n, kSampleBound, shape);
    Rational d = random_nonzero(rng, kSampleBound);
    RationalMatrix b = inverse(a)->transpose();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) *= d;
    return std::pair{a, b};
  };
  real.group_sampler = [unit](Rng& rng) {
    auto [ag, bg] = unit(rng, Triangle::Full);
    auto [ah, bh] = unit(rng, Triangle::Full);
    return make_group_element({ag, bg, ah, bh});
  };
  // B^- x B: A lower on the left factor, upper on the right.
  real.borel_sampler = [unit](Rng& rng) {
    auto [ag, bg] = unit(rng, Triangle::Lower);
    auto [ah, bh] = unit(rng, Triangle::Upper);
    return make_group_element({ag, bg, ah, bh});
  };
  // The stabilizer of (I, I) is the diagonal copy of G.
  real.stabilizer_sampler = [unit](Rng& rng, bool respect) {
    auto [ag, bg] = unit(rng, Triangle::Full);
    if (respect) return make_group_element({ag, bg, ag, bg});
    for (;;) {
      auto [ah, bh] = unit(rng, Triangle::Full);
      if (!(ah == ag && bh == bg)) return make_group_element({ag, bg, ah, bh});
    }
  };

  real.weight_lattice = make_lattice(monoid_labels(m));
  real.weight_map = [n](const Character& chi) {
    FactorVectors w = zero_factors({n, n, n, n});
    for (std::size_t k = 0; k < n; ++k) {
      w[0][k] = -chi[k];
      w[2][k] = chi[k];
    }
    w[1][0] = -chi[n];
    w[3][0] = chi[n];
    return w;
  };
  for (int k = 1; k <= m + 1; ++k) {
    FactorVectors e = zero_factors({n, n, n, n});
    if (k == 1) {
      e[0][0] = 1;
      for (std::size_t i = 1; i < n; ++i) e[1][i] = 1;
    } else if (k <= m) {
      e[0][k - 1] = 1;
      e[1][k - 1] = -1;
    } else {
      for (std::size_t i = 0; i < n; ++i) e[1][i] = 1;
    }
    real.torus_probes.push_back({index_label("eps_", k), e, std::nullopt});
  }

  for (int r = 0; r <= m; ++r)
    real.curves.push_back({index_label("lambda_", r), lambda_exponents(m, r), index_label("X_", r)});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t side : {0, 2}) {
        std::vector<RationalMatrix> dir(4, RationalMatrix(n, n));
        dir[side](i, j) = 1;
        dir[side + 1](j, i) = -1;
        real.lie_basis.push_back(dir);
      }
  for (std::size_t side : {0, 2}) {
    std::vector<RationalMatrix> dir(4, RationalMatrix(n, n));
    dir[side + 1] = RationalMatrix::identity(n);
    real.lie_basis.push_back(dir);
  }

  // d = (A^T B)_{11}
  IntegerVector dw(n + 1, 0);
  dw[0] = 1;
  dw[n] = 1;
  real.semi_invariants.push_back({"d",
                                  [n](const Point& x) {
                                    Laurent s;
                                    for (std::size_t i = 0; i < n; ++i) s += x[0](i, 0) * x[1](i, 0);
                                    return s;
                                  },
                                  Character(real.weight_lattice, dw)});
  auto minors = filter_semi_invariants(real, minor_candidates(real.blocks), 4, seed);
  real.semi_invariants.insert(real.semi_invariants.end(), minors.begin(), minors.end());
  return real;
}

}  // namespace sphemb
