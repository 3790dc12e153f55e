#include "sphemb/realization.hpp"

namespace sphemb {

GroupElement make_group_element(const std::vector<RationalMatrix>& factors) {
  GroupElement g;
  for (const auto& f : factors) {
    auto inv = inverse(f);
    if (!inv) throw DomainError("singular group element");
    g.factors.push_back(to_poly(f));
    g.inverses.push_back(to_poly(*inv));
  }
  return g;
}

GroupElement cocharacter_element(const std::vector<IntegerVector>& exponents) {
  GroupElement g;
  for (const auto& e : exponents) {
    PolyMatrix f(e.size(), e.size());
    PolyMatrix inv(e.size(), e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      int k = static_cast<int>(e[i].get_si());
      f(i, i) = Laurent::t(k);
      inv(i, i) = Laurent::t(-k);
    }
    g.factors.push_back(std::move(f));
    g.inverses.push_back(std::move(inv));
  }
  return g;
}

GroupElement torus_element(const std::vector<IntegerVector>& exponents, const Rational& s) {
  if (s == 0) throw UsageError("torus element at s = 0");
  GroupElement g;
  for (const auto& e : exponents) {
    PolyMatrix f(e.size(), e.size());
    PolyMatrix inv(e.size(), e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      Laurent m = Laurent::monomial(1, static_cast<int>(e[i].get_si()));
      f(i, i) = Laurent(m.evaluate(s));
      inv(i, i) = Laurent(Rational(1) / m.evaluate(s));
    }
    g.factors.push_back(std::move(f));
    g.inverses.push_back(std::move(inv));
  }
  return g;
}

GroupElement tangent_element(const std::vector<RationalMatrix>& directions) {
  GroupElement g;
  for (const auto& x : directions) {
    const std::size_t n = x.rows();
    PolyMatrix f = to_poly(RationalMatrix::identity(n));
    PolyMatrix inv = f;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (x(i, j) == 0) continue;
        f(i, j) += Laurent::monomial(x(i, j), 1);
        inv(i, j) -= Laurent::monomial(x(i, j), 1);
      }
    g.factors.push_back(std::move(f));
    g.inverses.push_back(std::move(inv));
  }
  return g;
}

GroupElement identity_element(const std::vector<std::size_t>& factor_sizes) {
  std::vector<RationalMatrix> f;
  for (auto n : factor_sizes) f.push_back(RationalMatrix::identity(n));
  return make_group_element(f);
}

const Cocharacter& MatrixRealization::curve(const std::string& label) const {
  for (const auto& c : curves)
    if (c.label == label) return c;
  throw UsageError("realization " + family + " has no curve '" + label + "'");
}

const SemiInvariantSpec& MatrixRealization::semi_invariant(const std::string& name) const {
  for (const auto& f : semi_invariants)
    if (f.name == name) return f;
  throw UsageError("realization " + family + " has no semi-invariant '" + name + "'");
}

Point MatrixRealization::curve_point(const std::string& label) const {
  return action(cocharacter_element(curve(label).exponents), base_point);
}

Rational MatrixRealization::torus_value(const GroupElement& b, const Character& chi) const {
  auto w = weight_map(chi);
  if (w.size() != b.factors.size()) throw UsageError("weight map does not match the factor count");
  Rational value = 1;
  for (std::size_t f = 0; f < w.size(); ++f)
    for (std::size_t i = 0; i < w[f].size(); ++i) {
      long e = w[f][i].get_si();
      if (e == 0) continue;
      Rational d = b.factors[f](i, i).constant();
      Rational pw = 1;
      for (long k = 0; k < std::labs(e); ++k) pw *= d;
      value *= e > 0 ? pw : Rational(1) / pw;
    }
  return canonical(value);
}

Point to_point(const std::vector<RationalMatrix>& blocks) {
  Point p;
  for (const auto& b : blocks) p.push_back(to_poly(b));
  return p;
}

std::vector<RationalMatrix> to_rational_point(const Point& x) {
  std::vector<RationalMatrix> out;
  for (const auto& b : x) {
    RationalMatrix r(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(i, j).is_constant()) throw DomainError("point still depends on t");
        r(i, j) = b(i, j).constant();
      }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RationalMatrix> evaluate_point(const Point& x, const Rational& t) {
  std::vector<RationalMatrix> out;
  for (const auto& b : x) {
    RationalMatrix r(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = b(i, j).evaluate(t);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

Rational random_nonzero(Rng& rng, long bound) {
  long v = uniform(rng, 1, bound);
  return uniform(rng, 0, 1) ? Rational(v) : Rational(-v);
}

RationalMatrix random_invertible(Rng& rng, std::size_t n, long bound, Triangle shape) {
  if (shape != Triangle::Full) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j)
          m(i, j) = random_nonzero(rng, bound);
        else if ((shape == Triangle::Lower) == (i > j))
          m(i, j) = uniform(rng, -bound, bound);
      }
    return m;
  }
  // Nonzero entries keep translates off the coordinate hyperplanes, where
  // leading coefficients of the oracle's polynomials most often vanish.
  for (;;) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_nonzero(rng, bound);
    if (rank(m) == n) return m;
  }
}

PointFunction minor_function(std::size_t block, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  return [block, rows = std::move(rows), cols = std::move(cols)](const Point& x) {
    return determinant_expansion(submatrix(x.at(block), rows, cols));
  };
}

PointFunction constant_function(const Rational& c) {
  return [c](const Point&) { return Laurent(c); };
}

PointFunction product_function(PointFunction f, PointFunction g) {
  return [f = std::move(f), g = std::move(g)](const Point& x) { return f(x) * g(x); };
}

std::vector<std::size_t> index_range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> v;
  for (std::size_t i = begin; i < end; ++i) v.push_back(i);
  return v;
}

RationalMatrix block_identity(std::size_t rows, std::size_t cols, std::size_t row0, std::size_t col0,
                              std::size_t size) {
  RationalMatrix m(rows, cols);
  for (std::size_t k = 0; k < size; ++k) m(row0 + k, col0 + k) = 1;
  return m;
}

}  // namespace sphemb
