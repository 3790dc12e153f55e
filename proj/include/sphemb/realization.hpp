#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sphemb/laurent.hpp"
#include "sphemb/rootdata.hpp"

namespace sphemb {

using Rng = std::mt19937_64;

/// A tuple of matrices, one per block of the ambient space.
using Point = std::vector<PolyMatrix>;

/// Element of a product of general linear groups, stored with its inverse.
/// Entries are Laurent polynomials so cocharacters t -> diag(t^e) fit too.
struct GroupElement {
  std::vector<PolyMatrix> factors;
  std::vector<PolyMatrix> inverses;
};

/// Throws DomainError if a factor is singular.
GroupElement make_group_element(const std::vector<RationalMatrix>& factors);
/// diag(t^e) on every factor.
GroupElement cocharacter_element(const std::vector<IntegerVector>& exponents);
/// diag(s^e) for a nonzero scalar s.
GroupElement torus_element(const std::vector<IntegerVector>& exponents, const Rational& s);
/// (1 + tX, 1 - tX) factorwise: exact to first order in t.
GroupElement tangent_element(const std::vector<RationalMatrix>& directions);
GroupElement identity_element(const std::vector<std::size_t>& factor_sizes);

/// One-parameter subgroup of the diagonal torus, given by exponent vectors.
struct Cocharacter {
  std::string label;
  std::vector<IntegerVector> exponents;
  // Boundary divisor whose valuation this curve realizes, when there is one.
  std::optional<std::string> boundary;
};

/// Polynomial function of matrix entries; exact in t.
using PointFunction = std::function<Laurent(const Point&)>;

struct SemiInvariantSpec {
  std::string name;
  PointFunction evaluate;
  std::optional<Character> claimed_weight;
};

struct BlockShape {
  std::string name;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

/// Concrete matrix model of a family: ambient space, group action, base point
/// of the open Borel orbit and the test data consumed by the oracle.
///
/// Semi-invariants obey f(b.x) = W(chi)(b)^{-1} f(x) for Borel elements b,
/// where W is `weight_map`, a character of the diagonal torus expressed as
/// exponents on the diagonal entries of each factor.
struct MatrixRealization {
  std::string family;
  std::vector<BlockShape> blocks;
  std::vector<std::size_t> factor_sizes;
  Point base_point;

  std::function<bool(const std::vector<RationalMatrix>&)> membership;
  std::function<Point(const GroupElement&, const Point&)> action;
  std::function<GroupElement(Rng&)> group_sampler;
  std::function<GroupElement(Rng&)> borel_sampler;
  // Samples an element of the displayed stabilizer block shape; `respect`
  // false breaks exactly one of the block equalities.
  std::function<GroupElement(Rng&, bool respect)> stabilizer_sampler;

  LatticePtr weight_lattice;
  std::function<std::vector<IntegerVector>(const Character&)> weight_map;
  // probe k satisfies -<W(e_j), probe_k> = delta_jk.
  std::vector<Cocharacter> torus_probes;

  std::vector<SemiInvariantSpec> semi_invariants;
  std::vector<Cocharacter> curves;
  // Basis of the Lie algebra of the acting group, one direction per factor.
  std::vector<std::vector<RationalMatrix>> lie_basis;

  const Cocharacter& curve(const std::string& label) const;
  const SemiInvariantSpec& semi_invariant(const std::string& name) const;
  /// lambda(t) . base_point
  Point curve_point(const std::string& label) const;
  Point act(const GroupElement& g, const Point& x) const { return action(g, x); }
  /// W(chi)(b) for b in the diagonal torus or a Borel subgroup.
  Rational torus_value(const GroupElement& b, const Character& chi) const;
};

Point to_point(const std::vector<RationalMatrix>& blocks);
/// Entries must be constants.
std::vector<RationalMatrix> to_rational_point(const Point& x);
std::vector<RationalMatrix> evaluate_point(const Point& x, const Rational& t);

// Sampling helpers: entries uniform in [-bound, bound] (nonzero for full
// invertible samples), rejection for invertibility.
enum class Triangle { Full, Lower, Upper };
RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);
RationalMatrix random_invertible(Rng& rng, std::size_t n, long bound, Triangle shape = Triangle::Full);
Rational random_nonzero(Rng& rng, long bound);

/// det of the submatrix of block `block` on the given rows and columns.
PointFunction minor_function(std::size_t block, std::vector<std::size_t> rows, std::vector<std::size_t> cols);
PointFunction constant_function(const Rational& c);
PointFunction product_function(PointFunction f, PointFunction g);

std::vector<std::size_t> index_range(std::size_t begin, std::size_t end);  // [begin, end)
RationalMatrix block_identity(std::size_t rows, std::size_t cols, std::size_t row0, std::size_t col0, std::size_t size);

}  // namespace sphemb
