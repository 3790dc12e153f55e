#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphemb/divisor_model.hpp"
#include "sphemb/oracle.hpp"
#include "sphemb/realization.hpp"

namespace sphemb {

// ---- reductive monoid M(m) ----------------------------------------------
//
// Lattice eps_1..eps_m, eps_{m+1}; boundaries X_0..X_m; colors D_1..D_{m-1}.
// Realization: pairs (A,B) with A^T B = A B^T = d I, acted on by G x G where
// G = {(A, d A^{-T})}. Group factors are [A_g, B_g, A_h, B_h].
SphericalDivisorModel monoid_model(int m);
MatrixRealization monoid_realization(int m, std::uint64_t seed = kDefaultSeed);

// ---- circular complexes X_{rs} in Mat_{m,n} x Mat_{n,m} ------------------

struct CircularParameters {
  int m = 0, n = 0, r = 0, s = 0;
  bool swapped = false;  // input had m > n; (A,B) roles exchanged
};

/// Validates and normalizes to m <= n. Throws UsageError.
CircularParameters circular_parameters(int m, int n, int r, int s);

SphericalDivisorModel circular_complexes_model(int m, int n, int r, int s);
MatrixRealization circular_complexes_realization(int m, int n, int r, int s, std::uint64_t seed = kDefaultSeed);

// ---- determinantal varieties: m x n matrices of rank <= r ----------------

MatrixRealization determinantal_realization(int m, int n, int r, std::uint64_t seed = kDefaultSeed);
/// Colors only; marked provisional because no boundary valuation is known yet.
SphericalDivisorModel determinantal_provisional_model(int m, int n, int r);

struct DeterminantalCompletion {
  SphericalDivisorModel model;
  std::optional<Covector> curve_valuation;
  std::size_t orbit_dimension = 0;
  std::size_t limit_orbit_dimension = 0;
  std::vector<OracleRecord> records;
};

/// Fills in the boundary data from the oracle: the valuation of the rank-drop
/// curve is solved from t-orders; it becomes a boundary divisor only when the
/// limit orbit has codimension one. Throws OracleInstability when the oracle
/// cannot decide.
DeterminantalCompletion complete_determinantal_model(int m, int n, int r, std::size_t trials = kDefaultTrials,
                                                     std::uint64_t seed = kDefaultSeed);

// ---- varieties of complexes (A,B) in Mat_{l,m} x Mat_{m,n}, AB = 0 -------

MatrixRealization complexes_realization(int l, int m, int n, int r, int s, std::uint64_t seed = kDefaultSeed);

// ---- wonderful compactification, synthetic root data ---------------------
//
// Group of type A_k x A_k x A_l in the fundamental-weight basis. The A_k
// factors are paired (colors D_1..D_k), A_l gives single colors D_{k+1}..D_{k+l}.
WonderfulModel synthetic_wonderful_model(int k, int l);

// ---- family specifiers ---------------------------------------------------

/// `monoid:m=3`, `circular:m=2,n=3,r=1,s=1`, `determinantal:3,3,2`,
/// `complexes:2,3,2,1,1`, `wonderful:k=2,l=1`. Positional and key=value
/// forms are both accepted.
struct FamilySpec {
  std::string family;
  std::map<std::string, int> params;
  std::string text;

  int at(const std::string& key) const;
};

FamilySpec parse_family_spec(const std::string& text);

/// Everything a front end may ask of one family instance. Fields that do not
/// apply are empty.
struct FamilyInstance {
  FamilySpec spec;
  std::optional<SphericalDivisorModel> model;
  std::optional<WonderfulModel> wonderful;
  std::function<MatrixRealization(std::uint64_t seed)> realization;
  // Expected orbit dimension where a closed formula is known.
  std::optional<std::size_t> expected_dimension;
};

/// Builds the instance. Determinantal models are completed with the oracle
/// using `trials` and `seed`.
FamilyInstance make_family(const FamilySpec& spec, std::size_t trials = kDefaultTrials,
                           std::uint64_t seed = kDefaultSeed);

/// Leading and trailing principal minors of every block, as unverified candidates.
std::vector<SemiInvariantSpec> minor_candidates(const std::vector<BlockShape>& blocks);

}  // namespace sphemb
