#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sphemb/divisor_model.hpp"
#include "sphemb/model_json.hpp"
#include "sphemb/realization.hpp"

namespace sphemb {

inline constexpr std::size_t kDefaultTrials = 8;
inline constexpr std::uint64_t kDefaultSeed = 20240607;
// Entries of sampled group elements lie in [-kSampleBound, kSampleBound].
inline constexpr long kSampleBound = 99;

/// Generic order of f along a curve: min over random translates g of
/// ord_t f(g . lambda(t) . x0). An empty order means +infinity (f vanished
/// identically on every translate).
struct TOrderResult {
  std::optional<int> order;
  std::size_t trials = 0;
  bool stable = false;  // every trial gave the same order
  std::vector<std::optional<int>> per_trial;
};

TOrderResult t_order(const MatrixRealization& real, const SemiInvariantSpec& f, const std::string& curve,
                     std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

struct LimitSignature {
  std::vector<RationalMatrix> limit_point;
  std::vector<std::size_t> rank_profile;
};

/// Throws DomainError when negative powers of t survive.
LimitSignature limit_signature(const MatrixRealization& real, const std::string& curve);

/// Rank of the infinitesimal action at the base point. The seed picks a
/// random translate of the base point as a consistency check.
std::size_t orbit_dimension(const MatrixRealization& real, std::uint64_t seed = kDefaultSeed);
std::size_t orbit_dimension_at(const MatrixRealization& real, const Point& x);

struct SemiInvarianceResult {
  bool semi_invariant = false;
  std::optional<Character> weight;  // empirical weight, read off from the torus probes
  bool matches_claim = false;       // weight equals claimed_weight (true when nothing is claimed)
  std::string detail;
};

SemiInvarianceResult semiinvariance_check(const MatrixRealization& real, const SemiInvariantSpec& f,
                                          std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

struct OracleRecord {
  std::string check;
  Json inputs;
  Json model_value;
  Json oracle_value;
  bool match = false;
  std::size_t trials = 0;
  bool stable = true;
};

struct OracleReport {
  std::vector<OracleRecord> records;
  bool pass() const;
  bool stable() const;
  // Records that failed to match.
  std::vector<const OracleRecord*> mismatches() const;
  Json to_json() const;
};

/// For each boundary X of the model and each named semi-invariant of weight
/// chi, compares <chi, nu_X> with the generic t-order along the curve that
/// realizes X. Semi-invariants are weight-checked first.
OracleReport verify_boundary_valuations(const SphericalDivisorModel& model, const MatrixRealization& real,
                                        const std::vector<std::string>& semi_invariants,
                                        std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

/// element . base_point == base_point
bool stabilizer_check(const MatrixRealization& real, const GroupElement& element);

/// Samples `trials` elements of the displayed stabilizer shape (broken in one
/// block equality when `respect` is false); true iff every one fixes the base point.
bool sampled_stabilizer_check(const MatrixRealization& real, bool respect, std::size_t trials = kDefaultTrials,
                              std::uint64_t seed = kDefaultSeed);

/// Image in Q (x) Y(T) of the valuation attached to a curve, solved from the
/// t-orders of the weight-verified semi-invariants. Empty when those weights
/// do not span the lattice or an order is unstable.
struct DerivedValuation {
  std::optional<Covector> valuation;
  std::vector<OracleRecord> records;
};

DerivedValuation derive_valuation(const MatrixRealization& real, const std::string& curve,
                                  std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

/// Keeps the candidates that pass semiinvariance_check, with their weight filled in.
std::vector<SemiInvariantSpec> filter_semi_invariants(const MatrixRealization& real,
                                                      std::vector<SemiInvariantSpec> candidates,
                                                      std::size_t trials, std::uint64_t seed);

}  // namespace sphemb
