#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphemb/lattice.hpp"
#include "sphemb/rootdata.hpp"

namespace sphemb {

enum class DivisorKind { Boundary, Color };

std::string to_string(DivisorKind kind);

struct DivisorLabel {
  DivisorKind kind = DivisorKind::Color;
  std::string id;

  friend auto operator<=>(const DivisorLabel&, const DivisorLabel&) = default;
  friend bool operator==(const DivisorLabel&, const DivisorLabel&) = default;
};

inline DivisorLabel boundary_label(std::string id) { return {DivisorKind::Boundary, std::move(id)}; }
inline DivisorLabel color_label(std::string id) { return {DivisorKind::Color, std::move(id)}; }

/// Formal integer combination of prime divisors; absent labels have coefficient 0.
class Divisor {
 public:
  Divisor() = default;

  void add(const DivisorLabel& label, const Integer& k);
  Integer coefficient(const DivisorLabel& label) const;
  // Nonzero terms only, ordered by label.
  const std::map<DivisorLabel, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Divisor operator+(const Divisor& other) const;
  Divisor operator-(const Divisor& other) const;
  Divisor operator-() const;
  Divisor operator*(const Integer& k) const;
  friend bool operator==(const Divisor&, const Divisor&) = default;

  std::string to_string() const;

 private:
  std::map<DivisorLabel, Integer> terms_;
};

/// B-stable, non-G-stable prime divisor. `functional` is the composite of the
/// weight map with the relevant coroot, already in the embedding's sign convention.
struct ColorSpec {
  DivisorLabel label;
  Covector functional;
  Integer canonical_coefficient;
};

/// G-stable prime divisor with the image of its valuation in Q (x) Y(T).
struct BoundarySpec {
  DivisorLabel label;
  Covector valuation;
};

/// Alternate name for a label, used where two colors coincide.
struct LabelAlias {
  std::string alias;
  std::string target;
  friend bool operator==(const LabelAlias&, const LabelAlias&) = default;
};

/// Combinatorial data of one spherical embedding.
///
/// Divisor labels are ordered boundaries first, then colors, each in
/// construction order; every matrix produced from a model uses this order.
struct SphericalDivisorModel {
  std::string name;
  LatticePtr lattice;
  std::vector<Character> basis_characters;
  SimpleRootSet simple_roots;
  std::vector<ColorSpec> colors;
  std::vector<BoundarySpec> boundaries;
  std::vector<LabelAlias> aliases;
  // Set while part of the data still awaits oracle confirmation.
  bool provisional = false;

  std::vector<DivisorLabel> labels() const;
  std::size_t label_index(const DivisorLabel& label) const;
  // Resolves an id or alias; throws UsageError for a foreign label.
  DivisorLabel resolve(const std::string& id) const;
};

struct ValidationIssue {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> failures;
  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

ValidationReport validate_model(const SphericalDivisorModel& model);

/// Divisor of the B-semi-invariant rational function of weight chi.
Divisor principal_divisor(const SphericalDivisorModel& model, const Character& chi);

/// Rows are principal divisors of the basis characters, columns the model labels.
IntegerMatrix relation_matrix(const SphericalDivisorModel& model);

/// Coordinates of a divisor class: free part in the generator basis of the
/// owning ClassGroup, torsion part as residues modulo the invariant factors.
struct DivisorClass {
  IntegerVector free;
  IntegerVector torsion;
  bool is_zero() const;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Class group with the transform needed to reduce divisors into it.
///
/// Free generators: colors are scanned in model order, then boundaries; a
/// label is kept when its image is independent of those kept so far. When the
/// kept images form a basis of the free quotient, `generators` names them and
/// free coordinates are reported in that basis. Otherwise the generators are
/// the SNF basis vectors, named "snf_1", "snf_2", ...
class ClassGroup {
 public:
  explicit ClassGroup(const SphericalDivisorModel& model);

  const AbelianGroupPresentation& presentation() const { return presentation_; }
  const std::vector<DivisorLabel>& columns() const { return columns_; }
  const SmithDecomposition& snf() const { return snf_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  bool named_generators() const { return named_; }

  DivisorClass class_of(const Divisor& d) const;

 private:
  IntegerVector snf_coordinates(const Divisor& d) const;

  AbelianGroupPresentation presentation_;
  std::vector<DivisorLabel> columns_;
  SmithDecomposition snf_;
  std::size_t rank_ = 0;
  std::vector<std::string> generator_names_;
  bool named_ = false;
  IntegerMatrix free_to_generators_;  // y_free * this = generator coordinates
};

/// Throws DomainError if the model is provisional or fails validation.
ClassGroup class_group(const SphericalDivisorModel& model);

/// -1 on every boundary, canonical_coefficient on every color.
Divisor canonical_divisor(const SphericalDivisorModel& model);

DivisorClass class_of(const SphericalDivisorModel& model, const Divisor& d);

struct PrincipalityResult {
  bool principal = false;
  std::optional<Character> witness;
};

PrincipalityResult is_principal(const SphericalDivisorModel& model, const Divisor& d);

/// Canonical class trivial in Cl. For the affine cones handled here (trivial
/// Picard group, Cohen-Macaulay) this is the Gorenstein property.
bool is_gorenstein(const SphericalDivisorModel& model);

/// Colors of a wonderful compactification and the coroots that govern the
/// divisors of the sections tau_chi. Paired colors carry the two coroots
/// alpha_{i1}, alpha_{i2}; single colors carry alpha_j.
struct WonderfulModel {
  struct PairedColor {
    DivisorLabel label;
    Covector first_coroot;
    Covector second_coroot;
  };
  struct SingleColor {
    DivisorLabel label;
    Covector coroot;
  };

  std::string name;
  LatticePtr lattice;
  SimpleRootSet simple_roots;
  std::vector<PairedColor> paired;
  std::vector<SingleColor> single;

  bool in_picard_lattice(const Character& chi) const;
};

/// Throws DomainError when chi is outside the Picard sublattice.
Divisor wonderful_section_divisor(const WonderfulModel& model, const Character& chi);

}  // namespace sphemb
