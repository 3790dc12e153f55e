#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sphemb/lattice.hpp"

namespace sphemb {

/// Character lattice X(T) with named coordinates; cocharacters live in the dual.
class TorusLattice {
 public:
  explicit TorusLattice(std::vector<std::string> labels);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Throws UsageError for an unknown label.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const TorusLattice&, const TorusLattice&) = default;

 private:
  std::vector<std::string> labels_;
};

using LatticePtr = std::shared_ptr<const TorusLattice>;

LatticePtr make_lattice(std::vector<std::string> labels);

class Character {
 public:
  Character(LatticePtr lattice, IntegerVector coords);
  static Character zero(LatticePtr lattice);
  static Character unit(LatticePtr lattice, std::size_t index);
  static Character unit(LatticePtr lattice, const std::string& label);

  const LatticePtr& lattice() const { return lattice_; }
  const IntegerVector& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  Character operator+(const Character& other) const;
  Character operator-(const Character& other) const;
  Character operator-() const;
  Character operator*(const Integer& k) const;
  friend bool operator==(const Character& a, const Character& b);

  std::string to_string() const;  // e.g. "eps_1+eps_4", "0"

 private:
  LatticePtr lattice_;
  IntegerVector coords_;
};

/// Element of Q (x) Y(T): acts on characters by the dot product.
class Covector {
 public:
  Covector(LatticePtr lattice, RationalVector coords);
  static Covector zero(LatticePtr lattice);
  static Covector dual_basis(LatticePtr lattice, std::size_t index);
  static Covector dual_basis(LatticePtr lattice, const std::string& label);
  // Convenience for integer coordinate tables.
  static Covector from_integers(LatticePtr lattice, const std::vector<long>& coords);

  const LatticePtr& lattice() const { return lattice_; }
  const RationalVector& coords() const { return coords_; }
  bool integral() const;

  Covector operator+(const Covector& other) const;
  Covector operator-() const;
  Covector operator*(const Rational& k) const;
  friend bool operator==(const Covector& a, const Covector& b);

 private:
  LatticePtr lattice_;
  RationalVector coords_;
};

/// <chi, f>; throws UsageError on lattice mismatch.
Rational pair(const Character& chi, const Covector& f);

struct SimpleRoot {
  std::string label;
  Character root;
  Covector coroot;
};

/// Index-aligned simple roots and coroots with <alpha, alpha^vee> = 2 enforced.
class SimpleRootSet {
 public:
  SimpleRootSet() = default;
  SimpleRootSet(LatticePtr lattice, std::vector<SimpleRoot> roots);

  const std::vector<SimpleRoot>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  const LatticePtr& lattice() const { return lattice_; }

 private:
  LatticePtr lattice_;
  std::vector<SimpleRoot> roots_;
};

/// <alpha, v> <= 0 for every simple root alpha.
bool is_antidominant(const Covector& v, const SimpleRootSet& roots);

/// GL-type simple roots e_i - e_{i+1} over consecutive coordinates, with coroots
/// e_i^* - e_{i+1}^*. `sign` = -1 gives the opposite ordering (-e_i + e_{i+1}).
std::vector<SimpleRoot> gl_simple_roots(const LatticePtr& lattice, const std::vector<std::size_t>& indices,
                                        const std::string& label_prefix, int sign = 1);

}  // namespace sphemb
