#include "sphemb/rootdata.hpp"

#include <set>
#include <sstream>

namespace sphemb {

TorusLattice::TorusLattice(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw UsageError("empty lattice label");
    if (!seen.insert(l).second) throw UsageError("duplicate lattice label '" + l + "'");
  }
}

std::size_t TorusLattice::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw UsageError("unknown lattice label '" + label + "'");
}

LatticePtr make_lattice(std::vector<std::string> labels) {
  return std::make_shared<const TorusLattice>(std::move(labels));
}

namespace {

void require_same(const LatticePtr& a, const LatticePtr& b) {
  if (a != b && !(a && b && *a == *b)) throw UsageError("lattice mismatch");
}

}  // namespace

Character::Character(LatticePtr lattice, IntegerVector coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_ || coords_.size() != lattice_->rank())
    throw UsageError("character length does not match lattice rank");
}

Character Character::zero(LatticePtr lattice) {
  std::size_t n = lattice->rank();
  return Character(std::move(lattice), IntegerVector(n, 0));
}

Character Character::unit(LatticePtr lattice, std::size_t index) {
  IntegerVector c(lattice->rank(), 0);
  c.at(index) = 1;
  return Character(std::move(lattice), std::move(c));
}

Character Character::unit(LatticePtr lattice, const std::string& label) {
  std::size_t i = lattice->index_of(label);
  return unit(std::move(lattice), i);
}

Character Character::operator+(const Character& other) const {
  require_same(lattice_, other.lattice_);
  IntegerVector c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return Character(lattice_, std::move(c));
}

Character Character::operator-(const Character& other) const { return *this + (-other); }

Character Character::operator-() const {
  IntegerVector c = coords_;
  for (auto& x : c) x = -x;
  return Character(lattice_, std::move(c));
}

Character Character::operator*(const Integer& k) const {
  IntegerVector c = coords_;
  for (auto& x : c) x *= k;
  return Character(lattice_, std::move(c));
}

bool operator==(const Character& a, const Character& b) {
  return (a.lattice_ == b.lattice_ || *a.lattice_ == *b.lattice_) && a.coords_ == b.coords_;
}

std::string Character::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Integer& c = coords_[i];
    if (c == 0) continue;
    if (c < 0)
      out << "-";
    else if (!first)
      out << "+";
    if (abs(c) != 1) out << Integer(abs(c)).get_str() << "*";
    out << lattice_->labels()[i];
    first = false;
  }
  return first ? "0" : out.str();
}

Covector::Covector(LatticePtr lattice, RationalVector coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_ || coords_.size() != lattice_->rank())
    throw UsageError("covector length does not match lattice rank");
  for (auto& q : coords_) q = canonical(q);
}

Covector Covector::zero(LatticePtr lattice) {
  std::size_t n = lattice->rank();
  return Covector(std::move(lattice), RationalVector(n, 0));
}

Covector Covector::dual_basis(LatticePtr lattice, std::size_t index) {
  RationalVector c(lattice->rank(), 0);
  c.at(index) = 1;
  return Covector(std::move(lattice), std::move(c));
}

Covector Covector::dual_basis(LatticePtr lattice, const std::string& label) {
  std::size_t i = lattice->index_of(label);
  return dual_basis(std::move(lattice), i);
}

Covector Covector::from_integers(LatticePtr lattice, const std::vector<long>& coords) {
  RationalVector c;
  for (long x : coords) c.emplace_back(x);
  return Covector(std::move(lattice), std::move(c));
}

bool Covector::integral() const {
  for (const auto& q : coords_)
    if (!is_integral(q)) return false;
  return true;
}

Covector Covector::operator+(const Covector& other) const {
  require_same(lattice_, other.lattice_);
  RationalVector c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return Covector(lattice_, std::move(c));
}

Covector Covector::operator-() const { return *this * Rational(-1); }

Covector Covector::operator*(const Rational& k) const {
  RationalVector c = coords_;
  for (auto& x : c) x *= k;
  return Covector(lattice_, std::move(c));
}

bool operator==(const Covector& a, const Covector& b) {
  return (a.lattice_ == b.lattice_ || *a.lattice_ == *b.lattice_) && a.coords_ == b.coords_;
}

Rational pair(const Character& chi, const Covector& f) {
  require_same(chi.lattice(), f.lattice());
  Rational s = 0;
  for (std::size_t i = 0; i < chi.coords().size(); ++i) s += Rational(chi[i]) * f.coords()[i];
  return canonical(s);
}

SimpleRootSet::SimpleRootSet(LatticePtr lattice, std::vector<SimpleRoot> roots)
    : lattice_(std::move(lattice)), roots_(std::move(roots)) {
  for (const auto& r : roots_) {
    require_same(lattice_, r.root.lattice());
    require_same(lattice_, r.coroot.lattice());
    if (pair(r.root, r.coroot) != 2)
      throw UsageError("simple root '" + r.label + "' does not pair to 2 with its coroot");
  }
}

bool is_antidominant(const Covector& v, const SimpleRootSet& roots) {
  for (const auto& r : roots.roots())
    if (pair(r.root, v) > 0) return false;
  return true;
}

std::vector<SimpleRoot> gl_simple_roots(const LatticePtr& lattice, const std::vector<std::size_t>& indices,
                                        const std::string& label_prefix, int sign) {
  std::vector<SimpleRoot> out;
  for (std::size_t k = 0; k + 1 < indices.size(); ++k) {
    IntegerVector root(lattice->rank(), 0);
    RationalVector coroot(lattice->rank(), 0);
    root[indices[k]] = sign;
    root[indices[k + 1]] = -sign;
    coroot[indices[k]] = sign;
    coroot[indices[k + 1]] = -sign;
    out.push_back({label_prefix + std::to_string(k + 1), Character(lattice, root), Covector(lattice, coroot)});
  }
  return out;
}

}  // namespace sphemb
