#include "sphemb/divisor_model.hpp"

#include <set>
#include <sstream>

namespace sphemb {

std::string to_string(DivisorKind kind) { return kind == DivisorKind::Boundary ? "boundary" : "color"; }

void Divisor::add(const DivisorLabel& label, const Integer& k) {
  if (k == 0) return;
  auto [it, inserted] = terms_.try_emplace(label, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer Divisor::coefficient(const DivisorLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Integer(0) : it->second;
}

Divisor Divisor::operator+(const Divisor& other) const {
  Divisor d = *this;
  for (const auto& [l, k] : other.terms_) d.add(l, k);
  return d;
}

Divisor Divisor::operator-(const Divisor& other) const { return *this + (-other); }

Divisor Divisor::operator-() const { return *this * Integer(-1); }

Divisor Divisor::operator*(const Integer& k) const {
  Divisor d;
  for (const auto& [l, c] : terms_) d.add(l, c * k);
  return d;
}

std::string Divisor::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [label, c] : terms_) {
    if (c < 0)
      out << "-";
    else if (!first)
      out << "+";
    if (abs(c) != 1) out << Integer(abs(c)).get_str() << "*";
    out << label.id;
    first = false;
  }
  return first ? "0" : out.str();
}

std::vector<DivisorLabel> SphericalDivisorModel::labels() const {
  std::vector<DivisorLabel> out;
  out.reserve(boundaries.size() + colors.size());
  for (const auto& b : boundaries) out.push_back(b.label);
  for (const auto& c : colors) out.push_back(c.label);
  return out;
}

std::size_t SphericalDivisorModel::label_index(const DivisorLabel& label) const {
  auto all = labels();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == label) return i;
  throw UsageError("label '" + label.id + "' does not belong to model " + name);
}

DivisorLabel SphericalDivisorModel::resolve(const std::string& id) const {
  std::string target = id;
  for (const auto& a : aliases)
    if (a.alias == id) target = a.target;
  for (const auto& l : labels())
    if (l.id == target) return l;
  throw UsageError("label '" + id + "' does not belong to model " + name);
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) out << "; ";
    out << failures[i].check << ": " << failures[i].detail;
  }
  return out.str();
}

ValidationReport validate_model(const SphericalDivisorModel& model) {
  ValidationReport report;
  auto fail = [&](std::string check, std::string detail) {
    report.failures.push_back({std::move(check), std::move(detail)});
  };
  if (!model.lattice) {
    fail("lattice", "model has no lattice");
    return report;
  }
  const auto& lattice = *model.lattice;

  std::set<std::string> ids;
  for (const auto& l : model.labels())
    if (!ids.insert(l.id).second) fail("unique_labels", "duplicate label '" + l.id + "'");
  for (const auto& a : model.aliases) {
    if (ids.count(a.alias)) fail("unique_labels", "alias '" + a.alias + "' shadows a label");
    if (!ids.count(a.target)) fail("unique_labels", "alias '" + a.alias + "' points to unknown '" + a.target + "'");
  }
  for (const auto& b : model.boundaries)
    if (b.label.kind != DivisorKind::Boundary) fail("label_kind", "'" + b.label.id + "' listed as boundary");
  for (const auto& c : model.colors)
    if (c.label.kind != DivisorKind::Color) fail("label_kind", "'" + c.label.id + "' listed as color");

  // The basis characters must generate X(T): square, unimodular coordinate matrix.
  IntegerMatrix basis(model.basis_characters.size(), lattice.rank());
  bool basis_ok = true;
  for (std::size_t i = 0; i < model.basis_characters.size(); ++i) {
    const auto& chi = model.basis_characters[i];
    if (!(*chi.lattice() == lattice)) {
      basis_ok = false;
      continue;
    }
    for (std::size_t j = 0; j < lattice.rank(); ++j) basis(i, j) = chi[j];
  }
  if (!basis_ok) {
    fail("basis_generates", "basis character on a foreign lattice");
  } else {
    auto snf = smith_normal_form(basis);
    bool unimodular = basis.rows() == basis.cols() && snf.rank() == lattice.rank();
    for (std::size_t i = 0; unimodular && i < snf.rank(); ++i) unimodular = snf.D(i, i) == 1;
    if (!unimodular) fail("basis_generates", "basis characters do not form a basis of X(T)");
  }

  auto check_integral = [&](const std::string& id, const Covector& f) {
    if (!(*f.lattice() == lattice)) {
      fail("integral", "'" + id + "' lives on a foreign lattice");
      return false;
    }
    if (!f.integral()) fail("integral", "'" + id + "' is not integral on X(T)");
    return true;
  };
  for (const auto& c : model.colors) check_integral(c.label.id, c.functional);
  for (const auto& b : model.boundaries) {
    if (!check_integral(b.label.id, b.valuation)) continue;
    for (const auto& r : model.simple_roots.roots()) {
      Rational v = pair(r.root, b.valuation);
      if (v > 0)
        fail("antidominant", "'" + b.label.id + "' pairs to " + to_string(v) + " with " + r.label);
    }
  }
  for (const auto& r : model.simple_roots.roots())
    if (pair(r.root, r.coroot) != 2) fail("coroot_normalization", r.label);
  return report;
}

Divisor principal_divisor(const SphericalDivisorModel& model, const Character& chi) {
  Divisor d;
  for (const auto& b : model.boundaries) {
    Rational v = pair(chi, b.valuation);
    if (!is_integral(v))
      throw DomainError("non-integral pairing " + to_string(v) + " on " + b.label.id);
    d.add(b.label, to_integer(v));
  }
  for (const auto& c : model.colors) {
    Rational v = pair(chi, c.functional);
    if (!is_integral(v))
      throw DomainError("non-integral pairing " + to_string(v) + " on " + c.label.id);
    d.add(c.label, to_integer(v));
  }
  return d;
}

IntegerMatrix relation_matrix(const SphericalDivisorModel& model) {
  auto labels = model.labels();
  IntegerMatrix r(model.basis_characters.size(), labels.size());
  for (std::size_t i = 0; i < model.basis_characters.size(); ++i) {
    Divisor d = principal_divisor(model, model.basis_characters[i]);
    for (std::size_t j = 0; j < labels.size(); ++j) r(i, j) = d.coefficient(labels[j]);
  }
  return r;
}

bool DivisorClass::is_zero() const {
  for (const auto& x : free)
    if (x != 0) return false;
  for (const auto& x : torsion)
    if (x != 0) return false;
  return true;
}

namespace {

void require_usable(const SphericalDivisorModel& model) {
  if (model.provisional)
    throw DomainError("model " + model.name + " is provisional; run the oracle to complete it");
  auto report = validate_model(model);
  if (!report.ok()) throw DomainError("model " + model.name + " failed validation: " + report.summary());
}

IntegerVector divisor_vector(const std::vector<DivisorLabel>& columns, const Divisor& d) {
  IntegerVector x(columns.size(), 0);
  for (const auto& [label, k] : d.terms()) {
    std::size_t j = 0;
    while (j < columns.size() && !(columns[j] == label)) ++j;
    if (j == columns.size()) throw UsageError("label '" + label.id + "' does not belong to the model");
    x[j] = k;
  }
  return x;
}

// Row vector times matrix.
IntegerVector row_times(const IntegerVector& x, const IntegerMatrix& m) {
  IntegerVector y(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

// Inverse of a unimodular integer matrix, column by column.
std::optional<IntegerMatrix> unimodular_inverse(const IntegerMatrix& f) {
  if (f.rows() != f.cols() || abs(determinant(f)) != 1) return std::nullopt;
  std::size_t n = f.rows();
  auto snf = smith_normal_form(f);
  IntegerMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    IntegerVector e(n, 0);
    e[j] = 1;
    auto sol = solve_integer(f, snf, e);
    if (!sol.x) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*sol.x)[i];
  }
  return inv;
}

}  // namespace

ClassGroup::ClassGroup(const SphericalDivisorModel& model) : columns_(model.labels()) {
  IntegerMatrix relations = relation_matrix(model);
  // Keep the column count even with no relations.
  if (relations.rows() == 0) relations = IntegerMatrix(0, columns_.size());
  snf_ = smith_normal_form(relations);
  presentation_ = cokernel(snf_);
  rank_ = snf_.rank();
  const std::size_t n = columns_.size();
  const std::size_t free_rank = presentation_.free_rank;

  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < n; ++j)
    if (columns_[j].kind == DivisorKind::Color) order.push_back(j);
  for (std::size_t j = 0; j < n; ++j)
    if (columns_[j].kind == DivisorKind::Boundary) order.push_back(j);

  std::vector<IntegerVector> kept_rows;
  std::vector<std::string> kept_names;
  for (std::size_t j : order) {
    if (kept_rows.size() == free_rank) break;
    IntegerVector y(snf_.V.row(j));
    IntegerVector f(y.begin() + static_cast<std::ptrdiff_t>(rank_), y.end());
    auto candidate = kept_rows;
    candidate.push_back(f);
    if (sphemb::rank(IntegerMatrix::from_rows(candidate)) == candidate.size()) {
      kept_rows = std::move(candidate);
      kept_names.push_back(columns_[j].id);
    }
  }
  std::optional<IntegerMatrix> inverse;
  if (kept_rows.size() == free_rank) {
    IntegerMatrix f = free_rank == 0 ? IntegerMatrix(0, 0) : IntegerMatrix::from_rows(kept_rows);
    inverse = unimodular_inverse(f);
  }
  if (inverse) {
    named_ = true;
    generator_names_ = std::move(kept_names);
    free_to_generators_ = std::move(*inverse);
  } else {
    named_ = false;
    for (std::size_t k = 0; k < free_rank; ++k) generator_names_.push_back("snf_" + std::to_string(k + 1));
    free_to_generators_ = IntegerMatrix::identity(free_rank);
  }
}

IntegerVector ClassGroup::snf_coordinates(const Divisor& d) const {
  return row_times(divisor_vector(columns_, d), snf_.V);
}

DivisorClass ClassGroup::class_of(const Divisor& d) const {
  IntegerVector y = snf_coordinates(d);
  DivisorClass c;
  for (std::size_t i = 0; i < rank_; ++i) {
    const Integer& di = snf_.D(i, i);
    if (di == 1) continue;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), di.get_mpz_t());
    c.torsion.push_back(r);
  }
  IntegerVector free(y.begin() + static_cast<std::ptrdiff_t>(rank_), y.end());
  c.free = row_times(free, free_to_generators_);
  return c;
}

ClassGroup class_group(const SphericalDivisorModel& model) {
  require_usable(model);
  return ClassGroup(model);
}

Divisor canonical_divisor(const SphericalDivisorModel& model) {
  Divisor k;
  for (const auto& b : model.boundaries) k.add(b.label, -1);
  for (const auto& c : model.colors) k.add(c.label, c.canonical_coefficient);
  return k;
}

DivisorClass class_of(const SphericalDivisorModel& model, const Divisor& d) {
  return class_group(model).class_of(d);
}

PrincipalityResult is_principal(const SphericalDivisorModel& model, const Divisor& d) {
  require_usable(model);
  auto columns = model.labels();
  IntegerVector target = divisor_vector(columns, d);
  IntegerMatrix r = relation_matrix(model);
  if (r.rows() == 0) r = IntegerMatrix(0, columns.size());
  // chi = sum x_k b_k with x R = d, i.e. R^T x = d.
  auto sol = solve_integer(r.transpose(), target);
  if (!sol.x) return {false, std::nullopt};
  Character witness = Character::zero(model.lattice);
  for (std::size_t k = 0; k < sol.x->size(); ++k)
    witness = witness + model.basis_characters[k] * (*sol.x)[k];
  return {true, witness};
}

bool is_gorenstein(const SphericalDivisorModel& model) {
  return is_principal(model, canonical_divisor(model)).principal;
}

bool WonderfulModel::in_picard_lattice(const Character& chi) const {
  for (const auto& c : paired)
    if (pair(chi, c.first_coroot) != pair(chi, c.second_coroot)) return false;
  return true;
}

Divisor wonderful_section_divisor(const WonderfulModel& model, const Character& chi) {
  if (!model.in_picard_lattice(chi))
    throw DomainError("character " + chi.to_string() + " is outside the Picard sublattice");
  Divisor d;
  for (const auto& c : model.paired) d.add(c.label, to_integer(pair(chi, c.first_coroot)));
  for (const auto& c : model.single) d.add(c.label, to_integer(pair(chi, c.coroot)));
  return d;
}

}  // namespace sphemb
