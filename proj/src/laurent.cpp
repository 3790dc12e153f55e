#include "sphemb/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace sphemb {

Laurent::Laurent(const Rational& c) {
  if (c != 0) coeffs_.push_back(canonical(c));
}

Laurent Laurent::monomial(const Rational& c, int exponent) {
  Laurent p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

void Laurent::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

std::optional<int> Laurent::order() const {
  if (is_zero()) return std::nullopt;
  return low_;
}

std::optional<int> Laurent::degree() const {
  if (is_zero()) return std::nullopt;
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational Laurent::coefficient(int exponent) const {
  long k = static_cast<long>(exponent) - low_;
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(*degree(), *o.degree());
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k + static_cast<std::size_t>(low_ - lo)] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k + static_cast<std::size_t>(o.low_ - lo)] += o.coeffs_[k];
  low_ = lo;
  coeffs_ = std::move(c);
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent& Laurent::operator*=(const Laurent& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Laurent();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  low_ += o.low_;
  coeffs_ = std::move(c);
  trim();
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Rational Laurent::evaluate(const Rational& t) const {
  if (is_zero()) return 0;
  if (low_ < 0 && t == 0) throw DomainError("negative power of t evaluated at 0");
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
  Rational scale = 1;
  Rational base = low_ >= 0 ? t : Rational(1) / t;
  for (int e = 0; e < std::abs(low_); ++e) scale *= base;
  return canonical(acc * scale);
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    int e = low_ + static_cast<int>(k);
    const Rational& c = coeffs_[k];
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    Rational a = abs(c);
    if (e == 0 || a != 1) out << sphemb::to_string(a);
    if (e != 0) out << (e == 0 || a != 1 ? "*" : "") << "t" << (e != 1 ? "^" + std::to_string(e) : "");
    first = false;
  }
  return out.str();
}

PolyMatrix to_poly(const RationalMatrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Laurent(m(i, j));
  return p;
}

RationalMatrix at_zero(const PolyMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto o = m(i, j).order();
      if (o && *o < 0) throw DomainError("limit does not exist: negative power of t");
      r(i, j) = m(i, j).constant();
    }
  return r;
}

std::optional<int> min_order(const PolyMatrix& m) {
  std::optional<int> best;
  for (const auto& e : m.entries()) {
    auto o = e.order();
    if (o && (!best || *o < *best)) best = o;
  }
  return best;
}

RationalMatrix coefficient_matrix(const PolyMatrix& m, int exponent) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).coefficient(exponent);
  return r;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      a.add_row(i, c, -f);
      inv.add_row(i, c, -f);
    }
  }
  return inv;
}

}  // namespace sphemb
