#include "sphemb/oracle.hpp"

#include <algorithm>

namespace sphemb {

namespace {

Json order_json(const std::optional<int>& o) { return o ? Json(*o) : Json("inf"); }

// c with q == 2^c, if any.
std::optional<long> exact_log2(const Rational& q) {
  if (q <= 0) return std::nullopt;
  auto pow2 = [](Integer z) -> std::optional<long> {
    long k = 0;
    while (z % 2 == 0) {
      z /= 2;
      ++k;
    }
    if (z != 1) return std::nullopt;
    return k;
  };
  auto a = pow2(q.get_num());
  auto b = pow2(q.get_den());
  if (!a || !b) return std::nullopt;
  return *a - *b;
}

Rational value_at(const SemiInvariantSpec& f, const Point& x) {
  Laurent v = f.evaluate(x);
  if (!v.is_constant()) throw UsageError("semi-invariant '" + f.name + "' is not constant at a constant point");
  return v.constant();
}

// Random translate of the base point where f does not vanish.
std::optional<std::pair<Point, Rational>> generic_point(const MatrixRealization& real, const SemiInvariantSpec& f,
                                                        Rng& rng) {
  for (int attempt = 0; attempt < 6; ++attempt) {
    Point x = real.act(real.group_sampler(rng), real.base_point);
    Rational v = value_at(f, x);
    if (v != 0) return std::pair{std::move(x), v};
  }
  return std::nullopt;
}

RationalVector flatten_first_order(const Point& y) {
  RationalVector row;
  for (const auto& block : y) {
    RationalMatrix c = coefficient_matrix(block, 1);
    row.insert(row.end(), c.entries().begin(), c.entries().end());
  }
  return row;
}

}  // namespace

TOrderResult t_order(const MatrixRealization& real, const SemiInvariantSpec& f, const std::string& curve,
                     std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw UsageError("t_order needs at least one trial");
  Rng rng(seed);
  Point on_curve = real.curve_point(curve);
  TOrderResult result;
  result.trials = trials;
  for (std::size_t k = 0; k < trials; ++k) {
    Point x = real.act(real.group_sampler(rng), on_curve);
    result.per_trial.push_back(f.evaluate(x).order());
  }
  for (const auto& o : result.per_trial)
    if (o && (!result.order || *o < *result.order)) result.order = o;
  result.stable = std::all_of(result.per_trial.begin(), result.per_trial.end(),
                              [&](const auto& o) { return o == result.per_trial.front(); });
  return result;
}

LimitSignature limit_signature(const MatrixRealization& real, const std::string& curve) {
  Point x = real.curve_point(curve);
  LimitSignature sig;
  for (const auto& block : x) {
    sig.limit_point.push_back(at_zero(block));
    sig.rank_profile.push_back(rank(sig.limit_point.back()));
  }
  return sig;
}

std::size_t orbit_dimension_at(const MatrixRealization& real, const Point& x) {
  std::vector<RationalVector> rows;
  for (const auto& direction : real.lie_basis) rows.push_back(flatten_first_order(real.act(tangent_element(direction), x)));
  if (rows.empty()) return 0;
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return rank(m);
}

std::size_t orbit_dimension(const MatrixRealization& real, std::uint64_t seed) {
  std::size_t at_base = orbit_dimension_at(real, real.base_point);
  Rng rng(seed);
  Point moved = real.act(real.group_sampler(rng), real.base_point);
  if (orbit_dimension_at(real, moved) != at_base)
    throw OracleInstability("orbit dimension differs at a translate of the base point");
  return at_base;
}

SemiInvarianceResult semiinvariance_check(const MatrixRealization& real, const SemiInvariantSpec& f,
                                          std::size_t trials, std::uint64_t seed) {
  SemiInvarianceResult out;
  Rng rng(seed);
  auto start = generic_point(real, f, rng);
  if (!start) {
    out.detail = "vanishes at every sampled point";
    return out;
  }
  const auto& [x, fx] = *start;

  IntegerVector weight;
  for (const auto& probe : real.torus_probes) {
    Rational ratio = value_at(f, real.act(torus_element(probe.exponents, 2), x)) / fx;
    auto c = exact_log2(canonical(ratio));
    if (!c) {
      out.detail = "torus probe " + probe.label + " scales by " + to_string(canonical(ratio));
      return out;
    }
    weight.push_back(*c);
  }
  Character chi(real.weight_lattice, weight);

  for (std::size_t k = 0; k < trials; ++k) {
    auto p = generic_point(real, f, rng);
    if (!p) {
      out.detail = "vanishes at every sampled point";
      return out;
    }
    GroupElement b = real.borel_sampler(rng);
    Rational expected = canonical(p->second / real.torus_value(b, chi));
    Rational actual = value_at(f, real.act(b, p->first));
    if (actual != expected) {
      out.detail = "Borel translate gives " + to_string(actual) + ", weight " + chi.to_string() + " predicts " +
                   to_string(expected);
      return out;
    }
  }
  out.semi_invariant = true;
  out.weight = chi;
  out.matches_claim = !f.claimed_weight || *f.claimed_weight == chi;
  if (!out.matches_claim) out.detail = "claimed " + f.claimed_weight->to_string() + ", found " + chi.to_string();
  return out;
}

bool OracleReport::pass() const {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.match && r.stable; });
}

bool OracleReport::stable() const {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.stable; });
}

std::vector<const OracleRecord*> OracleReport::mismatches() const {
  std::vector<const OracleRecord*> out;
  for (const auto& r : records)
    if (!r.match || !r.stable) out.push_back(&r);
  return out;
}

Json OracleReport::to_json() const {
  Json recs = Json::array();
  for (const auto& r : records)
    recs.push_back(Json{{"check", r.check},
                        {"inputs", r.inputs},
                        {"model_value", r.model_value},
                        {"oracle_value", r.oracle_value},
                        {"match", r.match},
                        {"trials", r.trials},
                        {"stable", r.stable}});
  return Json{{"pass", pass()}, {"stable", stable()}, {"records", recs}};
}

namespace {

OracleRecord semi_invariance_record(const SemiInvariantSpec& f, const SemiInvarianceResult& sc, std::size_t trials) {
  OracleRecord rec;
  rec.check = "semi_invariance";
  rec.inputs = Json{{"semi_invariant", f.name}};
  rec.model_value = f.claimed_weight ? Json(f.claimed_weight->to_string()) : Json(nullptr);
  rec.oracle_value = sc.weight ? Json(sc.weight->to_string()) : Json(sc.detail);
  rec.match = sc.semi_invariant && sc.matches_claim;
  rec.trials = trials;
  return rec;
}

const Cocharacter* curve_for_boundary(const MatrixRealization& real, const std::string& id) {
  for (const auto& c : real.curves)
    if (c.boundary && *c.boundary == id) return &c;
  return nullptr;
}

}  // namespace

OracleReport verify_boundary_valuations(const SphericalDivisorModel& model, const MatrixRealization& real,
                                        const std::vector<std::string>& semi_invariants, std::size_t trials,
                                        std::uint64_t seed) {
  OracleReport report;
  for (const auto& name : semi_invariants) {
    const auto& f = real.semi_invariant(name);
    auto sc = semiinvariance_check(real, f, trials, seed);
    report.records.push_back(semi_invariance_record(f, sc, trials));
    if (!sc.semi_invariant) continue;
    const Character& chi = *sc.weight;

    for (const auto& b : model.boundaries) {
      OracleRecord rec;
      rec.check = "boundary_valuation";
      rec.trials = trials;
      const Cocharacter* curve = curve_for_boundary(real, b.label.id);
      rec.inputs = Json{{"boundary", b.label.id},
                        {"curve", curve ? Json(curve->label) : Json(nullptr)},
                        {"semi_invariant", name},
                        {"character", chi.to_string()}};
      Rational expected = pair(chi, b.valuation);
      rec.model_value = to_json(expected);
      if (!curve) {
        rec.oracle_value = "no curve realizes this boundary";
        report.records.push_back(std::move(rec));
        continue;
      }
      auto t = t_order(real, f, curve->label, trials, seed);
      rec.oracle_value = order_json(t.order);
      rec.stable = t.stable;
      rec.match = t.order && Rational(*t.order) == expected;
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

bool stabilizer_check(const MatrixRealization& real, const GroupElement& element) {
  return real.act(element, real.base_point) == real.base_point;
}

bool sampled_stabilizer_check(const MatrixRealization& real, bool respect, std::size_t trials, std::uint64_t seed) {
  if (!real.stabilizer_sampler) throw UsageError("realization " + real.family + " has no stabilizer sampler");
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k)
    if (!stabilizer_check(real, real.stabilizer_sampler(rng, respect))) return false;
  return true;
}

DerivedValuation derive_valuation(const MatrixRealization& real, const std::string& curve, std::size_t trials,
                                  std::uint64_t seed) {
  DerivedValuation out;
  std::vector<Character> weights;
  std::vector<Rational> orders;
  bool usable = true;
  for (const auto& f : real.semi_invariants) {
    auto sc = semiinvariance_check(real, f, trials, seed);
    out.records.push_back(semi_invariance_record(f, sc, trials));
    if (!sc.semi_invariant || !sc.matches_claim) continue;
    auto t = t_order(real, f, curve, trials, seed);
    OracleRecord rec;
    rec.check = "t_order";
    rec.inputs = Json{{"curve", curve}, {"semi_invariant", f.name}, {"character", sc.weight->to_string()}};
    rec.model_value = nullptr;
    rec.oracle_value = order_json(t.order);
    rec.match = t.order.has_value();
    rec.trials = trials;
    rec.stable = t.stable;
    out.records.push_back(rec);
    if (!t.stable || !t.order) {
      usable = false;
      continue;
    }
    weights.push_back(*sc.weight);
    orders.push_back(*t.order);
  }
  const std::size_t n = real.weight_lattice->rank();
  if (!usable || weights.empty()) return out;
  RationalMatrix w(weights.size(), n);
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = weights[i][j];
  if (rank(w) < n) return out;
  // Normal equations are exact here: W has full column rank.
  RationalMatrix wt = w.transpose();
  auto normal_inverse = inverse(wt * w);
  if (!normal_inverse) return out;
  RationalMatrix rhs(weights.size(), 1);
  for (std::size_t i = 0; i < orders.size(); ++i) rhs(i, 0) = orders[i];
  RationalMatrix nu = *normal_inverse * (wt * rhs);
  if (!(w * nu == rhs)) return out;  // orders are not linear in the weight
  RationalVector coords;
  for (std::size_t j = 0; j < n; ++j) coords.push_back(canonical(nu(j, 0)));
  out.valuation = Covector(real.weight_lattice, coords);
  return out;
}

std::vector<SemiInvariantSpec> filter_semi_invariants(const MatrixRealization& real,
                                                      std::vector<SemiInvariantSpec> candidates, std::size_t trials,
                                                      std::uint64_t seed) {
  std::vector<SemiInvariantSpec> kept;
  for (auto& f : candidates) {
    auto sc = semiinvariance_check(real, f, trials, seed);
    if (!sc.semi_invariant || !sc.matches_claim) continue;
    if (sc.weight->coords() == IntegerVector(sc.weight->coords().size(), 0)) continue;  // constants add nothing
    f.claimed_weight = sc.weight;
    kept.push_back(std::move(f));
  }
  return kept;
}

}  // namespace sphemb
