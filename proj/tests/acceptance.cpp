// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "sphemb/cli.hpp"
#include "sphemb/families.hpp"
#include "sphemb/oracle.hpp"
#include "support.hpp"

using namespace sphemb;
using namespace testsupport;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

Json cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out;
  int c = cli::run(args, out);
  if (code) *code = c;
  return Json::parse(out.str());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string circ_name(const Circ& c) {
  return "circular:m=" + std::to_string(c.m) + ",n=" + std::to_string(c.n) + ",r=" + std::to_string(c.r) +
         ",s=" + std::to_string(c.s);
}

Verdict ac1() {
  Verdict v;
  for (int m = 1; m <= 6; ++m) {
    int code = 0;
    Json r = cli({"class-group", "--family", "monoid:m=" + std::to_string(m)}, &code)["result"];
    Json gens = Json::array();
    for (int i = 1; i < m; ++i) gens.push_back("D_" + std::to_string(i));
    v.expect(code == 0 && r["free_rank"] == m - 1 && r["invariant_factors"].empty() && r["generators"] == gens,
             "m=" + std::to_string(m));
    auto model = monoid_model(m);
    v.expect(reference_cokernel(relation_matrix(model)) == AbelianGroupPresentation{static_cast<std::size_t>(m - 1), {}},
             "minor oracle m=" + std::to_string(m));
  }
  return v;
}

Verdict ac2() {
  Verdict v;
  for (int m = 1; m <= 6; ++m) {
    Json r = cli({"gorenstein", "--family", "monoid:m=" + std::to_string(m)})["result"];
    v.expect(r["gorenstein"] == (m == 1), "m=" + std::to_string(m));
  }
  return v;
}

// Monoid relations, one per basis character.
Divisor monoid_relation(int m, int i) {
  auto X = [](int j) { return boundary_label("X_" + std::to_string(j)); };
  auto D = [](int j) { return color_label("D_" + std::to_string(j)); };
  Divisor d;
  if (i == m + 1) {
    for (int j = 1; j <= m; ++j) d.add(X(j), 1);
    d.add(D(1), -1);
  } else {
    for (int j = 0; j < i; ++j) d.add(X(j), 1);
    if (i < m) d.add(D(i), 1);
    if (i > 1) d.add(D(i - 1), -1);
  }
  return d;
}

Verdict ac3() {
  Verdict v;
  for (int m = 2; m <= 6; ++m) {
    auto model = monoid_model(m);
    for (int i = 1; i <= m + 1; ++i)
      v.expect(principal_divisor(model, Character::unit(model.lattice, i - 1)) == monoid_relation(m, i),
               "m=" + std::to_string(m) + " eps_" + std::to_string(i));
  }
  return v;
}

Verdict ac4() {
  Verdict v;
  for (int m = 1; m <= 6; ++m) {
    auto model = monoid_model(m);
    Divisor all;
    for (int i = 0; i <= m; ++i) all.add(boundary_label("X_" + std::to_string(i)), 1);
    auto p = is_principal(model, all);
    auto want = Character::unit(model.lattice, 0) + Character::unit(model.lattice, m);
    v.expect(class_of(model, all).is_zero() && p.principal && p.witness && *p.witness == want, "m=" + std::to_string(m));
    v.expect(in_row_lattice(relation_matrix(model), divisor_vector(model, all)), "lattice oracle m=" + std::to_string(m));
  }
  return v;
}

Verdict ac5() {
  Verdict v;
  int cases = 0;
  for (int m = 2; m <= 5; ++m)
    for (int r = 1; r <= m - 1; ++r) {
      Circ c{m, m, r, m - r};
      auto model = circular_complexes_model(c.m, c.n, c.r, c.s);
      auto cl = class_group(model);
      Divisor k = canonical_divisor(model);
      v.expect(model.boundaries.size() == 2, circ_name(c) + " boundaries");
      v.expect(cl.presentation() == AbelianGroupPresentation{2, {}}, circ_name(c) + " rank");
      v.expect(cl.generator_names() == std::vector<std::string>{"D_r1", "D_r2"}, circ_name(c) + " generators");
      v.expect(cl.class_of(k).is_zero() && in_row_lattice(relation_matrix(model), divisor_vector(model, k)),
               circ_name(c) + " canonical");
      ++cases;
    }
  v.expect(cases == 10, "case count");
  return v;
}

Verdict ac6() {
  Verdict v;
  for (int m = 2; m <= 5; ++m)
    for (int n = m + 1; n <= 5; ++n)
      for (int r = 1; r <= m - 1; ++r) {
        Circ c{m, n, r, m - r};
        auto model = circular_complexes_model(c.m, c.n, c.r, c.s);
        auto cl = class_group(model);
        Divisor k = canonical_divisor(model);
        v.expect(cl.presentation() == AbelianGroupPresentation{1, {}}, circ_name(c) + " rank");
        v.expect(cl.generator_names() == std::vector<std::string>{"D_r1"}, circ_name(c) + " generator");
        v.expect(cl.class_of(k) == DivisorClass{{2 * (n - m)}, {}}, circ_name(c) + " canonical");
        Divisor expected = single(model, "D_r1", 2 * (n - m));
        v.expect(in_row_lattice(relation_matrix(model), divisor_vector(model, k - expected)), circ_name(c) + " oracle");
      }
  return v;
}

Verdict ac7() {
  Verdict v;
  for (auto c : admissible_circular(5)) {
    if (c.r + c.s >= c.m) continue;
    auto model = circular_complexes_model(c.m, c.n, c.r, c.s);
    auto cl = class_group(model);
    auto rel = relation_matrix(model);
    v.expect(cl.named_generators() && cl.presentation().invariant_factors.empty(), circ_name(c) + " named");
    std::vector<IntegerVector> gens;
    for (const auto& g : cl.generator_names()) gens.push_back(divisor_vector(model, single(model, g)));
    v.expect(generates_free_quotient(rel, gens), circ_name(c) + " free on generators");
    // (n - m)(D_r1 + D_s1), a term omitted when r or s is 0
    Divisor expected;
    if (c.r > 0) expected = expected + single(model, "D_r1", c.n - c.m);
    if (c.s > 0) expected = expected + single(model, "D_s1", c.n - c.m);
    Divisor k = canonical_divisor(model);
    v.expect(cl.class_of(k) == cl.class_of(expected), circ_name(c) + " canonical");
    v.expect(in_row_lattice(rel, divisor_vector(model, k - expected)), circ_name(c) + " oracle");
  }
  return v;
}

Verdict ac8() {
  Verdict v;
  for (auto c : admissible_circular(5)) {
    Json r = cli({"gorenstein", "--family", circ_name(c)})["result"];
    v.expect(r["gorenstein"] == (c.m == c.n), circ_name(c));
    // the swapped spelling agrees
    Json s = cli({"gorenstein", "--family", "circular:m=" + std::to_string(c.n) + ",n=" + std::to_string(c.m) +
                                                ",r=" + std::to_string(c.s) + ",s=" + std::to_string(c.r)})["result"];
    v.expect(s["gorenstein"] == r["gorenstein"], circ_name(c) + " swapped");
  }
  return v;
}

Verdict ac9() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  for (auto c : admissible_circular(4)) {
    std::size_t k = c.r + c.s;
    std::size_t dim = orbit_dimension(circular_complexes_realization(c.m, c.n, c.r, c.s));
    v.expect(dim == k * (c.m + c.n - k), circ_name(c) + " dim " + std::to_string(dim));
  }
  double secs = seconds_since(t0);
  v.expect(secs < 10, "took " + std::to_string(secs) + " s");
  if (v.ok) v.note = std::to_string(secs).substr(0, 5) + " s";
  return v;
}

Verdict ac10() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  for (int m = 1; m <= 4; ++m) {
    auto model = monoid_model(m);
    auto real = monoid_realization(m);
    std::vector<std::string> names{"d"};
    for (int k = 1; k <= m; ++k) names.push_back("A_lead_" + std::to_string(k));
    auto report = verify_boundary_valuations(model, real, names, 8, kDefaultSeed);
    std::size_t valuations = 0;
    for (const auto& rec : report.records)
      if (rec.check == "boundary_valuation") ++valuations;
    v.expect(report.pass() && report.stable(), "m=" + std::to_string(m));
    v.expect(valuations == names.size() * (m + 1), "record count m=" + std::to_string(m));

    auto corrupted = model;
    corrupted.boundaries[1].valuation = corrupted.boundaries[1].valuation * Rational(2);
    auto bad = verify_boundary_valuations(corrupted, real, names, 8, kDefaultSeed);
    auto mism = bad.mismatches();
    bool at_x1 = !mism.empty();
    for (const auto* rec : mism) at_x1 = at_x1 && rec->inputs["boundary"] == "X_1";
    v.expect(!bad.pass() && at_x1, "negative control m=" + std::to_string(m));
  }
  double secs = seconds_since(t0);
  v.expect(secs < 30, "took " + std::to_string(secs) + " s");
  if (v.ok) v.note = std::to_string(secs).substr(0, 5) + " s";
  return v;
}

Verdict ac11() {
  Verdict v;
  auto check = [&](const SphericalDivisorModel& model) {
    auto rep = validate_model(model);
    v.expect(rep.ok(), model.name + ": " + rep.summary());
    for (const auto& b : model.boundaries)
      v.expect(is_antidominant(b.valuation, model.simple_roots), model.name + " " + b.label.id);
  };
  for (int m = 1; m <= 6; ++m) check(monoid_model(m));
  for (auto c : admissible_circular(5)) check(circular_complexes_model(c.m, c.n, c.r, c.s));
  for (auto [m, n, r] : std::vector<std::array<int, 3>>{{2, 3, 1}, {3, 3, 1}, {3, 3, 2}, {3, 4, 2}})
    check(complete_determinantal_model(m, n, r).model);
  return v;
}

Verdict ac12() {
  Verdict v;
  Rng rng(20240607);
  int snf_cases = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t rows = uniform(rng, 1, 6), cols = uniform(rng, 1, 6);
    IntegerMatrix a = random_integer_matrix(rng, rows, cols, -20, 20);
    auto s = smith_normal_form(a);
    bool ok = s.U * a * s.V == s.D && abs(leibniz_det(s.U)) == 1 && abs(leibniz_det(s.V)) == 1;
    auto diag = s.diagonal();
    for (std::size_t i = 0; ok && i < rows; ++i)
      for (std::size_t j = 0; ok && j < cols; ++j)
        if (i != j && s.D(i, j) != 0) ok = false;
    for (std::size_t i = 0; ok && i + 1 < diag.size(); ++i)
      ok = diag[i] >= 0 && (diag[i] == 0 ? diag[i + 1] == 0 : diag[i + 1] % diag[i] == 0);
    auto profile = minor_profile(a);
    IntegerVector nonzero;
    for (const auto& d : diag)
      if (d != 0) nonzero.push_back(d);
    ok = ok && nonzero == profile.factors;
    v.expect(ok, "snf trial " + std::to_string(trial));
    ++snf_cases;
  }

  std::vector<SphericalDivisorModel> models;
  for (int m = 1; m <= 5; ++m) models.push_back(monoid_model(m));
  for (auto c : admissible_circular(4)) models.push_back(circular_complexes_model(c.m, c.n, c.r, c.s));
  auto random_char = [&](const LatticePtr& lat) {
    IntegerVector c(lat->rank());
    for (auto& x : c) x = uniform(rng, -12, 12);
    return Character(lat, c);
  };
  int hom = 0, cls = 0;
  while (hom < 200) {
    for (const auto& model : models) {
      auto a = random_char(model.lattice), b = random_char(model.lattice);
      v.expect(principal_divisor(model, a + b) == principal_divisor(model, a) + principal_divisor(model, b),
               "principal homomorphism " + model.name);
      v.expect(class_of(model, principal_divisor(model, a)).is_zero(), "class of principal " + model.name);
      ++hom;
      ++cls;
    }
  }
  auto w = synthetic_wonderful_model(3, 2);
  int whom = 0;
  for (; whom < 200; ++whom) {
    IntegerVector ca(w.lattice->rank(), 0), cb(w.lattice->rank(), 0);
    for (int i = 0; i < 3; ++i) {
      ca[i] = ca[3 + i] = uniform(rng, -12, 12);
      cb[i] = cb[3 + i] = uniform(rng, -12, 12);
    }
    for (int j = 0; j < 2; ++j) {
      ca[6 + j] = uniform(rng, -12, 12);
      cb[6 + j] = uniform(rng, -12, 12);
    }
    Character a(w.lattice, ca), b(w.lattice, cb);
    v.expect(wonderful_section_divisor(w, a + b) == wonderful_section_divisor(w, a) + wonderful_section_divisor(w, b),
             "wonderful homomorphism");
  }
  if (v.ok)
    v.note = std::to_string(snf_cases) + " snf, " + std::to_string(hom) + " + " + std::to_string(whom) +
             " homomorphism pairs, " + std::to_string(cls) + " principal classes";
  return v;
}

Verdict ac13() {
  Verdict v;
  for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 2}}) {
    auto w = synthetic_wonderful_model(k, l);
    for (int i = 1; i <= k; ++i) {
      std::string chi = "varpi_" + std::to_string(i) + "_1:1,varpi_" + std::to_string(i) + "_2:1";
      Json r = cli({"wonderful-section", "--family", w.name, "--chi", chi})["result"];
      v.expect(r["divisor"] == Json{{"D_" + std::to_string(i), 1}}, w.name + " paired " + std::to_string(i));
    }
    for (int j = k + 1; j <= k + l; ++j) {
      std::string chi = "varpi_" + std::to_string(j) + ":1";
      Json r = cli({"wonderful-section", "--family", w.name, "--chi", chi})["result"];
      v.expect(r["divisor"] == Json{{"D_" + std::to_string(j), 1}}, w.name + " single " + std::to_string(j));
    }
  }
  return v;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"AC1 monoid class group free of rank m-1, m = 1..6", ac1},
      {"AC2 monoid Gorenstein iff m = 1", ac2},
      {"AC3 monoid relations reproduced, m = 2..6", ac3},
      {"AC4 dilation divisor principal with witness eps_1+eps_{m+1}", ac4},
      {"AC5 circular case (i): two boundaries, Cl free on D_r1, D_r2, K trivial", ac5},
      {"AC6 circular case (ii): Cl = Z, K = 2(n-m) D_r1", ac6},
      {"AC7 circular case (iii): K = (n-m)(D_r1 + D_s1)", ac7},
      {"AC8 circular Gorenstein iff m = n", ac8},
      {"AC9 orbit dimension (r+s)(m+n-r-s), m,n <= 4", ac9},
      {"AC10 oracle and model boundary valuations agree, m <= 4", ac10},
      {"AC11 every family model validates", ac11},
      {"AC12 property suites", ac12},
      {"AC13 wonderful section divisors", ac13},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.ok) ++failures;
    std::cout << (v.ok ? "PASS " : "FAIL ") << name;
    if (!v.note.empty()) std::cout << " (" << v.note << ")";
    std::cout << "\n";
  }
  return failures ? 1 : 0;
}
