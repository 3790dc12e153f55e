#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphemb/families.hpp"
#include "sphemb/model_json.hpp"
#include "support.hpp"

using namespace sphemb;

namespace {

void check_same_model(const SphericalDivisorModel& a, const SphericalDivisorModel& b) {
  CHECK(a.name == b.name);
  CHECK(*a.lattice == *b.lattice);
  CHECK(a.labels() == b.labels());
  CHECK(a.aliases == b.aliases);
  CHECK(a.provisional == b.provisional);
  REQUIRE(a.colors.size() == b.colors.size());
  for (std::size_t i = 0; i < a.colors.size(); ++i) {
    CHECK(a.colors[i].functional.coords() == b.colors[i].functional.coords());
    CHECK(a.colors[i].canonical_coefficient == b.colors[i].canonical_coefficient);
  }
  REQUIRE(a.boundaries.size() == b.boundaries.size());
  for (std::size_t i = 0; i < a.boundaries.size(); ++i)
    CHECK(a.boundaries[i].valuation.coords() == b.boundaries[i].valuation.coords());
  REQUIRE(a.basis_characters.size() == b.basis_characters.size());
  for (std::size_t i = 0; i < a.basis_characters.size(); ++i)
    CHECK(a.basis_characters[i].coords() == b.basis_characters[i].coords());
  CHECK(a.simple_roots.size() == b.simple_roots.size());
}

std::vector<SphericalDivisorModel> all_models() {
  std::vector<SphericalDivisorModel> out;
  for (int m = 1; m <= 4; ++m) out.push_back(monoid_model(m));
  for (auto c : testsupport::admissible_circular(4)) out.push_back(circular_complexes_model(c.m, c.n, c.r, c.s));
  out.push_back(determinantal_provisional_model(3, 4, 2));
  return out;
}

}  // namespace

TEST_CASE("model documents round-trip exactly") {
  for (const auto& model : all_models()) {
    CAPTURE(model.name);
    Json doc = model_to_json(model);
    auto back = model_from_json(doc);
    check_same_model(model, back);
    CHECK(model_to_json(back).dump() == doc.dump());
    CHECK(model_to_json(model_from_json(Json::parse(doc.dump()))).dump() == doc.dump());
  }
}

TEST_CASE("rational values survive the text form") {
  auto model = monoid_model(2);
  model.boundaries[0].valuation = model.boundaries[0].valuation * Rational(-3, 7);
  Json doc = model_to_json(model);
  auto back = model_from_json(doc);
  CHECK(back.boundaries[0].valuation.coords() == model.boundaries[0].valuation.coords());
  CHECK(model_to_json(back).dump() == doc.dump());
}

TEST_CASE("scalar encodings") {
  CHECK(to_json(Integer(-5)) == Json(-5));
  Integer big("123456789012345678901234567890");
  CHECK(to_json(big) == Json("123456789012345678901234567890"));
  CHECK(integer_from_json(to_json(big)) == big);
  CHECK(to_json(Rational(2, 4)) == Json("1/2"));
  CHECK(rational_from_json(Json("-6/4")) == Rational(-3, 2));
  CHECK_THROWS_AS(integer_from_json(Json("x")), UsageError);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), UsageError);
  AbelianGroupPresentation g{2, {Integer(2), Integer(4)}};
  CHECK(to_json(g).dump() == R"({"free_rank":2,"invariant_factors":[2,4]})");
}

TEST_CASE("malformed documents are usage errors") {
  Json doc = model_to_json(monoid_model(2));
  CHECK_THROWS_AS(model_from_json(Json::object()), UsageError);
  auto broken = doc;
  broken["lattice"]["rank"] = 7;
  CHECK_THROWS_AS(model_from_json(broken), UsageError);
  auto bad_value = doc;
  bad_value["boundaries"][0]["valuation"][0] = "one";
  CHECK_THROWS_AS(model_from_json(bad_value), UsageError);
}
