#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sphemb/rootdata.hpp"

using namespace sphemb;

namespace {

LatticePtr gl4() { return make_lattice({"eps_1", "eps_2", "eps_3", "eps_4"}); }

SimpleRootSet gl3_in_4(const LatticePtr& lat) { return SimpleRootSet(lat, gl_simple_roots(lat, {0, 1, 2}, "alpha_")); }

}  // namespace

TEST_CASE("pairing examples") {
  auto lat = gl4();
  auto roots = gl3_in_4(lat);
  const auto& a1 = roots.roots()[0];
  CHECK(pair(a1.root, a1.coroot) == 2);
  CHECK(pair(Character::unit(lat, "eps_1"), a1.coroot) == 1);
  CHECK(pair(Character::unit(lat, "eps_3"), a1.coroot) == 0);
  CHECK(pair(Character::unit(lat, "eps_2"), a1.coroot) == -1);
}

TEST_CASE("pairing is bilinear") {
  auto lat = gl4();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-9, 9);
  auto chi = [&] {
    IntegerVector c(4);
    for (auto& x : c) x = d(rng);
    return Character(lat, c);
  };
  auto cov = [&] {
    RationalVector c(4);
    for (auto& x : c) x = Rational(d(rng), 1 + (d(rng) + 9) % 4);
    for (auto& x : c) x.canonicalize();
    return Covector(lat, c);
  };
  for (int i = 0; i < 100; ++i) {
    auto a = chi(), b = chi();
    auto f = cov(), g = cov();
    CHECK(pair(a + b, f) == pair(a, f) + pair(b, f));
    CHECK(pair(a, f + g) == pair(a, f) + pair(a, g));
    CHECK(pair(a * 3, f) == 3 * pair(a, f));
    CHECK(pair(a, f * Rational(1, 2)) == pair(a, f) / 2);
  }
}

TEST_CASE("antidominance") {
  auto lat = gl4();
  auto roots = gl3_in_4(lat);
  CHECK(is_antidominant(Covector::zero(lat), roots));
  // lambda_1 of the monoid, m = 3: 0, 1, 1 on eps_1..eps_3 and 1 on eps_4
  Covector lambda1 = Covector::from_integers(lat, {0, 1, 1, 1});
  CHECK(pair(roots.roots()[0].root, lambda1) == -1);
  CHECK(pair(roots.roots()[1].root, lambda1) == 0);
  CHECK(is_antidominant(lambda1, roots));
  CHECK(!is_antidominant(Covector::dual_basis(lat, "eps_1"), roots));
  // increasing sequences are antidominant for e_i - e_{i+1}
  CHECK(is_antidominant(Covector::from_integers(lat, {-3, -1, 0, 7}), roots));
  CHECK(!is_antidominant(Covector::from_integers(lat, {-3, 1, 0, 7}), roots));
}

TEST_CASE("opposite ordering flips the roots") {
  auto lat = gl4();
  auto neg = gl_simple_roots(lat, {2, 3}, "beta_", -1);
  REQUIRE(neg.size() == 1);
  CHECK(neg[0].root == Character::unit(lat, 3) - Character::unit(lat, 2));
  CHECK(pair(neg[0].root, neg[0].coroot) == 2);
}

TEST_CASE("lattice checks") {
  auto lat = gl4();
  auto other = make_lattice({"a", "b"});
  CHECK_THROWS_AS(pair(Character::unit(other, 0), Covector::zero(lat)), UsageError);
  CHECK_THROWS_AS(lat->index_of("eps_9"), UsageError);
  CHECK_THROWS_AS(make_lattice({"a", "a"}), UsageError);
  CHECK_THROWS_AS(Character(lat, IntegerVector{1, 2}), UsageError);
  // coroot normalization enforced
  std::vector<SimpleRoot> bad{{"alpha", Character::unit(lat, 0), Covector::dual_basis(lat, 0) * Rational(3)}};
  CHECK_THROWS(SimpleRootSet(lat, bad));
}

TEST_CASE("character formatting") {
  auto lat = gl4();
  CHECK((Character::unit(lat, 0) + Character::unit(lat, 3)).to_string() == "eps_1+eps_4");
  CHECK(Character::zero(lat).to_string() == "0");
  CHECK((Character::unit(lat, 1) * -2).to_string() == "-2*eps_2");
}
