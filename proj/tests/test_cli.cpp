#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "sphemb/cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string text;
  Json doc;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  int code = sphemb::cli::run(args, out);
  std::string text = out.str();
  REQUIRE(!text.empty());
  CHECK(text.back() == '\n');
  CHECK(text.find('\n') == text.size() - 1);
  return {code, text, Json::parse(text)};
}

}  // namespace

TEST_CASE("class-group of the monoid") {
  auto o = run({"class-group", "--family", "monoid:m=3"});
  CHECK(o.code == 0);
  CHECK(o.doc["status"] == "ok");
  CHECK(o.doc["command"] == "class-group");
  CHECK(o.doc["result"].dump() == R"({"free_rank":2,"invariant_factors":[],"generators":["D_1","D_2"]})");
}

TEST_CASE("gorenstein circular case") {
  auto o = run({"gorenstein", "--family", "circular:m=2,n=2,r=1,s=1", "--json"});
  CHECK(o.code == 0);
  CHECK(o.doc["result"]["gorenstein"] == true);
  CHECK(o.doc["result"]["witness_character"].is_object());
  auto n = run({"gorenstein", "--family", "circular:2,3,1,1"});
  CHECK(n.doc["result"]["gorenstein"] == false);
  CHECK(n.doc["result"]["witness_character"].is_null());
  CHECK(n.doc["result"]["canonical_class"]["free"] == Json::array({2}));
}

TEST_CASE("divisor, class-of and canonical") {
  auto d = run({"divisor", "--family", "monoid:m=3", "--chi", "eps_1:1,eps_4:1"});
  CHECK(d.code == 0);
  CHECK(d.doc["result"]["divisor"].dump() == R"({"X_0":1,"X_1":1,"X_2":1,"X_3":1})");

  auto c = run({"class-of", "--family", "monoid:m=3", "--divisor", "X_0:1,X_1:1,X_2:1,X_3:1"});
  CHECK(c.doc["result"]["principal"] == true);
  CHECK(c.doc["result"]["witness_character"].dump() == R"({"eps_1":1,"eps_4":1})");

  auto alias = run({"class-of", "--family", "circular:m=2,n=3,r=1,s=1", "--divisor", "D_s1:1"});
  CHECK(alias.doc["result"]["class"]["free"] == Json::array({1}));

  auto k = run({"canonical", "--family", "circular:m=3,n=5,r=2,s=1"});
  CHECK(k.code == 0);
  CHECK(k.doc["result"]["class"]["free"] == Json::array({4}));
}

TEST_CASE("model dump") {
  auto o = run({"model", "--family", "monoid:m=2", "--dump"});
  CHECK(o.code == 0);
  CHECK(o.doc["result"]["lattice"]["labels"] == Json::array({"eps_1", "eps_2", "eps_3"}));
  CHECK(run({"model", "--family", "monoid:m=2"}).code == sphemb::cli::kUsage);
}

TEST_CASE("wonderful sections") {
  auto o = run({"wonderful-section", "--family", "wonderful:k=1,l=1", "--chi", "varpi_1_1:1,varpi_1_2:1"});
  CHECK(o.code == 0);
  CHECK(o.doc["result"]["divisor"].dump() == R"({"D_1":1})");
  auto bad = run({"wonderful-section", "--family", "wonderful:k=1,l=1", "--chi", "varpi_1_1:1"});
  CHECK(bad.code == sphemb::cli::kDomain);
  CHECK(bad.doc["status"] == "error");
}

TEST_CASE("verify") {
  auto o = run({"verify", "--family", "monoid:m=2", "--oracle", "--trials", "4", "--seed", "11"});
  CHECK(o.code == 0);
  CHECK(o.doc["result"]["pass"] == true);
  CHECK(o.doc["result"]["stable"] == true);
  CHECK(o.doc["inputs"]["seed"] == 11);
  auto again = run({"verify", "--family", "monoid:m=2", "--oracle", "--trials", "4", "--seed", "11"});
  CHECK(again.text == o.text);
  auto det = run({"verify", "--family", "determinantal:3,3,2", "--oracle"});
  CHECK(det.code == 0);
  CHECK(det.doc["result"]["pass"] == true);
  CHECK(run({"verify", "--family", "monoid:m=2"}).code == sphemb::cli::kUsage);
  CHECK(run({"verify", "--family", "monoid:m=2", "--oracle", "--trials", "0"}).code == sphemb::cli::kUsage);
}

TEST_CASE("errors are json with distinct exit codes") {
  auto zero = run({"class-group", "--family", "monoid:m=0"});
  CHECK(zero.code == sphemb::cli::kUsage);
  CHECK(zero.doc["status"] == "error");
  CHECK(zero.doc.contains("message"));
  CHECK(run({"class-group", "--family", "torus:n=2"}).code == sphemb::cli::kUsage);
  CHECK(run({"class-group"}).code == sphemb::cli::kUsage);
  CHECK(run({}).code == sphemb::cli::kUsage);
  CHECK(run({"frobnicate", "--family", "monoid:m=2"}).code == sphemb::cli::kUsage);
  CHECK(run({"divisor", "--family", "monoid:m=2", "--chi", "eps_9:1"}).code == sphemb::cli::kUsage);
  CHECK(run({"divisor", "--family", "monoid:m=2", "--chi", "eps_1"}).code == sphemb::cli::kUsage);
  CHECK(run({"class-group", "--family", "wonderful:k=1,l=1"}).code == sphemb::cli::kUsage);
  CHECK(run({"class-group", "--family", "determinantal:3,3,3"}).code == sphemb::cli::kUsage);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.doc["command"] == "help");
}

TEST_CASE("identical invocations give identical bytes") {
  for (std::vector<std::string> args : {std::vector<std::string>{"canonical", "--family", "monoid:m=4"},
                                        {"class-group", "--family", "circular:m=3,n=4,r=1,s=1"},
                                        {"divisor", "--family", "circular:2,2,1,1", "--chi", "eps_1:2,delta_1:-1"}}) {
    CHECK(run(args).text == run(args).text);
  }
}
