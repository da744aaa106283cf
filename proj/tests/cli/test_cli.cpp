#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rinf/cli.hpp"
#include "rinf/errors.hpp"
#include "rinf/intmat.hpp"

using namespace rinf;
using json_io::Json;

namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(RINF_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return Json::parse(buf.str());
}

cli::CommandResult run(std::vector<std::string> args) { return cli::run(args, Budgets{}); }

// dump -> parse -> dump is stable
void check_round_trip(const Json& j) {
  const std::string text = j.dump();
  CHECK(Json::parse(text).dump() == text);
}

}  // namespace

TEST_CASE("golden outputs") {
  const Json cases = load("cases.json");
  REQUIRE(cases.size() >= 3);
  for (const Json& c : cases) {
    const std::string name = c["name"].get<std::string>();
    CAPTURE(name);
    const auto result = run(c["args"].get<std::vector<std::string>>());
    CHECK(result.exit_code == c["exit"].get<int>());
    CHECK(result.to_json() == load(name + ".json"));
    check_round_trip(result.to_json());
  }
}

TEST_CASE("documented examples") {
  {
    const auto r = run({"classify", "--family", "N", "--rank", "2", "--param", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload["has_R_infinity"] == true);
    CHECK(r.payload["singular_level"]["degree"] == 4);
    CHECK(r.payload["singular_level"]["det"] == "0");
  }
  {
    const auto r = run({"witness", "--rank", "2"});
    CHECK(r.exit_code == 0);
    CHECK(json_io::polynomial_from_json(r.payload["polynomial"]) == IntPolynomial{-1, -3, 1});
    CHECK(r.payload["polynomial_text"] == "x^2 - 3x - 1");
    CHECK(r.payload["product_one_first_k"] == 4);
    const IntMatrix a = json_io::matrix_from_json(r.payload["matrix"]);
    CHECK(char_poly(a) == IntPolynomial{-1, -3, 1});
  }
  {
    const auto r = run({"infinite", "classn", "--word", "x0 x1 x0", "--n", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload["class_index"] == 1);
    CHECK(r.payload["verified"] == true);
  }
}

TEST_CASE("certificates re-verify from the payload alone") {
  SUBCASE("negative verdict witness") {
    const auto r = run({"classify", "--family", "M", "--rank", "3", "--param", "4"});
    CHECK(r.exit_code == 1);
    const IntMatrix a = json_io::matrix_from_json(r.payload["witness"]);
    CHECK_FALSE(is_R_infinite(a, GroupVariant{GroupKind::MetabelianNilpotent, 3, 4}).r_infinite);
    // lift images abelianize to the columns of the witness
    const Json& images = r.payload["witness_lift"]["images"];
    REQUIRE(images.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
      const auto ab = abelianize(json_io::word_from_json(images[j]));
      for (std::size_t i = 0; i < 3; ++i) {
        const auto it = ab.find(i);
        CHECK(Integer(it == ab.end() ? 0 : it->second) == a(i, j));
      }
    }
  }
  SUBCASE("positive verdict level") {
    const auto r = run({"classify", "--family", "S", "--rank", "2", "--param", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload["singular_level"]["degree"] == 4);
    CHECK(r.payload["singular_level"]["det"] == "0");
  }
  SUBCASE("twisted identities") {
    const auto scheme = std::make_shared<const ThetaScheme>();
    const auto r = run({"infinite", "classn", "--word", "[[2,-1],[0,3],[4,1]]", "--n", "3"});
    CHECK(r.exit_code == 0);
    const Word w = json_io::word_from_json(r.payload["word"]);
    const Word z = json_io::word_from_json(r.payload["z"]);
    const Word rep = json_io::word_from_json(r.payload["representative"]);
    const auto phi = InfiniteAutomorphism::phi_n(3, scheme);
    CHECK(z * rep * phi.apply(z).inverse() == w);
    CHECK(rep == Word::generator(0, exponent_sum(w) % 3));

    const auto s = run({"infinite", "solve1", "--word", "x1 x0^-2 x3"});
    const Word v = json_io::word_from_json(s.payload["word"]);
    const Word z5 = json_io::word_from_json(s.payload["z"]);
    CHECK(z5 * InfiniteAutomorphism::phi5(scheme).apply(z5).inverse() == v);
  }
  SUBCASE("basis tuples parse back") {
    const auto r = run({"basis", "--variant", "M", "--rank", "3", "--degree", "3"});
    const LieRing ring(GroupVariant{GroupKind::MetabelianNilpotent, 3, 3});
    std::size_t pos = 0;
    for (const Json& e : r.payload["basis"]) CHECK(ring.index_of(json_io::basis_from_json(e)) == pos++);
    CHECK(pos == chen_dimension(3, 3));
  }
  SUBCASE("spectrum rows") {
    const auto r = run({"spectrum", "--matrix", "[[1,1],[0,1]]", "--variant", "N", "--class", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload["levels"].size() == 3);
    CHECK(r.payload["reidemeister_number"]["plumbing"] == true);
    CHECK(r.payload["reidemeister_number"]["value"].is_null());
  }
}

TEST_CASE("exit-code contract") {
  const std::vector<std::pair<std::vector<std::string>, int>> cases = {
      {{}, 2},
      {{"nonsense"}, 2},
      {{"classify", "--family", "Q", "--rank", "2", "--param", "2"}, 2},
      {{"classify", "--family", "N", "--rank", "1", "--param", "2"}, 2},
      {{"classify", "--family", "N", "--rank", "two", "--param", "2"}, 2},
      {{"classify", "--family", "N", "--rank", "2"}, 2},
      {{"spectrum", "--matrix", "[[1,2],[3", "--variant", "M", "--class", "2"}, 2},
      {{"spectrum", "--matrix", "[[2,0],[0,1]]", "--variant", "M", "--class", "2"}, 2},
      {{"spectrum", "--matrix", "[[1,0,0],[0,1]]", "--variant", "M", "--class", "2"}, 2},
      {{"spectrum", "--matrix", "[[\"1x\",0],[0,1]]", "--variant", "M", "--class", "2"}, 2},
      {{"spectrum", "--matrix", "/no/such/file.json", "--variant", "M", "--class", "2"}, 2},
      {{"spectrum", "--matrix", "[[0,1],[1,3]]", "--variant", "K", "--class", "2"}, 2},
      {{"product-one", "--matrix", "[[{}]]", "--kmax", "2"}, 2},
      {{"pisot-check", "--poly", "[]"}, 2},
      {{"pisot-check", "--poly", "[\"a\"]"}, 2},
      {{"infinite", "classn", "--word", "y3", "--n", "2"}, 2},
      {{"infinite", "classn", "--word", "[[-1,1]]", "--n", "2"}, 2},
      {{"infinite", "classn", "--word", "x1", "--n", "0"}, 2},
      {{"infinite", "solve1"}, 2},
      {{"oracle", "abelian", "--matrix", "[[2,0],[0,1]]", "--mod", "4"}, 2},
      {{"oracle", "class2", "--matrix", "[[1,1],[0,1]]", "--mod", "2"}, 2},
      {{"witness", "--rank", "9"}, 3},
      {{"basis", "--variant", "N", "--rank", "9", "--degree", "9"}, 3},
      {{"product-one", "--matrix", "[[0,1],[1,3]]", "--kmax", "3"}, 1},
      {{"classify", "--family", "M", "--rank", "2", "--param", "3"}, 1},
  };
  for (const auto& [args, code] : cases) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    CAPTURE(joined);
    const auto r = run(args);
    CHECK(r.exit_code == code);
    if (code >= 2) CHECK(r.payload.contains("error"));
    check_round_trip(r.to_json());
  }
}

TEST_CASE("budget overrides") {
  Budgets tight;
  tight.sym_power_dim = 10;
  const auto r = cli::run({"witness", "--rank", "3"}, tight);
  CHECK(r.exit_code == 3);
  CHECK(r.payload["error"]["budget"] == "sym_power_dim");

  const auto deep = run({"infinite", "solve1", "--word", "x40", "--recursion-depth", "2"});
  CHECK(deep.exit_code == 3);

  ::setenv("RINF_BUDGET_SYM_POWER_DIM", "10", 1);
  CHECK(cli::run({"witness", "--rank", "3"}).exit_code == 3);
  ::unsetenv("RINF_BUDGET_SYM_POWER_DIM");
  CHECK(cli::run({"witness", "--rank", "3"}).exit_code == 0);
}

TEST_CASE("help") {
  const auto r = run({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.help.find("classify") != std::string::npos);
}
