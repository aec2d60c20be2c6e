#include <algorithm>
#include <random>

#include "doctest.h"
#include "fincat/fincat.hpp"
#include "support/builders.hpp"

using namespace fincat;

namespace {

bool has_issue(const CategoryReport& r, const std::string& code) {
  return std::any_of(r.issues.begin(), r.issues.end(),
                     [&](const CategoryIssue& i) { return i.code == code; });
}

}  // namespace

TEST_CASE("one object, one morphism is a valid category") {
  RawCategory raw;
  raw.objects = {"*"};
  raw.morphisms = {{"1", "*", "*"}};
  raw.identity = {{"*", "1"}};
  raw.compose[{"1", "1"}] = "1";
  auto v = validate_category(raw);
  REQUIRE(v.report.ok());
  CHECK(v.category->objects().size() == 1);
  CHECK(v.category->hom("*", "*") == std::vector<std::string>{"1"});
}

TEST_CASE("validator names the violated law and its witnesses") {
  RawCategory good;
  good.objects = {"*"};
  good.morphisms = {{"1", "*", "*"}};
  good.identity = {{"*", "1"}};
  good.compose[{"1", "1"}] = "1";

  SUBCASE("missing identity") {
    RawCategory raw = good;
    raw.identity.clear();
    auto v = validate_category(raw);
    CHECK_FALSE(v.report.ok());
    CHECK(has_issue(v.report, "MissingIdentity"));
  }
  SUBCASE("composition not total") {
    RawCategory raw = good;
    raw.compose.clear();
    auto v = validate_category(raw);
    CHECK(has_issue(v.report, "CompositionNotTotal"));
  }
  SUBCASE("composite with wrong endpoints") {
    RawCategory raw;
    raw.objects = {"x", "y"};
    raw.morphisms = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"f", "x", "y"}};
    raw.identity = {{"x", "1x"}, {"y", "1y"}};
    raw.compose[{"1x", "1x"}] = "1x";
    raw.compose[{"1y", "1y"}] = "1y";
    raw.compose[{"f", "1x"}] = "f";
    raw.compose[{"1y", "f"}] = "1x";  // wrong: should be f, endpoints do not even match
    auto v = validate_category(raw);
    CHECK(has_issue(v.report, "DomCodMismatch"));
  }
  SUBCASE("unit law violation") {
    // two parallel endomorphisms; the table sends 1∘u to the wrong one
    RawCategory raw;
    raw.objects = {"x"};
    raw.morphisms = {{"1", "x", "x"}, {"u", "x", "x"}};
    raw.identity = {{"x", "1"}};
    raw.compose[{"1", "1"}] = "1";
    raw.compose[{"1", "u"}] = "1";  // should be u
    raw.compose[{"u", "1"}] = "u";
    raw.compose[{"u", "u"}] = "1";
    auto v = validate_category(raw);
    CHECK(has_issue(v.report, "UnitLawViolation"));
  }
  SUBCASE("associativity violation found by the exhaustive sweep") {
    // corrupt one entry of the Z/3 multiplication table: a∘b = a instead of e
    RawCategory raw = fixtures::z3_cat().to_raw();
    raw.compose[{"a", "b"}] = "a";
    auto v = validate_category(raw);
    CHECK(has_issue(v.report, "AssociativityViolation"));
  }
  SUBCASE("duplicate ids") {
    RawCategory raw = good;
    raw.objects.push_back("*");
    auto v = validate_category(raw);
    CHECK(has_issue(v.report, "DuplicateObject"));
  }
}

TEST_CASE("free category on a graph") {
  SUBCASE("single edge gives 3 morphisms") {
    FinGraph g;
    g.vertices = {"a", "b"};
    g.edges = {{"f", "a", "b"}};
    FinCat c = free_category_on_acyclic_graph(g);
    CHECK(c.object_count() == 2);
    CHECK(c.morphism_count() == 3);
    CHECK(c.hom("a", "b") == std::vector<std::string>{"f"});
  }
  SUBCASE("chain 0 -> 1 -> 2 has six morphisms, one of them composite") {
    FinGraph g;
    g.vertices = {"0", "1", "2"};
    g.edges = {{"e01", "0", "1"}, {"e12", "1", "2"}};
    FinCat c = free_category_on_acyclic_graph(g);
    CHECK(c.morphism_count() == 6);
    CHECK(c.compose("e12", "e01") == "e01.e12");
    CHECK(c.hom("0", "2") == std::vector<std::string>{"e01.e12"});
  }
  SUBCASE("parallel edges stay distinct and compose with nothing") {
    FinCat c = fixtures::parallel_pair_cat();
    CHECK(c.morphism_count() == 4);
    CHECK(c.hom("a", "b") == std::vector<std::string>{"u", "v"});
  }
  SUBCASE("a cycle is rejected") {
    FinGraph g;
    g.vertices = {"a", "b"};
    g.edges = {{"f", "a", "b"}, {"g", "b", "a"}};
    CHECK_THROWS_WITH_AS(free_category_on_acyclic_graph(g), doctest::Contains("CyclicGraph"),
                         Error);
  }
  SUBCASE("a self loop is a cycle") {
    FinGraph g;
    g.vertices = {"a"};
    g.edges = {{"f", "a", "a"}};
    CHECK_THROWS_AS(free_category_on_acyclic_graph(g), Error);
  }
  SUBCASE("outputs satisfy the validator") {
    auto v = validate_category(fixtures::span_cat().to_raw());
    CHECK(v.report.ok());
  }
}

TEST_CASE("delooping of a finite group") {
  SUBCASE("trivial group gives one object, one morphism") {
    FinCat c = delooping({{"e"}, "e", {{"e"}}});
    CHECK(c.object_count() == 1);
    CHECK(c.morphism_count() == 1);
  }
  SUBCASE("Z/2: the non-identity arrow is its own inverse") {
    FinCat c = fixtures::z2_cat();
    CHECK(c.morphism_count() == 2);
    CHECK(c.compose("s", "s") == "e");
    CHECK(is_iso(c, "s"));
  }
  SUBCASE("Z/3 composition matches addition mod 3") {
    FinCat c = fixtures::z3_cat();
    CHECK(c.compose("a", "a") == "b");
    CHECK(c.compose("b", "a") == "e");
    CHECK(c.compose("a", "b") == "e");
    CHECK(c.compose("b", "b") == "a");
    CHECK(validate_category(c.to_raw()).report.ok());
  }
  SUBCASE("a monoid that is not a group is rejected") {
    // x absorbing: x*x = x has no inverse
    GroupTable t{{"e", "x"}, "e", {{"e", "x"}, {"x", "x"}}};
    CHECK_THROWS_WITH_AS(delooping(t), doctest::Contains("InvalidGroupTable"), Error);
  }
  SUBCASE("broken associativity is rejected") {
    GroupTable t{{"e", "a", "b"}, "e", {{"e", "a", "b"}, {"a", "e", "e"}, {"b", "e", "a"}}};
    CHECK_THROWS_AS(delooping(t), Error);
  }
}

TEST_CASE("opposite category") {
  SUBCASE("reverses a single arrow") {
    FinCat c = fixtures::arrow_cat();
    FinCat op = opposite(c);
    CHECK(op.morphism("0<=1").dom == "1");
    CHECK(op.morphism("0<=1").cod == "0");
    CHECK(op.hom("1", "0") == std::vector<std::string>{"0<=1"});
  }
  SUBCASE("turns the span into a cospan") {
    FinCat op = opposite(fixtures::span_cat());
    CHECK(op.hom("b", "a") == std::vector<std::string>{"f"});
    CHECK(op.hom("c", "a") == std::vector<std::string>{"g"});
    CHECK(op.hom("a", "b").empty());
    CHECK(validate_category(op.to_raw()).report.ok());
  }
  SUBCASE("is an involution") {
    for (const FinCat& c : {fixtures::span_cat(), fixtures::z3_cat(), fixtures::lattice2_cat(),
                            fixtures::split_idem_cat()}) {
      CHECK(opposite(opposite(c)) == c);
    }
  }
  SUBCASE("composition is reversed") {
    FinCat op = opposite(fixtures::chain3_cat());
    CHECK(op.compose("0<=1", "1<=2") == "0<=2");
  }
}

TEST_CASE("poset categories") {
  FinCat c = fixtures::lattice2_cat();
  CHECK(c.object_count() == 4);
  CHECK(c.morphism_count() == 9);  // reflexive pairs + 4 covers + 0<=12
  CHECK(c.compose("1<=12", "0<=1") == "0<=12");
  CHECK(validate_category(c.to_raw()).report.ok());
  CHECK_THROWS_WITH_AS(poset_category({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                       doctest::Contains("NotAPoset"), Error);
}

TEST_CASE("hom sets and isomorphisms") {
  FinCat two = fixtures::arrow_cat();
  CHECK(two.hom("0", "1") == std::vector<std::string>{"0<=1"});
  CHECK(two.hom("1", "0").empty());
  CHECK_FALSE(is_iso(two, "0<=1"));
  CHECK(is_iso(two, "0<=0"));
  CHECK(isomorphisms(two) == std::vector<std::string>{"0<=0", "1<=1"});
  CHECK(isomorphisms(fixtures::z2_cat()) == std::vector<std::string>{"e", "s"});
  CHECK_THROWS_AS(two.hom("0", "nope"), Error);

  // split idempotent: e is not an isomorphism even though e∘e = e
  FinCat si = fixtures::split_idem_cat();
  CHECK_FALSE(is_iso(si, "e"));
  CHECK(is_iso(si, "1B"));
}

TEST_CASE("initial and terminal object search") {
  CHECK(find_initial(fixtures::lattice2_cat()) == std::string("0"));
  CHECK(find_terminal(fixtures::lattice2_cat()) == std::string("12"));
  CHECK(find_initial(fixtures::twopeaks_cat()) == std::string("a"));
  CHECK_FALSE(find_terminal(fixtures::twopeaks_cat()).has_value());
  CHECK_FALSE(find_initial(fixtures::z2_cat()).has_value());
  CHECK_FALSE(find_terminal(fixtures::parallel_pair_cat()).has_value());
}

TEST_CASE("random acyclic graphs give valid free categories") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    FinGraph g;
    int n = 2 + static_cast<int>(rng() % 4);
    for (int v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
    int edges = static_cast<int>(rng() % 5);
    for (int e = 0; e < edges; ++e) {
      int i = static_cast<int>(rng() % n);
      int j = static_cast<int>(rng() % n);
      if (i == j) continue;
      if (i > j) std::swap(i, j);  // edges go up the vertex order, so no cycles
      g.edges.push_back({"e" + std::to_string(e), g.vertices[i], g.vertices[j]});
    }
    FinCat c = free_category_on_acyclic_graph(g);
    CHECK(validate_category(c.to_raw()).report.ok());
    CHECK(opposite(opposite(c)) == c);
  }
}
