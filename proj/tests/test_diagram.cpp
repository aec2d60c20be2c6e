#include <algorithm>

#include "doctest.h"
#include "fincat/diagram.hpp"
#include "support/builders.hpp"

using namespace fincat;

namespace {

bool has_issue(const Report& r, const std::string& code) {
  return std::any_of(r.issues.begin(), r.issues.end(),
                     [&](const Issue& i) { return i.code == code; });
}

// two-element set over the arrow, collapsed to one point at the top
RawSetFunctor arrow_diagram() {
  RawSetFunctor raw;
  raw.objects["0"] = {"a", "b"};
  raw.objects["1"] = {"x"};
  raw.actions["0<=1"] = {{"a", "x"}, {"b", "x"}};
  return raw;
}

}  // namespace

TEST_CASE("set functor validation") {
  auto base = fixtures::shared(fixtures::arrow_cat());

  SUBCASE("identity actions are filled in") {
    auto v = validate_set_functor(base, arrow_diagram());
    REQUIRE(v.report.ok());
    CHECK(v.functor->apply("0<=0", "a") == "a");
    CHECK(v.functor->apply("0<=1", "b") == "x");
    CHECK(v.functor->elements("0") == std::vector<std::string>{"a", "b"});
  }
  SUBCASE("missing object set") {
    auto raw = arrow_diagram();
    raw.objects.erase("1");
    CHECK(has_issue(validate_set_functor(base, raw).report, "MissingObjectSet"));
  }
  SUBCASE("duplicate element") {
    auto raw = arrow_diagram();
    raw.objects["0"] = {"a", "a"};
    CHECK(has_issue(validate_set_functor(base, raw).report, "DuplicateElement"));
  }
  SUBCASE("action missing entirely") {
    auto raw = arrow_diagram();
    raw.actions.erase("0<=1");
    CHECK(has_issue(validate_set_functor(base, raw).report, "NonTotalAction"));
  }
  SUBCASE("action missing one element") {
    auto raw = arrow_diagram();
    raw.actions["0<=1"].erase("b");
    CHECK(has_issue(validate_set_functor(base, raw).report, "NonTotalAction"));
  }
  SUBCASE("action hitting a stray element") {
    auto raw = arrow_diagram();
    raw.actions["0<=1"]["a"] = "zzz";
    CHECK(has_issue(validate_set_functor(base, raw).report, "UnknownElement"));
  }
  SUBCASE("identity action must be the identity map") {
    auto raw = arrow_diagram();
    raw.actions["0<=0"] = {{"a", "b"}, {"b", "a"}};
    CHECK(has_issue(validate_set_functor(base, raw).report, "IdentityNotPreserved"));
  }
  SUBCASE("composites must match the two-step action") {
    auto chain = fixtures::shared(fixtures::chain3_cat());
    RawSetFunctor raw;
    raw.objects["0"] = {"p"};
    raw.objects["1"] = {"q"};
    raw.objects["2"] = {"r", "s"};
    raw.actions["0<=1"] = {{"p", "q"}};
    raw.actions["1<=2"] = {{"q", "r"}};
    raw.actions["0<=2"] = {{"p", "s"}};  // two-step lands on r
    auto v = validate_set_functor(chain, raw);
    CHECK(has_issue(v.report, "CompositionNotPreserved"));
    raw.actions["0<=2"] = {{"p", "r"}};
    CHECK(validate_set_functor(chain, raw).report.ok());
  }
  SUBCASE("require throws with the report text") {
    auto raw = arrow_diagram();
    raw.objects.erase("1");
    CHECK_THROWS_WITH_AS(require_set_functor(base, raw), doctest::Contains("MissingObjectSet"),
                         Error);
  }
}

TEST_CASE("natural transformation enumeration") {
  SUBCASE("functions between sets over one object") {
    auto pt = fixtures::shared(fixtures::terminal_cat());
    RawSetFunctor rf, rg;
    rf.objects["*"] = {"a", "b"};
    rg.objects["*"] = {"x", "y"};
    auto f = require_set_functor(pt, rf);
    auto g = require_set_functor(pt, rg);
    auto all = enumerate_nat_trans(f, g);
    REQUIRE(all.size() == 4);
    // lexicographic: (a->x, b->x) first, (a->y, b->y) last
    CHECK(all.front().components.at("*").at("a") == "x");
    CHECK(all.front().components.at("*").at("b") == "x");
    CHECK(all.back().components.at("*").at("a") == "y");
    CHECK(all.back().components.at("*").at("b") == "y");
  }
  SUBCASE("equivariant maps of the regular action") {
    // the regular action of a group on itself: exactly |G| equivariant
    // self-maps, the right translations
    auto z2 = fixtures::shared(fixtures::z2_cat());
    RawSetFunctor raw;
    raw.objects["*"] = {"0", "1"};
    raw.actions["s"] = {{"0", "1"}, {"1", "0"}};
    auto f = require_set_functor(z2, raw);
    CHECK(enumerate_nat_trans(f, f).size() == 2);

    auto z3 = fixtures::shared(fixtures::z3_cat());
    RawSetFunctor raw3;
    raw3.objects["*"] = {"0", "1", "2"};
    raw3.actions["a"] = {{"0", "1"}, {"1", "2"}, {"2", "0"}};
    raw3.actions["b"] = {{"0", "2"}, {"1", "0"}, {"2", "1"}};
    auto g = require_set_functor(z3, raw3);
    CHECK(enumerate_nat_trans(g, g).size() == 3);
  }
  SUBCASE("naturality squares cut the function space down") {
    auto base = fixtures::shared(fixtures::arrow_cat());
    RawSetFunctor raw;
    raw.objects["0"] = {"a", "b"};
    raw.objects["1"] = {"x", "y"};
    raw.actions["0<=1"] = {{"a", "x"}, {"b", "y"}};
    auto f = require_set_functor(base, raw);
    // 16 raw families, only 4 are natural: the top component is forced
    auto all = enumerate_nat_trans(f, f);
    CHECK(all.size() == 4);
    for (const auto& t : all) CHECK(is_natural(f, f, t));
  }
  SUBCASE("empty target set kills everything") {
    auto pt = fixtures::shared(fixtures::terminal_cat());
    RawSetFunctor rf, rg;
    rf.objects["*"] = {"a"};
    rg.objects["*"] = {};
    auto f = require_set_functor(pt, rf);
    auto g = require_set_functor(pt, rg);
    CHECK(enumerate_nat_trans(f, g).empty());
    CHECK(enumerate_nat_trans(g, f).size() == 1);  // empty source, one empty family
  }
  SUBCASE("distinct bases are rejected") {
    auto f = require_set_functor(fixtures::shared(fixtures::arrow_cat()), arrow_diagram());
    RawSetFunctor rw;
    rw.objects["*"] = {"p"};
    auto g = require_set_functor(fixtures::shared(fixtures::terminal_cat()), rw);
    CHECK_THROWS_WITH_AS(enumerate_nat_trans(f, g), doctest::Contains("SourceMismatch"), Error);
    CHECK_THROWS_AS(is_natural(f, g, NatTrans{}), Error);
  }
  SUBCASE("the candidate cap is enforced") {
    auto pt = fixtures::shared(fixtures::terminal_cat());
    RawSetFunctor rf;
    rf.objects["*"] = {"a", "b"};
    auto f = require_set_functor(pt, rf);
    Caps caps;
    caps.max_nat_trans = 3;  // 4 candidate families
    CHECK_THROWS_WITH_AS(enumerate_nat_trans(f, f, caps),
                         doctest::Contains("SearchSpaceCapExceeded"), Error);
  }
  SUBCASE("identity and vertical composition") {
    auto f = require_set_functor(fixtures::shared(fixtures::arrow_cat()), arrow_diagram());
    NatTrans id = identity_nat_trans(f);
    CHECK(is_natural(f, f, id));
    CHECK(compose_nat_trans(f, f, f, id, id) == id);
  }
}

TEST_CASE("functors between categories") {
  auto chain = fixtures::shared(fixtures::chain3_cat());
  auto arrow = fixtures::shared(fixtures::arrow_cat());

  SUBCASE("collapse of the top of a chain") {
    RawFinFunctor raw;
    raw.objects = {{"0", "0"}, {"1", "1"}, {"2", "1"}};
    raw.morphisms = {{"0<=1", "0<=1"}, {"0<=2", "0<=1"}, {"1<=2", "1<=1"}};
    auto v = validate_fin_functor(chain, arrow, raw);
    REQUIRE(v.report.ok());
    CHECK(v.functor->apply_object("2") == "1");
    CHECK(v.functor->apply_morphism("2<=2") == "1<=1");  // identity filled in
  }
  SUBCASE("endpoint mismatch") {
    RawFinFunctor raw;
    raw.objects = {{"0", "0"}, {"1", "1"}, {"2", "1"}};
    raw.morphisms = {{"0<=1", "1<=1"}, {"0<=2", "0<=1"}, {"1<=2", "1<=1"}};
    CHECK(has_issue(validate_fin_functor(chain, arrow, raw).report, "EndpointMismatch"));
  }
  SUBCASE("composition must be preserved") {
    // both generators of a free chain to the flip of Z/2: the composite
    // must go to e, pointing all three at s breaks functoriality
    FinGraph g;
    g.vertices = {"0", "1", "2"};
    g.edges = {{"e01", "0", "1"}, {"e12", "1", "2"}};
    auto freechain = fixtures::shared(free_category_on_acyclic_graph(g));
    auto z2 = fixtures::shared(fixtures::z2_cat());
    RawFinFunctor raw;
    raw.objects = {{"0", "*"}, {"1", "*"}, {"2", "*"}};
    raw.morphisms = {{"e01", "s"}, {"e12", "s"}, {"e01.e12", "s"}};
    auto v = validate_fin_functor(freechain, z2, raw);
    CHECK(has_issue(v.report, "CompositionNotPreserved"));
    raw.morphisms["e01.e12"] = "e";
    CHECK(validate_fin_functor(freechain, z2, raw).report.ok());
  }
  SUBCASE("identities must land on identities") {
    auto z2 = fixtures::shared(fixtures::z2_cat());
    RawFinFunctor raw;
    raw.objects = {{"0", "*"}, {"1", "*"}};
    raw.morphisms = {{"0<=0", "s"}, {"0<=1", "e"}};
    CHECK(has_issue(validate_fin_functor(arrow, z2, raw).report, "IdentityNotPreserved"));
  }
  SUBCASE("totality") {
    RawFinFunctor raw;
    raw.objects = {{"0", "0"}, {"1", "1"}};
    auto v = validate_fin_functor(chain, arrow, raw);
    CHECK(has_issue(v.report, "NonTotalObjectMap"));
    raw.objects = {{"0", "0"}, {"1", "1"}, {"2", "1"}};
    CHECK(has_issue(validate_fin_functor(chain, arrow, raw).report, "NonTotalMorphismMap"));
  }
  SUBCASE("unknown ids") {
    RawFinFunctor raw;
    raw.objects = {{"0", "0"}, {"1", "1"}, {"2", "1"}, {"9", "0"}};
    CHECK(has_issue(validate_fin_functor(chain, arrow, raw).report, "UnknownObject"));
  }
}
