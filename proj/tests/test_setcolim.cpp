#include <random>

#include "doctest.h"
#include "fincat/setcolim.hpp"
#include "support/builders.hpp"

using namespace fincat;

namespace {

Cocone cocone_of(const ColimitResult& r) { return Cocone{r.apex, r.legs}; }

// group action of Z/2 on {0,1,2} swapping 0 and 1
SetFunctor z2_orbit_diagram() {
  RawSetFunctor raw;
  raw.objects["*"] = {"0", "1", "2"};
  raw.actions["s"] = {{"0", "1"}, {"1", "0"}, {"2", "2"}};
  return require_set_functor(fixtures::shared(fixtures::z2_cat()), raw);
}

SetFunctor glue_diagram() {
  // two sets glued along one point: F(b) = {b1,b2}, F(c) = {c1}, b1 ~ c1
  RawSetFunctor raw;
  raw.objects["a"] = {"s"};
  raw.objects["b"] = {"b1", "b2"};
  raw.objects["c"] = {"c1"};
  raw.actions["f"] = {{"s", "b1"}};
  raw.actions["g"] = {{"s", "c1"}};
  return require_set_functor(fixtures::shared(fixtures::span_cat()), raw);
}

SetFunctor coeq_diagram() {
  RawSetFunctor raw;
  raw.objects["a"] = {"x", "y"};
  raw.objects["b"] = {"p", "q"};
  raw.actions["u"] = {{"x", "p"}, {"y", "q"}};
  raw.actions["v"] = {{"x", "p"}, {"y", "p"}};
  return require_set_functor(fixtures::shared(fixtures::parallel_pair_cat()), raw);
}

}  // namespace

TEST_CASE("colimit glues exactly the forced pairs") {
  SUBCASE("orbits of a group action") {
    auto r = colimit(z2_orbit_diagram());
    CHECK(r.apex == std::vector<std::string>{"(*,0)", "(*,2)"});
    CHECK(r.legs.at("*").at("1") == "(*,0)");
    CHECK(r.legs.at("*").at("2") == "(*,2)");
    REQUIRE(r.classes.at("(*,0)").size() == 2);
    CHECK(r.classes.at("(*,0)").front() == std::pair<std::string, std::string>{"*", "0"});
  }
  SUBCASE("pushout of two sets over a point") {
    // the glued class {(a,s),(b,b1),(c,c1)} is named after (a,s)
    auto r = pushout(glue_diagram());
    CHECK(r.apex == std::vector<std::string>{"(a,s)", "(b,b2)"});
    CHECK(r.legs.at("c").at("c1") == "(a,s)");
    CHECK(r.legs.at("b").at("b1") == "(a,s)");
  }
  SUBCASE("coequalizer collapses the difference") {
    // u and v agree on x, differ on y, so p ~ q through y
    auto r = coequalizer(coeq_diagram());
    CHECK(r.apex == std::vector<std::string>{"(a,x)"});
  }
  SUBCASE("coproduct is a disjoint union") {
    RawCategory raw;
    raw.objects = {"x", "y"};
    raw.morphisms = {{"1x", "x", "x"}, {"1y", "y", "y"}};
    raw.identity = {{"x", "1x"}, {"y", "1y"}};
    raw.compose[{"1x", "1x"}] = "1x";
    raw.compose[{"1y", "1y"}] = "1y";
    auto base = fixtures::shared(require_category(raw));
    RawSetFunctor rf;
    rf.objects["x"] = {"0", "1"};
    rf.objects["y"] = {"0"};
    auto r = coproduct(require_set_functor(base, rf));
    CHECK(r.apex == std::vector<std::string>{"(x,0)", "(x,1)", "(y,0)"});
  }
  SUBCASE("empty diagram has an empty colimit") {
    RawSetFunctor rf;
    rf.objects["*"] = {};
    auto r = colimit(require_set_functor(fixtures::shared(fixtures::terminal_cat()), rf));
    CHECK(r.apex.empty());
    CHECK(r.legs.at("*").empty());
  }
  SUBCASE("shape guards") {
    CHECK_THROWS_WITH_AS(pushout(coeq_diagram()), doctest::Contains("ShapeMismatch"), Error);
    CHECK_THROWS_AS(coequalizer(glue_diagram()), Error);
    CHECK_THROWS_AS(coproduct(glue_diagram()), Error);
  }
}

TEST_CASE("limit keeps exactly the compatible tuples") {
  SUBCASE("binary product") {
    RawCategory raw;
    raw.objects = {"x", "y"};
    raw.morphisms = {{"1x", "x", "x"}, {"1y", "y", "y"}};
    raw.identity = {{"x", "1x"}, {"y", "1y"}};
    raw.compose[{"1x", "1x"}] = "1x";
    raw.compose[{"1y", "1y"}] = "1y";
    auto base = fixtures::shared(require_category(raw));
    RawSetFunctor rf;
    rf.objects["x"] = {"0", "1"};
    rf.objects["y"] = {"a", "b"};
    auto r = limit(require_set_functor(base, rf));
    CHECK(r.apex == std::vector<std::string>{"(0,a)", "(0,b)", "(1,a)", "(1,b)"});
    CHECK(r.projections.at("x").at("(1,a)") == "1");
    CHECK(r.projections.at("y").at("(1,a)") == "a");
  }
  SUBCASE("equalizer keeps the agreeing points") {
    auto r = limit(coeq_diagram());
    CHECK(r.apex == std::vector<std::string>{"(x,p)"});
  }
  SUBCASE("pullback glues along the common image") {
    auto cospan = fixtures::shared(opposite(fixtures::span_cat()));
    RawSetFunctor rf;
    rf.objects["a"] = {"0", "1"};
    rf.objects["b"] = {"x", "y"};
    rf.objects["c"] = {"s", "t"};
    rf.actions["f"] = {{"x", "0"}, {"y", "1"}};
    rf.actions["g"] = {{"s", "0"}, {"t", "1"}};
    auto r = limit(require_set_functor(cospan, rf));
    CHECK(r.apex == std::vector<std::string>{"(0,x,s)", "(1,y,t)"});
  }
  SUBCASE("limit over the empty base is a single empty tuple") {
    RawCategory raw;  // no objects at all
    auto base = fixtures::shared(require_category(raw));
    auto r = limit(require_set_functor(base, RawSetFunctor{}));
    CHECK(r.apex == std::vector<std::string>{"()"});
  }
  SUBCASE("tuple cap") {
    RawSetFunctor rf;
    rf.objects["*"] = {"0", "1", "2", "3"};
    auto d = require_set_functor(fixtures::shared(fixtures::terminal_cat()), rf);
    Caps caps;
    caps.max_nat_trans = 3;
    CHECK_THROWS_WITH_AS(limit(d, caps), doctest::Contains("SearchSpaceCapExceeded"), Error);
  }
}

TEST_CASE("the partition oracle accepts computed colimits and nothing else") {
  SUBCASE("computed cocones pass") {
    for (const auto& d : {z2_orbit_diagram(), glue_diagram(), coeq_diagram()}) {
      CHECK(verify_universal(d, cocone_of(colimit(d))));
    }
  }
  SUBCASE("gluing two classes is compatible but not finest") {
    auto d = z2_orbit_diagram();
    auto c = cocone_of(colimit(d));
    for (auto& [e, v] : c.legs.at("*")) v = "(*,0)";  // collapse everything
    c.apex = {"(*,0)"};
    CHECK_FALSE(verify_universal(d, c));
  }
  SUBCASE("an unhit apex element breaks joint surjectivity") {
    auto d = z2_orbit_diagram();
    auto c = cocone_of(colimit(d));
    c.apex.push_back("phantom");
    CHECK_FALSE(verify_universal(d, c));
  }
  SUBCASE("splitting a class is not even a cocone") {
    auto d = z2_orbit_diagram();
    auto c = cocone_of(colimit(d));
    c.apex.push_back("other");
    c.legs.at("*").at("1") = "other";  // 0 and 1 sit in one orbit
    CHECK_FALSE(verify_universal(d, c));
  }
  SUBCASE("ground set cap") {
    RawSetFunctor rf;
    rf.objects["*"] = {"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"};
    auto d = require_set_functor(fixtures::shared(fixtures::terminal_cat()), rf);
    Cocone c;
    CHECK_THROWS_WITH_AS(verify_universal(d, c), doctest::Contains("OracleCapExceeded"), Error);
  }
  SUBCASE("random diagrams agree with the oracle") {
    std::mt19937 rng(20240811);
    std::vector<FinCat> bases = {fixtures::arrow_cat(), fixtures::span_cat(),
                                 fixtures::parallel_pair_cat(), fixtures::chain3_cat(),
                                 fixtures::z2_cat()};
    for (int trial = 0; trial < 40; ++trial) {
      const FinCat& base = bases[rng() % bases.size()];
      auto shared_base = fixtures::shared(base);
      RawSetFunctor raw;
      std::size_t budget = 7;
      for (const auto& obj : base.objects()) {
        std::size_t size = rng() % std::min<std::size_t>(3, budget + 1);
        budget -= size;
        for (std::size_t k = 0; k < size; ++k)
          raw.objects[obj].push_back(obj + std::to_string(k));
      }
      bool possible = true;
      for (const auto& m : base.morphisms()) {
        if (base.is_identity(m.id)) continue;
        const auto& dom = raw.objects[m.dom];
        const auto& cod = raw.objects[m.cod];
        if (!dom.empty() && cod.empty()) {
          possible = false;  // nowhere to send the elements
          break;
        }
        for (const auto& e : dom) raw.actions[m.id][e] = cod[rng() % cod.size()];
      }
      if (!possible) continue;
      auto v = validate_set_functor(shared_base, raw);
      if (!v.report.ok()) continue;  // group actions may fail functoriality
      auto r = colimit(*v.functor);
      CHECK(verify_universal(*v.functor, cocone_of(r)));
      if (r.apex.size() >= 2) {
        Cocone coarse = cocone_of(r);
        // redirect every leg hitting the last class at the first class
        for (auto& [obj, leg] : coarse.legs)
          for (auto& [e, val] : leg)
            if (val == r.apex.back()) val = r.apex.front();
        coarse.apex.pop_back();
        CHECK_FALSE(verify_universal(*v.functor, coarse));
      }
    }
  }
}

TEST_CASE("colimit search inside a category") {
  auto span = fixtures::shared(fixtures::span_cat());
  auto lattice = fixtures::shared(fixtures::lattice2_cat());

  SUBCASE("joins in a lattice") {
    RawFinFunctor raw;
    raw.objects = {{"a", "0"}, {"b", "1"}, {"c", "2"}};
    raw.morphisms = {{"f", "0<=1"}, {"g", "0<=2"}};
    auto d = require_fin_functor(span, lattice, raw);
    auto r = find_colimit_in_category(d);
    REQUIRE(r.has_value());
    CHECK(r->apex == "12");
    CHECK(r->legs.at("b") == "1<=12");
    CHECK(r->legs.at("c") == "2<=12");
  }
  SUBCASE("two peaks admit no join") {
    auto peaks = fixtures::shared(fixtures::twopeaks_cat());
    RawFinFunctor raw;
    raw.objects = {{"a", "a"}, {"b", "b"}, {"c", "c"}};
    raw.morphisms = {{"f", "a<=b"}, {"g", "a<=c"}};
    auto d = require_fin_functor(span, peaks, raw);
    CHECK_FALSE(find_colimit_in_category(d).has_value());
  }
  SUBCASE("colimits in the opposite category are meets") {
    auto colattice = fixtures::shared(opposite(fixtures::lattice2_cat()));
    RawFinFunctor raw;
    raw.objects = {{"a", "12"}, {"b", "1"}, {"c", "2"}};
    raw.morphisms = {{"f", "1<=12"}, {"g", "2<=12"}};
    auto d = require_fin_functor(span, colattice, raw);
    auto r = find_colimit_in_category(d);
    REQUIRE(r.has_value());
    // the meet of 1 and 2 in the lattice, found without any meet-specific code
    CHECK(r->apex == "0");
    CHECK(r->legs.at("b") == "0<=1");
  }
  SUBCASE("empty shape finds the initial object") {
    auto empty = fixtures::shared(require_category(RawCategory{}));
    auto d = require_fin_functor(empty, lattice, RawFinFunctor{});
    auto r = find_colimit_in_category(d);
    REQUIRE(r.has_value());
    CHECK(r->apex == "0");
    CHECK(r->legs.empty());

    // a group has no initial object: both arrows mediate
    auto z2 = fixtures::shared(fixtures::z2_cat());
    auto d2 = require_fin_functor(empty, z2, RawFinFunctor{});
    CHECK_FALSE(find_colimit_in_category(d2).has_value());
  }
  SUBCASE("a group rarely coequalizes distinct arrows") {
    auto pair = fixtures::shared(fixtures::parallel_pair_cat());
    auto z3 = fixtures::shared(fixtures::z3_cat());
    RawFinFunctor raw;
    raw.objects = {{"a", "*"}, {"b", "*"}};
    raw.morphisms = {{"u", "e"}, {"v", "a"}};
    auto d = require_fin_functor(pair, z3, raw);
    CHECK_FALSE(find_colimit_in_category(d).has_value());
  }
  SUBCASE("cocone candidate cap") {
    RawFinFunctor raw;
    raw.objects = {{"a", "0"}, {"b", "1"}, {"c", "2"}};
    raw.morphisms = {{"f", "0<=1"}, {"g", "0<=2"}};
    auto d = require_fin_functor(span, lattice, raw);
    Caps caps;
    caps.max_nat_trans = 0;
    CHECK_THROWS_WITH_AS(find_colimit_in_category(d, caps),
                         doctest::Contains("SearchSpaceCapExceeded"), Error);
  }
}
