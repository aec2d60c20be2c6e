#include <doctest.h>

#include <algorithm>

#include "fincat/modelcheck.hpp"
#include "support/builders.hpp"

using namespace fincat;
using namespace fixtures;

namespace {

std::vector<std::string> all_morphisms(const FinCat& c) {
  std::vector<std::string> out;
  for (const auto& m : c.morphisms()) out.push_back(m.id);
  return out;
}

std::vector<std::string> identities(const FinCat& c) {
  std::vector<std::string> out;
  for (const auto& m : c.morphisms())
    if (c.is_identity(m.id)) out.push_back(m.id);
  return out;
}

}  // namespace

TEST_CASE("isomorphisms as weak equivalences with everything else maximal is a model structure") {
  auto c = lattice2_cat();
  MorphismClasses m{isomorphisms(c), all_morphisms(c), all_morphisms(c)};
  CHECK(check_model_axioms(c, m).ok());
}

TEST_CASE("all three classes maximal on a groupoid is a model structure") {
  auto c = z3_cat();
  MorphismClasses m{all_morphisms(c), all_morphisms(c), all_morphisms(c)};
  CHECK(check_model_axioms(c, m).ok());
}

TEST_CASE("two-of-three fails when the weak equivalences are not composition stable") {
  auto c = z3_cat();
  MorphismClasses m{{"e", "a"}, all_morphisms(c), all_morphisms(c)};
  auto report = check_two_of_three(c, m);
  REQUIRE(report.issues.size() == 3);
  CHECK(report.issues[0].code == "TwoOfThreeFails");
  CHECK(report.issues[0].detail == "f=a g=a gf=b");
  CHECK(report.issues[1].detail == "f=a g=b gf=e");
  CHECK(report.issues[2].detail == "f=b g=a gf=e");

  CHECK(check_two_of_three(c, MorphismClasses{{"e"}, {}, {}}).ok());
  CHECK_THROWS_AS(check_two_of_three(c, MorphismClasses{{"ghost"}, {}, {}}), Error);
}

TEST_CASE("retract closure flags every morphism the split idempotent retracts onto") {
  auto c = split_idem_cat();
  MorphismClasses m{all_morphisms(c), {"e"}, all_morphisms(c)};
  auto report = check_retract_closure(c, m);
  REQUIRE(report.issues.size() == 3);
  for (const auto& issue : report.issues) CHECK(issue.code == "RetractEscapes");
  CHECK(report.issues[0].detail == "cof: 1A retract of e");
  CHECK(report.issues[1].detail == "cof: i retract of e");
  CHECK(report.issues[2].detail == "cof: r retract of e");

  // adding the retracts restores closure; 1B is not a retract of e
  MorphismClasses closed{all_morphisms(c), {"e", "1A", "i", "r"}, all_morphisms(c)};
  CHECK(check_retract_closure(c, closed).ok());
}

TEST_CASE("lift search solves and rejects explicit squares") {
  auto c = lattice2_cat();
  CHECK(has_lift(c, "0<=1", "1<=12", "0<=1", "1<=12"));
  CHECK_FALSE(has_lift(c, "0<=1", "2<=12", "0<=2", "1<=12"));

  auto z = z2_cat();
  CHECK(has_lift(z, "s", "s", "e", "e"));
  CHECK_THROWS_AS(has_lift(z, "s", "s", "e", "s"), Error);
  CHECK_THROWS_AS(has_lift(c, "0<=1", "2<=12", "0<=1", "1<=12"), Error);
  CHECK_THROWS_AS(has_lift(c, "0<=1", "2<=12", "ghost", "1<=12"), Error);
}

TEST_CASE("lifting fails for the incomparable span in the diamond") {
  auto c = lattice2_cat();
  MorphismClasses m{{"0<=1"}, {"0<=1"}, {"2<=12"}};
  auto report = check_lifting(c, m);
  REQUIRE(report.issues.size() == 1);
  CHECK(report.issues[0].code == "LiftMissing");
  CHECK(report.issues[0].detail == "i=0<=1 p=2<=12 u=0<=2 v=1<=12");
}

TEST_CASE("chain with identity fibrations factors one way only") {
  auto c = arrow_cat();
  MorphismClasses m{identities(c), all_morphisms(c), identities(c)};
  CHECK(check_two_of_three(c, m).ok());
  CHECK(check_retract_closure(c, m).ok());
  CHECK(check_lifting(c, m).ok());
  auto report = check_factorization(c, m);
  REQUIRE(report.issues.size() == 1);
  CHECK(report.issues[0].code == "FactorizationFails");
  CHECK(report.issues[0].detail == "0<=1 as trivial cofibration then fibration");

  auto aggregate = check_model_axioms(c, m);
  REQUIRE(aggregate.issues.size() == 1);
  CHECK(aggregate.issues[0].code == "FactorizationFails");
}

TEST_CASE("cofibrant and fibrant objects follow the comparison maps") {
  auto c = lattice2_cat();
  MorphismClasses full{isomorphisms(c), all_morphisms(c), all_morphisms(c)};
  CHECK(cofibrant_objects(c, full) == std::vector<std::string>{"0", "1", "2", "12"});
  CHECK(fibrant_objects(c, full) == std::vector<std::string>{"0", "1", "2", "12"});

  MorphismClasses sparse{{}, {"0<=1"}, {"2<=12"}};
  CHECK(cofibrant_objects(c, sparse) == std::vector<std::string>{"1"});
  CHECK(fibrant_objects(c, sparse) == std::vector<std::string>{"2"});

  auto peaks = twopeaks_cat();
  MorphismClasses peaks_all{{}, all_morphisms(peaks), all_morphisms(peaks)};
  CHECK(cofibrant_objects(peaks, peaks_all) ==
        std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(fibrant_objects(peaks, peaks_all) == std::nullopt);

  auto z = z2_cat();
  MorphismClasses z_all{{}, all_morphisms(z), all_morphisms(z)};
  CHECK(cofibrant_objects(z, z_all) == std::nullopt);
  CHECK(fibrant_objects(z, z_all) == std::nullopt);
}
