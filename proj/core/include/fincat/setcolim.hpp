#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fincat/caps.hpp"
#include "fincat/diagram.hpp"

namespace fincat {

// Colimit of a set-valued diagram: the ground set of all (object, element)
// pairs modulo the relation generated by every action. A class is labeled
// "(X,a)" after its lexicographically least member, so output is stable.
struct ColimitResult {
  std::vector<std::string> apex;  // class labels, sorted
  // legs: object -> (element -> class label)
  std::map<std::string, std::map<std::string, std::string>> legs;
  // class label -> members, sorted (object, element) pairs
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> classes;
};

ColimitResult colimit(const SetFunctor& d);

// Limit of a set-valued diagram: all tuples (one element per object, in base
// object order) compatible with every action. A tuple is labeled
// "(a,b,...)"; the apex list is sorted.
struct LimitResult {
  std::vector<std::string> apex;
  // projections: object -> (tuple label -> element)
  std::map<std::string, std::map<std::string, std::string>> projections;
};

// Throws SearchSpaceCapExceeded when the tuple count passes caps.max_nat_trans.
LimitResult limit(const SetFunctor& d, const Caps& caps = {});

// colimit restricted to a base of the right shape; throw ShapeMismatch
// otherwise. A span is two arrows out of one object, a parallel pair two
// arrows between the same two objects, a coproduct base has no arrows.
ColimitResult pushout(const SetFunctor& d);
ColimitResult coequalizer(const SetFunctor& d);
ColimitResult coproduct(const SetFunctor& d);

// A candidate cocone under a set-valued diagram.
struct Cocone {
  std::vector<std::string> apex;
  // object -> (element -> apex element)
  std::map<std::string, std::map<std::string, std::string>> legs;
};

// True iff legs are total, land in the apex and commute with every action.
bool verify_cocone(const SetFunctor& d, const Cocone& c);

// Universality check that never computes the colimit. It enumerates every
// partition of the ground set, locates the finest one compatible with all
// actions, and accepts the cocone iff its leg fibers realize exactly that
// partition and the legs jointly cover the apex. Throws OracleCapExceeded
// when the ground set is larger than caps.max_partition.
bool verify_universal(const SetFunctor& d, const Cocone& c, const Caps& caps = {});

// A colimit realized inside an arbitrary finite category.
struct ColimitInCategory {
  std::string apex;
  std::map<std::string, std::string> legs;  // shape object -> ambient morphism
};

// Searches the ambient category (the codomain of d) for a universal cocone
// under d by enumerating every cocone and testing unique mediation against
// all of them. Returns the qualifying cocone with the first apex in object
// order; nullopt when no object works. Qualifying apexes are checked to be
// isomorphic to each other. Throws SearchSpaceCapExceeded when some apex has
// more than caps.max_nat_trans candidate leg families.
std::optional<ColimitInCategory> find_colimit_in_category(const FinFunctor& d,
                                                          const Caps& caps = {});

}  // namespace fincat
