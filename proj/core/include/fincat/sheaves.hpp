#pragma once

#include <map>
#include <string>
#include <vector>

#include "fincat/caps.hpp"
#include "fincat/presheaf.hpp"
#include "fincat/sites.hpp"

namespace fincat {

// A matching family for a presheaf over a sieve assigns a section over the
// domain of every member so that restricting the section for f along any g
// gives the section for f∘g.
using Family = std::map<std::string, std::string>;

// Canonical one-line form "{f: s, g: t}" over the sorted members; "{}" for
// the empty family. Backslash, colon and comma inside names are escaped so
// distinct families always serialize differently.
std::string serialize_family(const Family& family);

// All matching families, in lexicographic order of their assignments
// (members sorted, sections in listed order). Throws SearchSpaceCapExceeded
// when the assignment count passes caps.max_nat_trans.
std::vector<Family> matching_families(const Presheaf& p, const Sieve& s, const Caps& caps = {});

// For every object and covering sieve, sections must correspond exactly to
// matching families through restriction. Issues:
//   NotSeparated  two sections agreeing on a cover
//   NotGlued      a family no section restricts to
Report check_sheaf(const Presheaf& p, const Coverage& t, const Caps& caps = {});

// The injectivity half of check_sheaf only.
Report check_separated(const Presheaf& p, const Coverage& t, const Caps& caps = {});

// One application of the gluing construction: sections over an object are
// classes of matching families over its covering sieves, two families being
// identified when one restricts to the other along a common refinement.
// Elements are decimal indices into the sorted class list. The unit sends a
// section to the class of its family over the maximal sieve. The coverage
// must satisfy the topology axioms; base change failures surface as errors.
struct PlusResult {
  Presheaf presheaf;
  NatTrans unit;
  // per object: class index (as label) -> members (sieve label, family form)
  std::map<std::string, std::map<std::string, std::vector<std::pair<std::string, std::string>>>>
      classes;
};

PlusResult plus_construction(const Presheaf& p, const Coverage& t, const Caps& caps = {});

// The gluing construction applied twice; that is always a sheaf. The unit
// is the composite of the two single-step units.
PlusResult sheafify(const Presheaf& p, const Coverage& t, const Caps& caps = {});

// Checks the defining property of sheafification against a given sheaf q:
// every map p -> q must factor through the unit by exactly one map from the
// sheafification. Issues: TargetNotSheaf, FactorizationMissing,
// FactorizationNotUnique.
Report verify_sheafification_universal(const Presheaf& p, const Coverage& t, const Presheaf& q,
                                       const Caps& caps = {});

}  // namespace fincat
