#pragma once

#include <map>
#include <string>
#include <vector>

#include "fincat/caps.hpp"
#include "fincat/fincat.hpp"

namespace fincat {

// A sieve on an object: a set of morphisms into it closed under
// precomposition. Members are kept sorted so equal sieves compare equal.
struct Sieve {
  std::string object;
  std::vector<std::string> members;

  std::string label() const;  // "{f,g}" over the sorted members
  bool contains(const std::string& mor) const;

  friend bool operator==(const Sieve&, const Sieve&) = default;
  friend auto operator<=>(const Sieve&, const Sieve&) = default;
};

// The sieve of all morphisms into an object.
Sieve maximal_sieve(const FinCat& c, const std::string& obj);

// Smallest sieve containing the generators; every generator must land in
// obj. Closing under precomposition needs a single pass because
// composition is associative.
Sieve generate_sieve(const FinCat& c, const std::string& obj,
                     const std::vector<std::string>& generators);

// True iff every member lands in s.object and f∘g stays inside for every
// member f and composable g.
bool is_sieve(const FinCat& c, const Sieve& s);

// Restriction of a sieve along f: W -> object: all g into W with f∘g in s.
Sieve pullback_sieve(const FinCat& c, const Sieve& s, const std::string& f);

// All sieves on an object, in bitmask order over the sorted morphisms into
// it. Throws SearchSpaceCapExceeded when those morphisms outnumber
// caps.max_sieve_morphisms.
std::vector<Sieve> enumerate_sieves(const FinCat& c, const std::string& obj,
                                    const Caps& caps = {});

// An assignment of covering sieves to objects. Objects may be omitted;
// that is the same as an empty list.
struct Coverage {
  std::map<std::string, std::vector<Sieve>> covers;
};

// The three topology axioms, each reported with a witness:
//   MissingMaximalSieve  object whose maximal sieve does not cover
//   PullbackEscapes      covering sieve whose restriction stops covering
//   LocalityFails        sieve covered locally by a covering sieve, yet
//                        itself not covering
// plus structural issues (UnknownObject, WrongObject, NotASieve,
// DuplicateSieve). Locality is checked against every sieve, so the sieve
// enumeration cap applies.
Report check_topology_axioms(const FinCat& c, const Coverage& t, const Caps& caps = {});

// Only maximal sieves cover.
Coverage trivial_topology(const FinCat& c);

// Every sieve covers.
Coverage all_sieves_topology(const FinCat& c, const Caps& caps = {});

// Smallest topology containing the given coverage: adds maximal sieves,
// then closes under pullback and locality until nothing changes.
Coverage saturate_coverage(const FinCat& c, const Coverage& base, const Caps& caps = {});

}  // namespace fincat
