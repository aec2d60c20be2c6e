#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fincat/caps.hpp"
#include "fincat/diagram.hpp"
#include "fincat/fincat.hpp"

namespace fincat {

// A presheaf on a category: a set-valued functor on the opposite category.
// For a morphism f: X -> Y of the base, apply(f, -) restricts sections from
// Y to X.
struct Presheaf {
  std::shared_ptr<const FinCat> base;  // the original category
  SetFunctor functor;                  // lives on opposite(*base)

  const std::vector<std::string>& sections(const std::string& obj) const {
    return functor.elements(obj);
  }
  const std::string& restrict(const std::string& mor, const std::string& section) const {
    return functor.apply(mor, section);
  }
};

// Validates raw data (element lists per object, one restriction map per
// morphism, written against the opposite category) into a presheaf.
// Throws Error("ValidationFailed") listing every broken law.
Presheaf make_presheaf(std::shared_ptr<const FinCat> base, const RawSetFunctor& raw);

// hom(-, x): sections at W are the morphisms W -> x, restriction along
// f: W' -> W is precomposition.
Presheaf representable(std::shared_ptr<const FinCat> base, const std::string& x);

// |Nat(hom(-,x), P)| against |P(x)|, and whether evaluation at the identity
// is a bijection between them.
struct YonedaLemmaResult {
  std::size_t transformations = 0;
  std::size_t sections = 0;
  bool bijective = false;
};

YonedaLemmaResult check_yoneda_lemma(const Presheaf& p, const std::string& x,
                                     const Caps& caps = {});

// For every object pair (x,y): postcomposition must be a bijection from
// hom(x,y) onto Nat(hom(-,x), hom(-,y)). Issues carry the witnessing pair.
Report check_yoneda_full_faithful(std::shared_ptr<const FinCat> base, const Caps& caps = {});

// The category of elements of a presheaf. An object "(X,x)" is an object of
// the base with a section over it; a morphism "f@y": (X, restrict(f,y)) ->
// (Y,y) is a base morphism f: X -> Y together with a section over its
// codomain. The projection maps give back the base data.
struct ElementsCategory {
  FinCat category;
  std::map<std::string, std::pair<std::string, std::string>> object_info;  // "(X,x)" -> (X, x)
  std::map<std::string, std::string> morphism_to_base;                     // "f@y" -> f
};

ElementsCategory category_of_elements(const Presheaf& p);

// Checks that the presheaf is the colimit of representables indexed by its
// category of elements, computed pointwise: at every object W the classes
// of the glued hom-sets must map bijectively onto P(W) via
// ((X,x), u) -> restrict(u, x). Issues: ComparisonNotWellDefined,
// CanonicalColimitNotIso.
Report check_canonical_colimit(const Presheaf& p);

}  // namespace fincat
