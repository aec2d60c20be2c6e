#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fincat/caps.hpp"
#include "fincat/error.hpp"
#include "fincat/fincat.hpp"

namespace fincat {

// Unvalidated data of a functor into finite sets: an element list per object
// and an element map per morphism. Identity actions may be omitted; they are
// filled in during validation.
struct RawSetFunctor {
  // object id -> elements, in the order they should be listed in output
  std::map<std::string, std::vector<std::string>> objects;
  // morphism id -> (element of the domain set -> element of the codomain set)
  std::map<std::string, std::map<std::string, std::string>> actions;
};

// A functor from a finite category to finite sets. Immutable; produced by
// validate_set_functor or the builders in other modules.
class SetFunctor {
public:
  const std::shared_ptr<const FinCat>& base() const { return base_; }
  const FinCat& cat() const { return *base_; }

  const std::vector<std::string>& elements(const std::string& obj) const;
  // image of elem under the action of mor
  const std::string& apply(const std::string& mor, const std::string& elem) const;
  const std::map<std::string, std::string>& action(const std::string& mor) const;

  RawSetFunctor to_raw() const;

  // structural equality: equal base categories, element lists and actions
  friend bool operator==(const SetFunctor& a, const SetFunctor& b);

private:
  friend class SetFunctorBuilder;

  std::shared_ptr<const FinCat> base_;
  std::map<std::string, std::vector<std::string>> elements_;
  std::map<std::string, std::map<std::string, std::string>> action_;
};

struct SetFunctorValidation {
  std::optional<SetFunctor> functor;  // present iff report.ok()
  Report report;
};

// Checks that every object has an element list without duplicates, every
// non-identity morphism a total action into the right set, identities act as
// identity maps and actions compose exactly as the base category does.
SetFunctorValidation validate_set_functor(std::shared_ptr<const FinCat> base,
                                          const RawSetFunctor& raw);

// validate_set_functor that throws Error("ValidationFailed") on any issue.
SetFunctor require_set_functor(std::shared_ptr<const FinCat> base, const RawSetFunctor& raw);

// A natural transformation between two set-valued functors on the same base,
// given by one component map per object.
struct NatTrans {
  // object id -> (element of F(x) -> element of G(x))
  std::map<std::string, std::map<std::string, std::string>> components;

  friend bool operator==(const NatTrans&, const NatTrans&) = default;
};

// True iff every component is total into the right set and every naturality
// square commutes. Throws SourceMismatch when the bases differ.
bool is_natural(const SetFunctor& f, const SetFunctor& g, const NatTrans& t);

// All natural transformations f => g, in lexicographic order of their
// component tables (objects in base order, elements in listed order). Throws
// SourceMismatch when the bases differ and SearchSpaceCapExceeded when the
// number of candidate families passes caps.max_nat_trans.
std::vector<NatTrans> enumerate_nat_trans(const SetFunctor& f, const SetFunctor& g,
                                          const Caps& caps = {});

NatTrans identity_nat_trans(const SetFunctor& f);

// Vertical composite (second after first); components compose pointwise.
NatTrans compose_nat_trans(const SetFunctor& f, const SetFunctor& g, const SetFunctor& h,
                           const NatTrans& second, const NatTrans& first);

// Unvalidated data of a functor between finite categories.
struct RawFinFunctor {
  std::map<std::string, std::string> objects;    // object -> object
  std::map<std::string, std::string> morphisms;  // morphism -> morphism
};

// A functor between finite categories. Immutable; produced by
// validate_fin_functor.
class FinFunctor {
public:
  const std::shared_ptr<const FinCat>& dom() const { return dom_; }
  const std::shared_ptr<const FinCat>& cod() const { return cod_; }

  const std::string& apply_object(const std::string& obj) const;
  const std::string& apply_morphism(const std::string& mor) const;

  RawFinFunctor to_raw() const;

private:
  friend class FinFunctorBuilder;

  std::shared_ptr<const FinCat> dom_;
  std::shared_ptr<const FinCat> cod_;
  std::map<std::string, std::string> objects_;
  std::map<std::string, std::string> morphisms_;
};

struct FinFunctorValidation {
  std::optional<FinFunctor> functor;  // present iff report.ok()
  Report report;
};

// Checks totality of both maps, endpoint coherence (F(f): F(dom f) ->
// F(cod f)), preservation of identities and of every composite. Identity
// images may be omitted; they are filled in from the object map.
FinFunctorValidation validate_fin_functor(std::shared_ptr<const FinCat> dom,
                                          std::shared_ptr<const FinCat> cod,
                                          const RawFinFunctor& raw);

// validate_fin_functor that throws Error("ValidationFailed") on any issue.
FinFunctor require_fin_functor(std::shared_ptr<const FinCat> dom,
                               std::shared_ptr<const FinCat> cod, const RawFinFunctor& raw);

}  // namespace fincat
