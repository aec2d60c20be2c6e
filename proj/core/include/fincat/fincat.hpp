#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fincat/caps.hpp"
#include "fincat/error.hpp"

namespace fincat {

// A morphism of a finite category. Ids are opaque strings; outputs that list
// morphisms are ordered by id so every run prints the same bytes.
struct Morphism {
  std::string id;
  std::string dom;
  std::string cod;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// Unvalidated category data, as read from a workspace file or assembled by
// hand. validate_category turns this into a FinCat or a list of violations.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  // object id -> identity morphism id
  std::map<std::string, std::string> identity;
  // (g, f) -> g∘f, for every composable pair (cod f == dom g)
  std::map<std::pair<std::string, std::string>, std::string> compose;
};

using CategoryIssue = Issue;
using CategoryReport = Report;

// A finite category with explicit objects, morphisms and a total composition
// table. Instances are immutable and only produced by validate_category (or
// the builders below, whose outputs satisfy validate_category by
// construction).
class FinCat {
public:
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }

  bool has_object(const std::string& id) const;
  bool has_morphism(const std::string& id) const;
  const Morphism& morphism(const std::string& id) const;
  // identity morphism id of an object
  const std::string& identity_of(const std::string& obj) const;
  bool is_identity(const std::string& mor) const;

  bool composable(const std::string& g, const std::string& f) const;
  // g∘f; throws DomCodMismatch if not composable
  const std::string& compose(const std::string& g, const std::string& f) const;

  // all morphisms x -> y, ordered by id
  std::vector<std::string> hom(const std::string& x, const std::string& y) const;
  // all morphisms with the given codomain, ordered by id
  std::vector<std::string> morphisms_into(const std::string& y) const;

  // dense index view for hot loops
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  int object_index(const std::string& id) const;    // -1 if absent
  int morphism_index(const std::string& id) const;  // -1 if absent
  const Morphism& morphism_at(std::size_t idx) const { return morphisms_[idx]; }
  int identity_index_of(std::size_t obj_idx) const { return identity_[obj_idx]; }
  // composition by morphism index; -1 when not composable
  int compose_index(std::size_t g, std::size_t f) const {
    return table_[g * morphisms_.size() + f];
  }

  RawCategory to_raw() const;

  friend bool operator==(const FinCat& a, const FinCat& b);

private:
  friend class FinCatBuilder;

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;  // object index -> morphism index
  std::vector<int> table_;     // g * n + f -> morphism index or -1
  std::map<std::string, int> object_index_;
  std::map<std::string, int> morphism_index_;
};

struct CategoryValidation {
  std::optional<FinCat> category;  // present iff report.ok()
  CategoryReport report;
};

// Checks id uniqueness, dom/cod coherence, identities, totality of the
// composition table, unit laws and associativity (exhaustively).
CategoryValidation validate_category(const RawCategory& raw);

// validate_category that throws Error("ValidationFailed") on any issue.
FinCat require_category(const RawCategory& raw);

// Directed multigraph; vertices and edge ids are opaque strings.
struct FinGraph {
  struct Edge {
    std::string id;
    std::string src;
    std::string dst;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

// Free category on an acyclic graph: morphisms are the directed paths,
// identities are the empty paths ("1_v"), a path is named by its edge ids
// joined with '.' in traversal order. Throws CyclicGraph on a cycle and
// SearchSpaceCapExceeded if the path count passes caps.max_category_morphisms.
FinCat free_category_on_acyclic_graph(const FinGraph& g, const Caps& caps = {});

// Finite group given by its multiplication table; product[i][j] is the label
// of elements[i] * elements[j].
struct GroupTable {
  std::vector<std::string> elements;
  std::string unit;
  std::vector<std::vector<std::string>> product;
};

// One-object category of a finite group: one arrow per element, composition
// is the group product (f_a ∘ f_b = f_{a*b}). The unique object is "*".
// Throws InvalidGroupTable when the table is not a group.
FinCat delooping(const GroupTable& g);

// Same objects and morphism ids, dom/cod swapped, composition reversed.
// Applying it twice gives back a structurally equal category.
FinCat opposite(const FinCat& c);

// Category of a finite poset: one morphism "a<=b" per related pair. The
// relation is the reflexive-transitive closure of the given pairs; throws
// NotAPoset if the closure has a two-way pair between distinct elements.
FinCat poset_category(const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& le,
                      const Caps& caps = {});

// True iff f has a two-sided inverse.
bool is_iso(const FinCat& c, const std::string& f);

// Ids of all isomorphisms, ordered by id.
std::vector<std::string> isomorphisms(const FinCat& c);

// First object (in object order) with exactly one morphism to every object.
std::optional<std::string> find_initial(const FinCat& c);
// First object with exactly one morphism from every object.
std::optional<std::string> find_terminal(const FinCat& c);

}  // namespace fincat
