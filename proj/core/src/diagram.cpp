#include "fincat/diagram.hpp"

#include <algorithm>
#include <set>

namespace fincat {

class SetFunctorBuilder {
public:
  static SetFunctor build(std::shared_ptr<const FinCat> base,
                          std::map<std::string, std::vector<std::string>> elements,
                          std::map<std::string, std::map<std::string, std::string>> action) {
    SetFunctor f;
    f.base_ = std::move(base);
    f.elements_ = std::move(elements);
    f.action_ = std::move(action);
    return f;
  }
};

class FinFunctorBuilder {
public:
  static FinFunctor build(std::shared_ptr<const FinCat> dom, std::shared_ptr<const FinCat> cod,
                          std::map<std::string, std::string> objects,
                          std::map<std::string, std::string> morphisms) {
    FinFunctor f;
    f.dom_ = std::move(dom);
    f.cod_ = std::move(cod);
    f.objects_ = std::move(objects);
    f.morphisms_ = std::move(morphisms);
    return f;
  }
};

const std::vector<std::string>& SetFunctor::elements(const std::string& obj) const {
  auto it = elements_.find(obj);
  if (it == elements_.end()) throw Error("UnknownObject", obj);
  return it->second;
}

const std::string& SetFunctor::apply(const std::string& mor, const std::string& elem) const {
  const auto& act = action(mor);
  auto it = act.find(elem);
  if (it == act.end()) throw Error("UnknownElement", elem + " under " + mor);
  return it->second;
}

const std::map<std::string, std::string>& SetFunctor::action(const std::string& mor) const {
  auto it = action_.find(mor);
  if (it == action_.end()) throw Error("UnknownMorphism", mor);
  return it->second;
}

RawSetFunctor SetFunctor::to_raw() const { return RawSetFunctor{elements_, action_}; }

bool operator==(const SetFunctor& a, const SetFunctor& b) {
  return *a.base_ == *b.base_ && a.elements_ == b.elements_ && a.action_ == b.action_;
}

SetFunctorValidation validate_set_functor(std::shared_ptr<const FinCat> base,
                                          const RawSetFunctor& raw) {
  SetFunctorValidation out;
  Report& report = out.report;
  const FinCat& cat = *base;

  // element lists: one per object, no duplicates, no stray objects
  for (const auto& obj : cat.objects()) {
    if (raw.objects.find(obj) == raw.objects.end())
      report.issues.push_back({"MissingObjectSet", obj});
  }
  for (const auto& [obj, elems] : raw.objects) {
    if (!cat.has_object(obj)) {
      report.issues.push_back({"UnknownObject", obj});
      continue;
    }
    std::set<std::string> seen;
    for (const auto& e : elems)
      if (!seen.insert(e).second) report.issues.push_back({"DuplicateElement", obj + ": " + e});
  }
  if (!report.ok()) return out;

  // actions: total on non-identities, well typed; identity actions filled in
  std::map<std::string, std::map<std::string, std::string>> action;
  for (const auto& [mor, map] : raw.actions) {
    if (!cat.has_morphism(mor)) report.issues.push_back({"UnknownMorphism", mor});
  }
  for (const auto& m : cat.morphisms()) {
    auto it = raw.actions.find(m.id);
    if (it == raw.actions.end()) {
      if (cat.is_identity(m.id)) {
        auto& act = action[m.id];
        for (const auto& e : raw.objects.at(m.dom)) act[e] = e;
      } else {
        report.issues.push_back({"NonTotalAction", m.id});
      }
      continue;
    }
    const auto& dom_elems = raw.objects.at(m.dom);
    const auto& cod_elems = raw.objects.at(m.cod);
    for (const auto& [e, img] : it->second) {
      if (std::find(dom_elems.begin(), dom_elems.end(), e) == dom_elems.end())
        report.issues.push_back({"UnknownElement", m.id + " maps stray " + e});
      if (std::find(cod_elems.begin(), cod_elems.end(), img) == cod_elems.end())
        report.issues.push_back({"UnknownElement", m.id + " sends " + e + " to stray " + img});
    }
    for (const auto& e : dom_elems)
      if (it->second.find(e) == it->second.end())
        report.issues.push_back({"NonTotalAction", m.id + " at " + e});
    action[m.id] = it->second;
  }
  if (!report.ok()) return out;

  // identities act as identity maps
  for (const auto& obj : cat.objects()) {
    const auto& act = action.at(cat.identity_of(obj));
    for (const auto& e : raw.objects.at(obj))
      if (act.at(e) != e)
        report.issues.push_back({"IdentityNotPreserved", obj + " at " + e});
  }

  // actions compose exactly as the base category does
  for (const auto& g : cat.morphisms()) {
    for (const auto& f : cat.morphisms()) {
      if (!cat.composable(g.id, f.id)) continue;
      const auto& gf = cat.compose(g.id, f.id);
      for (const auto& e : raw.objects.at(f.dom)) {
        const auto& two_step = action.at(g.id).at(action.at(f.id).at(e));
        if (action.at(gf).at(e) != two_step)
          report.issues.push_back(
              {"CompositionNotPreserved", g.id + "∘" + f.id + " at " + e});
      }
    }
  }
  if (!report.ok()) return out;

  out.functor = SetFunctorBuilder::build(std::move(base), raw.objects, std::move(action));
  return out;
}

SetFunctor require_set_functor(std::shared_ptr<const FinCat> base, const RawSetFunctor& raw) {
  auto v = validate_set_functor(std::move(base), raw);
  if (!v.report.ok()) throw Error("ValidationFailed", v.report.to_string());
  return *std::move(v.functor);
}

bool is_natural(const SetFunctor& f, const SetFunctor& g, const NatTrans& t) {
  if (!(*f.base() == *g.base())) throw Error("SourceMismatch", "bases differ");
  const FinCat& cat = f.cat();

  for (const auto& x : cat.objects()) {
    auto it = t.components.find(x);
    if (it == t.components.end()) return false;
    const auto& fx = f.elements(x);
    const auto& gx = g.elements(x);
    if (it->second.size() != fx.size()) return false;
    for (const auto& e : fx) {
      auto img = it->second.find(e);
      if (img == it->second.end()) return false;
      if (std::find(gx.begin(), gx.end(), img->second) == gx.end()) return false;
    }
  }
  for (const auto& m : cat.morphisms()) {
    const auto& tx = t.components.at(m.dom);
    const auto& ty = t.components.at(m.cod);
    for (const auto& e : f.elements(m.dom)) {
      if (ty.at(f.apply(m.id, e)) != g.apply(m.id, tx.at(e))) return false;
    }
  }
  return true;
}

std::vector<NatTrans> enumerate_nat_trans(const SetFunctor& f, const SetFunctor& g,
                                          const Caps& caps) {
  if (!(*f.base() == *g.base())) throw Error("SourceMismatch", "bases differ");
  const FinCat& cat = f.cat();
  const auto& objs = cat.objects();
  std::size_t n_obj = objs.size();

  // index tables for the hot loop
  std::vector<std::vector<std::string>> fe(n_obj), ge(n_obj);
  std::vector<std::map<std::string, int>> fe_index(n_obj), ge_index(n_obj);
  for (std::size_t i = 0; i < n_obj; ++i) {
    fe[i] = f.elements(objs[i]);
    ge[i] = g.elements(objs[i]);
    for (std::size_t k = 0; k < fe[i].size(); ++k) fe_index[i][fe[i][k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < ge[i].size(); ++k) ge_index[i][ge[i][k]] = static_cast<int>(k);
  }

  struct Arrow {
    int dom, cod;
    std::vector<int> fa;  // index action of f
    std::vector<int> ga;  // index action of g
  };
  std::vector<Arrow> arrows;
  for (const auto& m : cat.morphisms()) {
    if (cat.is_identity(m.id)) continue;
    Arrow a;
    a.dom = cat.object_index(m.dom);
    a.cod = cat.object_index(m.cod);
    for (const auto& e : fe[a.dom]) a.fa.push_back(fe_index[a.cod].at(f.apply(m.id, e)));
    for (const auto& e : ge[a.dom]) a.ga.push_back(ge_index[a.cod].at(g.apply(m.id, e)));
    arrows.push_back(std::move(a));
  }

  // slots of the odometer: one per element of every f(x), valued in g(x)
  struct Slot {
    std::size_t obj;
    std::size_t pos;    // index within f(x)
    std::size_t radix;  // |g(x)|
  };
  std::vector<Slot> slots;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n_obj; ++i) {
    if (ge[i].empty() && !fe[i].empty()) return {};  // no function into an empty set
    for (std::size_t k = 0; k < fe[i].size(); ++k) {
      slots.push_back({i, k, ge[i].size()});
      if (total > caps.max_nat_trans / ge[i].size())
        throw Error("SearchSpaceCapExceeded",
                    "natural transformation candidates pass " +
                        std::to_string(caps.max_nat_trans));
      total *= ge[i].size();
    }
  }

  std::vector<std::vector<int>> comp(n_obj);
  for (std::size_t i = 0; i < n_obj; ++i) comp[i].assign(fe[i].size(), 0);

  std::vector<NatTrans> found;
  for (std::uint64_t tick = 0; tick < total; ++tick) {
    bool natural = true;
    for (const auto& a : arrows) {
      for (std::size_t e = 0; e < comp[a.dom].size() && natural; ++e)
        if (comp[a.cod][a.fa[e]] != a.ga[comp[a.dom][e]]) natural = false;
      if (!natural) break;
    }
    if (natural) {
      NatTrans t;
      for (std::size_t i = 0; i < n_obj; ++i) {
        auto& cm = t.components[objs[i]];
        for (std::size_t k = 0; k < fe[i].size(); ++k) cm[fe[i][k]] = ge[i][comp[i][k]];
      }
      found.push_back(std::move(t));
    }
    // advance, last slot fastest, so results come out in lexicographic order
    for (std::size_t s = slots.size(); s-- > 0;) {
      int& digit = comp[slots[s].obj][slots[s].pos];
      if (++digit < static_cast<int>(slots[s].radix)) break;
      digit = 0;
    }
  }
  return found;
}

NatTrans identity_nat_trans(const SetFunctor& f) {
  NatTrans t;
  for (const auto& x : f.cat().objects()) {
    auto& cm = t.components[x];
    for (const auto& e : f.elements(x)) cm[e] = e;
  }
  return t;
}

NatTrans compose_nat_trans(const SetFunctor& f, const SetFunctor& g, const SetFunctor& h,
                           const NatTrans& second, const NatTrans& first) {
  if (!is_natural(f, g, first) || !is_natural(g, h, second))
    throw Error("NotNatural", "composite of non-natural families");
  NatTrans t;
  for (const auto& x : f.cat().objects()) {
    auto& cm = t.components[x];
    for (const auto& e : f.elements(x)) cm[e] = second.components.at(x).at(first.components.at(x).at(e));
  }
  return t;
}

const std::string& FinFunctor::apply_object(const std::string& obj) const {
  auto it = objects_.find(obj);
  if (it == objects_.end()) throw Error("UnknownObject", obj);
  return it->second;
}

const std::string& FinFunctor::apply_morphism(const std::string& mor) const {
  auto it = morphisms_.find(mor);
  if (it == morphisms_.end()) throw Error("UnknownMorphism", mor);
  return it->second;
}

RawFinFunctor FinFunctor::to_raw() const { return RawFinFunctor{objects_, morphisms_}; }

FinFunctorValidation validate_fin_functor(std::shared_ptr<const FinCat> dom,
                                          std::shared_ptr<const FinCat> cod,
                                          const RawFinFunctor& raw) {
  FinFunctorValidation out;
  Report& report = out.report;
  const FinCat& d = *dom;
  const FinCat& c = *cod;

  std::map<std::string, std::string> objects = raw.objects;
  std::map<std::string, std::string> morphisms = raw.morphisms;

  for (const auto& [o, img] : raw.objects) {
    if (!d.has_object(o)) report.issues.push_back({"UnknownObject", o});
    else if (!c.has_object(img)) report.issues.push_back({"UnknownObject", "image " + img});
  }
  for (const auto& o : d.objects())
    if (objects.find(o) == objects.end()) report.issues.push_back({"NonTotalObjectMap", o});
  if (!report.ok()) return out;

  for (const auto& [m, img] : raw.morphisms) {
    if (!d.has_morphism(m)) report.issues.push_back({"UnknownMorphism", m});
    else if (!c.has_morphism(img)) report.issues.push_back({"UnknownMorphism", "image " + img});
  }
  if (!report.ok()) return out;
  for (const auto& m : d.morphisms()) {
    if (morphisms.find(m.id) != morphisms.end()) continue;
    if (d.is_identity(m.id))
      morphisms[m.id] = c.identity_of(objects.at(m.dom));
    else
      report.issues.push_back({"NonTotalMorphismMap", m.id});
  }
  if (!report.ok()) return out;

  for (const auto& m : d.morphisms()) {
    const auto& img = c.morphism(morphisms.at(m.id));
    if (img.dom != objects.at(m.dom) || img.cod != objects.at(m.cod))
      report.issues.push_back({"EndpointMismatch", m.id + " to " + img.id});
  }
  if (!report.ok()) return out;

  for (const auto& o : d.objects())
    if (morphisms.at(d.identity_of(o)) != c.identity_of(objects.at(o)))
      report.issues.push_back({"IdentityNotPreserved", o});
  for (const auto& g : d.morphisms()) {
    for (const auto& f : d.morphisms()) {
      if (!d.composable(g.id, f.id)) continue;
      const auto& lhs = morphisms.at(d.compose(g.id, f.id));
      const auto& rhs = c.compose(morphisms.at(g.id), morphisms.at(f.id));
      if (lhs != rhs)
        report.issues.push_back({"CompositionNotPreserved", g.id + "∘" + f.id});
    }
  }
  if (!report.ok()) return out;

  out.functor =
      FinFunctorBuilder::build(std::move(dom), std::move(cod), std::move(objects), std::move(morphisms));
  return out;
}

FinFunctor require_fin_functor(std::shared_ptr<const FinCat> dom,
                               std::shared_ptr<const FinCat> cod, const RawFinFunctor& raw) {
  auto v = validate_fin_functor(std::move(dom), std::move(cod), raw);
  if (!v.report.ok()) throw Error("ValidationFailed", v.report.to_string());
  return *std::move(v.functor);
}

}  // namespace fincat
