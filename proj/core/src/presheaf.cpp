#include "fincat/presheaf.hpp"

#include <algorithm>
#include <set>

#include "fincat/setcolim.hpp"

namespace fincat {

Presheaf make_presheaf(std::shared_ptr<const FinCat> base, const RawSetFunctor& raw) {
  auto op = std::make_shared<const FinCat>(opposite(*base));
  return Presheaf{std::move(base), require_set_functor(std::move(op), raw)};
}

Presheaf representable(std::shared_ptr<const FinCat> base, const std::string& x) {
  if (!base->has_object(x)) throw Error("UnknownObject", x);
  RawSetFunctor raw;
  for (const auto& w : base->objects()) raw.objects[w] = base->hom(w, x);
  for (const auto& f : base->morphisms()) {
    if (base->is_identity(f.id)) continue;
    // restriction along f: W -> Y sends g: Y -> x to g∘f: W -> x
    auto& action = raw.actions[f.id];
    for (const auto& g : base->hom(f.cod, x)) action[g] = base->compose(g, f.id);
  }
  return make_presheaf(std::move(base), raw);
}

YonedaLemmaResult check_yoneda_lemma(const Presheaf& p, const std::string& x, const Caps& caps) {
  Presheaf hx = representable(p.base, x);
  auto transformations = enumerate_nat_trans(hx.functor, p.functor, caps);

  YonedaLemmaResult out;
  out.transformations = transformations.size();
  out.sections = p.sections(x).size();

  // evaluation at the identity must hit every section exactly once
  std::set<std::string> hit;
  const std::string& unit = p.base->identity_of(x);
  for (const auto& t : transformations) hit.insert(t.components.at(x).at(unit));
  out.bijective = hit.size() == transformations.size() && hit.size() == out.sections;
  return out;
}

Report check_yoneda_full_faithful(std::shared_ptr<const FinCat> base, const Caps& caps) {
  Report report;
  const FinCat& c = *base;
  for (const auto& x : c.objects()) {
    Presheaf hx = representable(base, x);
    for (const auto& y : c.objects()) {
      Presheaf hy = representable(base, y);
      auto all = enumerate_nat_trans(hx.functor, hy.functor, caps);

      // the transformation induced by g: x -> y is postcomposition with g
      std::vector<NatTrans> induced;
      for (const auto& g : c.hom(x, y)) {
        NatTrans t;
        for (const auto& w : c.objects()) {
          auto& cm = t.components[w];
          for (const auto& u : c.hom(w, x)) cm[u] = c.compose(g, u);
        }
        induced.push_back(std::move(t));
      }

      for (std::size_t i = 0; i < induced.size(); ++i)
        for (std::size_t j = i + 1; j < induced.size(); ++j)
          if (induced[i] == induced[j])
            report.issues.push_back({"YonedaNotFaithful", x + " to " + y});
      for (const auto& t : all)
        if (std::find(induced.begin(), induced.end(), t) == induced.end())
          report.issues.push_back({"YonedaNotFull", x + " to " + y});
      if (induced.size() != all.size())
        report.issues.push_back({"YonedaCountMismatch", x + " to " + y});
    }
  }
  return report;
}

ElementsCategory category_of_elements(const Presheaf& p) {
  const FinCat& c = *p.base;
  RawCategory raw;
  ElementsCategory out;

  auto object_label = [](const std::string& obj, const std::string& section) {
    return "(" + obj + "," + section + ")";
  };

  for (const auto& obj : c.objects()) {
    for (const auto& s : p.sections(obj)) {
      std::string label = object_label(obj, s);
      raw.objects.push_back(label);
      out.object_info[label] = {obj, s};
    }
  }

  // one morphism per (base morphism, section over its codomain)
  for (const auto& f : c.morphisms()) {
    for (const auto& y : p.sections(f.cod)) {
      std::string id = f.id + "@" + y;
      raw.morphisms.push_back(
          {id, object_label(f.dom, p.restrict(f.id, y)), object_label(f.cod, y)});
      out.morphism_to_base[id] = f.id;
    }
  }
  for (const auto& obj : c.objects())
    for (const auto& s : p.sections(obj))
      raw.identity[object_label(obj, s)] = c.identity_of(obj) + "@" + s;

  // (g,z)∘(f,y) = (g∘f, z), defined when y is z restricted along g
  for (const auto& g : c.morphisms()) {
    for (const auto& f : c.morphisms()) {
      if (!c.composable(g.id, f.id)) continue;
      const std::string& gf = c.compose(g.id, f.id);
      for (const auto& z : p.sections(g.cod)) {
        const std::string& y = p.restrict(g.id, z);
        raw.compose[{g.id + "@" + z, f.id + "@" + y}] = gf + "@" + z;
      }
    }
  }

  out.category = require_category(raw);
  return out;
}

Report check_canonical_colimit(const Presheaf& p) {
  Report report;
  const FinCat& c = *p.base;
  ElementsCategory el = category_of_elements(p);
  auto el_cat = std::make_shared<const FinCat>(el.category);

  for (const auto& w : c.objects()) {
    // the diagram (X,x) -> hom(W,X) over the category of elements, acting
    // by postcomposition
    RawSetFunctor raw;
    for (const auto& label : el.category.objects())
      raw.objects[label] = c.hom(w, el.object_info.at(label).first);
    for (const auto& m : el.category.morphisms()) {
      if (el.category.is_identity(m.id)) continue;
      const std::string& f = el.morphism_to_base.at(m.id);
      auto& action = raw.actions[m.id];
      for (const auto& u : raw.objects.at(m.dom)) action[u] = c.compose(f, u);
    }
    auto diagram = require_set_functor(el_cat, raw);
    auto glued = colimit(diagram);

    // compare classes with P(W) through ((X,x), u) -> restrict(u, x)
    std::map<std::string, std::string> class_value;
    for (const auto& [label, members] : glued.classes) {
      for (const auto& [el_obj, u] : members) {
        const auto& [base_obj, section] = el.object_info.at(el_obj);
        (void)base_obj;
        const std::string& value = p.restrict(u, section);
        auto it = class_value.find(label);
        if (it == class_value.end())
          class_value[label] = value;
        else if (it->second != value)
          report.issues.push_back({"ComparisonNotWellDefined", w + " at " + label});
      }
    }
    std::set<std::string> image;
    for (const auto& [label, value] : class_value) image.insert(value);
    const auto& sections = p.sections(w);
    bool onto = image.size() == sections.size() && class_value.size() == image.size();
    if (!onto || !std::all_of(sections.begin(), sections.end(), [&](const std::string& s) {
          return image.count(s) != 0;
        }))
      report.issues.push_back({"CanonicalColimitNotIso", w});
  }
  return report;
}

}  // namespace fincat
