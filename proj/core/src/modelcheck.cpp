#include "fincat/modelcheck.hpp"

#include <set>

namespace fincat {

namespace {

std::set<std::string> as_class(const FinCat& c, const std::vector<std::string>& ids) {
  std::set<std::string> out;
  for (const auto& id : ids) {
    if (!c.has_morphism(id)) throw Error("UnknownMorphism", id);
    out.insert(id);
  }
  return out;
}

bool is_retract(const FinCat& c, const std::string& f, const std::string& g) {
  const Morphism& mf = c.morphism(f);
  const Morphism& mg = c.morphism(g);
  for (const auto& i : c.hom(mf.dom, mg.dom))
    for (const auto& r : c.hom(mg.dom, mf.dom)) {
      if (c.compose(r, i) != c.identity_of(mf.dom)) continue;
      for (const auto& j : c.hom(mf.cod, mg.cod))
        for (const auto& s : c.hom(mg.cod, mf.cod)) {
          if (c.compose(s, j) != c.identity_of(mf.cod)) continue;
          if (c.compose(g, i) == c.compose(j, f) && c.compose(f, r) == c.compose(s, g))
            return true;
        }
    }
  return false;
}

}  // namespace

Report check_two_of_three(const FinCat& c, const MorphismClasses& m) {
  Report report;
  auto weq = as_class(c, m.weq);
  for (const auto& f : c.morphisms())
    for (const auto& g : c.morphisms()) {
      if (g.dom != f.cod) continue;
      std::string gf = c.compose(g.id, f.id);
      int in = int(weq.count(f.id)) + int(weq.count(g.id)) + int(weq.count(gf));
      if (in == 2)
        report.issues.push_back({"TwoOfThreeFails", "f=" + f.id + " g=" + g.id + " gf=" + gf});
    }
  return report;
}

Report check_retract_closure(const FinCat& c, const MorphismClasses& m) {
  Report report;
  const std::pair<std::string, std::set<std::string>> classes[] = {
      {"weq", as_class(c, m.weq)}, {"cof", as_class(c, m.cof)}, {"fib", as_class(c, m.fib)}};
  for (const auto& [name, members] : classes)
    for (const auto& f : c.morphisms()) {
      if (members.count(f.id)) continue;
      for (const auto& g : members)
        if (is_retract(c, f.id, g))
          report.issues.push_back({"RetractEscapes", name + ": " + f.id + " retract of " + g});
    }
  return report;
}

bool has_lift(const FinCat& c, const std::string& i, const std::string& p, const std::string& u,
              const std::string& v) {
  for (const auto& id : {i, p, u, v})
    if (!c.has_morphism(id)) throw Error("UnknownMorphism", id);
  const Morphism& mi = c.morphism(i);
  const Morphism& mp = c.morphism(p);
  const Morphism& mu = c.morphism(u);
  const Morphism& mv = c.morphism(v);
  if (mu.dom != mi.dom || mu.cod != mp.dom || mv.dom != mi.cod || mv.cod != mp.cod)
    throw Error("EndpointMismatch", "u=" + u + " v=" + v + " do not frame i=" + i + " p=" + p);
  if (c.compose(p, u) != c.compose(v, i))
    throw Error("NonCommutingSquare", "p∘u differs from v∘i");
  for (const auto& h : c.hom(mi.cod, mp.dom))
    if (c.compose(h, i) == u && c.compose(p, h) == v) return true;
  return false;
}

Report check_lifting(const FinCat& c, const MorphismClasses& m) {
  Report report;
  auto weq = as_class(c, m.weq);
  auto cof = as_class(c, m.cof);
  auto fib = as_class(c, m.fib);
  for (const auto& i : cof)
    for (const auto& p : fib) {
      if (!weq.count(i) && !weq.count(p)) continue;
      const Morphism& mi = c.morphism(i);
      const Morphism& mp = c.morphism(p);
      for (const auto& u : c.hom(mi.dom, mp.dom))
        for (const auto& v : c.hom(mi.cod, mp.cod)) {
          if (c.compose(p, u) != c.compose(v, i)) continue;
          if (!has_lift(c, i, p, u, v))
            report.issues.push_back(
                {"LiftMissing", "i=" + i + " p=" + p + " u=" + u + " v=" + v});
        }
    }
  return report;
}

Report check_factorization(const FinCat& c, const MorphismClasses& m) {
  Report report;
  auto weq = as_class(c, m.weq);
  auto cof = as_class(c, m.cof);
  auto fib = as_class(c, m.fib);
  auto factors = [&](const Morphism& f, bool trivial_first) {
    for (const auto& i : c.morphisms()) {
      if (i.dom != f.dom || !cof.count(i.id)) continue;
      if (trivial_first && !weq.count(i.id)) continue;
      for (const auto& p : c.hom(i.cod, f.cod)) {
        if (!fib.count(p)) continue;
        if (!trivial_first && !weq.count(p)) continue;
        if (c.compose(p, i.id) == f.id) return true;
      }
    }
    return false;
  };
  for (const auto& f : c.morphisms()) {
    if (!factors(f, false))
      report.issues.push_back(
          {"FactorizationFails", f.id + " as cofibration then trivial fibration"});
    if (!factors(f, true))
      report.issues.push_back(
          {"FactorizationFails", f.id + " as trivial cofibration then fibration"});
  }
  return report;
}

Report check_model_axioms(const FinCat& c, const MorphismClasses& m) {
  Report report;
  for (auto check : {check_two_of_three, check_retract_closure, check_lifting,
                     check_factorization}) {
    Report part = check(c, m);
    report.issues.insert(report.issues.end(), part.issues.begin(), part.issues.end());
  }
  return report;
}

std::optional<std::vector<std::string>> cofibrant_objects(const FinCat& c,
                                                          const MorphismClasses& m) {
  auto cof = as_class(c, m.cof);
  auto initial = find_initial(c);
  if (!initial) return std::nullopt;
  std::vector<std::string> out;
  for (const auto& obj : c.objects())
    if (cof.count(c.hom(*initial, obj).front())) out.push_back(obj);
  return out;
}

std::optional<std::vector<std::string>> fibrant_objects(const FinCat& c,
                                                        const MorphismClasses& m) {
  auto fib = as_class(c, m.fib);
  auto terminal = find_terminal(c);
  if (!terminal) return std::nullopt;
  std::vector<std::string> out;
  for (const auto& obj : c.objects())
    if (fib.count(c.hom(obj, *terminal).front())) out.push_back(obj);
  return out;
}

}  // namespace fincat
