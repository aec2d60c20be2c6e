#include "fincat/sheaves.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "fincat/setcolim.hpp"

namespace fincat {

namespace {

// section values and morphism ids may contain the separators, so escape
// them; serializations must differ whenever families differ
std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '\\')
      out += "\\\\";
    else if (ch == ':')
      out += "\\k";
    else if (ch == ',')
      out += "\\c";
    else
      out += ch;
  }
  return out;
}

}  // namespace

std::string serialize_family(const Family& family) {
  std::string out = "{";
  bool first = true;
  for (const auto& [mor, section] : family) {
    if (!first) out += ", ";
    first = false;
    out += escape(mor) + ": " + escape(section);
  }
  return out + "}";
}

std::vector<Family> matching_families(const Presheaf& p, const Sieve& s, const Caps& caps) {
  const FinCat& c = *p.base;
  if (!is_sieve(c, s)) throw Error("NotASieve", s.object + " " + s.label());

  std::vector<std::vector<std::string>> choices;
  std::uint64_t total = 1;
  for (const auto& f : s.members) {
    choices.push_back(p.sections(c.morphism(f).dom));
    if (choices.back().empty()) return {};
    if (total > caps.max_nat_trans / choices.back().size())
      throw Error("SearchSpaceCapExceeded",
                  "matching family candidates pass " + std::to_string(caps.max_nat_trans));
    total *= choices.back().size();
  }

  std::vector<Family> out;
  std::vector<std::size_t> pick(s.members.size(), 0);
  std::map<std::string, std::size_t> member_index;
  for (std::size_t i = 0; i < s.members.size(); ++i) member_index[s.members[i]] = i;

  for (std::uint64_t tick = 0; tick < total; ++tick) {
    bool matching = true;
    for (std::size_t i = 0; i < s.members.size() && matching; ++i) {
      const auto& f = s.members[i];
      const auto& section = choices[i][pick[i]];
      for (const auto& g : c.morphisms_into(c.morphism(f).dom)) {
        std::size_t j = member_index.at(c.compose(f, g));
        if (choices[j][pick[j]] != p.restrict(g, section)) {
          matching = false;
          break;
        }
      }
    }
    if (matching) {
      Family fam;
      for (std::size_t i = 0; i < s.members.size(); ++i) fam[s.members[i]] = choices[i][pick[i]];
      out.push_back(std::move(fam));
    }
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
  }
  return out;
}

namespace {

Family induced_family(const Presheaf& p, const Sieve& s, const std::string& section) {
  Family fam;
  for (const auto& f : s.members) fam[f] = p.restrict(f, section);
  return fam;
}

Report check_gluing(const Presheaf& p, const Coverage& t, const Caps& caps, bool want_glued) {
  Report report;
  const FinCat& c = *p.base;
  for (const auto& obj : c.objects()) {
    auto it = t.covers.find(obj);
    if (it == t.covers.end()) continue;
    for (const auto& s : it->second) {
      if (s.object != obj) {
        report.issues.push_back({"WrongObject", s.label() + " listed under " + obj});
        continue;
      }
      auto families = matching_families(p, s, caps);
      std::set<std::string> family_forms;
      for (const auto& fam : families) family_forms.insert(serialize_family(fam));

      std::map<std::string, std::string> restricted_by;  // family form -> section
      for (const auto& x : p.sections(obj)) {
        std::string form = serialize_family(induced_family(p, s, x));
        auto hit = restricted_by.find(form);
        if (hit != restricted_by.end())
          report.issues.push_back(
              {"NotSeparated", obj + " " + s.label() + ": " + hit->second + " and " + x});
        else
          restricted_by[form] = x;
        family_forms.erase(form);
      }
      if (want_glued)
        for (const auto& fam : families) {
          std::string form = serialize_family(fam);
          if (family_forms.count(form))
            report.issues.push_back({"NotGlued", obj + " " + s.label() + ": " + form});
        }
    }
  }
  return report;
}

}  // namespace

Report check_sheaf(const Presheaf& p, const Coverage& t, const Caps& caps) {
  return check_gluing(p, t, caps, true);
}

Report check_separated(const Presheaf& p, const Coverage& t, const Caps& caps) {
  return check_gluing(p, t, caps, false);
}

PlusResult plus_construction(const Presheaf& p, const Coverage& t, const Caps& caps) {
  const FinCat& c = *p.base;

  // covering sieves per object, deduplicated, addressed by label
  std::map<std::string, std::map<std::string, Sieve>> by_label;
  for (const auto& obj : c.objects()) {
    auto it = t.covers.find(obj);
    if (it != t.covers.end())
      for (const auto& s : it->second) {
        if (s.object != obj) throw Error("WrongObject", s.label() + " listed under " + obj);
        if (!is_sieve(c, s)) throw Error("NotASieve", obj + " " + s.label());
        by_label[obj][s.label()] = s;
      }
    if (!by_label[obj].count(maximal_sieve(c, obj).label()))
      throw Error("MissingMaximalSieve", obj);
  }

  // glue the family sets over the refinement order, one object at a time
  std::map<std::string, std::map<std::pair<std::string, std::string>, std::size_t>> class_of;
  RawSetFunctor raw;
  PlusResult out;
  std::map<std::string, std::map<std::string, std::map<std::string, Family>>> families_by;

  for (const auto& obj : c.objects()) {
    std::vector<std::string> labels;
    for (const auto& [label, sieve] : by_label[obj]) labels.push_back(label);

    // finer sieves sit above: an arrow from S to S' restricts families
    // whenever S' is a subset of S
    std::vector<std::pair<std::string, std::string>> le;
    for (const auto& [la, sa] : by_label[obj])
      for (const auto& [lb, sb] : by_label[obj])
        if (std::includes(sa.members.begin(), sa.members.end(), sb.members.begin(),
                          sb.members.end()))
          le.push_back({la, lb});
    FinCat refinement = poset_category(labels, le);

    RawSetFunctor diagram;
    for (const auto& [label, sieve] : by_label[obj]) {
      auto& forms = diagram.objects[label];
      for (const auto& fam : matching_families(p, sieve, caps)) {
        std::string form = serialize_family(fam);
        families_by[obj][label][form] = fam;
        forms.push_back(form);
      }
    }
    for (const auto& m : refinement.morphisms()) {
      if (refinement.is_identity(m.id)) continue;
      const Sieve& target = by_label[obj].at(m.cod);
      auto& action = diagram.actions[m.id];
      for (const auto& form : diagram.objects.at(m.dom)) {
        const Family& fam = families_by[obj][m.dom].at(form);
        Family cut;
        for (const auto& member : target.members) cut[member] = fam.at(member);
        action[form] = serialize_family(cut);
      }
    }

    auto shape = std::make_shared<const FinCat>(std::move(refinement));
    auto glued = colimit(require_set_functor(shape, diagram));

    std::size_t index = 0;
    std::vector<std::string> names;
    for (const auto& [class_label, members] : glued.classes) {
      std::string name = std::to_string(index);
      for (const auto& [sieve_label, form] : members) {
        class_of[obj][{sieve_label, form}] = index;
        out.classes[obj][name].push_back({sieve_label, form});
      }
      names.push_back(name);
      ++index;
    }
    raw.objects[obj] = names;
  }

  // the action along f pulls a family back along f; every member of a
  // class must land in the same class or the construction is broken
  for (const auto& m : c.morphisms()) {
    if (c.is_identity(m.id)) continue;
    auto& action = raw.actions[m.id];
    for (const auto& [name, members] : out.classes[m.cod]) {
      std::optional<std::size_t> target;
      for (const auto& [sieve_label, form] : members) {
        const Sieve& s = by_label[m.cod].at(sieve_label);
        Sieve pulled = pullback_sieve(c, s, m.id);
        auto land = by_label[m.dom].find(pulled.label());
        if (land == by_label[m.dom].end())
          throw Error("PullbackEscapes",
                      sieve_label + " along " + m.id + " is not a covering sieve");
        const Family& fam = families_by[m.cod][sieve_label].at(form);
        Family moved;
        for (const auto& g : pulled.members) moved[g] = fam.at(c.compose(m.id, g));
        auto hit = class_of[m.dom].find({pulled.label(), serialize_family(moved)});
        if (hit == class_of[m.dom].end())
          throw Error("GluedActionBroken", m.id + " at " + name + ": family not matching");
        if (!target)
          target = hit->second;
        else if (*target != hit->second)
          throw Error("GluedActionBroken", m.id + " at " + name + ": members disagree");
      }
      action[name] = std::to_string(*target);
    }
  }

  for (const auto& obj : c.objects()) {
    Sieve maximal = maximal_sieve(c, obj);
    auto& component = out.unit.components[obj];
    for (const auto& x : p.sections(obj)) {
      std::string form = serialize_family(induced_family(p, maximal, x));
      component[x] = std::to_string(class_of[obj].at({maximal.label(), form}));
    }
  }

  out.presheaf = make_presheaf(p.base, raw);
  return out;
}

PlusResult sheafify(const Presheaf& p, const Coverage& t, const Caps& caps) {
  PlusResult once = plus_construction(p, t, caps);
  PlusResult twice = plus_construction(once.presheaf, t, caps);

  PlusResult out;
  out.presheaf = twice.presheaf;
  out.classes = twice.classes;
  for (const auto& [obj, component] : once.unit.components) {
    auto& composite = out.unit.components[obj];
    for (const auto& [x, mid] : component)
      composite[x] = twice.unit.components.at(obj).at(mid);
  }
  return out;
}

Report verify_sheafification_universal(const Presheaf& p, const Coverage& t, const Presheaf& q,
                                       const Caps& caps) {
  Report report;
  Report target = check_sheaf(q, t, caps);
  if (!target.ok()) {
    for (const auto& issue : target.issues)
      report.issues.push_back({"TargetNotSheaf", issue.code + " " + issue.detail});
    return report;
  }

  PlusResult sh = sheafify(p, t, caps);
  auto factored = enumerate_nat_trans(sh.presheaf.functor, q.functor, caps);
  auto direct = enumerate_nat_trans(p.functor, q.functor, caps);

  for (std::size_t i = 0; i < direct.size(); ++i) {
    std::size_t count = 0;
    for (const auto& k : factored) {
      bool matches = true;
      for (const auto& [obj, component] : sh.unit.components) {
        for (const auto& [x, mid] : component)
          if (k.components.at(obj).at(mid) != direct[i].components.at(obj).at(x)) {
            matches = false;
            break;
          }
        if (!matches) break;
      }
      if (matches) ++count;
    }
    if (count == 0)
      report.issues.push_back({"FactorizationMissing", "map " + std::to_string(i)});
    if (count > 1)
      report.issues.push_back({"FactorizationNotUnique", "map " + std::to_string(i)});
  }
  return report;
}

}  // namespace fincat
