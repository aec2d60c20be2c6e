#include "fincat/sites.hpp"

#include <algorithm>
#include <set>

namespace fincat {

std::string Sieve::label() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += members[i];
  }
  return out + "}";
}

bool Sieve::contains(const std::string& mor) const {
  return std::binary_search(members.begin(), members.end(), mor);
}

Sieve maximal_sieve(const FinCat& c, const std::string& obj) {
  if (!c.has_object(obj)) throw Error("UnknownObject", obj);
  return Sieve{obj, c.morphisms_into(obj)};
}

Sieve generate_sieve(const FinCat& c, const std::string& obj,
                     const std::vector<std::string>& generators) {
  if (!c.has_object(obj)) throw Error("UnknownObject", obj);
  std::set<std::string> members;
  for (const auto& g : generators) {
    if (!c.has_morphism(g)) throw Error("UnknownMorphism", g);
    if (c.morphism(g).cod != obj)
      throw Error("WrongObject", g + " does not land in " + obj);
    members.insert(g);
    for (const auto& h : c.morphisms_into(c.morphism(g).dom)) members.insert(c.compose(g, h));
  }
  return Sieve{obj, {members.begin(), members.end()}};
}

bool is_sieve(const FinCat& c, const Sieve& s) {
  if (!c.has_object(s.object)) return false;
  if (!std::is_sorted(s.members.begin(), s.members.end())) return false;
  if (std::adjacent_find(s.members.begin(), s.members.end()) != s.members.end()) return false;
  for (const auto& f : s.members) {
    if (!c.has_morphism(f) || c.morphism(f).cod != s.object) return false;
    for (const auto& g : c.morphisms_into(c.morphism(f).dom))
      if (!s.contains(c.compose(f, g))) return false;
  }
  return true;
}

Sieve pullback_sieve(const FinCat& c, const Sieve& s, const std::string& f) {
  if (!c.has_morphism(f)) throw Error("UnknownMorphism", f);
  const Morphism& m = c.morphism(f);
  if (m.cod != s.object) throw Error("WrongObject", f + " does not land in " + s.object);
  Sieve out{m.dom, {}};
  for (const auto& g : c.morphisms_into(m.dom))
    if (s.contains(c.compose(f, g))) out.members.push_back(g);
  return out;
}

std::vector<Sieve> enumerate_sieves(const FinCat& c, const std::string& obj, const Caps& caps) {
  std::vector<std::string> into = c.morphisms_into(obj);
  if (into.size() > caps.max_sieve_morphisms)
    throw Error("SearchSpaceCapExceeded",
                std::to_string(into.size()) + " morphisms into " + obj + " pass " +
                    std::to_string(caps.max_sieve_morphisms));
  std::vector<Sieve> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << into.size()); ++mask) {
    Sieve s{obj, {}};
    for (std::size_t i = 0; i < into.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) s.members.push_back(into[i]);
    if (is_sieve(c, s)) out.push_back(std::move(s));
  }
  return out;
}

namespace {

bool lists_sieve(const std::vector<Sieve>& sieves, const Sieve& s) {
  return std::find(sieves.begin(), sieves.end(), s) != sieves.end();
}

const std::vector<Sieve>& covers_of(const Coverage& t, const std::string& obj) {
  static const std::vector<Sieve> none;
  auto it = t.covers.find(obj);
  return it == t.covers.end() ? none : it->second;
}

}  // namespace

Report check_topology_axioms(const FinCat& c, const Coverage& t, const Caps& caps) {
  Report report;

  for (const auto& [obj, sieves] : t.covers) {
    if (!c.has_object(obj)) {
      report.issues.push_back({"UnknownObject", obj});
      continue;
    }
    std::set<Sieve> seen;
    for (const auto& s : sieves) {
      if (s.object != obj) {
        report.issues.push_back({"WrongObject", s.label() + " listed under " + obj});
        continue;
      }
      if (!is_sieve(c, s)) {
        report.issues.push_back({"NotASieve", obj + " " + s.label()});
        continue;
      }
      if (!seen.insert(s).second)
        report.issues.push_back({"DuplicateSieve", obj + " " + s.label()});
    }
  }
  if (!report.ok()) return report;

  // the maximal sieve covers every object
  for (const auto& obj : c.objects())
    if (!lists_sieve(covers_of(t, obj), maximal_sieve(c, obj)))
      report.issues.push_back({"MissingMaximalSieve", obj});

  // covering sieves stay covering under every restriction
  for (const auto& obj : c.objects()) {
    for (const auto& s : covers_of(t, obj)) {
      for (const auto& f : c.morphisms_into(obj)) {
        Sieve pulled = pullback_sieve(c, s, f);
        if (!lists_sieve(covers_of(t, c.morphism(f).dom), pulled))
          report.issues.push_back(
              {"PullbackEscapes", obj + " " + s.label() + " along " + f});
      }
    }
  }

  // a sieve covered locally by a covering sieve covers
  for (const auto& obj : c.objects()) {
    const auto& covering = covers_of(t, obj);
    for (const auto& candidate : enumerate_sieves(c, obj, caps)) {
      if (lists_sieve(covering, candidate)) continue;
      for (const auto& s : covering) {
        bool locally_covering = true;
        for (const auto& f : s.members) {
          Sieve pulled = pullback_sieve(c, candidate, f);
          if (!lists_sieve(covers_of(t, c.morphism(f).dom), pulled)) {
            locally_covering = false;
            break;
          }
        }
        if (locally_covering) {
          report.issues.push_back(
              {"LocalityFails", obj + " " + candidate.label() + " via " + s.label()});
          break;
        }
      }
    }
  }
  return report;
}

Coverage trivial_topology(const FinCat& c) {
  Coverage t;
  for (const auto& obj : c.objects()) t.covers[obj] = {maximal_sieve(c, obj)};
  return t;
}

Coverage all_sieves_topology(const FinCat& c, const Caps& caps) {
  Coverage t;
  for (const auto& obj : c.objects()) t.covers[obj] = enumerate_sieves(c, obj, caps);
  return t;
}

Coverage saturate_coverage(const FinCat& c, const Coverage& base, const Caps& caps) {
  // structural validity first; saturation assumes well-formed sieves
  std::map<std::string, std::set<Sieve>> covers;
  for (const auto& [obj, sieves] : base.covers) {
    if (!c.has_object(obj)) throw Error("UnknownObject", obj);
    for (const auto& s : sieves) {
      if (s.object != obj) throw Error("WrongObject", s.label() + " listed under " + obj);
      if (!is_sieve(c, s)) throw Error("NotASieve", obj + " " + s.label());
      covers[obj].insert(s);
    }
  }
  for (const auto& obj : c.objects()) covers[obj].insert(maximal_sieve(c, obj));

  // candidate pool for the locality step
  std::map<std::string, std::vector<Sieve>> all;
  for (const auto& obj : c.objects()) all[obj] = enumerate_sieves(c, obj, caps);

  bool changed = true;
  while (changed) {
    changed = false;
    // close under pullback
    for (const auto& obj : c.objects()) {
      std::vector<Sieve> snapshot(covers[obj].begin(), covers[obj].end());
      for (const auto& s : snapshot)
        for (const auto& f : c.morphisms_into(obj))
          if (covers[c.morphism(f).dom].insert(pullback_sieve(c, s, f)).second) changed = true;
    }
    // close under locality
    for (const auto& obj : c.objects()) {
      for (const auto& candidate : all[obj]) {
        if (covers[obj].count(candidate)) continue;
        for (const auto& s : covers[obj]) {
          bool locally_covering = true;
          for (const auto& f : s.members) {
            if (!covers[c.morphism(f).dom].count(pullback_sieve(c, candidate, f))) {
              locally_covering = false;
              break;
            }
          }
          if (locally_covering) {
            covers[obj].insert(candidate);
            changed = true;
            break;
          }
        }
      }
    }
  }

  Coverage out;
  for (const auto& [obj, sieves] : covers) out.covers[obj] = {sieves.begin(), sieves.end()};
  return out;
}

}  // namespace fincat
