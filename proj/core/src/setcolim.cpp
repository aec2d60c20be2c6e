#include "fincat/setcolim.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fincat {

namespace {

struct Ground {
  // dense index for all (object, element) pairs, objects in base order
  std::vector<std::pair<std::string, std::string>> pairs;
  std::map<std::pair<std::string, std::string>, int> index;
};

Ground ground_set(const SetFunctor& d) {
  Ground g;
  for (const auto& obj : d.cat().objects()) {
    for (const auto& e : d.elements(obj)) {
      g.index[{obj, e}] = static_cast<int>(g.pairs.size());
      g.pairs.push_back({obj, e});
    }
  }
  return g;
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

void unite(std::vector<int>& parent, int a, int b) {
  parent[find_root(parent, a)] = find_root(parent, b);
}

std::string pair_label(const std::pair<std::string, std::string>& p) {
  return "(" + p.first + "," + p.second + ")";
}

// every (X,a) ~ (Y, d(f)(a)) pair forced by an action
std::vector<std::pair<int, int>> forced_pairs(const SetFunctor& d, const Ground& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& m : d.cat().morphisms()) {
    if (d.cat().is_identity(m.id)) continue;
    for (const auto& e : d.elements(m.dom))
      out.push_back({g.index.at({m.dom, e}), g.index.at({m.cod, d.apply(m.id, e)})});
  }
  return out;
}

void require_shape(bool ok, const std::string& expected) {
  if (!ok) throw Error("ShapeMismatch", "base category is not " + expected);
}

// non-identity morphism ids of a category
std::vector<Morphism> proper_morphisms(const FinCat& c) {
  std::vector<Morphism> out;
  for (const auto& m : c.morphisms())
    if (!c.is_identity(m.id)) out.push_back(m);
  return out;
}

}  // namespace

ColimitResult colimit(const SetFunctor& d) {
  Ground g = ground_set(d);
  std::vector<int> parent(g.pairs.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : forced_pairs(d, g)) unite(parent, a, b);

  // least member of each class names it
  std::map<int, std::pair<std::string, std::string>> least;
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    int r = find_root(parent, static_cast<int>(i));
    auto it = least.find(r);
    if (it == least.end() || g.pairs[i] < it->second) least[r] = g.pairs[i];
  }

  ColimitResult out;
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    int r = find_root(parent, static_cast<int>(i));
    std::string label = pair_label(least.at(r));
    out.legs[g.pairs[i].first][g.pairs[i].second] = label;
    out.classes[label].push_back(g.pairs[i]);
  }
  for (auto& [label, members] : out.classes) {
    std::sort(members.begin(), members.end());
    out.apex.push_back(label);
  }
  // legs for element-free objects still appear
  for (const auto& obj : d.cat().objects()) out.legs.try_emplace(obj);
  return out;
}

LimitResult limit(const SetFunctor& d, const Caps& caps) {
  const auto& objs = d.cat().objects();
  std::vector<std::vector<std::string>> elems;
  std::uint64_t total = 1;
  for (const auto& obj : objs) {
    elems.push_back(d.elements(obj));
    if (elems.back().empty()) {
      total = 0;
      break;
    }
    if (total > caps.max_nat_trans / elems.back().size())
      throw Error("SearchSpaceCapExceeded",
                  "tuple candidates pass " + std::to_string(caps.max_nat_trans));
    total *= elems.back().size();
  }

  LimitResult out;
  for (const auto& obj : objs) out.projections.try_emplace(obj);

  std::vector<std::size_t> pick(objs.size(), 0);
  for (std::uint64_t tick = 0; tick < total; ++tick) {
    bool compatible = true;
    for (const auto& m : d.cat().morphisms()) {
      if (d.cat().is_identity(m.id)) continue;
      int x = d.cat().object_index(m.dom);
      int y = d.cat().object_index(m.cod);
      if (d.apply(m.id, elems[x][pick[x]]) != elems[y][pick[y]]) {
        compatible = false;
        break;
      }
    }
    if (compatible) {
      std::string label = "(";
      for (std::size_t i = 0; i < objs.size(); ++i) {
        if (i) label += ",";
        label += elems[i][pick[i]];
      }
      label += ")";
      out.apex.push_back(label);
      for (std::size_t i = 0; i < objs.size(); ++i)
        out.projections[objs[i]][label] = elems[i][pick[i]];
    }
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (++pick[i] < elems[i].size()) break;
      pick[i] = 0;
    }
  }
  std::sort(out.apex.begin(), out.apex.end());
  return out;
}

ColimitResult pushout(const SetFunctor& d) {
  const FinCat& c = d.cat();
  auto arrows = proper_morphisms(c);
  bool ok = c.object_count() == 3 && arrows.size() == 2 &&
            arrows[0].dom == arrows[1].dom && arrows[0].cod != arrows[1].cod &&
            arrows[0].cod != arrows[0].dom && arrows[1].cod != arrows[1].dom;
  require_shape(ok, "a span (two arrows out of one object)");
  return colimit(d);
}

ColimitResult coequalizer(const SetFunctor& d) {
  const FinCat& c = d.cat();
  auto arrows = proper_morphisms(c);
  bool ok = c.object_count() == 2 && arrows.size() == 2 &&
            arrows[0].dom == arrows[1].dom && arrows[0].cod == arrows[1].cod &&
            arrows[0].dom != arrows[0].cod;
  require_shape(ok, "a parallel pair");
  return colimit(d);
}

ColimitResult coproduct(const SetFunctor& d) {
  require_shape(proper_morphisms(d.cat()).empty(), "a discrete category");
  return colimit(d);
}

bool verify_cocone(const SetFunctor& d, const Cocone& c) {
  std::set<std::string> apex(c.apex.begin(), c.apex.end());
  for (const auto& obj : d.cat().objects()) {
    auto it = c.legs.find(obj);
    const auto& elems = d.elements(obj);
    if (it == c.legs.end()) {
      if (elems.empty()) continue;
      return false;
    }
    for (const auto& e : elems) {
      auto img = it->second.find(e);
      if (img == it->second.end()) return false;
      if (apex.find(img->second) == apex.end()) return false;
    }
  }
  for (const auto& m : d.cat().morphisms()) {
    if (d.cat().is_identity(m.id)) continue;
    for (const auto& e : d.elements(m.dom)) {
      if (c.legs.at(m.cod).at(d.apply(m.id, e)) != c.legs.at(m.dom).at(e)) return false;
    }
  }
  return true;
}

bool verify_universal(const SetFunctor& d, const Cocone& c, const Caps& caps) {
  Ground g = ground_set(d);
  std::size_t n = g.pairs.size();
  if (n > caps.max_partition)
    throw Error("OracleCapExceeded",
                "ground set of " + std::to_string(n) + " passes " +
                    std::to_string(caps.max_partition));
  if (!verify_cocone(d, c)) return false;

  auto forced = forced_pairs(d, g);
  // a partition is compatible iff every forced pair shares a block
  auto compatible = [&](const std::vector<int>& block_of) {
    for (const auto& [a, b] : forced)
      if (block_of[a] != block_of[b]) return false;
    return true;
  };

  // walk all partitions as restricted growth strings
  auto for_each_partition = [&](auto&& visit) {
    if (n == 0) {
      std::vector<int> empty;
      visit(empty, 0);
      return;
    }
    std::vector<int> rgs(n, 0);
    std::vector<int> maxv(n, 0);  // max of rgs[0..i]
    while (true) {
      int blocks = maxv[n - 1] + 1;
      visit(rgs, blocks);
      std::size_t i = n;
      while (i-- > 1) {
        int limit_here = maxv[i - 1] + 1;
        if (rgs[i] < limit_here) {
          ++rgs[i];
          maxv[i] = std::max(maxv[i - 1], rgs[i]);
          for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            maxv[j] = maxv[j - 1];
          }
          break;
        }
        if (i == 1) return;
      }
      if (n == 1) return;
    }
  };

  // pass 1: the finest compatible partition
  std::vector<int> finest;
  int finest_blocks = -1;
  for_each_partition([&](const std::vector<int>& rgs, int blocks) {
    if (blocks > finest_blocks && compatible(rgs)) {
      finest = rgs;
      finest_blocks = blocks;
    }
  });

  // pass 2: it must refine every compatible partition; anything else means
  // the enumeration itself is broken
  auto refines = [&](const std::vector<int>& fine, const std::vector<int>& coarse) {
    std::map<int, int> image;
    for (std::size_t i = 0; i < n; ++i) {
      auto it = image.find(fine[i]);
      if (it == image.end())
        image[fine[i]] = coarse[i];
      else if (it->second != coarse[i])
        return false;
    }
    return true;
  };
  for_each_partition([&](const std::vector<int>& rgs, int) {
    if (compatible(rgs) && !refines(finest, rgs))
      throw Error("OracleInvariantViolated", "finest compatible partition is not unique");
  });

  // leg fibers must realize exactly the finest compatible partition
  std::vector<std::string> fiber(n);
  for (std::size_t i = 0; i < n; ++i)
    fiber[i] = c.legs.at(g.pairs[i].first).at(g.pairs[i].second);
  std::map<int, std::string> block_to_apex;
  std::map<std::string, int> apex_to_block;
  for (std::size_t i = 0; i < n; ++i) {
    auto b = block_to_apex.find(finest[i]);
    if (b == block_to_apex.end())
      block_to_apex[finest[i]] = fiber[i];
    else if (b->second != fiber[i])
      return false;  // a block split across apex elements
    auto a = apex_to_block.find(fiber[i]);
    if (a == apex_to_block.end())
      apex_to_block[fiber[i]] = finest[i];
    else if (a->second != finest[i])
      return false;  // two blocks glued in the apex
  }

  // legs must cover the apex
  std::set<std::string> hit(fiber.begin(), fiber.end());
  for (const auto& a : c.apex)
    if (hit.find(a) == hit.end()) return false;
  return true;
}

std::optional<ColimitInCategory> find_colimit_in_category(const FinFunctor& d, const Caps& caps) {
  const FinCat& shape = *d.dom();
  const FinCat& amb = *d.cod();
  const auto& jobjs = shape.objects();

  struct CoconeInC {
    std::string apex;
    std::vector<std::string> legs;  // by shape object position
  };
  std::vector<CoconeInC> cocones;

  for (const auto& apex : amb.objects()) {
    std::vector<std::vector<std::string>> choices;
    std::uint64_t total = 1;
    bool empty = false;
    for (const auto& x : jobjs) {
      choices.push_back(amb.hom(d.apply_object(x), apex));
      if (choices.back().empty()) {
        empty = true;
        break;
      }
      if (total > caps.max_nat_trans / choices.back().size())
        throw Error("SearchSpaceCapExceeded",
                    "cocone candidates at " + apex + " pass " +
                        std::to_string(caps.max_nat_trans));
      total *= choices.back().size();
    }
    if (empty) continue;

    std::vector<std::size_t> pick(jobjs.size(), 0);
    for (std::uint64_t tick = 0; tick < total; ++tick) {
      bool commutes = true;
      for (const auto& m : shape.morphisms()) {
        if (shape.is_identity(m.id)) continue;
        int x = shape.object_index(m.dom);
        int y = shape.object_index(m.cod);
        if (amb.compose(choices[y][pick[y]], d.apply_morphism(m.id)) != choices[x][pick[x]]) {
          commutes = false;
          break;
        }
      }
      if (commutes) {
        CoconeInC c;
        c.apex = apex;
        for (std::size_t i = 0; i < jobjs.size(); ++i) c.legs.push_back(choices[i][pick[i]]);
        cocones.push_back(std::move(c));
      }
      for (std::size_t i = pick.size(); i-- > 0;) {
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
      }
    }
  }

  // universal iff every cocone admits exactly one mediating morphism
  auto mediator_count = [&](const CoconeInC& from, const CoconeInC& to) {
    int count = 0;
    for (const auto& h : amb.hom(from.apex, to.apex)) {
      bool mediates = true;
      for (std::size_t i = 0; i < jobjs.size(); ++i)
        if (amb.compose(h, from.legs[i]) != to.legs[i]) {
          mediates = false;
          break;
        }
      if (mediates) ++count;
    }
    return count;
  };

  std::optional<ColimitInCategory> best;
  std::vector<std::string> winning_apexes;
  for (const auto& candidate : cocones) {
    bool universal = true;
    for (const auto& other : cocones)
      if (mediator_count(candidate, other) != 1) {
        universal = false;
        break;
      }
    if (!universal) continue;
    winning_apexes.push_back(candidate.apex);
    if (!best) {
      ColimitInCategory out;
      out.apex = candidate.apex;
      for (std::size_t i = 0; i < jobjs.size(); ++i) out.legs[jobjs[i]] = candidate.legs[i];
      best = std::move(out);
    }
  }

  // all universal apexes must be isomorphic; anything else is a broken search
  for (const auto& a : winning_apexes) {
    bool linked = false;
    for (const auto& h : amb.hom(a, winning_apexes.front()))
      if (is_iso(amb, h)) {
        linked = true;
        break;
      }
    if (!linked) throw Error("OracleInvariantViolated", "universal apexes " + a + " and " +
                                                            winning_apexes.front() +
                                                            " are not isomorphic");
  }
  return best;
}

}  // namespace fincat
