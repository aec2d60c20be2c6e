#include "fincat/fincat.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace fincat {

bool FinCat::has_object(const std::string& id) const {
  return object_index_.count(id) != 0;
}

bool FinCat::has_morphism(const std::string& id) const {
  return morphism_index_.count(id) != 0;
}

const Morphism& FinCat::morphism(const std::string& id) const {
  auto it = morphism_index_.find(id);
  if (it == morphism_index_.end()) throw Error("UnknownMorphism", "no morphism '" + id + "'");
  return morphisms_[it->second];
}

const std::string& FinCat::identity_of(const std::string& obj) const {
  auto it = object_index_.find(obj);
  if (it == object_index_.end()) throw Error("UnknownObject", "no object '" + obj + "'");
  return morphisms_[identity_[it->second]].id;
}

bool FinCat::is_identity(const std::string& mor) const {
  auto it = morphism_index_.find(mor);
  if (it == morphism_index_.end()) throw Error("UnknownMorphism", "no morphism '" + mor + "'");
  int obj = object_index_.at(morphisms_[it->second].dom);
  return identity_[obj] == it->second;
}

bool FinCat::composable(const std::string& g, const std::string& f) const {
  return morphism(f).cod == morphism(g).dom;
}

const std::string& FinCat::compose(const std::string& g, const std::string& f) const {
  int gi = morphism_index(g);
  int fi = morphism_index(f);
  if (gi < 0) throw Error("UnknownMorphism", "no morphism '" + g + "'");
  if (fi < 0) throw Error("UnknownMorphism", "no morphism '" + f + "'");
  int r = table_[static_cast<std::size_t>(gi) * morphisms_.size() + fi];
  if (r < 0)
    throw Error("DomCodMismatch", "'" + g + "' and '" + f + "' are not composable");
  return morphisms_[r].id;
}

std::vector<std::string> FinCat::hom(const std::string& x, const std::string& y) const {
  if (!has_object(x)) throw Error("UnknownObject", "no object '" + x + "'");
  if (!has_object(y)) throw Error("UnknownObject", "no object '" + y + "'");
  std::vector<std::string> out;
  for (const auto& m : morphisms_)
    if (m.dom == x && m.cod == y) out.push_back(m.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> FinCat::morphisms_into(const std::string& y) const {
  if (!has_object(y)) throw Error("UnknownObject", "no object '" + y + "'");
  std::vector<std::string> out;
  for (const auto& m : morphisms_)
    if (m.cod == y) out.push_back(m.id);
  std::sort(out.begin(), out.end());
  return out;
}

int FinCat::object_index(const std::string& id) const {
  auto it = object_index_.find(id);
  return it == object_index_.end() ? -1 : it->second;
}

int FinCat::morphism_index(const std::string& id) const {
  auto it = morphism_index_.find(id);
  return it == morphism_index_.end() ? -1 : it->second;
}

RawCategory FinCat::to_raw() const {
  RawCategory raw;
  raw.objects = objects_;
  raw.morphisms = morphisms_;
  for (std::size_t i = 0; i < objects_.size(); ++i)
    raw.identity[objects_[i]] = morphisms_[identity_[i]].id;
  const std::size_t n = morphisms_.size();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (table_[g * n + f] >= 0)
        raw.compose[{morphisms_[g].id, morphisms_[f].id}] = morphisms_[table_[g * n + f]].id;
  return raw;
}

bool operator==(const FinCat& a, const FinCat& b) {
  return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ &&
         a.identity_ == b.identity_ && a.table_ == b.table_;
}

// Trusted assembly path for validate_category and the builders. Performs the
// cheap structural indexing; the caller guarantees the laws hold (or has
// already reported their violations).
class FinCatBuilder {
public:
  static FinCat build(const RawCategory& raw) {
    FinCat c;
    c.objects_ = raw.objects;
    c.morphisms_ = raw.morphisms;
    for (std::size_t i = 0; i < c.objects_.size(); ++i)
      c.object_index_[c.objects_[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < c.morphisms_.size(); ++i)
      c.morphism_index_[c.morphisms_[i].id] = static_cast<int>(i);
    c.identity_.resize(c.objects_.size());
    for (std::size_t i = 0; i < c.objects_.size(); ++i)
      c.identity_[i] = c.morphism_index_.at(raw.identity.at(c.objects_[i]));
    const std::size_t n = c.morphisms_.size();
    c.table_.assign(n * n, -1);
    for (const auto& [pair, to] : raw.compose) {
      std::size_t g = c.morphism_index_.at(pair.first);
      std::size_t f = c.morphism_index_.at(pair.second);
      c.table_[g * n + f] = c.morphism_index_.at(to);
    }
    return c;
  }
};

CategoryValidation validate_category(const RawCategory& raw) {
  CategoryReport report;
  auto flag = [&report](const std::string& code, const std::string& detail) {
    report.issues.push_back({code, detail});
  };

  std::map<std::string, int> obj_index;
  for (std::size_t i = 0; i < raw.objects.size(); ++i) {
    if (!obj_index.emplace(raw.objects[i], static_cast<int>(i)).second)
      flag("DuplicateObject", "object id '" + raw.objects[i] + "' appears twice");
  }
  std::map<std::string, int> mor_index;
  for (std::size_t i = 0; i < raw.morphisms.size(); ++i) {
    if (!mor_index.emplace(raw.morphisms[i].id, static_cast<int>(i)).second)
      flag("DuplicateMorphism", "morphism id '" + raw.morphisms[i].id + "' appears twice");
  }
  for (const auto& m : raw.morphisms) {
    if (!obj_index.count(m.dom))
      flag("DomCodMismatch", "morphism '" + m.id + "' has unknown dom '" + m.dom + "'");
    if (!obj_index.count(m.cod))
      flag("DomCodMismatch", "morphism '" + m.id + "' has unknown cod '" + m.cod + "'");
  }
  if (!report.ok()) return {std::nullopt, report};

  // identities
  std::vector<int> identity(raw.objects.size(), -1);
  for (const auto& [obj, mor] : raw.identity) {
    auto oit = obj_index.find(obj);
    if (oit == obj_index.end()) {
      flag("UnknownObject", "identity given for unknown object '" + obj + "'");
      continue;
    }
    auto mit = mor_index.find(mor);
    if (mit == mor_index.end()) {
      flag("MissingIdentity", "identity of '" + obj + "' names unknown morphism '" + mor + "'");
      continue;
    }
    const Morphism& m = raw.morphisms[mit->second];
    if (m.dom != obj || m.cod != obj) {
      flag("DomCodMismatch",
           "identity of '" + obj + "' is '" + mor + "': " + m.dom + " -> " + m.cod);
      continue;
    }
    identity[oit->second] = mit->second;
  }
  for (std::size_t i = 0; i < raw.objects.size(); ++i)
    if (identity[i] < 0 && !raw.identity.count(raw.objects[i]))
      flag("MissingIdentity", "object '" + raw.objects[i] + "' has no identity");
  if (!report.ok()) return {std::nullopt, report};

  // composition table: typing, totality
  const std::size_t n = raw.morphisms.size();
  std::vector<int> table(n * n, -1);
  for (const auto& [pair, to] : raw.compose) {
    auto git = mor_index.find(pair.first);
    auto fit = mor_index.find(pair.second);
    if (git == mor_index.end() || fit == mor_index.end()) {
      flag("DomCodMismatch", "composition entry (" + pair.first + ", " + pair.second +
                                 ") names an unknown morphism");
      continue;
    }
    const Morphism& g = raw.morphisms[git->second];
    const Morphism& f = raw.morphisms[fit->second];
    if (f.cod != g.dom) {
      flag("DomCodMismatch",
           "composition entry (" + g.id + ", " + f.id + ") is not a composable pair");
      continue;
    }
    auto tit = mor_index.find(to);
    if (tit == mor_index.end()) {
      flag("DomCodMismatch",
           "composite of (" + g.id + ", " + f.id + ") names unknown morphism '" + to + "'");
      continue;
    }
    const Morphism& h = raw.morphisms[tit->second];
    if (h.dom != f.dom || h.cod != g.cod) {
      flag("DomCodMismatch", "composite '" + h.id + "' of (" + g.id + ", " + f.id +
                                 ") has dom/cod " + h.dom + " -> " + h.cod + ", expected " +
                                 f.dom + " -> " + g.cod);
      continue;
    }
    table[static_cast<std::size_t>(git->second) * n + fit->second] = tit->second;
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (raw.morphisms[f].cod == raw.morphisms[g].dom && table[g * n + f] < 0)
        flag("CompositionNotTotal", "no composite for (" + raw.morphisms[g].id + ", " +
                                        raw.morphisms[f].id + ")");

  auto lookup = [&table, n](int g, int f) { return table[static_cast<std::size_t>(g) * n + f]; };

  // unit laws, on the entries that exist
  for (std::size_t f = 0; f < n; ++f) {
    const Morphism& m = raw.morphisms[f];
    int id_dom = identity[obj_index.at(m.dom)];
    int id_cod = identity[obj_index.at(m.cod)];
    int right = lookup(static_cast<int>(f), id_dom);
    if (right >= 0 && right != static_cast<int>(f))
      flag("UnitLawViolation", "'" + m.id + "' ∘ '" + raw.morphisms[id_dom].id + "' = '" +
                                   raw.morphisms[right].id + "'");
    int left = lookup(id_cod, static_cast<int>(f));
    if (left >= 0 && left != static_cast<int>(f))
      flag("UnitLawViolation", "'" + raw.morphisms[id_cod].id + "' ∘ '" + m.id + "' = '" +
                                   raw.morphisms[left].id + "'");
  }

  // associativity over all composable triples with defined entries
  std::vector<std::vector<int>> by_dom(raw.objects.size());
  for (std::size_t i = 0; i < n; ++i)
    by_dom[obj_index.at(raw.morphisms[i].dom)].push_back(static_cast<int>(i));
  for (std::size_t f = 0; f < n; ++f) {
    for (int g : by_dom[obj_index.at(raw.morphisms[f].cod)]) {
      int gf = lookup(g, static_cast<int>(f));
      if (gf < 0) continue;
      for (int h : by_dom[obj_index.at(raw.morphisms[g].cod)]) {
        int hg = lookup(h, g);
        int h_gf = lookup(h, gf);
        int hg_f = hg < 0 ? -1 : lookup(hg, static_cast<int>(f));
        if (h_gf < 0 || hg_f < 0) continue;
        if (h_gf != hg_f)
          flag("AssociativityViolation",
               "(" + raw.morphisms[h].id + " ∘ " + raw.morphisms[g].id + ") ∘ " +
                   raw.morphisms[f].id + " = '" + raw.morphisms[hg_f].id + "' but " +
                   raw.morphisms[h].id + " ∘ (" + raw.morphisms[g].id + " ∘ " +
                   raw.morphisms[f].id + ") = '" + raw.morphisms[h_gf].id + "'");
      }
    }
  }

  if (!report.ok()) return {std::nullopt, report};
  return {FinCatBuilder::build(raw), report};
}

FinCat require_category(const RawCategory& raw) {
  auto result = validate_category(raw);
  if (!result.report.ok())
    throw Error("ValidationFailed", "category is not valid:\n" + result.report.to_string());
  return std::move(*result.category);
}

namespace {

void check_generated_ids_unique(const RawCategory& raw) {
  std::set<std::string> seen;
  for (const auto& m : raw.morphisms)
    if (!seen.insert(m.id).second)
      throw Error("DuplicateId", "generated morphism id '" + m.id + "' collides");
}

}  // namespace

FinCat free_category_on_acyclic_graph(const FinGraph& g, const Caps& caps) {
  std::map<std::string, int> vertex_index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (!vertex_index.emplace(g.vertices[i], static_cast<int>(i)).second)
      throw Error("DuplicateId", "vertex '" + g.vertices[i] + "' appears twice");
  std::set<std::string> edge_ids;
  for (const auto& e : g.edges) {
    if (!edge_ids.insert(e.id).second)
      throw Error("DuplicateId", "edge '" + e.id + "' appears twice");
    if (!vertex_index.count(e.src))
      throw Error("UnknownObject", "edge '" + e.id + "' has unknown source '" + e.src + "'");
    if (!vertex_index.count(e.dst))
      throw Error("UnknownObject", "edge '" + e.id + "' has unknown target '" + e.dst + "'");
  }

  // cycle check on the underlying vertex graph (self loops included)
  {
    std::vector<int> indegree(g.vertices.size(), 0);
    for (const auto& e : g.edges) indegree[vertex_index.at(e.dst)]++;
    std::deque<int> queue;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      if (indegree[v] == 0) queue.push_back(static_cast<int>(v));
    std::size_t visited = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      ++visited;
      for (const auto& e : g.edges)
        if (vertex_index.at(e.src) == v && --indegree[vertex_index.at(e.dst)] == 0)
          queue.push_back(vertex_index.at(e.dst));
    }
    if (visited != g.vertices.size())
      throw Error("CyclicGraph", "graph has a directed cycle; the free category is infinite");
  }

  struct Path {
    std::string id;
    int src;
    int dst;
  };
  RawCategory raw;
  raw.objects = g.vertices;
  for (const auto& v : g.vertices) {
    std::string id = "1_" + v;
    raw.morphisms.push_back({id, v, v});
    raw.identity[v] = id;
  }
  std::deque<Path> frontier;
  std::vector<Path> paths;
  for (const auto& e : g.edges)
    frontier.push_back({e.id, vertex_index.at(e.src), vertex_index.at(e.dst)});
  while (!frontier.empty()) {
    Path p = frontier.front();
    frontier.pop_front();
    paths.push_back(p);
    if (raw.objects.size() + paths.size() > caps.max_category_morphisms)
      throw Error("SearchSpaceCapExceeded",
                  "free category exceeds the morphism cap of " +
                      std::to_string(caps.max_category_morphisms));
    for (const auto& e : g.edges)
      if (vertex_index.at(e.src) == p.dst)
        frontier.push_back({p.id + "." + e.id, p.src, vertex_index.at(e.dst)});
  }
  for (const auto& p : paths)
    raw.morphisms.push_back({p.id, g.vertices[p.src], g.vertices[p.dst]});
  check_generated_ids_unique(raw);

  // composition: identities act trivially, paths concatenate
  for (const auto& m : raw.morphisms) {
    raw.compose[{raw.identity.at(m.cod), m.id}] = m.id;
    raw.compose[{m.id, raw.identity.at(m.dom)}] = m.id;
  }
  for (const auto& p : paths)
    for (const auto& q : paths)
      if (q.src == p.dst) raw.compose[{q.id, p.id}] = p.id + "." + q.id;

  return require_category(raw);
}

FinCat delooping(const GroupTable& g) {
  const std::size_t n = g.elements.size();
  if (n == 0) throw Error("InvalidGroupTable", "a group has at least the unit element");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(g.elements[i], static_cast<int>(i)).second)
      throw Error("InvalidGroupTable", "element '" + g.elements[i] + "' appears twice");
  if (!index.count(g.unit))
    throw Error("InvalidGroupTable", "unit '" + g.unit + "' is not an element");
  if (g.product.size() != n)
    throw Error("InvalidGroupTable", "product table must have one row per element");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (g.product[i].size() != n)
      throw Error("InvalidGroupTable", "product table row for '" + g.elements[i] +
                                           "' must have one entry per element");
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(g.product[i][j]);
      if (it == index.end())
        throw Error("InvalidGroupTable",
                    "product entry '" + g.product[i][j] + "' is not an element");
      t[i][j] = it->second;
    }
  }
  int e = index.at(g.unit);
  for (std::size_t i = 0; i < n; ++i) {
    if (t[e][i] != static_cast<int>(i) || t[i][e] != static_cast<int>(i))
      throw Error("InvalidGroupTable", "unit laws fail at '" + g.elements[i] + "'");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]])
          throw Error("InvalidGroupTable",
                      "associativity fails at (" + g.elements[i] + ", " + g.elements[j] + ", " +
                          g.elements[k] + ")");
  for (std::size_t i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j] == e && t[j][i] == e) has_inverse = true;
    if (!has_inverse)
      throw Error("InvalidGroupTable", "element '" + g.elements[i] + "' has no inverse");
  }

  RawCategory raw;
  raw.objects = {"*"};
  for (const auto& el : g.elements) raw.morphisms.push_back({el, "*", "*"});
  raw.identity["*"] = g.unit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      raw.compose[{g.elements[i], g.elements[j]}] = g.elements[t[i][j]];
  return require_category(raw);
}

FinCat opposite(const FinCat& c) {
  RawCategory raw = c.to_raw();
  RawCategory op;
  op.objects = raw.objects;
  for (const auto& m : raw.morphisms) op.morphisms.push_back({m.id, m.cod, m.dom});
  op.identity = raw.identity;
  for (const auto& [pair, to] : raw.compose) op.compose[{pair.second, pair.first}] = to;
  return FinCatBuilder::build(op);
}

FinCat poset_category(const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& le,
                      const Caps& caps) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], static_cast<int>(i)).second)
      throw Error("DuplicateId", "element '" + elements[i] + "' appears twice");
  const std::size_t n = elements.size();
  std::vector<char> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (const auto& [a, b] : le) {
    auto ai = index.find(a);
    auto bi = index.find(b);
    if (ai == index.end()) throw Error("UnknownObject", "no poset element '" + a + "'");
    if (bi == index.end()) throw Error("UnknownObject", "no poset element '" + b + "'");
    rel[static_cast<std::size_t>(ai->second) * n + bi->second] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k * n + j]) rel[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i * n + j] && rel[j * n + i])
        throw Error("NotAPoset",
                    "'" + elements[i] + "' and '" + elements[j] + "' are related both ways");

  RawCategory raw;
  raw.objects = elements;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i * n + j]) ++count;
  if (count > caps.max_category_morphisms)
    throw Error("SearchSpaceCapExceeded", "poset category exceeds the morphism cap");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i * n + j]) continue;
      std::string id = elements[i] + "<=" + elements[j];
      raw.morphisms.push_back({id, elements[i], elements[j]});
      if (i == j) raw.identity[elements[i]] = id;
    }
  }
  check_generated_ids_unique(raw);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i * n + j])
        for (std::size_t k = 0; k < n; ++k)
          if (rel[j * n + k])
            raw.compose[{elements[j] + "<=" + elements[k], elements[i] + "<=" + elements[j]}] =
                elements[i] + "<=" + elements[k];
  return require_category(raw);
}

bool is_iso(const FinCat& c, const std::string& f) {
  const Morphism& m = c.morphism(f);
  const std::string& id_dom = c.identity_of(m.dom);
  const std::string& id_cod = c.identity_of(m.cod);
  for (const auto& g : c.hom(m.cod, m.dom))
    if (c.compose(g, f) == id_dom && c.compose(f, g) == id_cod) return true;
  return false;
}

std::vector<std::string> isomorphisms(const FinCat& c) {
  std::vector<std::string> out;
  for (const auto& m : c.morphisms())
    if (is_iso(c, m.id)) out.push_back(m.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> find_initial(const FinCat& c) {
  for (const auto& i : c.objects()) {
    bool ok = true;
    for (const auto& x : c.objects())
      if (c.hom(i, x).size() != 1) {
        ok = false;
        break;
      }
    if (ok) return i;
  }
  return std::nullopt;
}

std::optional<std::string> find_terminal(const FinCat& c) {
  for (const auto& t : c.objects()) {
    bool ok = true;
    for (const auto& x : c.objects())
      if (c.hom(x, t).size() != 1) {
        ok = false;
        break;
      }
    if (ok) return t;
  }
  return std::nullopt;
}

}  // namespace fincat
