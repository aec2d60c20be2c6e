#include "fincat/workspace.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

namespace fincat {

namespace {

using nlohmann::json;

const std::set<std::string> kSections = {"categories", "diagrams",   "presheaves",
                                         "functors",   "matrices",   "abgroups",
                                         "sites",      "topologies", "classes"};

struct Entry {
  std::string file;
  json value;
};

struct Loader {
  std::vector<Diagnostic> diags;
  // section -> entry name -> raw json, merged across files
  std::map<std::string, std::map<std::string, Entry>> entries;

  void fail(const std::string& file, const std::string& path, const std::string& code,
            const std::string& message) {
    diags.push_back({file, path, code, message});
  }

  void read_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) return fail(file, "", "FileUnreadable", "cannot open file");
    json top;
    try {
      top = json::parse(in);
    } catch (const json::parse_error& e) {
      return fail(file, "", "ParseError", e.what());
    }
    if (!top.is_object()) return fail(file, "", "BadSchema", "top level must be an object");
    if (!top.contains("schema") || top.at("schema") != json("fincat/1"))
      return fail(file, "schema", "BadSchema", "expected \"fincat/1\"");
    for (const auto& [key, section] : top.items()) {
      if (key == "schema") continue;
      if (!kSections.count(key)) {
        fail(file, key, "UnknownSection", key);
        continue;
      }
      if (!section.is_object()) {
        fail(file, key, "BadValue", "section must be an object");
        continue;
      }
      for (const auto& [name, value] : section.items()) {
        auto [it, fresh] = entries[key].try_emplace(name, Entry{file, value});
        if (!fresh)
          fail(file, key + "." + name, "DuplicateName", "already defined in " + it->second.file);
      }
    }
  }

  template <typename F>
  void build_section(const std::string& section, F&& build) {
    for (const auto& [name, entry] : entries[section]) {
      std::string path = section + "." + name;
      try {
        if (!entry.value.is_object()) throw Error("BadValue", "entry must be an object");
        build(name, entry.value);
      } catch (const Error& e) {
        std::string msg = e.what();
        std::string prefix = e.code() + ": ";
        if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
        fail(entry.file, path, e.code(), msg);
      } catch (const json::exception& e) {
        fail(entry.file, path, "BadValue", e.what());
      }
    }
  }
};

void check_fields(const json& j, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw Error("BadValue", "must be an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw Error("UnknownField", key);
}

void require_fields(const json& j, const std::set<std::string>& required) {
  for (const auto& key : required)
    if (!j.contains(key)) throw Error("MissingField", key);
}

// g∘id and id∘f are forced; add them when absent so explicit tables only
// need the essential entries
void fill_identity_composites(RawCategory& raw) {
  for (const auto& m : raw.morphisms) {
    auto dom = raw.identity.find(m.dom);
    auto cod = raw.identity.find(m.cod);
    if (dom != raw.identity.end()) raw.compose.try_emplace({m.id, dom->second}, m.id);
    if (cod != raw.identity.end()) raw.compose.try_emplace({cod->second, m.id}, m.id);
  }
}

// when exactly one morphism has the right endpoints the composite cannot
// be anything else
void infer_unique_composites(RawCategory& raw) {
  for (const auto& g : raw.morphisms)
    for (const auto& f : raw.morphisms) {
      if (f.cod != g.dom || raw.compose.count({g.id, f.id})) continue;
      const Morphism* only = nullptr;
      bool unique = true;
      for (const auto& h : raw.morphisms) {
        if (h.dom != f.dom || h.cod != g.cod) continue;
        if (only) {
          unique = false;
          break;
        }
        only = &h;
      }
      if (unique && only) raw.compose[{g.id, f.id}] = only->id;
    }
}

FinCat build_category(const json& j) {
  if (j.contains("poset")) {
    check_fields(j, {"poset"});
    const json& p = j.at("poset");
    check_fields(p, {"elements", "le"});
    require_fields(p, {"elements", "le"});
    std::vector<std::pair<std::string, std::string>> le;
    for (const auto& pair : p.at("le")) {
      auto v = pair.get<std::vector<std::string>>();
      if (v.size() != 2) throw Error("BadValue", "le entries must be [below, above] pairs");
      le.emplace_back(v[0], v[1]);
    }
    return poset_category(p.at("elements").get<std::vector<std::string>>(), le);
  }
  if (j.contains("graph")) {
    check_fields(j, {"graph"});
    const json& g = j.at("graph");
    check_fields(g, {"vertices", "edges"});
    require_fields(g, {"vertices", "edges"});
    FinGraph graph;
    graph.vertices = g.at("vertices").get<std::vector<std::string>>();
    for (const auto& e : g.at("edges")) {
      check_fields(e, {"id", "src", "dst"});
      require_fields(e, {"id", "src", "dst"});
      graph.edges.push_back({e.at("id").get<std::string>(), e.at("src").get<std::string>(),
                             e.at("dst").get<std::string>()});
    }
    return free_category_on_acyclic_graph(graph);
  }
  if (j.contains("group")) {
    check_fields(j, {"group"});
    const json& g = j.at("group");
    check_fields(g, {"elements", "unit", "product"});
    require_fields(g, {"elements", "unit", "product"});
    GroupTable table;
    table.elements = g.at("elements").get<std::vector<std::string>>();
    table.unit = g.at("unit").get<std::string>();
    table.product = g.at("product").get<std::vector<std::vector<std::string>>>();
    return delooping(table);
  }
  check_fields(j, {"objects", "morphisms", "identities", "compose"});
  require_fields(j, {"objects", "morphisms", "identities"});
  RawCategory raw;
  raw.objects = j.at("objects").get<std::vector<std::string>>();
  for (const auto& m : j.at("morphisms")) {
    check_fields(m, {"id", "dom", "cod"});
    require_fields(m, {"id", "dom", "cod"});
    raw.morphisms.push_back({m.at("id").get<std::string>(), m.at("dom").get<std::string>(),
                             m.at("cod").get<std::string>()});
  }
  raw.identity = j.at("identities").get<std::map<std::string, std::string>>();
  if (j.contains("compose"))
    for (const auto& t : j.at("compose")) {
      auto v = t.get<std::vector<std::string>>();
      if (v.size() != 3) throw Error("BadValue", "compose entries must be [g, f, gf] triples");
      raw.compose[{v[0], v[1]}] = v[2];
    }
  fill_identity_composites(raw);
  infer_unique_composites(raw);
  return require_category(raw);
}

IntMatrix build_matrix(const json& j) {
  check_fields(j, {"rows", "cols", "entries"});
  require_fields(j, {"rows", "cols", "entries"});
  long long rows = j.at("rows").get<long long>();
  long long cols = j.at("cols").get<long long>();
  if (rows < 0 || cols < 0) throw Error("BadValue", "rows and cols must be >= 0");
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != std::size_t(rows * cols))
    throw Error("ShapeMismatch", "entries must hold rows*cols integers in row-major order");
  IntMatrix m{std::size_t(rows), std::size_t(cols)};
  std::size_t k = 0;
  for (const auto& e : entries) {
    if (!e.is_number_integer()) throw Error("BadValue", "matrix entries must be integers");
    m.at(k / std::size_t(cols), k % std::size_t(cols)) = e.get<long long>();
    ++k;
  }
  return m;
}

std::shared_ptr<const FinCat> need_category(const Workspace& ws, const std::string& name) {
  auto it = ws.categories.find(name);
  if (it == ws.categories.end()) throw Error("UnknownReference", "category '" + name + "'");
  return it->second;
}

RawSetFunctor read_raw_set_functor(const json& j) {
  check_fields(j, {"category", "objects", "actions"});
  require_fields(j, {"category", "objects"});
  RawSetFunctor raw;
  raw.objects = j.at("objects").get<std::map<std::string, std::vector<std::string>>>();
  if (j.contains("actions"))
    raw.actions = j.at("actions").get<std::map<std::string, std::map<std::string, std::string>>>();
  return raw;
}

SiteEntry build_site(const json& j, const Workspace& ws) {
  check_fields(j, {"category", "covers"});
  require_fields(j, {"category", "covers"});
  SiteEntry entry;
  entry.category = j.at("category").get<std::string>();
  auto base = need_category(ws, entry.category);
  for (const auto& [obj, lists] : j.at("covers").items()) {
    if (!lists.is_array()) throw Error("BadValue", "covers." + obj + " must be an array");
    for (const auto& gens : lists)
      entry.coverage.covers[obj].push_back(
          generate_sieve(*base, obj, gens.get<std::vector<std::string>>()));
  }
  return entry;
}

std::vector<std::string> class_list(const json& v, const FinCat& c) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    std::vector<std::string> out;
    if (s == "all") {
      for (const auto& m : c.morphisms()) out.push_back(m.id);
      return out;
    }
    if (s == "identities") {
      for (const auto& m : c.morphisms())
        if (c.is_identity(m.id)) out.push_back(m.id);
      return out;
    }
    if (s == "isos") return isomorphisms(c);
    throw Error("UnknownShorthand", s + " (expected all, identities or isos)");
  }
  auto ids = v.get<std::vector<std::string>>();
  for (const auto& id : ids)
    if (!c.has_morphism(id)) throw Error("UnknownMorphism", id);
  return ids;
}

}  // namespace

std::string Diagnostic::to_string() const {
  std::string out = file;
  if (!path.empty()) out += ": " + path;
  return out + ": " + code + ": " + message;
}

LoadResult load_workspace(const std::vector<std::string>& paths) {
  namespace fs = std::filesystem;
  Loader loader;

  std::vector<std::string> files;
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<std::string> found;
      for (const auto& e : fs::directory_iterator(p, ec))
        if (e.path().extension() == ".json") found.push_back(e.path().string());
      std::sort(found.begin(), found.end());
      if (found.empty()) loader.fail(p, "", "NoFiles", "directory holds no .json files");
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(p, ec)) {
      files.push_back(p);
    } else {
      loader.fail(p, "", "FileUnreadable", "no such file or directory");
    }
  }
  for (const auto& f : files) loader.read_file(f);

  Workspace ws;
  loader.build_section("categories", [&](const std::string& name, const json& j) {
    ws.categories.emplace(name, std::make_shared<const FinCat>(build_category(j)));
  });
  loader.build_section("matrices", [&](const std::string& name, const json& j) {
    ws.matrices.emplace(name, build_matrix(j));
  });
  loader.build_section("diagrams", [&](const std::string& name, const json& j) {
    RawSetFunctor raw = read_raw_set_functor(j);
    auto base = need_category(ws, j.at("category").get<std::string>());
    ws.diagrams.emplace(name, require_set_functor(base, raw));
  });
  loader.build_section("presheaves", [&](const std::string& name, const json& j) {
    RawSetFunctor raw = read_raw_set_functor(j);
    auto base = need_category(ws, j.at("category").get<std::string>());
    ws.presheaves.emplace(name, make_presheaf(base, raw));
  });
  loader.build_section("functors", [&](const std::string& name, const json& j) {
    check_fields(j, {"from", "to", "objects", "morphisms"});
    require_fields(j, {"from", "to"});
    RawFinFunctor raw;
    if (j.contains("objects"))
      raw.objects = j.at("objects").get<std::map<std::string, std::string>>();
    if (j.contains("morphisms"))
      raw.morphisms = j.at("morphisms").get<std::map<std::string, std::string>>();
    auto dom = need_category(ws, j.at("from").get<std::string>());
    auto cod = need_category(ws, j.at("to").get<std::string>());
    ws.functors.emplace(name, require_fin_functor(dom, cod, raw));
  });
  loader.build_section("abgroups", [&](const std::string& name, const json& j) {
    check_fields(j, {"generators", "relations"});
    require_fields(j, {"generators"});
    long long generators = j.at("generators").get<long long>();
    if (generators < 0) throw Error("BadValue", "generators must be >= 0");
    AbPresentation p;
    p.generators = std::size_t(generators);
    if (!j.contains("relations")) {
      p.relations = IntMatrix(p.generators, 0);
    } else if (j.at("relations").is_string()) {
      auto ref = j.at("relations").get<std::string>();
      auto it = ws.matrices.find(ref);
      if (it == ws.matrices.end()) throw Error("UnknownReference", "matrix '" + ref + "'");
      p.relations = it->second;
    } else {
      p.relations = build_matrix(j.at("relations"));
    }
    if (p.relations.rows() != p.generators)
      throw Error("ShapeMismatch", "relations need one row per generator");
    ws.abgroups.emplace(name, std::move(p));
  });
  loader.build_section("sites", [&](const std::string& name, const json& j) {
    ws.sites.emplace(name, build_site(j, ws));
  });
  loader.build_section("topologies", [&](const std::string& name, const json& j) {
    ws.topologies.emplace(name, build_site(j, ws));
  });
  loader.build_section("classes", [&](const std::string& name, const json& j) {
    check_fields(j, {"category", "weq", "cof", "fib"});
    require_fields(j, {"category", "weq", "cof", "fib"});
    ClassesEntry entry;
    entry.category = j.at("category").get<std::string>();
    auto base = need_category(ws, entry.category);
    entry.classes.weq = class_list(j.at("weq"), *base);
    entry.classes.cof = class_list(j.at("cof"), *base);
    entry.classes.fib = class_list(j.at("fib"), *base);
    ws.classes.emplace(name, std::move(entry));
  });

  LoadResult out;
  out.diagnostics = std::move(loader.diags);
  if (out.diagnostics.empty()) out.workspace = std::move(ws);
  return out;
}

}  // namespace fincat
