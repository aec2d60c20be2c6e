// Batch front end: every command reads entities from workspace files, runs
// one computation and prints a single result document. Output is rendered as
// indented text by default and as JSON with --json; both are deterministic.
//
// Exit codes: 0 when the computation succeeded (a missing colimit is an
// answer, not an error), 1 when a check produced violations, 2 on usage,
// parse or load errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "fincat/fincat.hpp"
#include "fincat/finab.hpp"
#include "fincat/modelcheck.hpp"
#include "fincat/presheaf.hpp"
#include "fincat/setcolim.hpp"
#include "fincat/sheaves.hpp"
#include "fincat/sites.hpp"
#include "fincat/workspace.hpp"

using nlohmann::json;
using namespace fincat;

namespace {

// ---- output rendering ------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(std::ostream& out, const json& v, int indent);

void render_entry(std::ostream& out, const std::string& lead, const std::string& key,
                  const json& value, int child_indent) {
  if ((value.is_object() || value.is_array()) && !value.empty()) {
    out << lead << key << ":\n";
    render_text(out, value, child_indent);
  } else if (value.is_object()) {
    out << lead << key << ": {}\n";
  } else if (value.is_array()) {
    out << lead << key << ": []\n";
  } else {
    out << lead << key << ": " << scalar_text(value) << "\n";
  }
}

void render_text(std::ostream& out, const json& v, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) render_entry(out, pad, key, value, indent + 2);
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_object() && !item.empty()) {
        bool first = true;
        for (const auto& [key, value] : item.items()) {
          render_entry(out, first ? pad + "- " : pad + "  ", key, value, indent + 4);
          first = false;
        }
      } else if (item.is_object() || item.is_array()) {
        out << pad << "-";
        if (item.is_object()) out << " {}";
        else if (item.empty()) out << " []";
        out << "\n";
        if (!item.empty()) render_text(out, item, indent + 2);
      } else {
        out << pad << "- " << scalar_text(item) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(v) << "\n";
  }
}

json report_json(const Report& report) {
  json issues = json::array();
  for (const auto& issue : report.issues) issues.push_back({{"code", issue.code}, {"detail", issue.detail}});
  return {{"ok", report.ok()}, {"issues", issues}};
}

// ---- workspace lookups -----------------------------------------------

template <typename Map>
const typename Map::mapped_type& need(const Map& map, const std::string& name,
                                      const std::string& kind) {
  auto it = map.find(name);
  if (it == map.end()) throw Error("UnknownName", "no " + kind + " named '" + name + "'");
  return it->second;
}

struct ResolvedTopology {
  std::string source;  // "topologies" or "sites"
  std::string category;
  Coverage coverage;
};

// Topology names win; a site name is saturated into its smallest topology.
ResolvedTopology resolve_topology(const Workspace& ws, const std::string& name,
                                  const Caps& caps) {
  if (auto it = ws.topologies.find(name); it != ws.topologies.end())
    return {"topologies", it->second.category, it->second.coverage};
  if (auto it = ws.sites.find(name); it != ws.sites.end()) {
    const FinCat& c = *need(ws.categories, it->second.category, "category");
    return {"sites", it->second.category, saturate_coverage(c, it->second.coverage, caps)};
  }
  throw Error("UnknownName", "no topology or site named '" + name + "'");
}

void require_same_base(const Presheaf& p, const Workspace& ws, const std::string& category,
                       const std::string& what) {
  if (!(*p.base == *need(ws.categories, category, "category")))
    throw Error("BaseMismatch", what + " lives on a different category than '" + category + "'");
}

json colimit_json(const ColimitResult& r) {
  json classes = json::object();
  for (const auto& [label, members] : r.classes) {
    json list = json::array();
    for (const auto& [obj, elem] : members) list.push_back("(" + obj + "," + elem + ")");
    classes[label] = std::move(list);
  }
  return {{"apex", r.apex}, {"legs", r.legs}, {"classes", std::move(classes)}};
}

// ---- commands ----------------------------------------------------------

struct Outcome {
  json result;
  int exit_code = 0;
};

using Action = std::function<Outcome(const Workspace&, const Caps&)>;

Outcome run_colimit_like(const Workspace& ws, const Caps&, const std::string& command,
                         const std::string& name,
                         ColimitResult (*compute)(const SetFunctor&)) {
  const SetFunctor& d = need(ws.diagrams, name, "diagram");
  json out = colimit_json(compute(d));
  out["command"] = command;
  out["diagram"] = name;
  return {std::move(out)};
}

Outcome run_limit(const Workspace& ws, const Caps& caps, const std::string& name) {
  const SetFunctor& d = need(ws.diagrams, name, "diagram");
  LimitResult r = limit(d, caps);
  return {{{"command", "limit"},
           {"diagram", name},
           {"apex", r.apex},
           {"projections", r.projections}}};
}

Outcome run_orbit(const Workspace& ws, const Caps&, const std::string& name) {
  const SetFunctor& d = need(ws.diagrams, name, "diagram");
  if (d.cat().objects().size() != 1)
    throw Error("ShapeMismatch", "orbits need a diagram on a one-object category");
  ColimitResult r = colimit(d);
  json orbits = json::object();
  for (const auto& [label, members] : r.classes) {
    json list = json::array();
    for (const auto& [obj, elem] : members) list.push_back(elem);
    orbits[label] = std::move(list);
  }
  return {{{"command", "orbit"},
           {"diagram", name},
           {"count", r.apex.size()},
           {"orbits", std::move(orbits)}}};
}

Outcome run_find_colimit(const Workspace& ws, const Caps& caps, const std::string& name) {
  const FinFunctor& d = need(ws.functors, name, "functor");
  auto found = find_colimit_in_category(d, caps);
  json out = {{"command", "find-colimit"}, {"functor", name}, {"found", found.has_value()}};
  if (found) {
    out["apex"] = found->apex;
    out["legs"] = found->legs;
  }
  return {std::move(out)};
}

Outcome run_tensor(const Workspace& ws, const Caps&, const std::string& left,
                   const std::string& right) {
  const AbPresentation& a = need(ws.abgroups, left, "abgroup");
  const AbPresentation& b = need(ws.abgroups, right, "abgroup");
  return {{{"command", "tensor"},
           {"left", left},
           {"left_form", canonical_form(a).to_string()},
           {"right", right},
           {"right_form", canonical_form(b).to_string()},
           {"tensor", tensor_ab(a, b).to_string()}}};
}

json matrix_rows(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Outcome run_snf(const Workspace& ws, const Caps&, const std::string& name) {
  const IntMatrix& m = need(ws.matrices, name, "matrix");
  SmithResult r = smith_normal_form(m);
  json diagonal = json::array();
  for (std::size_t i = 0; i < std::min(r.s.rows(), r.s.cols()); ++i)
    diagonal.push_back(r.s.at(i, i).str());
  return {{{"command", "snf"},
           {"matrix", name},
           {"rows", m.rows()},
           {"cols", m.cols()},
           {"diagonal", std::move(diagonal)},
           {"s", matrix_rows(r.s)},
           {"u", matrix_rows(r.u)},
           {"v", matrix_rows(r.v)}}};
}

Outcome run_yoneda(const Workspace& ws, const Caps& caps, const std::string& name,
                   const std::string& object) {
  if (auto it = ws.presheaves.find(name); it != ws.presheaves.end()) {
    const Presheaf& p = it->second;
    json per_object = json::object();
    bool all_bijective = true;
    std::vector<std::string> objects;
    if (object.empty())
      objects = p.base->objects();
    else
      objects.push_back(object);
    for (const auto& x : objects) {
      YonedaLemmaResult r = check_yoneda_lemma(p, x, caps);
      all_bijective = all_bijective && r.bijective;
      per_object[x] = {{"transformations", r.transformations},
                       {"sections", r.sections},
                       {"bijective", r.bijective}};
    }
    json out = {{"command", "yoneda"},
                {"presheaf", name},
                {"bijective", all_bijective},
                {"objects", std::move(per_object)}};
    return {std::move(out), all_bijective ? 0 : 1};
  }
  if (auto it = ws.categories.find(name); it != ws.categories.end()) {
    if (!object.empty())
      throw Error("BadValue", "--object applies to a presheaf, not a category");
    Report report = check_yoneda_full_faithful(it->second, caps);
    return {{{"command", "yoneda"}, {"category", name}, {"report", report_json(report)}},
            report.ok() ? 0 : 1};
  }
  throw Error("UnknownName", "no presheaf or category named '" + name + "'");
}

Outcome run_canonical_colimit(const Workspace& ws, const Caps&, const std::string& name) {
  const Presheaf& p = need(ws.presheaves, name, "presheaf");
  Report report = check_canonical_colimit(p);
  return {{{"command", "canonical-colimit"}, {"presheaf", name}, {"report", report_json(report)}},
          report.ok() ? 0 : 1};
}

Outcome run_sieves(const Workspace& ws, const Caps& caps, const std::string& category,
                   const std::string& object) {
  const auto& c = need(ws.categories, category, "category");
  auto sieves = enumerate_sieves(*c, object, caps);
  json labels = json::array();
  for (const auto& s : sieves) labels.push_back(s.label());
  return {{{"command", "sieves"},
           {"category", category},
           {"object", object},
           {"count", sieves.size()},
           {"sieves", std::move(labels)}}};
}

Outcome run_topology_check(const Workspace& ws, const Caps& caps, const std::string& name) {
  const SiteEntry* entry = nullptr;
  std::string source;
  if (auto it = ws.topologies.find(name); it != ws.topologies.end()) {
    entry = &it->second;
    source = "topologies";
  } else if (auto it = ws.sites.find(name); it != ws.sites.end()) {
    entry = &it->second;
    source = "sites";
  } else {
    throw Error("UnknownName", "no topology or site named '" + name + "'");
  }
  const auto& c = need(ws.categories, entry->category, "category");
  Report report = check_topology_axioms(*c, entry->coverage, caps);
  return {{{"command", "topology-check"},
           {"topology", name},
           {"source", source},
           {"category", entry->category},
           {"report", report_json(report)}},
          report.ok() ? 0 : 1};
}

json covers_json(const Coverage& coverage) {
  json covers = json::object();
  for (const auto& [obj, sieves] : coverage.covers) {
    json labels = json::array();
    for (const auto& s : sieves) labels.push_back(s.label());
    covers[obj] = std::move(labels);
  }
  return covers;
}

Outcome run_saturate(const Workspace& ws, const Caps& caps, const std::string& name) {
  ResolvedTopology resolved = resolve_topology(ws, name, caps);
  if (resolved.source == "topologies") {
    // a stored topology is saturated in place so the command is total
    const FinCat& c = *need(ws.categories, resolved.category, "category");
    resolved.coverage = saturate_coverage(c, resolved.coverage, caps);
  }
  return {{{"command", "saturate"},
           {"site", name},
           {"category", resolved.category},
           {"covers", covers_json(resolved.coverage)}}};
}

Outcome run_sheaf_check(const Workspace& ws, const Caps& caps, const std::string& presheaf,
                        const std::string& topology) {
  const Presheaf& p = need(ws.presheaves, presheaf, "presheaf");
  ResolvedTopology resolved = resolve_topology(ws, topology, caps);
  require_same_base(p, ws, resolved.category, "presheaf '" + presheaf + "'");
  Report report = check_sheaf(p, resolved.coverage, caps);
  return {{{"command", "sheaf-check"},
           {"presheaf", presheaf},
           {"topology", topology},
           {"sheaf", report.ok()},
           {"report", report_json(report)}},
          report.ok() ? 0 : 1};
}

Outcome run_sheafify(const Workspace& ws, const Caps& caps, const std::string& presheaf,
                     const std::string& topology) {
  const Presheaf& p = need(ws.presheaves, presheaf, "presheaf");
  ResolvedTopology resolved = resolve_topology(ws, topology, caps);
  require_same_base(p, ws, resolved.category, "presheaf '" + presheaf + "'");
  PlusResult r = sheafify(p, resolved.coverage, caps);
  json sections = json::object();
  for (const auto& obj : p.base->objects()) sections[obj] = r.presheaf.sections(obj);
  return {{{"command", "sheafify"},
           {"presheaf", presheaf},
           {"topology", topology},
           {"sheaf", check_sheaf(r.presheaf, resolved.coverage, caps).ok()},
           {"sections", std::move(sections)},
           {"unit", r.unit.components}}};
}

Outcome run_adjoint_check(const Workspace& ws, const Caps& caps, const std::string& presheaf,
                          const std::string& topology, const std::string& target) {
  const Presheaf& p = need(ws.presheaves, presheaf, "presheaf");
  const Presheaf& q = need(ws.presheaves, target, "presheaf");
  ResolvedTopology resolved = resolve_topology(ws, topology, caps);
  require_same_base(p, ws, resolved.category, "presheaf '" + presheaf + "'");
  require_same_base(q, ws, resolved.category, "presheaf '" + target + "'");
  Report report = verify_sheafification_universal(p, resolved.coverage, q, caps);
  return {{{"command", "adjoint-check"},
           {"presheaf", presheaf},
           {"topology", topology},
           {"target", target},
           {"report", report_json(report)}},
          report.ok() ? 0 : 1};
}

Outcome run_model_check(const Workspace& ws, const Caps&, const std::string& name) {
  const ClassesEntry& entry = need(ws.classes, name, "classes entry");
  const auto& c = need(ws.categories, entry.category, "category");
  Report report = check_model_axioms(*c, entry.classes);
  auto object_list = [](const std::optional<std::vector<std::string>>& v) -> json {
    if (!v) return "not applicable";
    return *v;
  };
  return {{{"command", "model-check"},
           {"classes", name},
           {"category", entry.category},
           {"report", report_json(report)},
           {"cofibrant", object_list(cofibrant_objects(*c, entry.classes))},
           {"fibrant", object_list(fibrant_objects(*c, entry.classes))}},
          report.ok() ? 0 : 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite category computations over workspace files"};
  app.require_subcommand(1);

  std::vector<std::string> workspace;
  bool as_json = false;
  Caps caps;
  app.add_option("-w,--workspace", workspace,
                 "workspace file or directory with *.json files (repeatable)")
      ->required();
  app.add_flag("--json", as_json, "print the result as JSON instead of text");
  app.add_option("--max-partition", caps.max_partition,
                 "ground set limit for the universality oracle");
  app.add_option("--max-nat-trans", caps.max_nat_trans,
                 "candidate limit for transformation and family searches");
  app.add_option("--max-sieve-morphisms", caps.max_sieve_morphisms,
                 "incoming morphism limit for sieve enumeration");
  app.add_option("--max-morphisms", caps.max_category_morphisms,
                 "morphism limit for category builders");

  Action action;
  auto add = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  // names typed into positionals, read when the callback fires
  auto a = std::make_shared<std::vector<std::string>>(3);
  std::string object;

  auto one = [&](CLI::App* sub, const std::string& label) {
    sub->add_option(label, (*a)[0], label)->required();
    return sub;
  };

  {
    auto* sub = one(add("colimit", "colimit of a set-valued diagram"), "diagram");
    sub->callback([&, sub] {
      action = [name = (*a)[0]](const Workspace& ws, const Caps& caps) {
        return run_colimit_like(ws, caps, "colimit", name, colimit);
      };
      (void)sub;
    });
  }
  {
    auto* sub = one(add("limit", "limit of a set-valued diagram"), "diagram");
    sub->callback([&] {
      action = [name = (*a)[0]](const Workspace& ws, const Caps& caps) {
        return run_limit(ws, caps, name);
      };
    });
  }
  {
    auto* sub = one(add("pushout", "pushout of a span-shaped diagram"), "diagram");
    sub->callback([&] {
      action = [name = (*a)[0]](const Workspace& ws, const Caps& caps) {
        return run_colimit_like(ws, caps, "pushout", name, pushout);
      };
    });
  }
  {
    auto* sub = one(add("coequalizer", "coequalizer of a parallel pair diagram"), "diagram");
    sub->callback([&] {
      action = [name = (*a)[0]](const Workspace& ws, const Caps& caps) {
        return run_colimit_like(ws, caps, "coequalizer", name, coequalizer);
      };
    });
  }
  {
    auto* sub = one(add("orbit", "orbits of a group action diagram"), "diagram");
    sub->callback([&] {
      action = [name = (*a)[0]](const Workspace& ws, const Caps& caps) {
        return run_orbit(ws, caps, name);
      };
    });
  }
  {
    auto* sub = one(add("find-colimit", "search a target category for a colimit"), "functor");
    sub->callback([&] {
      action = [name = (*a)[0]](const Workspace& ws, const Caps& caps) {
        return run_find_colimit(ws, caps, name);
      };
    });
  }
  {
    auto* sub = add("tensor", "tensor product of two abelian groups");
    sub->add_option("left", (*a)[0], "left abgroup")->required();
    sub->add_option("right", (*a)[1], "right abgroup")->required();
    sub->callback([&] {
      action = [left = (*a)[0], right = (*a)[1]](const Workspace& ws, const Caps& caps) {
        return run_tensor(ws, caps, left, right);
      };
    });
  }
  {
    auto* sub = one(add("snf", "Smith normal form of an integer matrix"), "matrix");
    sub->callback([&] {
      action = [name = (*a)[0]](const Workspace& ws, const Caps& caps) {
        return run_snf(ws, caps, name);
      };
    });
  }
  {
    auto* sub = add("yoneda",
                    "evaluation against representables: presheaf (lemma) or category "
                    "(full and faithful embedding)");
    sub->add_option("name", (*a)[0], "presheaf or category")->required();
    sub->add_option("--object", object, "restrict a presheaf check to one object");
    sub->callback([&] {
      action = [name = (*a)[0], object](const Workspace& ws, const Caps& caps) {
        return run_yoneda(ws, caps, name, object);
      };
    });
  }
  {
    auto* sub = one(add("canonical-colimit", "presheaf as colimit of representables"),
                    "presheaf");
    sub->callback([&] {
      action = [name = (*a)[0]](const Workspace& ws, const Caps& caps) {
        return run_canonical_colimit(ws, caps, name);
      };
    });
  }
  {
    auto* sub = add("sieves", "enumerate the sieves on an object");
    sub->add_option("category", (*a)[0], "category")->required();
    sub->add_option("object", (*a)[1], "object")->required();
    sub->callback([&] {
      action = [category = (*a)[0], obj = (*a)[1]](const Workspace& ws, const Caps& caps) {
        return run_sieves(ws, caps, category, obj);
      };
    });
  }
  {
    auto* sub = one(add("topology-check", "check the topology axioms of a coverage"), "name");
    sub->callback([&] {
      action = [name = (*a)[0]](const Workspace& ws, const Caps& caps) {
        return run_topology_check(ws, caps, name);
      };
    });
  }
  {
    auto* sub = one(add("saturate", "smallest topology containing a coverage"), "name");
    sub->callback([&] {
      action = [name = (*a)[0]](const Workspace& ws, const Caps& caps) {
        return run_saturate(ws, caps, name);
      };
    });
  }
  {
    auto* sub = add("sheaf-check", "check the sheaf condition for a presheaf");
    sub->add_option("presheaf", (*a)[0], "presheaf")->required();
    sub->add_option("topology", (*a)[1], "topology or site (sites are saturated)")->required();
    sub->callback([&] {
      action = [p = (*a)[0], t = (*a)[1]](const Workspace& ws, const Caps& caps) {
        return run_sheaf_check(ws, caps, p, t);
      };
    });
  }
  {
    auto* sub = add("sheafify", "universal sheaf replacement of a presheaf");
    sub->add_option("presheaf", (*a)[0], "presheaf")->required();
    sub->add_option("topology", (*a)[1], "topology or site (sites are saturated)")->required();
    sub->callback([&] {
      action = [p = (*a)[0], t = (*a)[1]](const Workspace& ws, const Caps& caps) {
        return run_sheafify(ws, caps, p, t);
      };
    });
  }
  {
    auto* sub = add("adjoint-check", "factor maps into a sheaf uniquely through the unit");
    sub->add_option("presheaf", (*a)[0], "presheaf")->required();
    sub->add_option("topology", (*a)[1], "topology or site (sites are saturated)")->required();
    sub->add_option("target", (*a)[2], "sheaf to map into")->required();
    sub->callback([&] {
      action = [p = (*a)[0], t = (*a)[1], q = (*a)[2]](const Workspace& ws, const Caps& caps) {
        return run_adjoint_check(ws, caps, p, t, q);
      };
    });
  }
  {
    auto* sub = one(add("model-check", "model structure axioms for three morphism classes"),
                    "classes");
    sub->callback([&] {
      action = [name = (*a)[0]](const Workspace& ws, const Caps& caps) {
        return run_model_check(ws, caps, name);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  LoadResult loaded = load_workspace(workspace);
  if (!loaded.workspace) {
    for (const auto& d : loaded.diagnostics) std::cerr << d.to_string() << "\n";
    return 2;
  }

  try {
    Outcome outcome = action(*loaded.workspace, caps);
    if (as_json)
      std::cout << outcome.result.dump(2) << "\n";
    else
      render_text(std::cout, outcome.result, 0);
    return outcome.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
