#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fincat/diagram.hpp"
#include "fincat/finab.hpp"
#include "fincat/fincat.hpp"
#include "fincat/modelcheck.hpp"
#include "fincat/presheaf.hpp"
#include "fincat/sites.hpp"

namespace fincat {

// One load problem: the file it came from, the JSON path inside it, a
// stable code and a message.
struct Diagnostic {
  std::string file;
  std::string path;
  std::string code;
  std::string message;

  std::string to_string() const;
};

// A coverage together with the name of the category it lives on.
struct SiteEntry {
  std::string category;
  Coverage coverage;
};

// Morphism classes together with the name of their category.
struct ClassesEntry {
  std::string category;
  MorphismClasses classes;
};

// Named entities from workspace files, fully resolved and validated.
// Diagrams and presheaves remember their base through shared ownership;
// sites, topologies and classes keep the category name for lookups.
struct Workspace {
  std::map<std::string, std::shared_ptr<const FinCat>> categories;
  std::map<std::string, SetFunctor> diagrams;
  std::map<std::string, Presheaf> presheaves;
  std::map<std::string, FinFunctor> functors;
  std::map<std::string, IntMatrix> matrices;
  std::map<std::string, AbPresentation> abgroups;
  std::map<std::string, SiteEntry> sites;
  std::map<std::string, SiteEntry> topologies;
  std::map<std::string, ClassesEntry> classes;
};

struct LoadResult {
  std::optional<Workspace> workspace;  // set iff diagnostics is empty
  std::vector<Diagnostic> diagnostics;
};

// Reads every given file, plus every *.json inside given directories, as
// one merged workspace. Each file holds a JSON object with
// "schema": "fincat/1" and any of the entity sections; names must be
// unique across all files and references may cross files. Unknown fields
// are reported rather than ignored.
LoadResult load_workspace(const std::vector<std::string>& paths);

}  // namespace fincat
