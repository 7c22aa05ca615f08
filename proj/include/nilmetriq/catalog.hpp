#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "nilmetriq/lie_algebra.hpp"

namespace nilmetriq {

struct CatalogEntry {
  std::string name;
  std::string tuple;           // tuple in the classification basis
  std::string standard_tuple;  // basis used by every downstream computation
  std::vector<RatMatrix> d_generators;  // component group generators, standard basis

  bool rebased() const { return tuple != standard_tuple; }
  LieAlgebra algebra() const { return parse_tuple(standard_tuple, name); }
  LieAlgebra original_algebra() const { return parse_tuple(tuple, name); }
};

// The 34 six-dimensional nilpotent Lie algebras over R, embedded.
const std::vector<CatalogEntry>& builtin_catalog();
// The 34 algebras in their original tuples followed by the 4 re-based standard variants.
std::vector<LieAlgebra> catalog();

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);
// The catalog named by NILMETRIQ_CATALOG when set, else the builtin one.
std::vector<CatalogEntry> active_catalog();

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& name);

// Accepts "h19+", "h_19+", "H19+" and the like.
std::string normalize_name(const std::string& name);

}  // namespace nilmetriq
