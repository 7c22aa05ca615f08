#include "nilmetriq/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace nilmetriq {

namespace {

RatMatrix sign_diag(std::initializer_list<int> d) {
  std::vector<Rational> v(d.begin(), d.end());
  return RatMatrix::diagonal(v);
}

RatMatrix int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<RatVector> rs;
  for (const auto& r : rows) rs.emplace_back(r.begin(), r.end());
  return RatMatrix::from_rows(rs);
}

std::vector<CatalogEntry> build() {
  using D = std::vector<RatMatrix>;
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, std::string tuple, std::string standard = "", D gens = {}) {
    if (standard.empty()) standard = tuple;
    c.push_back({std::move(name), std::move(tuple), std::move(standard), std::move(gens)});
  };
  add("h1", "(0,0,0,0,0,0)");
  add("h2", "(0,0,0,0,12,34)");
  add("h3", "(0,0,0,0,0,12+34)");
  add("h4", "(0,0,0,0,12,14+23)");
  add("h5", "(0,0,0,0,13+42,14+23)");
  add("h6", "(0,0,0,0,12,13)");
  add("h7", "(0,0,0,12,13,23)");
  add("h8", "(0,0,0,0,0,12)");
  add("h9", "(0,0,0,0,12,14+25)", "(0,0,0,0,12,51+23)",
      D{sign_diag({-1, 1, 1, 1, -1, 1}), sign_diag({1, -1, 1, 1, -1, -1}), sign_diag({1, 1, 1, -1, 1, 1})});
  add("h10", "(0,0,0,12,13,14)", "",
      D{sign_diag({-1, 1, 1, -1, -1, 1}), sign_diag({1, -1, 1, -1, 1, -1}), sign_diag({1, 1, -1, 1, -1, 1})});
  add("h11", "(0,0,0,12,13,14+23)", "", D{sign_diag({-1, 1, 1, -1, -1, 1}), sign_diag({1, -1, 1, -1, 1, -1})});
  add("h12", "(0,0,0,12,13,24)", "",
      D{sign_diag({-1, 1, 1, -1, -1, -1}), sign_diag({1, -1, 1, -1, 1, 1}), sign_diag({1, 1, -1, 1, -1, 1})});
  add("h13", "(0,0,0,12,13+14,24)", "",
      D{sign_diag({-1, 1, -1, -1, 1, -1}), sign_diag({1, -1, -1, -1, -1, 1}),
        int_matrix({{0, -1, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0},
                    {0, 0, -1, 0, 0, 0},
                    {0, 0, 1, 1, 0, 0},
                    {0, 0, 0, 0, 0, -1},
                    {0, 0, 0, 0, 1, 0}})});
  add("h14", "(0,0,0,12,14,13+42)", "", D{sign_diag({-1, 1, 1, -1, 1, -1}), sign_diag({1, -1, 1, -1, -1, 1})});
  add("h15", "(0,0,0,12,13+42,14+23)");
  add("h16", "(0,0,0,12,14,24)");
  add("h17", "(0,0,0,0,12,15)");
  add("h18", "(0,0,0,12,13,14+35)", "(0,0,0,12,13,15+24)",
      D{sign_diag({-1, 1, -1, -1, 1, -1}), sign_diag({1, -1, 1, -1, 1, 1})});
  add("h19-", "(0,0,0,12,23,14-35)");
  add("h19+", "(0,0,0,12,23,14+35)", "(0,0,0,23,21,14+35)",
      D{sign_diag({-1, 1, 1, 1, -1, -1}), sign_diag({1, -1, 1, -1, -1, -1}),
        int_matrix({{0, 0, 1, 0, 0, 0},
                    {0, 1, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 0, 1}})});
  add("h20", "(0,0,0,0,12,15+34)");
  add("h21", "(0,0,0,12,14,15)", "",
      D{sign_diag({-1, 1, 1, -1, 1, -1}), sign_diag({1, -1, 1, -1, -1, -1}), sign_diag({1, 1, -1, 1, 1, 1})});
  add("h22", "(0,0,0,12,14,15+24)", "", D{sign_diag({-1, 1, 1, -1, 1, -1}), sign_diag({1, 1, -1, 1, 1, 1})});
  add("h23", "(0,0,12,13,23,14)", "", D{sign_diag({-1, 1, -1, 1, -1, -1}), sign_diag({1, -1, -1, -1, 1, -1})});
  add("h24", "(0,0,0,12,14,15+23+24)", "", D{sign_diag({-1, 1, -1, -1, 1, -1})});
  add("h25", "(0,0,0,12,14,15+23)", "", D{sign_diag({-1, 1, -1, -1, 1, -1}), sign_diag({1, -1, 1, -1, -1, -1})});
  add("h26-", "(0,0,12,13,23,14-25)", "(0,0,12,31,32,15+24)",
      D{sign_diag({-1, 1, -1, 1, -1, 1}),
        int_matrix({{0, 1, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0},
                    {0, 0, -1, 0, 0, 0},
                    {0, 0, 0, 0, -1, 0},
                    {0, 0, 0, -1, 0, 0},
                    {0, 0, 0, 0, 0, -1}})});
  add("h26+", "(0,0,12,13,23,14+25)");
  add("h27", "(0,0,0,12,14-23,15+34)", "", D{sign_diag({-1, 1, 1, -1, 1, -1}), sign_diag({1, -1, 1, -1, -1, -1})});
  add("h28", "(0,0,12,13,14,15)", "", D{sign_diag({-1, 1, -1, 1, -1, 1}), sign_diag({1, -1, -1, -1, -1, -1})});
  add("h29", "(0,0,12,13,14,23+15)", "", D{sign_diag({-1, -1, 1, -1, 1, -1})});
  add("h30", "(0,0,12,13,14+23,24+15)", "", D{sign_diag({-1, 1, -1, 1, -1, 1})});
  add("h31", "(0,0,12,13,14,34+52)", "", D{sign_diag({-1, 1, -1, 1, -1, -1}), sign_diag({1, -1, -1, -1, -1, 1})});
  add("h32", "(0,0,12,13,14+23,34+52)", "", D{sign_diag({-1, 1, -1, 1, -1, -1})});
  return c;
}

nlohmann::json matrix_to_json(const RatMatrix& m) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : m.data()) a.push_back(x.str());
  return a;
}

RatMatrix matrix_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n * n) throw std::invalid_argument("generator must be a row-major array of 36 rationals");
  RatVector v;
  for (const auto& x : j) {
    if (x.is_string())
      v.push_back(Rational::parse(x.get<std::string>()));
    else if (x.is_number_integer())
      v.push_back(Rational(x.get<long>()));
    else
      throw std::invalid_argument("generator entries must be rational strings or integers");
  }
  return unflatten(v, n, n);
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> c = build();
  return c;
}

std::vector<LieAlgebra> catalog() {
  std::vector<LieAlgebra> out;
  for (const auto& e : builtin_catalog()) out.push_back(e.original_algebra());
  for (const auto& e : builtin_catalog())
    if (e.rebased()) out.push_back(e.algebra());
  return out;
}

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries) {
  nlohmann::json algs = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j{{"name", e.name}, {"tuple", e.tuple}, {"standard_tuple", e.standard_tuple}};
    if (!e.d_generators.empty()) {
      j["d_generators"] = nlohmann::json::array();
      for (const auto& g : e.d_generators) j["d_generators"].push_back(matrix_to_json(g));
    }
    algs.push_back(std::move(j));
  }
  return {{"schema_version", 1}, {"algebras", algs}};
}

std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j) {
  const nlohmann::json& algs = j.is_array() ? j : j.at("algebras");
  std::vector<CatalogEntry> out;
  for (const auto& a : algs) {
    CatalogEntry e;
    e.name = a.at("name").get<std::string>();
    e.tuple = a.at("tuple").get<std::string>();
    e.standard_tuple = a.value("standard_tuple", e.tuple);
    LieAlgebra L = e.algebra();  // validates the tuple
    e.original_algebra();
    if (a.contains("d_generators"))
      for (const auto& g : a.at("d_generators")) e.d_generators.push_back(matrix_from_json(g, L.dim()));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path.string());
  return catalog_from_json(nlohmann::json::parse(in));
}

std::vector<CatalogEntry> active_catalog() {
  if (const char* p = std::getenv("NILMETRIQ_CATALOG"); p && *p) return load_catalog(p);
  return builtin_catalog();
}

std::string normalize_name(const std::string& name) {
  std::string s;
  for (char ch : name) {
    if (ch == '_' || std::isspace(static_cast<unsigned char>(ch))) continue;
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return s;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& name) {
  std::string want = normalize_name(name);
  for (const auto& e : entries)
    if (normalize_name(e.name) == want) return &e;
  return nullptr;
}

}  // namespace nilmetriq
