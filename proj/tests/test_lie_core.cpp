#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "nilmetriq/catalog.hpp"
#include "nilmetriq/linalg.hpp"
#include "nilmetriq/sampling.hpp"
#include "reference.hpp"

using namespace nilmetriq;

namespace {

RatVector e(std::size_t i) { return unit_vector(6, i - 1); }

const CatalogEntry& entry(const std::string& name) {
  const CatalogEntry* ce = find_entry(builtin_catalog(), name);
  REQUIRE(ce != nullptr);
  return *ce;
}

}  // namespace

TEST_CASE("parse_tuple sign convention") {
  LieAlgebra ab = parse_tuple("(0,0,0,0,0,0)");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(is_zero(ab.bracket_basis(i, j)));

  LieAlgebra h28 = parse_tuple("(0,0,12,13,14,15)");
  CHECK(h28.bracket(e(1), e(2)) == Rational(-1) * e(3));
  CHECK(h28.bracket(e(1), e(3)) == Rational(-1) * e(4));
  CHECK(h28.bracket(e(1), e(4)) == Rational(-1) * e(5));
  CHECK(h28.bracket(e(1), e(5)) == Rational(-1) * e(6));
  CHECK(h28.bracket(e(2), e(3)) == RatVector(6));

  LieAlgebra h14 = parse_tuple("(0,0,0,12,14,13+42)");
  CHECK(h14.bracket(e(4), e(2)) == Rational(-1) * e(6));
  CHECK(h14.bracket(e(2), e(4)) == e(6));

  LieAlgebra h9 = parse_tuple("(0,0,0,0,12,51+23)");
  CHECK(h9.bracket(e(1), e(5)) == e(6));
  CHECK(h9.bracket(e(2), e(3)) == Rational(-1) * e(6));
}

TEST_CASE("parse_tuple errors name the slot") {
  auto slot_of = [](const char* s) {
    try {
      parse_tuple(s);
    } catch (const TupleParseError& err) {
      return err.slot();
    }
    return -1;
  };
  CHECK(slot_of("(0,0,0,0,12,1x)") == 6);
  CHECK(slot_of("(0,0,0,0,11,0)") == 5);
  CHECK(slot_of("(0,0,0,0,17,0)") == 5);
  CHECK(slot_of("(0,0,0,0,10,0)") == 5);
  CHECK(slot_of("(0,0,0,123,0,0)") == 4);
  CHECK(slot_of("(0,0,0,,0,0)") == 4);
  CHECK(slot_of("0,0,0") == 0);
  // [e1,e2] = -e3, [e3,e4] = -e1 with e1 not central: Jacobi fails.
  CHECK(slot_of("(34,0,12,0,0,0)") > 0);
  CHECK_NOTHROW(parse_tuple(" ( 0, 0, 0, 0, 12 , 14 + 25 ) "));
  CHECK_NOTHROW(parse_tuple("(0,0,0,12,23,14-35)"));
}

TEST_CASE("ad and ranks") {
  LieAlgebra h28 = entry("h28").algebra();
  CHECK(rank(h28.ad(e(1))) == 4);
  LieAlgebra h26 = entry("h26-").algebra();
  CHECK(rank(h26.ad(e(1))) == 3);
  CHECK(rank(h26.ad(e(2))) == 3);
  Sampler s(5);
  for (int t = 0; t < 20; ++t) {
    RatVector x(6), y(6);
    for (auto& v : x) v = s.rational();
    for (auto& v : y) v = s.rational();
    CHECK(is_zero(h28.bracket(x, x)));
    CHECK(h28.ad(x) * y == h28.bracket(x, y));
    CHECK(h28.bracket(x, y) == Rational(-1) * h28.bracket(y, x));
  }
}

TEST_CASE("lower central series and center") {
  LieAlgebra h1 = entry("h1").algebra();
  CHECK(nilpotency_step(h1) == 1);
  CHECK(center(h1).dim() == 6);
  LieAlgebra h28 = entry("h28").algebra();
  CHECK(nilpotency_step(h28) == 5);
  CHECK(center(h28) == Subspace(6, {e(6)}));
  auto lcs = lower_central_series(h28);
  CHECK(lcs.nilpotent);
  for (std::size_t i = 1; i < lcs.terms.size(); ++i) CHECK(lcs.terms[i].dim() < lcs.terms[i - 1].dim());

  // Non-nilpotent sl2 x R^3: [e1,e2] = e3, [e3,e1] = 2e1, [e3,e2] = -2e2 encoded by hand.
  std::vector<Rational> c(216);
  auto set = [&](std::size_t k, std::size_t i, std::size_t j, int v) {
    c[(k * 6 + i) * 6 + j] = v;
    c[(k * 6 + j) * 6 + i] = -v;
  };
  set(2, 0, 1, 1);
  set(0, 2, 0, 2);
  set(1, 2, 1, -2);
  LieAlgebra sl2("sl2+R3", 6, c);
  CHECK_FALSE(lower_central_series(sl2).nilpotent);
  CHECK_THROWS_AS(nilpotency_step(sl2), std::domain_error);
}

TEST_CASE("catalog integrity against the reference table") {
  const auto& ref = testref::reference();
  const auto& cat = builtin_catalog();
  CHECK(cat.size() == 34);
  CHECK(catalog().size() == 38);
  for (const auto& row : ref["table1"]) {
    const auto* ce = find_entry(cat, row["name"].get<std::string>());
    REQUIRE(ce != nullptr);
    CHECK(nilpotency_step(ce->original_algebra()) == row["step"].get<int>());
    CHECK(nilpotency_step(ce->algebra()) == row["step"].get<int>());
  }
  for (const auto& L : catalog()) {
    CHECK(satisfies_jacobi(L));
    for (std::size_t k = 0; k < 6; ++k)
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
          const Rational& v = L.c(k, i, j);
          CHECK((v == Rational(0) || v == Rational(1) || v == Rational(-1)));
        }
  }
  CHECK(entry("h9").standard_tuple == "(0,0,0,0,12,51+23)");
  CHECK(entry("h19+").standard_tuple == "(0,0,0,23,21,14+35)");
  int rebased = 0;
  for (const auto& ce : cat) rebased += ce.rebased();
  CHECK(rebased == 4);
}

TEST_CASE("serialize round trip") {
  for (const auto& L : catalog()) CHECK(parse_tuple(serialize(L)) == L);
  CHECK(serialize(parse_tuple("(0,0,0,0,12,51+23)")) == "(0,0,0,0,12,-15+23)");
}

TEST_CASE("catalog JSON round trip and environment override") {
  auto j = catalog_to_json(builtin_catalog());
  CHECK(j["schema_version"] == 1);
  auto back = catalog_from_json(j);
  REQUIRE(back.size() == 34);
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].name == builtin_catalog()[i].name);
    CHECK(back[i].d_generators == builtin_catalog()[i].d_generators);
  }
  auto path = std::filesystem::temp_directory_path() / "nilmetriq_test_catalog.json";
  {
    std::ofstream out(path);
    out << R"js({"algebras":[{"name":"heis","tuple":"(0,0,12)"}]})js";
  }
  ::setenv("NILMETRIQ_CATALOG", path.c_str(), 1);
  auto active = active_catalog();
  ::unsetenv("NILMETRIQ_CATALOG");
  REQUIRE(active.size() == 1);
  CHECK(active[0].algebra().dim() == 3);
  CHECK(active_catalog().size() == 34);
  std::filesystem::remove(path);
}
