#include "doctest.h"

#include "nilmetriq/catalog.hpp"
#include "nilmetriq/derivations.hpp"
#include "nilmetriq/linalg.hpp"
#include "reference.hpp"

using namespace nilmetriq;

namespace {

LieAlgebra alg(const std::string& name) {
  const CatalogEntry* ce = find_entry(builtin_catalog(), name);
  REQUIRE(ce != nullptr);
  return ce->algebra();
}

// Independent oracle: count solutions of the derivation identity by writing the
// equations through ad matrices, D ad(x) - ad(x) D = ad(Dx).
std::size_t der_dim_oracle(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<RatVector> rows;
  for (std::size_t x = 0; x < n; ++x) {
    RatMatrix adx = L.ad_basis(x);
    // Entry (a,b) of D ad(x) - ad(x) D - ad(D e_x), linear in D(r,c).
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        RatVector row(n * n);
        for (std::size_t m = 0; m < n; ++m) {
          row[a * n + m] += adx(m, b);
          row[m * n + b] -= adx(a, m);
        }
        // ad(D e_x)(a,b) = sum_r D(r,x) ad(e_r)(a,b)
        for (std::size_t r = 0; r < n; ++r) row[r * n + x] -= L.ad_basis(r)(a, b);
        rows.push_back(std::move(row));
      }
  }
  return n * n - rank(RatMatrix::from_rows(rows));
}

}  // namespace

TEST_CASE("derivation space dimensions") {
  CHECK(derivation_space(alg("h9")).dim() == 15);
  CHECK(derivation_space(alg("h28")).dim() == 11);
  CHECK(derivation_space(alg("h1")).dim() == 36);
  CHECK(derivation_system(alg("h28")).rows() == 90);
  CHECK(derivation_system(alg("h28")).cols() == 36);
  for (const auto& ce : builtin_catalog()) {
    LieAlgebra L = ce.algebra();
    auto D = derivation_space(L);
    CHECK_MESSAGE(D.dim() == der_dim_oracle(L), ce.name);
    for (const auto& b : D.basis) CHECK(is_derivation(L, b));
  }
}

TEST_CASE("solvability and classification reproduce the CSLA list") {
  CHECK(is_solvable(derivation_space(alg("h10"))));
  CHECK_FALSE(is_solvable(derivation_space(alg("h1"))));
  CHECK_FALSE(is_solvable(derivation_space(alg("h8"))));
  CHECK(classify(alg("h23")) == Classification::CSLAT);
  CHECK(classify(alg("h26+")) == Classification::CSLA_NotTriangular);
  CHECK(classify(alg("h2")) == Classification::NotCSLA);
  for (const auto& row : testref::reference()["table1"]) {
    auto name = row["name"].get<std::string>();
    Classification c = classify(alg(name));
    CHECK_MESSAGE((c != Classification::NotCSLA) == row["csla"].get<bool>(), name);
    CHECK_MESSAGE((c == Classification::CSLAT) == row["cslat"].get<bool>(), name);
  }
}

TEST_CASE("nilpotent / diagonal split") {
  CHECK(derivation_space(alg("h29")).diag_dim == 1);
  CHECK(derivation_space(alg("h23")).diag_dim == 2);
  CHECK(derivation_space(alg("h9")).diag_dim == 3);
  for (const auto& [name, _] : testref::reference()["aut_free"].items()) {
    auto D = derivation_space(alg(name));
    auto split = split_nilpotent_diagonal(D);
    CHECK(split.diagonal.size() == D.diag_dim);
    CHECK(split.nilpotent.size() + split.diagonal.size() == D.dim());
    std::vector<RatVector> all;
    for (const auto& m : split.nilpotent) all.push_back(flatten(m));
    for (const auto& m : split.diagonal) all.push_back(flatten(m));
    CHECK(span_rank(all) == D.dim());
    for (const auto& m : split.nilpotent) CHECK(m.is_strictly_lower_triangular());
    for (const auto& m : split.diagonal) CHECK(m.is_diagonal());
  }
  CHECK_THROWS_AS(split_nilpotent_diagonal(derivation_space(alg("h15"))), std::invalid_argument);
}

TEST_CASE("skew-symmetric derivations") {
  RatMatrix I = RatMatrix::identity(6);
  CHECK_FALSE(skew_derivations(alg("h15"), I).empty());
  CHECK_FALSE(skew_derivations(alg("h19-"), I).empty());
  CHECK(skew_derivations(alg("h28"), I).empty());
  for (const auto& s : skew_derivations(alg("h15"), I)) CHECK((s + s.transpose()).is_zero());
  RatMatrix bad = I;
  bad(0, 1) = 1;
  CHECK_THROWS_AS(skew_derivations(alg("h28"), bad), std::invalid_argument);
}
