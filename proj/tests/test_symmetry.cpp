#include "doctest.h"

#include "nilmetriq/catalog.hpp"
#include "nilmetriq/linalg.hpp"
#include "nilmetriq/symmetry.hpp"

using namespace nilmetriq;

namespace {

const CatalogEntry& entry(const std::string& name) {
  const CatalogEntry* ce = find_entry(builtin_catalog(), name);
  REQUIRE(ce != nullptr);
  return *ce;
}

// Oracle: all 36 ordered pairs (X, Z), each row filled by evaluating the form on Y = e_j.
Subspace symmetry_oracle(const LieAlgebra& L, const RatMatrix& g) {
  const std::size_t n = L.dim();
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      RatVector row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = symmetry_form(L, g, unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
      rows.push_back(row);
    }
  return Subspace(n, kernel_basis(RatMatrix::from_rows(rows)));
}

RatVector vec(std::initializer_list<Rational> xs) { return RatVector(xs); }

SigmaPoint random_point(const std::string& name, Sampler& s, double zero_p = 0.3) {
  auto pat = sigma_pattern(entry(name).algebra());
  std::vector<Rational> v;
  for (std::size_t k = 0; k < pat.parameter_count(); ++k)
    v.push_back(pat.is_diagonal_parameter(k) ? s.positive_rational(7, 4) : (s.coin(zero_p) ? Rational(0) : s.rational(7, 4)));
  return SigmaPoint(pat, v);
}

}  // namespace

TEST_CASE("symmetry system shape and trivial cases") {
  LieAlgebra h1 = entry("h1").algebra();
  RatMatrix m = symmetry_system(h1, RatMatrix::identity(6));
  CHECK(m.rows() == 15);
  CHECK(m.cols() == 6);
  CHECK(m.is_zero());
  CHECK(index_of_symmetry(h1, RatMatrix::identity(6)).index == 6);

  LieAlgebra h28 = entry("h28").algebra();
  auto r = index_of_symmetry(h28, RatMatrix::identity(6));
  REQUIRE(r.index == 1);
  CHECK(r.basis[0] == vec({0, 1, 0, -1, 0, 1}));
  CHECK_FALSE(r.central);
}

TEST_CASE("the i<k rows carry the whole system") {
  Sampler s(31);
  for (const char* name : {"h9", "h10", "h21", "h22", "h28", "h31"}) {
    LieAlgebra L = entry(name).algebra();
    for (int t = 0; t < 10; ++t) {
      RatMatrix g = metric_of(random_point(name, s, 0.6));
      CHECK_MESSAGE(Subspace(6, kernel_basis(symmetry_system(L, g))) == symmetry_oracle(L, g), name);
    }
  }
}

TEST_CASE("worked examples") {
  Sampler s(5);
  auto h9 = sigma_pattern(entry("h9").algebra());
  for (int t = 0; t < 10; ++t) {
    SigmaPoint p = random_point("h9", s).with({{"s2", Rational(1)}});
    CHECK(index_of_symmetry(entry("h9").algebra(), metric_of(p)).index == 0);
  }
  auto h10 = sigma_pattern(entry("h10").algebra());
  SigmaPoint p10 = SigmaPoint::trivial(h10).with({{"s1", Rational(1)}, {"s3", Rational(1)}, {"s4", Rational(1)}});
  auto r10 = index_of_symmetry(entry("h10").algebra(), metric_of(p10));
  REQUIRE(r10.index == 1);
  CHECK(r10.basis[0] == vec({0, 1, -1, 0, 1, -2}));
  CHECK_FALSE(r10.central);
  CHECK(r10.central_intersection_dim == 0);
  for (int t = 0; t < 25; ++t)
    CHECK(index_of_symmetry(entry("h23").algebra(), metric_of(random_point("h23", s))).index == 0);
}

TEST_CASE("h28 table rows") {
  LieAlgebra L = entry("h28").algebra();
  auto pat = sigma_pattern(L);
  SigmaPoint base = SigmaPoint::trivial(pat);
  struct Row {
    SigmaPoint p;
    RatMatrix A;
    std::vector<RatVector> s;
  };
  std::vector<Row> rows{
      {base.with({{"s8", Rational(1, 2)}}), RatMatrix{{0, -1, 1}, {-1, 0, -1}, {0, -1, 0}}, {}},
      {base, RatMatrix{{0, -1, 0}, {-1, 0, -1}, {0, -1, 0}}, {vec({0, 1, 0, -1, 0, 1})}},
      {base.with({{"s3", Rational(2)}, {"s4", Rational(1)}, {"s5", Rational(2)}, {"s7", Rational(5, 4)}, {"s8", Rational(1, 2)}}),
       RatMatrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}},
       {vec({0, 1, 0, 0, 0, -4}), vec({0, 0, 0, 1, Rational(-1, 2), -5})}},
      {base.with({{"s3", Rational(1)}, {"s7", Rational(2)}}), RatMatrix(3, 3),
       {vec({0, 1, 0, 0, 0, -1}), vec({0, 0, 1, 0, -2, 0}), vec({0, 0, 0, 1, 0, -3})}}};
  RatMatrix g1 = metric_of(rows[0].p);
  CHECK(g1(4, 4) == Rational(5, 4));
  CHECK(g1(4, 5) == Rational(1, 2));
  RatMatrix g3 = metric_of(rows[2].p);
  CHECK(g3(3, 3) == Rational(57, 16));
  CHECK(g3(3, 4) == Rational(21, 8));
  CHECK(g3(4, 4) == Rational(17, 4));
  for (const auto& row : rows) {
    CHECK(h28_A_matrix(row.p) == row.A);
    auto r = index_of_symmetry(L, metric_of(row.p));
    CHECK(r.index == 3 - rank(row.A));
    CHECK(Subspace(6, r.basis) == Subspace(6, row.s));
    CHECK(r.central_intersection_dim == 0);
  }
}

TEST_CASE("h28 rank formula against the brute-force system") {
  LieAlgebra L = entry("h28").algebra();
  Sampler s(77);
  for (int t = 0; t < 50; ++t) {
    SigmaPoint p = random_point("h28", s, 0.5);
    CHECK(3 - rank(h28_A_matrix(p)) == symmetry_oracle(L, metric_of(p)).dim());
  }
  for (int t = 0; t < 25; ++t) {
    auto r = index_of_symmetry(L, metric_of(random_point("h28", s, 0.5)));
    CHECK_FALSE(Subspace(6, r.basis).contains(unit_vector(6, 5)));
  }
  CHECK_THROWS_AS(h28_A_matrix(SigmaPoint::trivial(sigma_pattern(entry("h9").algebra()))), std::invalid_argument);
}

TEST_CASE("equivariance and scaling of the symmetry kernel") {
  Sampler s(404);
  const std::vector<std::string> names{"h9", "h10", "h21", "h22", "h28"};
  for (int t = 0; t < 50; ++t) {
    const auto& name = names[s.index(names.size())];
    LieAlgebra L = entry(name).algebra();
    auto Der = derivation_space(L);
    auto D = component_group(L, entry(name).d_generators);
    RatMatrix phi = random_aut0_element(Der, s) * D.elements[s.index(D.order())];
    REQUIRE(is_automorphism(L, phi));
    // Points on the special strata give nonzero kernels to move around.
    SigmaPoint p = random_point(name, s, 0.7);
    RatMatrix g = metric_of(p);
    Subspace k(6, index_of_symmetry(L, g).basis);
    Subspace k2(6, index_of_symmetry(L, phi.transpose() * g * phi).basis);
    RatMatrix pinv = *inverse(phi);
    std::vector<RatVector> moved;
    for (const auto& v : k.basis()) moved.push_back(pinv * v);
    CHECK(k2 == Subspace(6, moved));
    Rational lambda = s.positive_rational(9, 4);
    CHECK(Subspace(6, index_of_symmetry(L, lambda * g).basis) == k);
  }
}

TEST_CASE("theorem verifier") {
  for (const auto& name : theorem_names()) {
    auto reps = theorem_verifier(name, 25, 2024);
    REQUIRE_FALSE(reps.empty());
    for (const auto& r : reps) {
      // On s0 = s2 = 0 the vector e3 is always in s, so the "index 0 off Q = 0" claim fails.
      if (r.branch.find("Q != 0") != std::string::npos) {
        CHECK_FALSE(r.pass);
        CHECK(r.counterexample.value_or("").find("index 1, expected 0") != std::string::npos);
        continue;
      }
      CHECK_MESSAGE(r.pass, r.theorem << " / " << r.branch << ": " << r.counterexample.value_or(""));
      CHECK(r.samples == 25);
      CHECK(r.controls >= 5);
    }
  }
  CHECK_THROWS_AS(theorem_verifier("h99", 5, 1), std::invalid_argument);
  auto j = theorem_verifier("h9", 5, 1).front().to_json();
  CHECK(j["pass"] == true);
  CHECK_FALSE(j.contains("counterexample"));
}

TEST_CASE("e3 is a symmetry vector of h21 exactly when s0 = s2 = 0") {
  // e3 is central and [h,h] = <e4,e5,e6>, so e3 lies in s iff g(e3, e4) = s0 s1 + s2 s3 and
  // g(e3, e5) = s2 s4 both vanish.
  LieAlgebra L = entry("h21").algebra();
  Sampler s(99);
  for (int t = 0; t < 40; ++t) {
    SigmaPoint p = random_point("h21", s, 0.5);
    if (t % 2) p = p.with({}, {"s0", "s2"});
    Subspace k = symmetry_oracle(L, metric_of(p));
    bool want = p[0].is_zero() && p[2].is_zero();
    CHECK(k.contains(unit_vector(6, 2)) == want);
  }
}
