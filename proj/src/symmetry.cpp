#include "nilmetriq/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "nilmetriq/catalog.hpp"
#include "nilmetriq/linalg.hpp"

namespace nilmetriq {

Rational symmetry_form(const LieAlgebra& L, const RatMatrix& g, const RatVector& x, const RatVector& y,
                       const RatVector& z) {
  return dot(L.bracket(x, y), g * z) + dot(L.bracket(x, z), g * y) + dot(L.bracket(y, z), g * x);
}

RatMatrix symmetry_system(const LieAlgebra& L, const RatMatrix& g) {
  const std::size_t n = L.dim();
  if (g.rows() != n || !g.is_symmetric()) throw std::invalid_argument("metric must be a symmetric n x n matrix");
  RatMatrix m(n * (n - 1) / 2, n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k, ++row) {
      RatVector gik = g * L.bracket_basis(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        Rational v = dot(L.bracket_basis(i, j), g.col(k)) + gik[j] + dot(L.bracket_basis(j, k), g.col(i));
        m(row, j) = v;
      }
    }
  return m;
}

SymmetryResult index_of_symmetry(const LieAlgebra& L, const RatMatrix& g) {
  if (!is_positive_definite(g)) throw std::invalid_argument("metric must be positive definite");
  Subspace s(L.dim(), kernel_basis(symmetry_system(L, g)));
  Subspace z = center(L);
  SymmetryResult out;
  out.index = s.dim();
  out.basis = s.basis();
  out.central = z.contains(s);
  out.central_intersection_dim = s.intersect(z).dim();
  return out;
}

RatMatrix h28_A_matrix(const SigmaPoint& p) {
  if (p.pattern().parameter_count() != 10) throw std::invalid_argument("expected a point of the h28 cross-section");
  const auto& s = p.values();
  Rational a = s[5] * s[5] * s[6] + s[3] * s[5] * s[8] - (s[1] * s[2] + s[3] * s[4]) * s[9];
  Rational b = s[5] * s[5] * s[7] + s[4] * s[5] * s[8] - (s[2] * s[2] + s[4] * s[4] + s[3] * s[5]) * s[9];
  Rational c = s[4] * s[5] * s[6] + s[3] * s[5] * s[7] - (s[0] * s[0] + s[1] * s[1] + s[3] * s[3]) * s[9];
  Rational alpha = Rational(2) * s[5] * s[5] * s[8] - Rational(2) * s[4] * s[5] * s[9];
  Rational beta = Rational(2) * s[4] * s[5] * s[7] - Rational(2) * (s[1] * s[2] + s[3] * s[4]) * s[9];
  Rational gamma = Rational(2) * s[3] * s[5] * s[6];
  return RatMatrix{{a, b, alpha}, {c, beta, b}, {gamma, c, a}};
}

nlohmann::json BranchReport::to_json() const {
  nlohmann::json j{{"theorem", theorem}, {"algebra", algebra}, {"branch", branch},
                   {"samples", samples}, {"controls", controls}, {"pass", pass}};
  if (counterexample) j["counterexample"] = *counterexample;
  return j;
}

namespace {

using Vals = std::vector<Rational>;
using Gens = std::vector<RatVector>;
using Check = std::function<std::optional<std::string>(const Vals&, const SymmetryResult&)>;

struct Branch {
  std::string algebra, name;
  std::function<Vals(Sampler&)> sample;
  Check check;
  std::string control_algebra;
  std::function<Vals(Sampler&)> control;
  // True when the control visibly contradicts the branch claim.
  std::function<bool(const Vals&, const SymmetryResult&)> control_detected;
};

RatVector e(std::initializer_list<std::pair<int, Rational>> terms) {
  RatVector v(6);
  for (const auto& [i, c] : terms) v[i - 1] += c;
  return v;
}

const SigmaPattern& pattern_of(const std::string& name) {
  static std::map<std::string, SigmaPattern> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, sigma_pattern(find_entry(builtin_catalog(), name)->algebra())).first;
  return it->second;
}

// Positive diagonal parameters; off-diagonal ones are zero with probability zero_p.
Vals random_values(const std::string& name, Sampler& s, double zero_p) {
  const auto& pat = pattern_of(name);
  Vals v(pat.parameter_count());
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = pat.is_diagonal_parameter(k) ? s.positive_rational(9, 5) : (s.coin(zero_p) ? Rational(0) : s.nonzero_rational(9, 5));
  return v;
}

Vals until(Sampler& s, const std::function<Vals(Sampler&)>& gen, const std::function<bool(const Vals&)>& ok) {
  for (int t = 0; t < 1000; ++t) {
    Vals v = gen(s);
    if (ok(v)) return v;
  }
  throw std::logic_error("could not sample a point with the requested property");
}

std::string describe(const Vals& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << SigmaPattern::parameter_name(k) << "=" << v[k].str();
  return os.str();
}

Check expect(std::size_t index, std::optional<bool> central,
             std::function<std::vector<RatVector>(const Vals&)> generators = {}, std::string proper_in_center_of = "") {
  std::size_t zdim = proper_in_center_of.empty() ? 0 : center(find_entry(builtin_catalog(), proper_in_center_of)->algebra()).dim();
  return [=](const Vals& v, const SymmetryResult& r) -> std::optional<std::string> {
    if (r.index != index) return "index " + std::to_string(r.index) + ", expected " + std::to_string(index);
    if (central && r.central != *central) return std::string("centrality ") + (r.central ? "true" : "false");
    if (generators) {
      auto gens = generators(v);
      Subspace want(6, gens);
      if (want.dim() != index || !(want == Subspace(6, r.basis))) return "stated generators do not span s";
    }
    if (zdim && r.index >= zdim) return "s is not properly contained in the center";
    return std::nullopt;
  };
}

std::function<bool(const Vals&, const SymmetryResult&)> index_differs(std::size_t index) {
  return [=](const Vals&, const SymmetryResult& r) { return r.index != index; };
}

Rational sq(const Rational& x) { return x * x; }

// h21 hypersurface for s2 != 0 and the s0 = s2 = 0 quartic.
Rational h21_P(const Vals& s) {
  return s[0] * s[2] * sq(s[4]) * s[5] - sq(s[0]) * s[1] * s[4] * s[6] - s[0] * s[2] * s[3] * s[4] * s[6] -
         s[0] * sq(s[1]) * s[2] * s[7] + sq(s[0]) * s[1] * s[3] * s[7] - s[1] * sq(s[2]) * s[3] * s[7] +
         s[0] * s[2] * sq(s[3]) * s[7];
}

Rational h21_Q(const Vals& s) {
  Rational s1s = sq(s[1]), s3s = sq(s[3]);
  return sq(sq(s[4])) * sq(s[5]) - Rational(2) * s[3] * pow(s[4], 3) * s[5] * s[6] + s3s * sq(s[4]) * sq(s[6]) +
         sq(s1s + s3s) * sq(s[7]) -
         Rational(2) * ((s1s - s3s) * sq(s[4]) * s[5] + (s1s * s[3] + s3s * s[3]) * s[4] * s[6]) * s[7];
}

bool h21_s6_special(const Vals& s) { return s[6] * s[4] == s[3] * s[7]; }
bool h21_s5_special(const Vals& s) { return s[5] * sq(s[4]) == sq(s[1]) * s[7]; }

std::vector<Branch> branches_for(const std::string& theorem) {
  std::vector<Branch> out;
  if (theorem == "trivial-index") {
    for (const char* name : {"h11", "h12", "h13", "h14", "h18", "h19+", "h23", "h24", "h25", "h26-", "h27", "h29",
                             "h30", "h31", "h32"}) {
      Branch b;
      b.algebra = name;
      b.name = "every metric";
      std::string nm = name;
      b.sample = [nm](Sampler& s) { return random_values(nm, s, 0.5); };
      b.check = expect(0, std::nullopt);
      // The same claim fails on h9 once s2 = 0.
      b.control_algebra = "h9";
      b.control = [](Sampler& s) {
        Vals v = random_values("h9", s, 0.3);
        v[2] = 0;
        return v;
      };
      b.control_detected = index_differs(0);
      out.push_back(std::move(b));
    }
    return out;
  }
  if (theorem == "h9") {
    auto zero = [](Sampler& s) {
      Vals v = random_values("h9", s, 0.3);
      v[2] = 0;
      return v;
    };
    auto nonzero = [](Sampler& s) {
      Vals v = random_values("h9", s, 0.3);
      v[2] = s.nonzero_rational();
      return v;
    };
    out.push_back({"h9", "s2 = 0", zero, expect(1, true, [](const Vals&) { return Gens{e({{4, 1}})}; }, "h9"),
                   "h9", nonzero, index_differs(1)});
    out.push_back({"h9", "s2 != 0", nonzero, expect(0, std::nullopt), "h9", zero, index_differs(0)});
    return out;
  }
  if (theorem == "h22") {
    auto on = [](Sampler& s) {
      Vals v = random_values("h22", s, 0.3);
      v[1] = v[3] = 0;
      return v;
    };
    auto off = [](Sampler& s) {
      Vals v = random_values("h22", s, 0.3);
      int which = static_cast<int>(s.index(3));
      if (which != 1) v[1] = s.nonzero_rational();
      if (which != 0) v[3] = s.nonzero_rational();
      return v;
    };
    out.push_back({"h22", "s1 = s3 = 0", on, expect(1, true, [](const Vals&) { return Gens{e({{3, 1}})}; }, "h22"),
                   "h22", off, index_differs(1)});
    out.push_back({"h22", "s1 != 0 or s3 != 0", off, expect(0, std::nullopt), "h22", on, index_differs(0)});
    return out;
  }
  if (theorem == "h10") {
    auto on = [](Sampler& s) {
      Vals v = random_values("h10", s, 0.3);
      v[3] = v[1] * v[4] / v[2];
      return v;
    };
    auto off = [](Sampler& s) {
      return until(s, [](Sampler& t) { return random_values("h10", t, 0.3); },
                   [](const Vals& v) { return v[3] != v[1] * v[4] / v[2]; });
    };
    auto Y = [](const Vals& s) {
      return Gens{e({{2, 1},
                            {3, -s[1] / s[2]},
                            {5, sq(s[0]) * s[4] / (sq(s[2]) * s[5])},
                            {6, -(sq(s[0]) * sq(s[2]) + sq(s[0]) * sq(s[4])) / (sq(s[2]) * sq(s[5]))}})};
    };
    out.push_back({"h10", "s3 = s1 s4 / s2", on, expect(1, false, Y), "h10", off, index_differs(1)});
    out.push_back({"h10", "s3 != s1 s4 / s2", off, expect(0, std::nullopt), "h10", on, index_differs(0)});
    return out;
  }
  if (theorem == "h21") {
    auto base = [](Sampler& s) { return random_values("h21", s, 0.25); };
    // Case 1: s2 != 0 on the hypersurface P = 0.
    auto c1 = [base](Sampler& s) {
      Vals v = base(s);
      v[2] = s.nonzero_rational();
      if (s.coin(0.3)) {
        v[0] = 0;
        v[3] = 0;
      } else {
        v[0] = s.nonzero_rational();
        Vals w = v;
        w[5] = 0;
        // P is affine in s5 with slope s0 s2 s4^2.
        v[5] = -h21_P(w) / (v[0] * v[2] * sq(v[4]));
      }
      return v;
    };
    auto c1_gens = [](const Vals& s) {
      if (s[0].is_zero())
        return Gens{e({{2, 1},
                              {3, (sq(s[4]) * s[5] - sq(s[1]) * s[7]) / (s[2] * s[4] * s[7])},
                              {5, -s[5] / s[7]},
                              {6, s[5] * s[6] / sq(s[7])}})};
      Rational s0 = s[0], s1 = s[1], s2 = s[2], s3 = s[3], s4 = s[4], s6 = s[6], s7 = s[7];
      Rational alpha = s0 * pow(s1, 3) / (s2 * pow(s4, 3)) + Rational(2) * sq(s1) * s3 / pow(s4, 3) -
                       sq(s0) * sq(s1) * s3 / (sq(s2) * pow(s4, 3)) - Rational(2) * s0 * s1 * sq(s3) / (s2 * pow(s4, 3)) +
                       s1 * s2 * sq(s3) / (s0 * pow(s4, 3)) - pow(s3, 3) / pow(s4, 3) + s0 * s1 * s4 / (s2 * sq(s7)) +
                       sq(s1) * s6 / (sq(s4) * s7) + sq(s0) * sq(s1) * s6 / (sq(s2) * sq(s4) * s7) +
                       s0 * s1 * s3 * s6 / (s2 * sq(s4) * s7) + s1 * s2 * s3 * s6 / (s0 * sq(s4) * s7);
      return Gens{
          e({{2, 1},
             {3, -(sq(s0) * s1 * s4 * s6 - (sq(s0) * s1 + s1 * sq(s2)) * s3 * s7) / (s0 * sq(s2) * s4 * s7)},
             {4, -(s0 * s1 + s2 * s3) / (s2 * s4)},
             {5, -(s0 * sq(s1) * s2 - s0 * s2 * sq(s3) - (sq(s0) * s1 - s1 * sq(s2)) * s3) / (s0 * s2 * sq(s4))},
             {6, alpha}})};
    };
    auto c1_off = [base](Sampler& s) {
      return until(s, base, [](const Vals& v) { return !v[2].is_zero() && !h21_P(v).is_zero(); });
    };
    // Case 2: s2 = 0, s0 != 0, s6 = s3 s7 / s4.
    auto c2 = [base](Sampler& s) {
      Vals v = base(s);
      v[2] = 0;
      v[0] = s.nonzero_rational();
      v[6] = v[3] * v[7] / v[4];
      return v;
    };
    auto c2_gens = [](const Vals& s) {
      return Gens{e({{3, (sq(s[4]) * s[5] - sq(s[1]) * s[7]) / (s[0] * s[1] * s[7])},
                            {4, 1},
                            {5, -s[3] / s[4]},
                            {6, -(pow(s[4], 4) + sq(s[4]) * s[5] * s[7] - sq(s[3]) * sq(s[7])) / (sq(s[4]) * sq(s[7]))}})};
    };
    auto c2_off = [base](Sampler& s) {
      return until(s, [base](Sampler& t) {
        Vals v = base(t);
        v[2] = 0;
        v[0] = t.nonzero_rational();
        return v;
      }, [](const Vals& v) { return !h21_s6_special(v); });
    };
    // Case 3: s0 = s2 = 0, s6 != s3 s7 / s4, on Q = 0. Rational points come from
    // s3 s7 (s4 s6 - s3 s7) = t^2, or s3 = 0 with the double root in s5.
    auto c3 = [base](Sampler& s) {
      Vals v = base(s);
      v[0] = v[2] = 0;
      if (s.coin(0.25)) {
        v[3] = 0;
        v[6] = s.nonzero_rational();
        v[5] = sq(v[1]) * v[7] / sq(v[4]);
        return v;
      }
      v[3] = s.nonzero_rational();
      Rational t = s.nonzero_rational();
      v[6] = (sq(t) / (v[3] * v[7]) + v[3] * v[7]) / v[4];
      Rational sign = s.coin() ? Rational(1) : Rational(-1);
      v[5] = (v[3] * pow(v[4], 3) * v[6] + (sq(v[1]) - sq(v[3])) * sq(v[4]) * v[7] + sign * Rational(2) * sq(v[4]) * v[1] * t) /
             pow(v[4], 4);
      return v;
    };
    auto c3_gens = [](const Vals& s) {
      Rational s1 = s[1], s3 = s[3], s4 = s[4], s5 = s[5], s6 = s[6], s7 = s[7];
      Rational q = sq(s1) + sq(s3);
      Rational n1 = sq(s4) * s5 + s3 * s4 * s6 - q * s7;
      Rational n2 = sq(s4) * s5 * s6 - s3 * s4 * sq(s6) - (Rational(2) * s3 * s4 * s5 - q * s6) * s7;
      Rational na = pow(s4, 4) * s5 - s3 * pow(s4, 3) * s6 + sq(s4) * s5 * sq(s6) - s3 * s4 * pow(s6, 3) - q * s5 * sq(s7) +
                    (sq(s4) * sq(s5) - s3 * s4 * s5 * s6 - (sq(s1) - sq(s3)) * sq(s4) + q * sq(s6)) * s7;
      Rational da = Rational(2) * sq(s4) * s6 * sq(s7) - Rational(2) * s3 * s4 * pow(s7, 3);
      return Gens{e({{3, 1}}), e({{2, 1},
                                         {4, -n1 / (Rational(2) * (sq(s4) * s6 - s3 * s4 * s7))},
                                         {5, -n2 / (Rational(2) * (sq(s4) * s6 * s7 - s3 * s4 * sq(s7)))},
                                         {6, na / da}})};
    };
    auto c3_off = [base](Sampler& s) {
      return until(s, [base](Sampler& t) {
        Vals v = base(t);
        v[0] = v[2] = 0;
        return v;
      }, [](const Vals& v) { return !h21_s6_special(v) && !h21_Q(v).is_zero(); });
    };
    // Cases 4-6 share s0 = s2 = 0 and s6 = s3 s7 / s4.
    auto line = [base](Sampler& s) {
      Vals v = base(s);
      v[0] = v[2] = 0;
      v[6] = v[3] * v[7] / v[4];
      return v;
    };
    auto c4 = [line](Sampler& s) { return until(s, line, [](const Vals& v) { return !h21_s5_special(v); }); };
    auto c5 = [line](Sampler& s) {
      Vals v = line(s);
      v[3] = s.nonzero_rational();
      v[6] = v[3] * v[7] / v[4];
      v[5] = sq(v[1]) * v[7] / sq(v[4]);
      return v;
    };
    auto c5_gens = [](const Vals& s) {
      return Gens{e({{3, 1}}),
                         e({{4, 1},
                            {5, -s[3] / s[4]},
                            {6, -(pow(s[4], 4) + (sq(s[1]) - sq(s[3])) * sq(s[7])) / (sq(s[4]) * sq(s[7]))}})};
    };
    auto c6 = [line](Sampler& s) {
      Vals v = line(s);
      v[3] = 0;
      v[6] = 0;
      v[5] = sq(v[1]) * v[7] / sq(v[4]);
      return v;
    };
    auto c6_gens = [](const Vals& s) {
      return Gens{e({{2, 1}, {5, -sq(s[1]) / sq(s[4])}}), e({{3, 1}}),
                         e({{4, 1}, {6, -(pow(s[4], 4) + sq(s[1]) * sq(s[7])) / (sq(s[4]) * sq(s[7]))}})};
    };
    // Each case's hypothesis is one cell of the tree s2 / s0 / s6 / s5 / s3; cases 1 and 3
    // also claim the index is 0 off their hypersurface, checked as separate branches.
    out.push_back({"h21", "case 1: s2 != 0, P = 0", c1, expect(1, false, c1_gens), "h21", c1_off, index_differs(1)});
    out.push_back({"h21", "case 1: s2 != 0, P != 0", c1_off, expect(0, std::nullopt), "h21", c1, index_differs(0)});
    out.push_back({"h21", "case 2: s2 = 0, s0 != 0, s6 = s3 s7/s4", c2, expect(1, false, c2_gens), "h21", c2_off,
                   index_differs(1)});
    out.push_back({"h21", "case 3: s2 = s0 = 0, s6 != s3 s7/s4, Q = 0", c3, expect(2, false, c3_gens), "h21", c3_off,
                   index_differs(2)});
    out.push_back({"h21", "case 3: s2 = s0 = 0, s6 != s3 s7/s4, Q != 0", c3_off, expect(0, std::nullopt), "h21", c3,
                   index_differs(0)});
    out.push_back({"h21", "case 4: s2 = s0 = 0, s6 = s3 s7/s4, s5 != s1^2 s7/s4^2", c4,
                   expect(1, true, [](const Vals&) { return Gens{e({{3, 1}})}; }), "h21", c5, index_differs(1)});
    out.push_back({"h21", "case 5: as case 4 with s5 = s1^2 s7/s4^2, s3 != 0", c5, expect(2, false, c5_gens), "h21", c4,
                   index_differs(2)});
    out.push_back({"h21", "case 6: as case 5 with s3 = 0", c6, expect(3, false, c6_gens), "h21", c5, index_differs(3)});
    out.push_back({"h21", "case 7: s2 = 0, s0 != 0, s6 != s3 s7/s4", c2_off, expect(0, std::nullopt), "h21", c2,
                   index_differs(0)});
    return out;
  }
  if (theorem == "h28-rank" || theorem == "h28-center") {
    // Half generic, half on the stratum s1 = s4 = s6 = s8 = 0, b = 0 where the index jumps.
    auto sample = [](Sampler& s) {
      Vals v = random_values("h28", s, 0.4);
      if (s.coin()) {
        v[1] = v[4] = v[6] = v[8] = 0;
        v[7] = (sq(v[2]) + v[3] * v[5]) * v[9] / sq(v[5]);
      }
      return v;
    };
    auto table_rows = [](Sampler& s) {
      Vals v = SigmaPoint::trivial(pattern_of("h28")).values();
      switch (s.index(3)) {
        case 0: break;
        case 1:
          v[3] = 2;
          v[4] = 1;
          v[5] = 2;
          v[7] = Rational(5, 4);
          v[8] = Rational(1, 2);
          break;
        default:
          v[3] = 1;
          v[7] = 2;
      }
      return v;
    };
    if (theorem == "h28-rank") {
      Check rank_check = [](const Vals& v, const SymmetryResult& r) -> std::optional<std::string> {
        std::size_t rk = rank(h28_A_matrix(SigmaPoint(pattern_of("h28"), v)));
        if (3 - rk != r.index) return "3 - rank A = " + std::to_string(3 - rk) + ", kernel dimension " + std::to_string(r.index);
        return std::nullopt;
      };
      // Control: metrics of positive index refute the naive claim "index 0".
      out.push_back({"h28", "index = 3 - rank A", sample, rank_check, "h28", table_rows, index_differs(0)});
    } else {
      Check center_check = [](const Vals&, const SymmetryResult& r) -> std::optional<std::string> {
        if (r.central_intersection_dim != 0) return std::string("s meets the center");
        return std::nullopt;
      };
      // Control: on h9 with s2 = 0 the same test does see a central vector.
      out.push_back({"h28", "Z(h) and s meet only in 0", sample, center_check, "h9",
                     [](Sampler& s) {
                       Vals v = random_values("h9", s, 0.3);
                       v[2] = 0;
                       return v;
                     },
                     [](const Vals&, const SymmetryResult& r) { return r.central_intersection_dim != 0; }});
    }
    return out;
  }
  throw std::invalid_argument("unknown theorem " + theorem);
}

}  // namespace

std::vector<std::string> theorem_names() {
  return {"trivial-index", "h9", "h22", "h10", "h21", "h28-rank", "h28-center"};
}

std::vector<BranchReport> theorem_verifier(const std::string& theorem, std::size_t samples, std::uint64_t seed) {
  auto branches = branches_for(theorem);
  std::vector<BranchReport> out;
  const std::size_t controls = std::max<std::size_t>(5, samples / 2);
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const Branch& br = branches[b];
    BranchReport rep{theorem, br.algebra, br.name, 0, 0, true, std::nullopt};
    LieAlgebra L = find_entry(builtin_catalog(), br.algebra)->algebra();
    Sampler s(seed, 2 * b);
    for (std::size_t i = 0; i < samples && rep.pass; ++i) {
      Vals v = br.sample(s);
      auto r = index_of_symmetry(L, metric_of(SigmaPoint(pattern_of(br.algebra), v)));
      ++rep.samples;
      if (auto msg = br.check(v, r)) {
        rep.pass = false;
        rep.counterexample = br.algebra + " [" + br.name + "] at " + describe(v) + ": " + *msg;
      }
    }
    if (br.control) {
      LieAlgebra C = find_entry(builtin_catalog(), br.control_algebra)->algebra();
      Sampler cs(seed, 2 * b + 1);
      for (std::size_t i = 0; i < controls && rep.pass; ++i) {
        Vals v = br.control(cs);
        auto r = index_of_symmetry(C, metric_of(SigmaPoint(pattern_of(br.control_algebra), v)));
        ++rep.controls;
        if (!br.control_detected(v, r)) {
          rep.pass = false;
          rep.counterexample = "control " + br.control_algebra + " at " + describe(v) + " was not distinguished";
        }
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace nilmetriq
