#include "nilmetriq/exceptional.hpp"

namespace nilmetriq {

std::vector<ExceptionalPair> exceptional_pairs(const Rational& r, const QuadraticSurd& w) {
  const long d = w.d();
  auto q = [&](const Rational& x) { return QuadraticSurd::rational(x, d); };
  auto id = [&] {
    SurdMatrix m(6, 6, d);
    for (std::size_t i = 0; i < 6; ++i) m(i, i) = q(1);
    return m;
  };
  Rational ri = inverse(r);
  QuadraticSurd w_over_r = w * q(ri);

  std::vector<ExceptionalPair> out;
  {
    SurdMatrix phi(6, 6, d);
    phi(0, 1) = q(-r);
    phi(1, 0) = q(-ri);
    phi(2, 2) = q(1);
    phi(3, 2) = q(-1);
    phi(3, 3) = q(-1);
    phi(4, 5) = q(r);
    phi(5, 4) = q(ri);
    SurdMatrix s = id();
    s(1, 0) = w_over_r;
    s(3, 2) = q(Rational(1, 2));
    s(4, 4) = q(ri);
    out.push_back({"h13", phi, s});
  }
  {
    SurdMatrix phi(6, 6, d);
    phi(0, 2) = q(r);
    phi(1, 1) = q(1);
    phi(2, 0) = q(ri);
    phi(3, 4) = q(ri);
    phi(4, 3) = q(r);
    phi(5, 5) = q(1);
    SurdMatrix s = id();
    s(1, 0) = w_over_r;
    s(2, 1) = w;
    s(3, 3) = q(r * r);
    s(4, 4) = q(r);
    out.push_back({"h19+", phi, s});
  }
  {
    SurdMatrix phi(6, 6, d);
    phi(0, 1) = q(r);
    phi(1, 0) = q(ri);
    phi(2, 2) = q(-1);
    phi(3, 4) = q(-r);
    phi(4, 3) = q(-ri);
    phi(5, 5) = q(-1);
    SurdMatrix s = id();
    s(1, 0) = w_over_r;
    s(3, 3) = q(ri);
    out.push_back({"h26-", phi, s});
  }
  return out;
}

}  // namespace nilmetriq
