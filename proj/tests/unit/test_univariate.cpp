#include "doctest.h"
#include "oracles.hpp"
#include "poissonz/univariate.hpp"

using namespace poissonz;

namespace {

// Product of (x - r) over the given roots.
UPoly from_roots(const std::vector<Rat>& roots) {
  UPoly p = UPoly::constant(1);
  for (const auto& r : roots) p = p * (UPoly::x() - UPoly::constant(r));
  return p;
}

}  // namespace

TEST_CASE("division and gcd") {
  UPoly f = from_roots({1, 2, Rat(-1, 3)});
  UPoly g = from_roots({2, 5});
  auto [q, r] = divmod(f, g);
  CHECK(q * g + r == f);
  CHECK(r.degree() < g.degree());
  CHECK(gcd(f, g) == from_roots({2}));
  CHECK(gcd(UPoly(), UPoly()).is_zero());
  CHECK_THROWS_AS(divmod(f, UPoly()), Error);
}

TEST_CASE("square-free part drops repeated roots") {
  UPoly f = from_roots({1, 1, 1, 3, 3, 4});
  CHECK(squarefree_part(f) == from_roots({1, 3, 4}));
}

TEST_CASE("interpolation reproduces the polynomial") {
  UPoly f(Vec{3, 0, Rat(1, 2), -1});
  Vec xs{0, 1, 2, -5}, ys;
  for (const auto& x : xs) ys.push_back(f.evaluate(x));
  CHECK(interpolate(xs, ys) == f);
}

TEST_CASE("characteristic polynomial against the determinant") {
  Sampler s(2, 6);
  for (int trial = 0; trial < 6; ++trial) {
    Mat m = oracle::random_matrix(s, 4, 4);
    UPoly cp = charpoly(m);
    CHECK(cp.degree() == 4);
    for (Rat x : {Rat(0), Rat(1), Rat(-3), Rat(7, 2)}) {
      Mat shifted = x * Mat::identity(4) - m;
      CHECK(cp.evaluate(x) == oracle::leibniz_det(shifted));
    }
    // Cayley-Hamilton.
    CHECK(cp.evaluate(m).is_zero());
  }
}

TEST_CASE("rational roots with leftovers") {
  UPoly f = from_roots({Rat(-2, 3), 5, 5}) * UPoly(Vec{2, 0, 1});  // times x^2 + 2
  auto rr = rational_roots(f);
  CHECK(rr.roots == std::vector<Rat>{Rat(-2, 3), 5});
  CHECK(rr.leftover_factor_degrees == std::vector<int>{2});
  CHECK(rr.complete);
  CHECK(rational_roots(UPoly::constant(4)).roots.empty());
}
