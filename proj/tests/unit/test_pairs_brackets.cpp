#include "doctest.h"
#include "oracles.hpp"
#include "poissonz/brackets.hpp"
#include "poissonz/pairs.hpp"

using namespace poissonz;

namespace {

Vec unit_vec(std::size_t n, std::size_t i, const Rat& c = 1) {
  Vec v(n);
  v[i] = c;
  return v;
}

// The torus pair on sl2, basis (h; e, f).
const SymmetricPair& sl2_pair() {
  static const SymmetricPair p = build_symmetric_pair("AIII:1,1");
  return p;
}

Poly v3(std::size_t i) { return Poly::variable(3, i); }

Vec bracket_t(const SymmetricPair& p, const BracketParam& t, std::size_t i, std::size_t j) {
  auto g = structure_constants_t(p, t);
  return g.bracket(unit_vec(p.dim(), i), unit_vec(p.dim(), j));
}

Poly random_poly(Sampler& s, std::size_t n, unsigned max_deg) {
  Poly f = Poly::constant(n, s.coordinate());
  for (int t = 0; t < 6; ++t) {
    Poly m = Poly::constant(n, s.nonzero());
    unsigned d = 1 + static_cast<unsigned>(s.below(max_deg));
    for (unsigned k = 0; k < d; ++k) m = m * Poly::variable(n, s.below(n));
    f += m;
  }
  return f;
}

}  // namespace

TEST_CASE("pair keys") {
  CHECK(parse_pair_key("AI:3").key == "AI:3");
  auto d = parse_pair_key("DIIIodd:3");
  CHECK(d.family == PairFamily::BDI);
  CHECK(d.p == 5);
  CHECK(d.q == 1);
  CHECK(parse_pair_key("DBL:sl:3").dbl.n == 3);
  CHECK(parse_pair_key("DBL:sl3").dbl.family == 'A');
  for (const char* bad : {"", "AI", "AI:x", "XYZ:2", "AIII:1", "BDI:1,2,3", "AI:-3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_pair_key(bad), Error);
  }
}

TEST_CASE("pair dimensions and ranks") {
  auto ai3 = build_symmetric_pair("AI:3");
  CHECK(ai3.dim_g0() == 3);
  CHECK(ai3.dim_g1() == 5);
  CHECK(ai3.rank_g == 2);
  CHECK(ai3.rank_g0 == 1);
  CHECK_FALSE(ai3.inner());

  auto aiii = build_symmetric_pair("AIII:1,2");
  CHECK(aiii.dim_g0() == 4);
  CHECK(aiii.dim_g1() == 4);
  CHECK(aiii.rank_g0 == 2);
  CHECK(aiii.inner());

  auto ai4 = build_symmetric_pair("AI:4");
  CHECK(ai4.dim_g1() == 9);
  CHECK(ai4.rank_g == 3);
  CHECK(ai4.rank_g0 == 2);

  for (std::size_t i = 0; i < ai3.dim(); ++i) CHECK(ai3.sigma_signs[i] == (i < ai3.n0 ? 1 : -1));
}

TEST_CASE("contracted brackets on sl2") {
  const auto& p = sl2_pair();
  const std::size_t h = 0, e = 1, f = 2;
  auto zero = BracketParam::finite(0), inf = BracketParam::infinity();
  CHECK(is_zero(bracket_t(p, zero, e, f)));
  CHECK(bracket_t(p, zero, h, e) == unit_vec(3, e, 2));
  CHECK(is_zero(bracket_t(p, inf, h, e)));
  CHECK(bracket_t(p, inf, e, f) == unit_vec(3, h));
  CHECK(bracket_t(p, BracketParam::finite(3), e, f) == unit_vec(3, h, 3));
}

TEST_CASE("Poisson brackets on sl2") {
  const auto& p = sl2_pair();
  Poly h = v3(0), ef = v3(1) * v3(2);
  for (auto t : {BracketParam::finite(0), BracketParam::finite(1), BracketParam::infinity()})
    CHECK(poisson_bracket_poly(p, h, ef, t).is_zero());
  CHECK(poisson_bracket(p.g, v3(1), v3(2)) == h);
}

TEST_CASE("Lie-Poisson bracket agrees with the pointwise definition") {
  auto p = build_symmetric_pair("AI:3");
  Sampler s(31, 7);
  for (int k = 0; k < 4; ++k) {
    Poly f = random_poly(s, p.dim(), 3), g = random_poly(s, p.dim(), 3);
    Poly b = poisson_bracket(p.g, f, g);
    for (int j = 0; j < 3; ++j) {
      Vec xi = s.point(p.dim());
      CHECK(b.evaluate(xi) == oracle::lie_poisson_at(p.g, f, g, xi));
    }
  }
}

TEST_CASE("compatibility of the contracted brackets") {
  auto p = build_symmetric_pair("AI:3");
  auto rep = jacobi_compatibility_check(
      p, {BracketParam::finite(0), BracketParam::finite(1), BracketParam::infinity()}, {{1, 1}, {2, 5}});
  CHECK(rep.pass);
  CHECK_FALSE(rep.failure);
}

TEST_CASE("ranks of the Poisson tensors") {
  auto p = build_symmetric_pair("AI:3");
  Sampler s(5);
  Vec xi = s.point(p.dim());
  CHECK(rank(tensor_at(p, xi, BracketParam::finite(1)).matrix) == 6);
  CHECK(rank(tensor_at(p, xi, BracketParam::infinity()).matrix) == 4);

  auto rr = restricted_rank_condition(p, xi);
  CHECK(rr.rank_inf == 4);
  CHECK(rr.dim_ker_inf == 4);
  CHECK(rr.rank0_on_ker == 2);
  CHECK(rr.passes);

  auto q = build_symmetric_pair("AIII:1,2");
  Vec eta = s.point(q.dim());
  auto r2 = restricted_rank_condition(q, eta);
  CHECK(r2.dim_ker_inf == q.dim_g0());
  CHECK(r2.rank0_on_ker == 2);
  CHECK(r2.passes);
}

TEST_CASE("scaling map") {
  const auto& p = sl2_pair();
  Poly f = v3(0) * v3(0) + 4 * (v3(1) * v3(2));
  Rat s(3, 2);
  CHECK(phi_s_map(f, s, p) == v3(0) * v3(0) + (4 * s * s) * (v3(1) * v3(2)));
}

TEST_CASE("scaling intertwines the bracket family") {
  auto p = build_symmetric_pair("AI:3");
  Sampler smp(17, 5);
  Rat s(2);
  for (int k = 0; k < 3; ++k) {
    Poly f = random_poly(smp, p.dim(), 2), g = random_poly(smp, p.dim(), 2);
    Poly lhs = poisson_bracket_poly(p, phi_s_map(f, 1 / s, p), phi_s_map(g, 1 / s, p), BracketParam::finite(s * s));
    Poly rhs = phi_s_map(poisson_bracket(p.g, f, g), 1 / s, p);
    CHECK(lhs == rhs);
  }
}
