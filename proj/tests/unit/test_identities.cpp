#include "doctest.h"
#include "oracles.hpp"
#include "poissonz/identities.hpp"

using namespace poissonz;

namespace {

std::size_t index_of(const StructureConstants& g, const std::string& label) {
  const auto& l = g.labels();
  return static_cast<std::size_t>(std::find(l.begin(), l.end(), label) - l.begin());
}

Mat diag(std::vector<Rat> d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool one_scalar(const VerificationReport& r) {
  for (const auto& c : r.checks)
    if (c.name.find("scalar independent") != std::string::npos) return c.pass;
  return false;
}

}  // namespace

TEST_CASE("full identity on sl2 by hand") {
  auto g = build_algebra("sl2");
  std::size_t e = index_of(g, "e"), h = index_of(g, "h"), f = index_of(g, "f");
  REQUIRE((e == 0 && h == 1 && f == 2));
  Poly H = Poly::variable(3, h).pow(2) + 4 * (Poly::variable(3, e) * Poly::variable(3, f));
  InvariantSet set;
  set.polys = {H};
  set.degrees = {2};
  // At xi = (1,1,1): dH = (4, 2, 4); pi(xi) has (e,h) = -2, (e,f) = 1, (h,f) = -2.
  // dH / omega has (e,h) = 4, (e,f) = -2, (h,f) = 4, so the ratio is -2 throughout.
  auto w = kostant_full_at(g, set, Vec{1, 1, 1});
  CHECK(w.pass);
  CHECK(w.left.at({0, 1}) == 4);
  CHECK(w.left.at({0, 2}) == -2);
  CHECK(w.left.at({1, 2}) == 4);
  CHECK(w.right.at({0, 1}) == -2);
  CHECK(w.scalar == -2);
}

TEST_CASE("full identity scalar is constant") {
  for (const char* name : {"sl2", "sl3"}) {
    CAPTURE(name);
    auto g = build_algebra(name);
    auto rep = kostant_full_check(g, basic_invariants(g), 5, 3);
    CHECK(rep.pass());
    CHECK(one_scalar(rep));
  }
}

TEST_CASE("restricted identities") {
  auto inner = build_symmetric_pair("AIII:1,2");
  auto rin = kostant_identity_check(inner, normalized_invariants(inner), KostantVariant::Inner, 5, 1);
  CHECK(rin.pass());
  CHECK(one_scalar(rin));
  auto outer = build_symmetric_pair("AI:3");
  auto rout = kostant_identity_check(outer, normalized_invariants(outer), KostantVariant::Outer, 5, 1);
  CHECK(rout.pass());
  CHECK(one_scalar(rout));
  CHECK_THROWS_AS(kostant_identity_check(outer, normalized_invariants(outer), KostantVariant::Inner, 5, 1), Error);
}

TEST_CASE("left side vanishes where ad x0 is singular on g1") {
  auto p = build_symmetric_pair("AIII:1,2");
  auto set = normalized_invariants(p);
  // Two equal eigenvalues kill a g1 root space.
  Vec x0 = p.g.realization()->coordinates(diag({1, 1, -2}));
  auto w = kostant_identity_at(p, set, p.g.element_to_point(x0), KostantVariant::Inner);
  CHECK(w.left.empty());
  Vec x1 = p.g.realization()->coordinates(diag({1, 2, -3}));
  CHECK_FALSE(kostant_identity_at(p, set, p.g.element_to_point(x1), KostantVariant::Inner).left.empty());
}

TEST_CASE("F against the Pfaffian and the determinant") {
  auto p = build_symmetric_pair("AIII:1,2");
  auto fs = det_ad_factor_check(p, normalized_invariants(p), 5, 1);
  CHECK(fs.report.pass());
  CHECK(fs.points.size() == 5);
}

TEST_CASE("Q factor") {
  auto ai4 = build_symmetric_pair("AI:4");
  auto q = q_factor_check(ai4, normalized_invariants(ai4), 5, 1);
  CHECK(q.report.pass());
  bool has_pf = false;
  for (const auto& c : q.report.checks) has_pf |= c.name == "Q / Pf constant";
  CHECK(has_pf);

  auto ai3 = build_symmetric_pair("AI:3");
  auto q3 = q_factor_check(ai3, normalized_invariants(ai3), 5, 1);
  CHECK(q3.report.pass());
  for (const auto& r : q3.factor) CHECK(r == q3.factor.front());
}

TEST_CASE("left wedge degenerates on the Pfaffian zero set") {
  auto p = build_symmetric_pair("AI:4");
  auto set = normalized_invariants(p);
  std::vector<Poly> even;
  for (std::size_t j = 0; j < set.size(); ++j)
    if (set.eps[j] == 1) even.push_back(bihom_decompose(set.polys[j], p).components.at({set.degrees[j], 0}));
  REQUIRE(even.size() == 2);
  auto g0_rows = [&](const Vec& xi) {
    std::vector<Vec> rows;
    for (const auto& f : even) {
      Vec g = f.gradient(xi);
      rows.emplace_back(g.begin(), g.begin() + static_cast<long>(p.n0));
    }
    return rows;
  };
  std::optional<Poly> pf;
  for (const auto& r : p.g0.realization()->invariants)
    if (r.kind == InvariantRecipe::Kind::Pfaffian) pf = recipe_polynomial(p.g0, r);
  REQUIRE(pf);
  auto h0 = basic_invariants(p.g0);
  Sampler s(6);
  Vec xi0 = s.point(p.n0);
  // Pf is linear in each coordinate that it involves; solve for one of them.
  std::size_t k = 0;
  while (pf->derivative(k).is_zero() || !pf->derivative(k).derivative(k).is_zero()) ++k;
  Rat slope = pf->derivative(k).evaluate(xi0);
  REQUIRE(slope != 0);
  xi0[k] -= pf->evaluate(xi0) / slope;
  REQUIRE(pf->evaluate(xi0) == 0);
  Vec xi(p.dim());
  std::copy(xi0.begin(), xi0.end(), xi.begin());
  CHECK(wedge_minors(g0_rows(xi), p.n0).empty());
  std::vector<Vec> rrows;
  for (const auto& f : h0.polys) rrows.push_back(f.gradient(xi0));
  CHECK_FALSE(wedge_minors(rrows, p.n0).empty());
  // Off the zero set the left side is nonzero.
  Vec generic = s.point(p.n0);
  std::copy(generic.begin(), generic.end(), xi.begin());
  CHECK_FALSE(wedge_minors(g0_rows(xi), p.n0).empty());
}
