#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "poissonz/invariants.hpp"

using namespace poissonz;

namespace {

// Centrality from the pointwise bracket with every coordinate function.
bool central_at_points(const StructureConstants& g, const Poly& f, std::uint64_t seed) {
  Sampler s(seed);
  for (int k = 0; k < 4; ++k) {
    Vec xi = s.point(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (oracle::lie_poisson_at(g, Poly::variable(g.dim(), i), f, xi) != 0) return false;
  }
  return true;
}

Mat jacobian(const std::vector<Poly>& fs, const Vec& xi) {
  Mat m(fs.size(), xi.size());
  for (std::size_t r = 0; r < fs.size(); ++r) {
    Vec g = fs[r].gradient(xi);
    for (std::size_t c = 0; c < xi.size(); ++c) m(r, c) = g[c];
  }
  return m;
}

std::multiset<unsigned> degree_set(const InvariantSet& s) { return {s.degrees.begin(), s.degrees.end()}; }

}  // namespace

TEST_CASE("basic invariants are central and independent") {
  for (const char* name : {"sl2", "sl3", "so4", "so5", "sp4"}) {
    CAPTURE(name);
    auto g = build_algebra(name);
    auto set = basic_invariants(g);
    CHECK(set.size() == g.rank());
    for (const auto& f : set.polys) CHECK(central_at_points(g, f, 3));
    Sampler s(4);
    Vec xi = s.point(g.dim());
    CHECK(rank(jacobian(set.polys, xi)) == set.size());
    unsigned sum = 0;
    for (auto d : set.degrees) sum += d;
    CHECK(2 * sum == g.dim() + g.rank());
  }
}

TEST_CASE("known degree patterns") {
  auto sl2 = build_algebra("sl2");
  auto s2 = basic_invariants(sl2);
  REQUIRE(s2.size() == 1);
  CHECK(make_primitive(s2.polys[0]).to_text(sl2.labels()) == "4*e*f + 1*h^2");
  CHECK(degree_set(basic_invariants(build_algebra("sl3"))) == std::multiset<unsigned>{2, 3});
  CHECK(degree_set(basic_invariants(build_algebra("so4"))) == std::multiset<unsigned>{2, 2});
  CHECK(degree_set(basic_invariants(build_algebra("so5"))) == std::multiset<unsigned>{2, 4});
}

TEST_CASE("centrality defect flags non-invariants") {
  auto g = build_algebra("sl2");
  CHECK_FALSE(centrality_defect(g, basic_invariants(g).polys[0]));
  CHECK(centrality_defect(g, Poly::variable(3, 0)));
}

TEST_CASE("sigma eigenvalues") {
  auto ai3 = build_symmetric_pair("AI:3");
  auto set = normalized_invariants(ai3);
  REQUIRE(set.size() == 2);
  CHECK(set.degrees == std::vector<unsigned>{2, 3});
  CHECK(set.eps == std::vector<int>{1, -1});
  for (std::size_t j = 0; j < set.size(); ++j)
    CHECK(sigma_apply(set.polys[j], ai3.n0) == Rat(set.eps[j]) * set.polys[j]);

  auto aiii = build_symmetric_pair("AIII:1,2");
  auto inner = normalized_invariants(aiii);
  for (int e : inner.eps) CHECK(e == 1);
}

TEST_CASE("good generating systems") {
  auto ai3 = build_symmetric_pair("AI:3");
  auto set = normalized_invariants(ai3);
  CHECK(set.g1_degrees == std::vector<int>{2, 3});
  auto r = ggs_check(set, ai3);
  CHECK(r.sum_g1_degrees == 5);
  CHECK(r.is_ggs);
  CHECK(r.top_independent);

  auto aiii = build_symmetric_pair("AIII:1,2");
  auto s2 = normalized_invariants(aiii);
  CHECK(s2.g1_degrees == std::vector<int>{2, 2});
  CHECK(ggs_check(s2, aiii).is_ggs);
}

TEST_CASE("the g1-degree sum never drops below dim g1") {
  for (const char* key : {"AI:3", "AI:4", "AII:2", "AIII:1,2", "BDI:3,2", "BDI:4,1", "DBL:sl3"}) {
    CAPTURE(key);
    auto p = build_symmetric_pair(key);
    auto raw = basic_invariants(p.g);
    annotate(raw, p);
    CHECK(ggs_check(raw, p).sum_g1_degrees >= static_cast<int>(p.dim_g1()));
  }
}

TEST_CASE("r0 onto") {
  struct Row {
    const char* key;
    bool onto;
  };
  for (auto [key, onto] : {Row{"AI:3", true}, Row{"AI:4", false}, Row{"AII:2", true}, Row{"BDI:3,1", true},
                           Row{"DBL:sl2", true}}) {
    CAPTURE(key);
    auto p = build_symmetric_pair(key);
    auto r = r0_onto_check(p);
    CHECK(r.onto == onto);
    CHECK(r.listed == onto);
    CHECK(listed_r0_onto(p.spec) == onto);
  }
}
