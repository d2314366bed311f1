#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "poissonz/zconstruct.hpp"

using namespace poissonz;

namespace {

std::multiset<BiDegree> bidegrees(const GeneratorFamily& fam) {
  std::multiset<BiDegree> out;
  for (const auto& p : fam.provenance) out.insert(p.bideg);
  return out;
}

std::multiset<int> degrees(const GeneratorFamily& fam) {
  auto d = fam.degrees();
  return {d.begin(), d.end()};
}

std::set<std::string> texts(const GeneratorFamily& fam, const SymmetricPair& p) {
  std::set<std::string> out;
  for (const auto& g : fam.gens) out.insert(g.to_text(p.g.labels()));
  return out;
}

// Rank of the Jacobian at one random point, recomputed without the library helper.
std::size_t jacobian_rank_at(const std::vector<Poly>& fs, std::size_t n, std::uint64_t seed) {
  Sampler s(seed);
  Vec xi = s.point(n);
  std::vector<Vec> rows;
  for (const auto& f : fs) rows.push_back(f.gradient(xi));
  return span_dim(rows, n);
}

VerifyOptions symbolic() { return {Mode::Symbolic, 1, 5, kDefaultHeight}; }
VerifyOptions sampled() { return {Mode::Sampled, 1, 5, kDefaultHeight}; }

}  // namespace

TEST_CASE("sl2 golden case") {
  auto p = build_symmetric_pair("AIII:1,1");
  auto set = normalized_invariants(p);
  auto z = z_generators(p, set);
  CHECK(texts(z, p) == std::set<std::string>{"1*h", "1*e*f"});
  CHECK(verify_commutativity(z, p, symbolic()).pass());
  CHECK(texts(z_zero_generators(p, set), p) == std::set<std::string>{"1*e*f"});
  CHECK(texts(z_infty_generators(p, set), p) == std::set<std::string>{"1*h"});
  CHECK(is_sl2_pair(p));
}

TEST_CASE("Z for the split pair on sl3") {
  auto p = build_symmetric_pair("AI:3");
  auto set = normalized_invariants(p);
  auto z = z_generators(p, set);
  CHECK(bidegrees(z) == std::multiset<BiDegree>{{2, 0}, {0, 2}, {2, 1}, {0, 3}});
  CHECK(z.expected_trdeg == 4);
  CHECK(expected_trdeg_z(p) == 4);
  CHECK(verify_commutativity(z, p, symbolic()).pass());
  CHECK(verify_trdeg_freeness(z, &p, 5, 1).pass());
  CHECK(jacobian_rank_at(z.gens, p.dim(), 9) == 4);
  // Each generator is bi-homogeneous of its recorded bidegree.
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto dec = bihom_decompose(z.gens[i], p);
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components.begin()->first == z.provenance[i].bideg);
  }
}

TEST_CASE("Z for an inner pair has even g1-degrees") {
  auto p = build_symmetric_pair("AIII:1,2");
  auto set = normalized_invariants(p);
  auto z = z_generators(p, set);
  CHECK(bidegrees(z) == std::multiset<BiDegree>{{2, 0}, {0, 2}, {3, 0}, {1, 2}});
  for (const auto& pr : z.provenance) CHECK(pr.bideg.d1 % 2 == 0);
  CHECK(verify_trdeg_freeness(z, &p, 5, 1).pass());
  auto zinf = z_infty_generators(p, set);
  CHECK(zinf.size() == 4);
  for (const auto& g : zinf.gens) CHECK(g.degree() == 1);
}

TEST_CASE("Z infinity counts") {
  auto p = build_symmetric_pair("AI:3");
  auto zinf = z_infty_generators(p, normalized_invariants(p));
  CHECK(zinf.size() == 4);
  for (const auto& f : zinf.gens)
    for (const auto& g : zinf.gens) CHECK(poisson_bracket_poly(p, f, g, BracketParam::infinity()).is_zero());
}

TEST_CASE("Z tilde") {
  auto p = build_symmetric_pair("AI:3");
  auto set = normalized_invariants(p);
  auto zt = ztilde_generators(p, set);
  CHECK(zt.size() == 4);
  CHECK(zt.g0_invariant);
  CHECK(verify_commutativity(zt, p, symbolic()).pass());
  // r0 is onto here, so both families have the same rank.
  CHECK(jacobian_rank_at(zt.gens, p.dim(), 3) == jacobian_rank_at(z_generators(p, set).gens, p.dim(), 3));

  auto q = build_symmetric_pair("AI:4");
  auto sq = normalized_invariants(q);
  CHECK(expected_trdeg_z(q) == 7);
  auto zq = z_generators(q, sq), ztq = ztilde_generators(q, sq);
  CHECK(texts(zq, q) != texts(ztq, q));
  CHECK(jacobian_rank_at(zq.gens, q.dim(), 5) == 7);
  CHECK(jacobian_rank_at(ztq.gens, q.dim(), 5) == 7);

  auto so5 = build_symmetric_pair("BDI:4,1");
  CHECK(jacobian_rank_at(ztilde_generators(so5, normalized_invariants(so5)).gens, so5.dim(), 2) == 4);
}

TEST_CASE("trdeg arithmetic") {
  CHECK(magic_number(8, 2) == 5);
  CHECK(magic_number(10, 2) == 6);
  CHECK_THROWS_AS(magic_number(8, 1), Error);
}

TEST_CASE("index formulas") {
  for (const char* key : {"AI:3", "AIII:1,2"}) {
    CAPTURE(key);
    auto p = build_symmetric_pair(key);
    CHECK(index_formulas(p, 5, 1).pass());
  }
}

TEST_CASE("argument shift on so5") {
  auto g = build_algebra("so5");
  auto set = basic_invariants(g);
  Sampler s(12);
  auto mf = mf_generators(g, s.point(g.dim()), set);
  CHECK(degrees(mf) == std::multiset<int>{4, 3, 2, 1, 2, 1});
  VerifyOptions opt = sampled();
  CHECK(verify_lie_poisson(mf, g, opt).pass());
  CHECK(jacobian_rank_at(mf.gens, g.dim(), 4) == 6);

  auto sl2 = build_algebra("sl2");
  CHECK(mf_generators(sl2, Vec{1, 2, 3}, basic_invariants(sl2)).size() == 2);
}

TEST_CASE("chain so5 > so4 > so2 + so2") {
  auto keys = parse_chain("BDI:4,1 > BDI:2,2");
  CHECK(keys == std::vector<std::string>{"BDI:4,1", "BDI:2,2"});
  auto c = chain_maximal_pc(keys);
  CHECK(degrees(c.family) == std::multiset<int>{4, 2, 2, 2, 1, 1});
  std::size_t total = 0;
  for (auto n : c.level_counts) total += n;
  CHECK(total == 6);
  auto g = build_algebra("so5");
  CHECK(c.family.ambient_dim == g.dim());
  CHECK(verify_lie_poisson(c.family, c.levels.front().g, sampled()).pass());
  CHECK(jacobian_rank_at(c.family.gens, g.dim(), 8) == 6);
}

TEST_CASE("one-level chain on sl2") {
  auto c = chain_maximal_pc({"AIII:1,1"});
  CHECK(c.family.size() == 2);
}

TEST_CASE("Cartan subspaces") {
  auto p = build_symmetric_pair("AI:3");
  auto c = cartan_subspace(p, 1);
  CHECK(c.basis.size() == 2);
  CHECK(c.levi.empty());
  for (const auto& a : c.basis)
    for (const auto& b : c.basis) CHECK(is_zero(p.g.bracket(a, b)));

  auto d = build_symmetric_pair("DBL:sl2");
  auto cd = cartan_subspace(d, 1);
  CHECK(cd.basis.size() == 1);
  CHECK(cd.rank_levi + cd.basis.size() == d.rank_g);
}

TEST_CASE("restriction to a generic affine slice") {
  auto p = build_symmetric_pair("AI:3");
  auto z = z_generators(p, normalized_invariants(p));
  auto c1 = cartan_subspace(p, 1);
  auto m = manakov_restrict(z, p, c1, sampled());
  CHECK(m.report.pass());
  CHECK(m.rank == 2);
  CHECK(m.expected_trdeg == 2);
}

TEST_CASE("sum of kernels") {
  for (const char* key : {"AI:3", "AIII:1,2"}) {
    CAPTURE(key);
    auto p = build_symmetric_pair(key);
    auto z = z_generators(p, normalized_invariants(p));
    Sampler s(41);
    for (int k = 0; k < 3; ++k) {
      Vec xi = s.point(p.dim());
      auto d = sum_of_kernels(p, xi, &z);
      CHECK(d.generic);
      CHECK(d.dim_L == 4);
      CHECK(d.dim_cap == 2);
      CHECK(d.dim_dz == 4);
      CHECK(lemma_sum_reg_verify(p, xi, &z).pass());
    }
  }
}

TEST_CASE("negative controls") {
  auto p = build_symmetric_pair("AI:3");
  auto z = z_generators(p, normalized_invariants(p));

  auto injected = z;
  injected.add(Poly::variable(p.dim(), p.n0), Provenance{Provenance::Kind::Coordinate, p.n0});
  auto rep = verify_commutativity(injected, p, symbolic());
  CHECK_FALSE(rep.pass());
  REQUIRE(rep.first_failure());
  CHECK_FALSE(rep.first_failure()->witness.empty());

  auto dup = z;
  dup.gens.back() = dup.gens.front();
  CHECK_FALSE(verify_trdeg_freeness(dup, &p, 5, 1).pass());
}
