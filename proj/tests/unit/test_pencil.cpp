#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "poissonz/brackets.hpp"
#include "poissonz/pencil.hpp"

using namespace poissonz;

namespace {

Pencil mixed5() { return direct_sum({kronecker_block(1), jordan_block(1, 1)}); }

std::size_t kernel_dim(const Pencil& p, const PencilParam& t) { return p.n() - oracle::minor_rank(p.member(t)); }

const Check* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("pure Kronecker block") {
  Pencil p = kronecker_block(1);
  CHECK(p.n() == 3);
  CHECK(p.generic_rank() == 2);
  auto gl = generic_rank_and_L(p);
  CHECK(gl.L.size() == 2);
  auto sing = singular_members(p);
  CHECK(sing.finite.empty());
  CHECK_FALSE(sing.at_infinity);
  auto jk = jk_summary(p);
  CHECK(jk.d_prime == 1);
  CHECK(jk.sum_k == 1);
}

TEST_CASE("Kronecker plus Jordan") {
  Pencil p = mixed5();
  CHECK(p.generic_rank() == 4);
  CHECK(generic_rank_and_L(p).L.size() == 2);
  auto sing = singular_members(p);
  CHECK(sing.finite == std::vector<Rat>{1});
  CHECK(kernel_dim(p, Rat(1)) == 3);
  auto jk = jk_summary(p);
  CHECK(jk.d_prime == 1);
  CHECK(jk.sum_k == 1);
  CHECK(jk.dim_L == 2);

  auto rep = bound_and_sumdim_check(p, Rat(1));
  CHECK(rep.pass());
  const Check* cap = find_check(rep, "dim (L meet U)");
  REQUIRE(cap);
  CHECK(cap->computed == "1");
  const Check* dl = find_check(rep, "dim L");
  REQUIRE(dl);
  CHECK(dl->computed == "2");
  CHECK(orthogonality_check(p, {Rat(1), Rat(0), std::nullopt}).pass());
}

TEST_CASE("single Jordan block of size 4") {
  Pencil p = jordan_block(Rat(-2, 3), 2);
  auto sing = singular_members(p);
  CHECK(sing.finite == std::vector<Rat>{Rat(-2, 3)});
  auto rep = bound_and_sumdim_check(p, Rat(-2, 3));
  CHECK(rep.pass());
  const Check* skipped = find_check(rep, "dimension theorem");
  REQUIRE(skipped);
  CHECK(skipped->computed == "not applicable");
  CHECK_FALSE(find_check(rep, "dim L"));
}

TEST_CASE("congruence preserves the invariants") {
  Pencil p = mixed5();
  Sampler s(2, 3);
  Mat q = oracle::random_matrix(s, 5, 5);
  while (determinant(q) == 0) q = oracle::random_matrix(s, 5, 5);
  Pencil c = congruence(p, q);
  CHECK(c.a() == q.transpose() * p.a() * q);
  auto jk = jk_summary(c);
  CHECK(jk.d_prime == 1);
  CHECK(jk.sum_k == 1);
  CHECK(singular_members(c).finite == std::vector<Rat>{1});
}

TEST_CASE("pencil text format") {
  std::istringstream in(
      "# a 3-dim Kronecker block\n3\n"
      "0 1 0\n-1 0 0\n0 0 0\n"
      "0 0 1\n0 0 0\n-1 0 0\n");
  Pencil p = parse_pencil(in);
  CHECK(p.a() == kronecker_block(1).a());
  CHECK(p.b() == kronecker_block(1).b());

  std::istringstream not_skew("2\n0 1\n1 0\n0 0\n0 0\n");
  CHECK_THROWS_AS(parse_pencil(not_skew), Error);
  std::istringstream short_input("2\n0 1\n-1 0\n");
  CHECK_THROWS_AS(parse_pencil(short_input), Error);
  CHECK_THROWS_AS(read_pencil_file("/nonexistent/pencil.txt"), Error);
}

TEST_CASE("random block pencils recover their construction") {
  Sampler s(2024);
  for (int trial = 0; trial < 25; ++trial) {
    CAPTURE(trial);
    BlockPencil bp = random_block_pencil(s, 10);
    const Pencil& p = bp.pencil;
    CHECK(p.n() <= 10);
    auto jk = jk_summary(p);
    CHECK(jk.d_prime == bp.d_prime());
    CHECK(jk.sum_k == bp.sum_k());
    std::set<Rat> lambdas;
    for (const auto& [l, sz] : bp.jordan) lambdas.insert(l);
    auto sing = singular_members(p);
    CHECK(std::set<Rat>(sing.finite.begin(), sing.finite.end()) == lambdas);
    std::vector<PencilParam> members(sing.finite.begin(), sing.finite.end());
    members.push_back(std::nullopt);
    CHECK(orthogonality_check(p, members).pass());
    for (const auto& c : sing.finite) CHECK(bound_and_sumdim_check(p, c).pass());
  }
}

TEST_CASE("the bracket pencil of the split sl3 pair") {
  auto pair = build_symmetric_pair("AI:3");
  Sampler s(77);
  Vec xi = s.point(pair.dim());
  Pencil p(tensor_at(pair, xi, BracketParam::finite(0)).matrix, tensor_at(pair, xi, BracketParam::infinity()).matrix);
  CHECK(generic_rank_and_L(p).L.size() == 4);
  CHECK(p.generic_rank() == 6);
}
