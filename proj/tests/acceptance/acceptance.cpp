// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "poissonz/identities.hpp"
#include "poissonz/pencil.hpp"
#include "poissonz/zconstruct.hpp"

using namespace poissonz;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::set<std::string> texts(const GeneratorFamily& fam, const SymmetricPair& p) {
  std::set<std::string> out;
  for (const auto& g : fam.gens) out.insert(g.to_text(p.g.labels()));
  return out;
}

std::multiset<BiDegree> bidegrees(const GeneratorFamily& fam) {
  std::multiset<BiDegree> out;
  for (const auto& pr : fam.provenance) out.insert(pr.bideg);
  return out;
}

std::multiset<int> degree_multiset(const GeneratorFamily& fam) {
  auto d = fam.degrees();
  return {d.begin(), d.end()};
}

std::size_t rank_at(const std::vector<Poly>& fs, const Vec& xi) {
  std::vector<Vec> rows;
  for (const auto& f : fs) rows.push_back(f.gradient(xi));
  return span_dim(rows, xi.size());
}

std::string fmt(const std::multiset<int>& s) {
  std::string out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) out += (out.empty() ? "" : ",") + std::to_string(*it);
  return "{" + out + "}";
}

const Check* find_check(const VerificationReport& r, const std::string& needle) {
  for (const auto& c : r.checks)
    if (c.name.find(needle) != std::string::npos) return &c;
  return nullptr;
}

VerifyOptions sampled(std::uint64_t seed) { return {Mode::Sampled, seed, 5, kDefaultHeight}; }

Outcome sl2_golden() {
  Outcome o;
  for (const char* key : {"AIII:1,1", "AI:2"}) {
    auto p = build_symmetric_pair(key);
    auto set = normalized_invariants(p);
    auto z = z_generators(p, set);
    o.require(texts(z, p) == std::set<std::string>{"1*h", "1*e*f"}, std::string(key) + ": Z is not k[h, ef]");
    Poly h = Poly::variable(3, 0), ef = Poly::variable(3, 1) * Poly::variable(3, 2);
    o.require(p.g.labels() == std::vector<std::string>{"h", "e", "f"}, std::string(key) + ": unexpected basis");
    for (auto t : {BracketParam::finite(0), BracketParam::finite(1), BracketParam::infinity()})
      o.require(poisson_bracket_poly(p, h, ef, t).is_zero(), std::string(key) + ": {h, ef}_" + t.to_string() + " != 0");
    o.require(texts(z_zero_generators(p, set), p) == std::set<std::string>{"1*e*f"}, std::string(key) + ": Z_0");
    o.require(texts(z_infty_generators(p, set), p) == std::set<std::string>{"1*h"}, std::string(key) + ": Z_inf");
  }
  if (o.pass) o.detail = "Z = k[h, ef], Z_0 = k[ef], Z_inf = k[h]; {h, ef}_t = 0 for t = 0, 1, inf";
  return o;
}

Outcome split_sl3() {
  Outcome o;
  auto p = build_symmetric_pair("AI:3");
  auto z = z_generators(p, normalized_invariants(p));
  o.require(z.size() == 4, "generator count " + std::to_string(z.size()));
  o.require(bidegrees(z) == std::multiset<BiDegree>{{2, 0}, {0, 2}, {2, 1}, {0, 3}}, "bidegrees");
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      ++pairs;
      for (auto t : {BracketParam::finite(0), BracketParam::infinity()})
        o.require(poisson_bracket_poly(p, z.gens[i], z.gens[j], t).is_zero(),
                  "bracket " + t.to_string() + " of generators " + std::to_string(i) + "," + std::to_string(j));
    }
  Sampler s(1);
  std::size_t r = rank_at(z.gens, s.point(p.dim()));
  o.require(pairs == 6, "pair count");
  o.require(r == 4 && expected_trdeg_z(p) == 4, "Jacobian rank " + std::to_string(r));
  if (o.pass) o.detail = "4 generators (2,0) (0,2) (2,1) (0,3); 6 pairs commute under {,}_0 and {,}_inf; rank 4";
  return o;
}

Outcome inner_sl3() {
  Outcome o;
  auto p = build_symmetric_pair("AIII:1,2");
  auto set = normalized_invariants(p);
  auto z = z_generators(p, set);
  o.require(bidegrees(z) == std::multiset<BiDegree>{{2, 0}, {0, 2}, {3, 0}, {1, 2}}, "bidegrees");
  for (const auto& pr : z.provenance) o.require(pr.bideg.d1 % 2 == 0, "odd g1-degree");
  Sampler s(1);
  std::size_t r = rank_at(z.gens, s.point(p.dim()));
  o.require(r == 4, "trdeg " + std::to_string(r));
  std::size_t plus = 0;
  for (int e : set.eps) plus += e == 1;
  o.require(plus == 2 && p.rank_g0 == 2, "#{eps = +1} = " + std::to_string(plus));
  if (o.pass) o.detail = "bidegrees (2,0) (0,2) (3,0) (1,2), g1-degrees even, trdeg 4, two eps = +1";
  return o;
}

Outcome index_formulas_all() {
  Outcome o;
  for (const char* key : {"AI:3", "AI:4", "AII:2", "AIII:1,2", "BDI:3,2"}) {
    auto p = build_symmetric_pair(key);
    auto rep = index_formulas(p, 5, 1);
    o.require(rep.pass() && rep.checks.size() == 4 && rep.samples >= 5,
              std::string(key) + (rep.first_failure() ? ": " + rep.first_failure()->name : ""));
  }
  if (o.pass) o.detail = "ind g_(t) at t = 0, 1, 7 and ind g_(inf) on 5 pairs, 5 points each";
  return o;
}

Outcome ggs_all() {
  Outcome o;
  std::size_t tested = 0;
  for (const auto& key : registered_pairs()) {
    auto p = build_symmetric_pair(key);
    if (p.dim() > 21) continue;
    ++tested;
    auto set = normalized_invariants(p);
    auto r = ggs_check(set, p);
    o.require(r.is_ggs && r.top_independent && r.sum_g1_degrees == static_cast<int>(p.dim_g1()), key);
  }
  if (o.pass) o.detail = "sum of g1-degrees = dim g1 with independent tops on " + std::to_string(tested) + " pairs";
  return o;
}

Outcome r0_onto() {
  Outcome o;
  struct Row {
    const char* key;
    bool onto;
  };
  for (auto [key, onto] : {Row{"AI:3", true}, Row{"AI:4", false}, Row{"AII:2", true}, Row{"BDI:3,1", true},
                           Row{"DBL:sl2", true}}) {
    auto p = build_symmetric_pair(key);
    auto r = r0_onto_check(p);
    o.require(r.onto == onto && r.listed == onto, key);
  }
  if (o.pass) o.detail = "computed condition matches the list on AI:3, AI:4, AII:2, BDI:3,1, DBL:sl2";
  return o;
}

// dim L and dim (L meet ker pi_inf) at three points; returns dim L per point for criterion 12.
Outcome kernel_dims(std::vector<std::pair<Vec, std::size_t>>* ai3_points) {
  Outcome o;
  for (const char* key : {"AI:3", "AIII:1,2"}) {
    auto p = build_symmetric_pair(key);
    auto z = z_generators(p, normalized_invariants(p));
    Sampler s(3);
    for (int k = 0; k < 3; ++k) {
      Vec xi = s.point(p.dim());
      auto d = sum_of_kernels(p, xi, &z);
      std::size_t rk_inf = rank(tensor_at(p, xi, BracketParam::infinity()).matrix);
      o.require(d.generic, std::string(key) + ": point not generic");
      o.require(d.dim_L == p.rank_g + rk_inf / 2, std::string(key) + ": dim L " + std::to_string(d.dim_L));
      o.require(d.dim_cap == p.rank_g, std::string(key) + ": dim cap " + std::to_string(d.dim_cap));
      if (ai3_points && std::string(key) == "AI:3") ai3_points->emplace_back(xi, d.dim_L);
    }
  }
  if (o.pass) o.detail = "dim L = rk g + rk pi_inf / 2 = 4 and dim (L meet ker pi_inf) = 2 at 3 points on AI:3, AIII:1,2";
  return o;
}

void require_scalar(Outcome& o, const VerificationReport& rep, const std::string& what) {
  const Check* c = find_check(rep, "scalar independent");
  o.require(rep.pass() && c && c->pass, what + (rep.first_failure() ? ": " + rep.first_failure()->name : ""));
}

Outcome identities() {
  Outcome o;
  for (const char* name : {"sl2", "sl3"}) {
    auto g = build_algebra(name);
    require_scalar(o, kostant_full_check(g, basic_invariants(g), 5, 1), std::string("full on ") + name);
  }
  auto inner = build_symmetric_pair("AIII:1,2");
  require_scalar(o, kostant_identity_check(inner, normalized_invariants(inner), KostantVariant::Inner, 5, 1),
                 "inner on AIII:1,2");
  auto outer = build_symmetric_pair("AI:3");
  require_scalar(o, kostant_identity_check(outer, normalized_invariants(outer), KostantVariant::Outer, 5, 1),
                 "outer on AI:3");
  if (o.pass) o.detail = "full on sl2, sl3; inner on AIII:1,2; outer on AI:3; one scalar over 5 points each";
  return o;
}

Outcome q_factor() {
  Outcome o;
  auto p = build_symmetric_pair("AI:4");
  auto q = q_factor_check(p, normalized_invariants(p), 5, 1);
  const Check* c = find_check(q.report, "Q / Pf constant");
  o.require(c && c->pass && q.points.size() >= 5, "Q / Pf not constant");
  o.require(q.report.pass(), "Q report fails");
  const auto& r = *p.g.realization();
  Mat x(4, 4);
  x(0, 0) = 3;
  x(3, 3) = -3;
  auto cz = centralizer(p.g, r.coordinates(x));
  o.require(cz.dim == 5 && cz.tag == Centralizer::Tag::Subregular, "centralizer dim " + std::to_string(cz.dim));
  if (o.pass) o.detail = "Q / Pf = " + (c ? c->computed.substr(0, c->computed.find(',')) : "") +
                         " at 5 points; diag(a,0,0,-a) has centralizer dim 5";
  return o;
}

Outcome chain_and_shift() {
  Outcome o;
  auto c = chain_maximal_pc(parse_chain("BDI:4,1>BDI:2,2"));
  const auto& top = c.levels.front();
  o.require(degree_multiset(c.family) == std::multiset<int>{4, 2, 2, 2, 1, 1},
            "chain degrees " + fmt(degree_multiset(c.family)));
  o.require(verify_lie_poisson(c.family, top.g, sampled(1)).pass(), "chain not commutative");
  Sampler s(2);
  o.require(rank_at(c.family.gens, s.point(top.dim())) == 6, "chain rank");

  auto g = build_algebra("so5");
  auto mf = mf_generators(g, s.point(g.dim()), basic_invariants(g));
  o.require(degree_multiset(mf) == std::multiset<int>{4, 3, 2, 1, 2, 1}, "shift degrees " + fmt(degree_multiset(mf)));
  o.require(verify_lie_poisson(mf, g, sampled(1)).pass(), "shift not commutative");
  o.require(rank_at(mf.gens, s.point(g.dim())) == 6, "shift rank");
  if (o.pass)
    o.detail = "chain degrees " + fmt(degree_multiset(c.family)) + ", shift degrees " + fmt(degree_multiset(mf)) +
               "; both commutative with rank 6";
  return o;
}

Outcome manakov() {
  Outcome o;
  auto p = build_symmetric_pair("AI:3");
  auto z = z_generators(p, normalized_invariants(p));
  auto m = manakov_restrict(z, p, cartan_subspace(p, 1), sampled(1));
  o.require(m.report.pass(), "restricted family fails");
  o.require(m.rank == 2 && m.expected_trdeg == 2, "rank " + std::to_string(m.rank));
  if (o.pass) o.detail = "restricted family commutes in S(so3) with rank 2";
  return o;
}

Outcome pencils(const std::vector<std::pair<Vec, std::size_t>>& ai3_points) {
  Outcome o;
  Sampler s(12);
  std::size_t applied = 0, bounds = 0;
  for (int trial = 0; trial < 50; ++trial) {
    BlockPencil bp = random_block_pencil(s, 10);
    const Pencil& p = bp.pencil;
    std::string tag = "pencil " + std::to_string(trial);
    o.require(p.n() <= 10, tag + ": too large");
    auto jk = jk_summary(p);
    o.require(jk.d_prime == bp.d_prime() && jk.sum_k == bp.sum_k(), tag + ": Kronecker data");
    std::vector<PencilParam> members(jk.singular.finite.begin(), jk.singular.finite.end());
    if (jk.singular.at_infinity) members.push_back(std::nullopt);
    members.push_back(Rat(trial + 1, 7));
    o.require(orthogonality_check(p, members).pass(), tag + ": orthogonality");
    for (const auto& c : jk.singular.finite) {
      auto rep = bound_and_sumdim_check(p, c);
      ++bounds;
      o.require(rep.pass(), tag + ": " + (rep.first_failure() ? rep.first_failure()->name : ""));
      applied += find_check(rep, "dim L") != nullptr;
    }
  }
  auto pair = build_symmetric_pair("AI:3");
  for (const auto& [xi, dim_l] : ai3_points) {
    Pencil p(tensor_at(pair, xi, BracketParam::finite(0)).matrix, tensor_at(pair, xi, BracketParam::infinity()).matrix);
    o.require(generic_rank_and_L(p).L.size() == dim_l, "AI:3 bracket pencil dim L");
  }
  o.require(!ai3_points.empty(), "no AI:3 points");
  if (o.pass)
    o.detail = "50 pencils, " + std::to_string(bounds) + " rank bounds, dimension theorem applied " +
               std::to_string(applied) + " times; AI:3 bracket pencil gives dim L = 4";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  auto p = build_symmetric_pair("AI:3");
  auto z = z_generators(p, normalized_invariants(p));
  auto injected = z;
  injected.add(Poly::variable(p.dim(), p.n0), Provenance{Provenance::Kind::Coordinate, p.n0});
  auto rep = verify_commutativity(injected, p, {Mode::Symbolic, 1, 5, kDefaultHeight});
  const Check* bad = rep.first_failure();
  o.require(!rep.pass() && bad && !bad->witness.empty(), "injected coordinate not caught");
  auto dup = z;
  dup.gens.back() = dup.gens.front();
  o.require(!verify_trdeg_freeness(dup, &p, 5, 1).pass(), "duplicate generator not caught");
  if (o.pass) o.detail = "injected g1 coordinate fails (" + bad->witness + "); duplicate fails the rank check";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<Vec, std::size_t>> ai3_points;
  std::vector<std::function<Outcome()>> criteria = {
      sl2_golden,
      split_sl3,
      inner_sl3,
      index_formulas_all,
      ggs_all,
      r0_onto,
      [&] { return kernel_dims(&ai3_points); },
      identities,
      q_factor,
      chain_and_shift,
      manakov,
      [&] { return pencils(ai3_points); },
      negative_controls,
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("criterion %2zu: %s  %s (%.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
  }
  std::printf("%s: %zu of %zu criteria pass\n", failed ? "FAIL" : "PASS", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
