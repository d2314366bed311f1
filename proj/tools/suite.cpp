#include "suite.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "poissonz/identities.hpp"
#include "poissonz/invariants.hpp"

namespace poissonz::cli {

namespace {

using Task = std::function<VerificationReport()>;

// Runs tasks on up to `jobs` threads; results keep the task order.
std::vector<VerificationReport> run_parallel(const std::vector<std::pair<std::string, Task>>& tasks, std::size_t jobs) {
  std::vector<VerificationReport> out(tasks.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i] = tasks[i].second();
    } catch (const std::exception& e) {
      out[i] = {};
      out[i].add(tasks[i].first, "completes", "error", false, e.what());
    }
  };
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(jobs, tasks.size()); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) run_one(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add_rows(SuiteResult& res, const GeneratorFamily& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    GeneratorRow row{fam.provenance[i].describe(), std::nullopt, fam.gens[i].degree()};
    if (fam.provenance[i].kind == Provenance::Kind::Component) row.bideg = fam.provenance[i].bideg;
    else if (fam.provenance[i].kind == Provenance::Kind::Coordinate && fam.provenance[i].level == 0)
      row.bideg = BiDegree{1, 0};
    res.generators.push_back(std::move(row));
  }
}

}  // namespace

const std::vector<std::string>& all_groups() {
  static const std::vector<std::string> g = {"construction", "invariants", "ggs",   "r0",         "z",     "commutativity",
                                             "trdeg",        "index",      "zinf",  "identities", "kernels", "manakov"};
  return g;
}

std::set<std::string> default_groups() {
  std::set<std::string> s(all_groups().begin(), all_groups().end());
  s.erase("manakov");
  return s;
}

std::set<std::string> parse_groups(const std::string& text) {
  std::set<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string name = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (name.empty()) continue;
    if (name == "all") {
      out.insert(all_groups().begin(), all_groups().end());
    } else if (name == "none") {
      continue;
    } else {
      bool known = false;
      for (const auto& g : all_groups()) known = known || g == name;
      if (!known) throw Error("unknown check group '" + name + "'");
      out.insert(name);
    }
  }
  return out;
}

SuiteResult run_suite(const std::string& key, const RunConfig& cfg) {
  SuiteResult res;
  auto& rep = res.report;
  rep.pair = key;
  rep.seed = cfg.seed;
  auto want = [&](const char* g) { return cfg.groups.count(g) > 0; };

  SymmetricPair pair = build_symmetric_pair(key);
  rep.pair = pair.spec.key;
  Mode mode = cfg.mode.value_or(default_mode(pair));
  res.mode = to_string(mode);
  rep.samples = cfg.samples;
  VerifyOptions opt{mode, cfg.seed, cfg.samples, cfg.height};

  if (want("construction")) {
    auto jac = pair.g.jacobi_defect();
    rep.add("construction: Jacobi identity", "holds", jac ? "fails" : "holds", !jac, jac.value_or(""));
    auto anti = pair.g.antisymmetry_defect();
    rep.add("construction: antisymmetry", "holds", anti ? "fails" : "holds", !anti, anti.value_or(""));
    auto tf = pair.g.trace_form_defect();
    rep.add("construction: trace form invariance", "holds", tf ? "fails" : "holds", !tf, tf.value_or(""));
    auto jc = jacobi_compatibility_check(pair, {BracketParam::finite(0), BracketParam::finite(1), BracketParam::infinity()},
                                         {{Rat(1), Rat(2)}, {Rat(2), Rat(-3)}});
    rep.add("construction: bracket family compatibility", "holds", jc.pass ? "holds" : "fails", jc.pass,
            jc.failure.value_or(""));
  }

  InvariantSet set = normalized_invariants(pair);
  std::size_t b = magic_number(pair.dim(), pair.rank_g);
  if (want("invariants")) {
    rep.add("invariants: count", std::to_string(pair.rank_g), std::to_string(set.size()), set.size() == pair.rank_g);
    unsigned sum = 0;
    for (auto d : set.degrees) sum += d;
    rep.add("invariants: sum of degrees", std::to_string(b), std::to_string(sum), sum == b);
  }
  if (want("ggs")) {
    GgsResult g = ggs_check(set, pair, cfg.seed);
    rep.add("ggs: sum of top g1-degrees", std::to_string(pair.dim_g1()), std::to_string(g.sum_g1_degrees),
            g.is_ggs && g.sum_g1_degrees == static_cast<int>(pair.dim_g1()));
    rep.add("ggs: top components independent", "yes", yes_no(g.top_independent), g.top_independent);
  }
  if (want("r0")) {
    try {
      R0Onto r = r0_onto_check(pair, cfg.seed);
      rep.add("r0: onto matches classification", yes_no(r.listed), yes_no(r.onto), r.onto == r.listed);
    } catch (const Error& e) {
      rep.add("r0: onto matches classification", yes_no(listed_r0_onto(pair.spec)), "error", false, e.what());
    }
  }

  GeneratorFamily z = z_generators(pair, set);
  GeneratorFamily zt = ztilde_generators(pair, set);
  add_rows(res, z);
  if (want("z")) {
    std::size_t t = expected_trdeg_z(pair);
    rep.add("z: generator count", std::to_string(t), std::to_string(z.size()), z.size() == t);
    rep.add("z: extended generator count", std::to_string(t), std::to_string(zt.size()), zt.size() == t);
  }

  std::vector<std::pair<std::string, Task>> tasks;
  if (want("commutativity")) {
    tasks.emplace_back("commutativity", [&] {
      VerificationReport r;
      r.merge(verify_commutativity(z, pair, opt), "commutativity Z: ");
      r.merge(verify_commutativity(zt, pair, opt), "commutativity Ztilde: ");
      return r;
    });
  }
  if (want("trdeg")) {
    tasks.emplace_back("trdeg", [&] {
      VerificationReport r;
      r.merge(verify_trdeg_freeness(z, &pair, 3, cfg.seed), "trdeg Z: ");
      r.merge(verify_trdeg_freeness(zt, &pair, 3, cfg.seed), "trdeg Ztilde: ");
      return r;
    });
  }
  if (want("index")) {
    tasks.emplace_back("index", [&] {
      VerificationReport r;
      r.merge(index_formulas(pair, cfg.samples, cfg.seed), "index: ");
      return r;
    });
  }
  if (want("zinf")) {
    tasks.emplace_back("zinf", [&] {
      VerificationReport r;
      GeneratorFamily zi = z_infty_generators(pair, set);
      std::size_t want_n = pair.n0 + pair.rank_g - pair.rank_g0;
      r.add("zinf: generator count", std::to_string(want_n), std::to_string(zi.size()), zi.size() == want_n);
      return r;
    });
  }
  if (want("identities") && pair.dim() <= kIdentityDimLimit) {
    tasks.emplace_back("identities", [&] {
      VerificationReport r;
      r.merge(kostant_identity_check(pair, set, KostantVariant::Full, cfg.samples, cfg.seed), "identities: ");
      KostantVariant v = pair.inner() ? KostantVariant::Inner : KostantVariant::Outer;
      r.merge(kostant_identity_check(pair, set, v, cfg.samples, cfg.seed), "identities: ");
      if (pair.inner()) r.merge(det_ad_factor_check(pair, set, cfg.samples, cfg.seed).report, "identities: ");
      else r.merge(q_factor_check(pair, set, cfg.samples, cfg.seed).report, "identities: ");
      return r;
    });
  }
  if (want("identities") && pair.dim() > kIdentityDimLimit)
    res.notes.push_back("identities skipped: dim " + std::to_string(pair.dim()) + " exceeds " +
                        std::to_string(kIdentityDimLimit));
  if (want("kernels")) {
    tasks.emplace_back("kernels", [&] {
      VerificationReport r;
      Sampler s(cfg.seed ^ 0x1e33a, cfg.height);
      for (std::size_t k = 0; k < cfg.samples; ++k)
        r.merge(lemma_sum_reg_verify(pair, s.point(pair.dim()), &z), "kernels point " + std::to_string(k) + ": ");
      return r;
    });
  }
  if (want("manakov")) {
    tasks.emplace_back("manakov", [&] {
      VerificationReport r;
      CartanSubspace c1 = cartan_subspace(pair, cfg.seed);
      r.merge(manakov_restrict(z, pair, c1, opt).report, "manakov: ");
      return r;
    });
  }
  for (const auto& r : run_parallel(tasks, cfg.jobs)) rep.merge(r);
  return res;
}

SuiteResult run_chain(const std::string& chain, const RunConfig& cfg) {
  SuiteResult res;
  auto& rep = res.report;
  rep.pair = chain;
  rep.seed = cfg.seed;
  rep.samples = cfg.samples;
  ChainResult ch = chain_maximal_pc(parse_chain(chain));
  const SymmetricPair& top = ch.levels.front();
  Mode mode = cfg.mode.value_or(default_mode(top));
  res.mode = to_string(mode);
  VerifyOptions opt{mode, cfg.seed, cfg.samples, cfg.height};
  std::size_t b = magic_number(top.dim(), top.rank_g);
  rep.add("chain: generator count", std::to_string(b), std::to_string(ch.family.size()), ch.family.size() == b);
  rep.merge(verify_lie_poisson(ch.family, top.g, opt), "chain: ");
  rep.merge(verify_trdeg_freeness(ch.family, nullptr, 3, cfg.seed), "chain: ");
  add_rows(res, ch.family);
  return res;
}

PencilSummary run_pencil(const Pencil& p, const std::string& label) {
  PencilSummary out;
  out.n = p.n();
  out.generic_rank = p.generic_rank();
  out.jk = jk_summary(p);
  out.report.pair = label;
  std::vector<PencilParam> members;
  for (const auto& r : out.jk.singular.finite) members.push_back(r);
  if (out.jk.singular.at_infinity) members.push_back(std::nullopt);
  GenericRankL g = generic_rank_and_L(p);
  for (std::size_t i = 0; i < 2 && i < g.params.size(); ++i) members.push_back(g.params[i]);
  out.report.merge(orthogonality_check(p, members));
  std::vector<PencilParam> singular;
  for (const auto& r : out.jk.singular.finite) singular.push_back(r);
  if (out.jk.singular.at_infinity) singular.push_back(std::nullopt);
  for (const auto& c : singular) {
    if (p.member(c).is_zero()) continue;
    out.report.merge(bound_and_sumdim_check(p, c), "member " + to_string(c) + ": ");
  }
  return out;
}

}  // namespace poissonz::cli
