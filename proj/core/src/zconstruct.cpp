#include "poissonz/zconstruct.hpp"

#include <algorithm>
#include <sstream>

#include "poissonz/pencil.hpp"
#include "poissonz/univariate.hpp"

namespace poissonz {

namespace {

std::string clip(std::string s, std::size_t limit = 160) {
  if (s.size() > limit) s = s.substr(0, limit) + "...";
  return s;
}

std::string point_text(const Vec& xi) {
  std::string s = "(";
  for (std::size_t i = 0; i < xi.size(); ++i) s += (i ? "," : "") + to_string(xi[i]);
  return s + ")";
}

std::string name_of(const GeneratorFamily& fam, std::size_t i) {
  return fam.provenance[i].describe();
}

// Rows of ad x restricted to the columns [lo, hi).
Mat ad_columns(const StructureConstants& g, const Vec& x, std::size_t lo, std::size_t hi) {
  Mat a = g.ad(x);
  std::vector<std::size_t> rows(g.dim()), cols;
  for (std::size_t i = 0; i < g.dim(); ++i) rows[i] = i;
  for (std::size_t j = lo; j < hi; ++j) cols.push_back(j);
  return a.submatrix(rows, cols);
}

std::vector<Vec> pad(const std::vector<Vec>& vs, std::size_t offset, std::size_t n) {
  std::vector<Vec> out;
  for (const auto& v : vs) {
    Vec w(n);
    for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
    out.push_back(std::move(w));
  }
  return out;
}

struct PairwiseOutcome {
  std::size_t tested = 0;
  std::size_t failing = 0;
  std::string witness;
};

void record(PairwiseOutcome& o, bool ok, const std::string& witness) {
  ++o.tested;
  if (!ok && o.failing++ == 0) o.witness = witness;
}

void add_outcome(VerificationReport& rep, const std::string& name, const PairwiseOutcome& o) {
  rep.add(name, "0 of " + std::to_string(o.tested) + " failing", std::to_string(o.failing) + " of " +
          std::to_string(o.tested) + " failing", o.failing == 0, o.witness);
}

// Sampled bracket values dF^T pi dG over a set of points.
struct SampledForms {
  std::vector<Vec> points;
  std::vector<std::vector<Vec>> grads;  // [point][generator]
};

SampledForms sample_gradients(const GeneratorFamily& fam, std::size_t n, const VerifyOptions& opt) {
  SampledForms s;
  Sampler smp(opt.seed, opt.height);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    s.points.push_back(smp.point(n));
    std::vector<Vec> gs;
    for (const auto& f : fam.gens) gs.push_back(f.gradient(s.points.back()));
    s.grads.push_back(std::move(gs));
  }
  return s;
}

}  // namespace

std::string Provenance::describe() const {
  std::string pre = level ? "L" + std::to_string(level) + ":" : "";
  switch (kind) {
    case Kind::Component:
      return pre + "H" + std::to_string(source + 1) + "_(" + std::to_string(bideg.d0) + "," +
             std::to_string(bideg.d1) + ")";
    case Kind::G0Invariant: return pre + "F" + std::to_string(source + 1);
    case Kind::Shift: return pre + "D^" + std::to_string(order) + " H" + std::to_string(source + 1);
    case Kind::Coordinate: return pre + "x" + std::to_string(source + 1);
  }
  return pre;
}

void GeneratorFamily::add(Poly p, Provenance why) {
  gens.push_back(std::move(p));
  provenance.push_back(std::move(why));
}

std::vector<int> GeneratorFamily::degrees() const {
  std::vector<int> d;
  for (const auto& f : gens) d.push_back(f.degree());
  return d;
}

const char* to_string(Mode m) { return m == Mode::Symbolic ? "symbolic" : "sampled"; }

Mode default_mode(const SymmetricPair& pair) { return pair.dim() <= 15 ? Mode::Symbolic : Mode::Sampled; }

std::size_t magic_number(std::size_t dim, std::size_t rank) {
  if ((dim + rank) % 2 != 0) throw Error("dim + rank is odd");
  return (dim + rank) / 2;
}

std::size_t expected_trdeg_z(const SymmetricPair& pair) {
  std::size_t s = pair.dim_g1() + pair.rank_g + pair.rank_g0;
  if (s % 2 != 0) throw Error("dim g1 + rk g + rk g0 is odd");
  return s / 2;
}

bool is_sl2_pair(const SymmetricPair& pair) { return pair.dim() == 3 && pair.rank_g == 1 && pair.rank_g0 == 1; }

GeneratorFamily z_generators(const SymmetricPair& pair, const InvariantSet& set, bool sl2_special) {
  GeneratorFamily fam;
  fam.name = "Z";
  fam.ambient_dim = pair.dim();
  fam.g0_invariant = true;
  fam.expected_trdeg = expected_trdeg_z(pair);
  bool special = sl2_special && is_sl2_pair(pair);
  for (std::size_t j = 0; j < set.size(); ++j) {
    auto dec = bihom_decompose(set.polys[j], pair);
    int parity = 0;
    for (const auto& [bd, comp] : dec.components) {
      int p = bd.d1 % 2 == 0 ? 1 : -1;
      if (parity == 0) parity = p;
      if (p != parity) throw Error("H" + std::to_string(j + 1) + " is not a sigma-eigenvector");
    }
    std::vector<std::pair<BiDegree, Poly>> comps(dec.components.begin(), dec.components.end());
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.first.d1 < b.first.d1; });
    for (auto& [bd, comp] : comps) {
      if (comp.is_zero()) continue;
      if (special && bd.d1 == 0) {
        fam.add(Poly::variable(pair.dim(), 0), {Provenance::Kind::Coordinate, 0, {}, 0, 0});
        continue;
      }
      fam.add(make_primitive(comp), {Provenance::Kind::Component, j, bd, 0, 0});
    }
  }
  return fam;
}

GeneratorFamily ztilde_generators(const SymmetricPair& pair, const InvariantSet& set) {
  GeneratorFamily z = z_generators(pair, set, false);
  GeneratorFamily fam;
  fam.name = "Ztilde";
  fam.ambient_dim = pair.dim();
  fam.g0_invariant = true;
  fam.expected_trdeg = z.expected_trdeg;
  std::size_t dropped = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z.provenance[i].bideg.d1 == 0) {
      ++dropped;
      continue;
    }
    fam.add(z.gens[i], z.provenance[i]);
  }
  if (dropped != pair.rank_g0)
    throw Error("expected " + std::to_string(pair.rank_g0) + " components of g1-degree 0, found " +
                std::to_string(dropped));
  InvariantSet inv0 = basic_invariants(pair.g0);
  for (std::size_t k = 0; k < inv0.size(); ++k)
    fam.add(inv0.polys[k].widen(pair.dim()), {Provenance::Kind::G0Invariant, k, {}, 0, 0});
  return fam;
}

GeneratorFamily z_zero_generators(const SymmetricPair& pair, const InvariantSet& set) {
  GeneratorFamily fam;
  fam.name = "Z0";
  fam.ambient_dim = pair.dim();
  fam.g0_invariant = true;
  fam.expected_trdeg = pair.rank_g;
  for (std::size_t j = 0; j < set.size(); ++j) {
    auto dec = bihom_decompose(set.polys[j], pair);
    const Poly& top = dec.top();
    BiDegree bd{static_cast<unsigned>(top.degree()) - static_cast<unsigned>(dec.top_g1_degree),
                static_cast<unsigned>(dec.top_g1_degree)};
    fam.add(make_primitive(top), {Provenance::Kind::Component, j, bd, 0, 0});
  }
  return fam;
}

GeneratorFamily z_infty_generators(const SymmetricPair& pair, const InvariantSet& set) {
  GeneratorFamily fam;
  fam.name = "Zinf";
  fam.ambient_dim = pair.dim();
  for (std::size_t i = 0; i < pair.n0; ++i)
    fam.add(Poly::variable(pair.dim(), i), {Provenance::Kind::Coordinate, i, {}, 0, 0});
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (set.eps[j] != -1) continue;
    BiDegree bd{set.degrees[j] - 1, 1};
    auto dec = bihom_decompose(set.polys[j], pair);
    auto it = dec.components.find(bd);
    if (it == dec.components.end() || it->second.is_zero())
      throw Error("H" + std::to_string(j + 1) + " has no component of g1-degree 1");
    fam.add(make_primitive(it->second), {Provenance::Kind::Component, j, bd, 0, 0});
  }
  fam.expected_trdeg = fam.size();
  VerifyOptions opt{Mode::Sampled, 0x2f00d1, 5, kDefaultHeight};
  auto s = sample_gradients(fam, pair.dim(), opt);
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    Mat pinf = tensor_at(pair, s.points[k], BracketParam::infinity()).matrix;
    for (std::size_t a = 0; a < fam.size(); ++a)
      for (std::size_t b = a + 1; b < fam.size(); ++b)
        if (sgn(dot(s.grads[k][a], pinf * s.grads[k][b])) != 0)
          throw Error("Zinf generators " + name_of(fam, a) + " and " + name_of(fam, b) + " do not commute");
  }
  if (max_jacobian_rank(fam.gens, 3, 0x2f00d2) != fam.size()) throw Error("Zinf generators are dependent");
  return fam;
}

GeneratorFamily mf_generators(const StructureConstants& g, const Vec& gamma, const InvariantSet& set) {
  if (gamma.size() != g.dim()) throw Error("shift vector has the wrong dimension");
  if (g.dim() - rank(g.form_at(gamma)) != g.rank()) throw Error("shift vector is not regular");
  GeneratorFamily fam;
  fam.name = "MF";
  fam.ambient_dim = g.dim();
  for (std::size_t j = 0; j < set.size(); ++j) {
    Poly f = set.polys[j];
    for (unsigned k = 0; k < set.degrees[j]; ++k) {
      if (f.is_zero()) throw Error("shift of H" + std::to_string(j + 1) + " vanished");
      Provenance why{Provenance::Kind::Shift, j, {}, k, 0};
      fam.add(make_primitive(f), why);
      f = f.directional(gamma);
    }
  }
  fam.expected_trdeg = magic_number(g.dim(), g.rank());
  return fam;
}

VerificationReport verify_commutativity(const GeneratorFamily& fam, const SymmetricPair& pair,
                                        const VerifyOptions& opt) {
  VerificationReport rep;
  rep.pair = pair.spec.key;
  rep.seed = opt.seed;
  rep.samples = opt.mode == Mode::Sampled ? opt.samples : 0;
  const auto& labels = pair.g.labels();
  std::size_t n = pair.dim();
  const BracketParam params[2] = {BracketParam::finite(0), BracketParam::infinity()};
  PairwiseOutcome out[2], inv;
  if (opt.mode == Mode::Symbolic) {
    for (int t = 0; t < 2; ++t)
      for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b) {
          Poly br = poisson_bracket_poly(pair, fam.gens[a], fam.gens[b], params[t]);
          record(out[t], br.is_zero(),
                 "{" + name_of(fam, a) + ", " + name_of(fam, b) + "}_" + params[t].to_string() + " = " +
                     clip(br.to_text(labels)));
        }
    if (fam.g0_invariant)
      for (std::size_t i = 0; i < pair.n0; ++i)
        for (std::size_t a = 0; a < fam.size(); ++a) {
          Poly br = poisson_bracket(pair.g, Poly::variable(n, i), fam.gens[a]);
          record(inv, br.is_zero(), "{" + labels[i] + ", " + name_of(fam, a) + "} = " + clip(br.to_text(labels)));
        }
  } else {
    auto s = sample_gradients(fam, n, opt);
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      const Vec& xi = s.points[k];
      for (int t = 0; t < 2; ++t) {
        Mat pi = tensor_at(pair, xi, params[t]).matrix;
        for (std::size_t a = 0; a < fam.size(); ++a)
          for (std::size_t b = a + 1; b < fam.size(); ++b) {
            Rat v = dot(s.grads[k][a], pi * s.grads[k][b]);
            record(out[t], sgn(v) == 0,
                   "{" + name_of(fam, a) + ", " + name_of(fam, b) + "}_" + params[t].to_string() + " at " +
                       clip(point_text(xi)) + " = " + to_string(v));
          }
      }
      if (fam.g0_invariant) {
        Mat pi = pair.g.form_at(xi);
        for (std::size_t a = 0; a < fam.size(); ++a) {
          Vec row = pi * s.grads[k][a];
          for (std::size_t i = 0; i < pair.n0; ++i)
            record(inv, sgn(row[i]) == 0,
                   "{" + labels[i] + ", " + name_of(fam, a) + "} at " + clip(point_text(xi)) + " = " +
                       to_string(row[i]));
        }
      }
    }
  }
  add_outcome(rep, "{,}_0 commutativity", out[0]);
  add_outcome(rep, "{,}_inf commutativity", out[1]);
  if (fam.g0_invariant) add_outcome(rep, "g0-invariance", inv);
  return rep;
}

VerificationReport verify_lie_poisson(const GeneratorFamily& fam, const StructureConstants& g,
                                      const VerifyOptions& opt, const std::string& label) {
  VerificationReport rep;
  rep.pair = g.name();
  rep.seed = opt.seed;
  rep.samples = opt.mode == Mode::Sampled ? opt.samples : 0;
  PairwiseOutcome out;
  if (opt.mode == Mode::Symbolic) {
    for (std::size_t a = 0; a < fam.size(); ++a)
      for (std::size_t b = a + 1; b < fam.size(); ++b) {
        Poly br = poisson_bracket(g, fam.gens[a], fam.gens[b]);
        record(out, br.is_zero(),
               "{" + name_of(fam, a) + ", " + name_of(fam, b) + "} = " + clip(br.to_text(g.labels())));
      }
  } else {
    auto s = sample_gradients(fam, g.dim(), opt);
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      Mat pi = g.form_at(s.points[k]);
      for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b) {
          Rat v = dot(s.grads[k][a], pi * s.grads[k][b]);
          record(out, sgn(v) == 0,
                 "{" + name_of(fam, a) + ", " + name_of(fam, b) + "} at " + clip(point_text(s.points[k])) +
                     " = " + to_string(v));
        }
    }
  }
  add_outcome(rep, label.empty() ? "Lie-Poisson commutativity" : "commutativity in " + label, out);
  return rep;
}

VerificationReport verify_trdeg_freeness(const GeneratorFamily& fam, const SymmetricPair* pair, std::size_t trials,
                                         std::uint64_t seed) {
  VerificationReport rep;
  rep.seed = seed;
  rep.samples = trials;
  if (pair) rep.pair = pair->spec.key;
  std::size_t r = max_jacobian_rank(fam.gens, trials, seed);
  rep.add("Jacobian rank", std::to_string(fam.size()), std::to_string(r), r == fam.size(),
          r == fam.size() ? "" : "generators are algebraically dependent");
  rep.add("transcendence degree", std::to_string(fam.expected_trdeg), std::to_string(r), r == fam.expected_trdeg);
  if (pair && fam.g0_invariant) {
    std::size_t bound = magic_number(pair->dim(), pair->rank_g) - magic_number(pair->n0, pair->rank_g0) +
                        pair->rank_g0;
    rep.add("g0-invariant bound", "<= " + std::to_string(bound), std::to_string(r), r <= bound);
  }
  return rep;
}

VerificationReport index_formulas(const SymmetricPair& pair, std::size_t samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.pair = pair.spec.key;
  rep.seed = seed;
  rep.samples = samples;
  for (long t : {0L, 1L, 7L}) {
    auto p = BracketParam::finite(Rat(t));
    std::size_t ind = sampled_index(structure_constants_t(pair, p), samples, seed);
    rep.add("ind g_(" + p.to_string() + ")", std::to_string(pair.rank_g), std::to_string(ind), ind == pair.rank_g);
  }
  std::size_t want = pair.n0 + pair.rank_g - pair.rank_g0;
  std::size_t ind = sampled_index(structure_constants_t(pair, BracketParam::infinity()), samples, seed);
  rep.add("ind g_(inf)", std::to_string(want), std::to_string(ind), ind == want);
  return rep;
}

bool is_semisimple(const StructureConstants& g, const Vec& x) {
  Mat m = g.realization() ? g.realization()->element(x) : g.ad(x);
  UPoly f = squarefree_part(charpoly(m));
  return f.evaluate(m).is_zero();
}

StructureConstants subalgebra(const StructureConstants& g, const std::vector<Vec>& basis, const std::string& name) {
  if (!g.realization()) throw Error("subalgebra needs a matrix realization");
  const auto& real = *g.realization();
  std::vector<Mat> mats;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    mats.push_back(real.element(basis[i]));
    labels.push_back("y" + std::to_string(i + 1));
  }
  try {
    return algebra_from_matrices(name, real.n, mats, labels, {});
  } catch (const Error& e) {
    throw Error(name + ": span is not a subalgebra (" + e.what() + ")");
  }
}

CartanSubspace cartan_subspace(const SymmetricPair& pair, std::uint64_t seed) {
  const auto& g = pair.g;
  std::size_t n = g.dim(), n0 = pair.n0;
  Sampler s(seed);
  for (int attempt = 0; attempt < kDefaultRetries; ++attempt) {
    Vec x(n);
    for (std::size_t i = n0; i < n; ++i) x[i] = s.coordinate();
    if (!is_semisimple(g, x)) continue;
    CartanSubspace c;
    c.basis = pad(rank_kernel(ad_columns(g, x, n0, n)).kernel, n0, n);
    for (std::size_t a = 0; a < c.basis.size(); ++a)
      for (std::size_t b = a + 1; b < c.basis.size(); ++b)
        if (!is_zero(g.bracket(c.basis[a], c.basis[b]))) throw Error("centralizer in g1 is not abelian");
    // l: kernel of y -> ([y, c_1], ..., [y, c_r]) on g0.
    Mat stack(n * c.basis.size(), n0);
    for (std::size_t a = 0; a < c.basis.size(); ++a) {
      Mat m = ad_columns(g, c.basis[a], 0, n0);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n0; ++col) stack(a * n + r, col) = -m(r, col);
    }
    c.levi = pad(rank_kernel(stack).kernel, 0, n);
    c.rank_levi = c.levi.empty() ? 0 : sampled_index(subalgebra(g, c.levi, pair.spec.key + "/l"), 4, seed);
    if (c.rank_levi + c.basis.size() != pair.rank_g)
      throw Error("rk l + dim c1 = " + std::to_string(c.rank_levi + c.basis.size()) + ", expected rk g = " +
                  std::to_string(pair.rank_g));
    return c;
  }
  throw Error("no semisimple element of g1 found");
}

ManakovResult manakov_restrict_at(const GeneratorFamily& fam, const SymmetricPair& pair, const Vec& eta,
                                  const CartanSubspace& c1, const VerifyOptions& opt) {
  ManakovResult res;
  res.eta = eta;
  GeneratorFamily sliced;
  sliced.name = fam.name + "|eta";
  sliced.ambient_dim = pair.n0;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    Poly f = affine_slice(fam.gens[i], pair.n0, eta);
    if (f.degree() <= 0) continue;
    res.restricted.push_back(f);
    sliced.add(std::move(f), fam.provenance[i]);
  }
  std::size_t dim_l = c1.levi.size();
  res.expected_trdeg = magic_number(pair.n0, pair.rank_g0) - magic_number(dim_l, c1.rank_levi) + c1.rank_levi;
  res.report = verify_lie_poisson(sliced, pair.g0, opt, "S(g0)");
  res.report.pair = pair.spec.key;
  res.rank = max_jacobian_rank(res.restricted, 3, opt.seed ^ 0x5a11ce);
  res.report.add("restricted rank", std::to_string(res.expected_trdeg), std::to_string(res.rank),
                 res.rank == res.expected_trdeg);
  return res;
}

ManakovResult manakov_restrict(const GeneratorFamily& fam, const SymmetricPair& pair, const CartanSubspace& c1,
                               const VerifyOptions& opt) {
  const auto& g = pair.g;
  std::size_t n = g.dim(), n0 = pair.n0;
  Sampler s(opt.seed, opt.height);
  for (int attempt = 0; attempt < 10; ++attempt) {
    Vec x(n);
    for (const auto& b : c1.basis) {
      Rat k = s.coordinate();
      for (std::size_t i = 0; i < n; ++i) x[i] += k * b[i];
    }
    std::size_t cdim = rank_kernel(ad_columns(g, x, 0, n0)).kernel.size();
    if (cdim != c1.levi.size()) continue;
    Vec full = g.element_to_point(x);
    Vec eta(full.begin() + static_cast<long>(n0), full.end());
    return manakov_restrict_at(fam, pair, eta, c1, opt);
  }
  throw Error("no generic point of the Cartan subspace found");
}

SumRegData sum_of_kernels(const SymmetricPair& pair, const Vec& xi, const GeneratorFamily* zfam) {
  SumRegData d;
  std::size_t n = pair.dim();
  Mat p0 = tensor_at(pair, xi, BracketParam::finite(0)).matrix;
  Mat pinf = tensor_at(pair, xi, BracketParam::infinity()).matrix;
  Pencil p(p0, pinf);
  SingularMembers sm = singular_members(p);
  bool cond1 = p.generic_rank() == n - pair.rank_g && sm.finite.empty() && !sm.non_rational;
  bool cond2 = restricted_rank_condition(pair, xi).passes;
  d.generic = cond1 && cond2;
  d.rank_inf = rank(pinf);
  d.L = generic_rank_and_L(p).L;
  d.dim_L = d.L.size();
  d.dim_cap = intersect_spans(d.L, rank_kernel(pinf).kernel, n).size();
  if (zfam) {
    std::vector<Vec> grads;
    for (const auto& f : zfam->gens) grads.push_back(f.gradient(xi));
    d.dim_dz = span_dim(grads, n);
  }
  return d;
}

VerificationReport lemma_sum_reg_verify(const SymmetricPair& pair, const Vec& xi, const GeneratorFamily* zfam) {
  VerificationReport rep;
  rep.pair = pair.spec.key;
  SumRegData d = sum_of_kernels(pair, xi, zfam);
  std::size_t want_L = pair.rank_g + d.rank_inf / 2;
  rep.add("regularity conditions at xi", "hold", d.generic ? "hold" : "fail", d.generic, clip(point_text(xi)));
  rep.add("dim L", std::to_string(want_L), std::to_string(d.dim_L), d.dim_L == want_L);
  rep.add("dim (L meet ker pi_inf)", std::to_string(pair.rank_g), std::to_string(d.dim_cap),
          d.dim_cap == pair.rank_g);
  if (zfam) {
    SpanTracker span(pair.dim());
    for (const auto& v : d.L) span.add(v);
    std::size_t outside = 0;
    for (const auto& f : zfam->gens)
      if (!span.contains(f.gradient(xi))) ++outside;
    rep.add("differentials of Z inside L", "0 outside", std::to_string(outside) + " outside (span " +
            std::to_string(d.dim_dz) + ")", outside == 0);
  }
  return rep;
}

}  // namespace poissonz
