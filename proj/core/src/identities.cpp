#include "poissonz/identities.hpp"

#include <algorithm>
#include <functional>

#include "poissonz/brackets.hpp"
#include "poissonz/polyring.hpp"
#include "poissonz/sampling.hpp"

namespace poissonz {

namespace {

std::string subset_text(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& s, std::size_t n) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < s.size() && s[k] == i) ++k;
    else out.push_back(i);
  }
  return out;
}

Rat minor(const std::vector<Vec>& rows, const std::vector<std::size_t>& cols) {
  Mat m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = rows[r][cols[c]];
  return determinant(m);
}

Covector nonzero(const std::map<std::vector<std::size_t>, Rat>& m) {
  Covector out;
  for (const auto& [k, v] : m)
    if (sgn(v) != 0) out.emplace(k, v);
  return out;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> r;
  for (std::size_t i = lo; i < hi; ++i) r.push_back(i);
  return r;
}

// Product of the sub-Pfaffian vectors of the g0 block (size a0) and the g1 block (size a1) of pi_inf.
Covector block_product(const Mat& pg0, std::size_t a0, const Mat& pinf_g1, std::size_t a1, std::size_t n0) {
  Covector out;
  auto v0 = nonzero(sub_pfaffian_vector(pg0, a0));
  auto v1 = nonzero(sub_pfaffian_vector(pinf_g1, a1));
  for (const auto& [j0, p0] : v0)
    for (const auto& [j1, p1] : v1) {
      std::vector<std::size_t> j = j0;
      for (auto i : j1) j.push_back(n0 + i);
      out.emplace(std::move(j), p0 * p1);
    }
  return out;
}

// Polynomials whose gradients form the left side, and whether to zero their g0 entries.
struct VariantRows {
  std::vector<Poly> polys;
  std::vector<bool> g1_only;
};

Poly component(const SymmetricPair& pair, const Poly& f, BiDegree bd) {
  auto dec = bihom_decompose(f, pair);
  auto it = dec.components.find(bd);
  return it == dec.components.end() ? Poly(pair.dim()) : it->second;
}

VariantRows variant_rows(const SymmetricPair& pair, const InvariantSet& set, KostantVariant v) {
  VariantRows r;
  if (v == KostantVariant::Full) {
    r.polys = set.polys;
    r.g1_only.assign(set.size(), false);
    return r;
  }
  if (v == KostantVariant::Inner && !pair.inner()) throw Error(pair.spec.key + " is not an inner involution");
  if (v == KostantVariant::Outer && pair.inner()) throw Error(pair.spec.key + " is not an outer involution");
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (set.eps[j] == 0) throw Error("invariant set is not sigma-normalised");
    if (set.eps[j] == 1) {
      r.polys.push_back(component(pair, set.polys[j], {set.degrees[j], 0}));
      r.g1_only.push_back(false);
    } else {
      if (v == KostantVariant::Inner) throw Error("inner involution with an odd invariant");
      r.polys.push_back(component(pair, set.polys[j], {set.degrees[j] - 1, 1}));
      r.g1_only.push_back(true);
    }
  }
  return r;
}

std::vector<Vec> rows_at(const VariantRows& vr, const Vec& xi, std::size_t n0) {
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < vr.polys.size(); ++j) {
    Vec g = vr.polys[j].gradient(xi);
    if (vr.g1_only[j])
      for (std::size_t i = 0; i < n0; ++i) g[i] = 0;
    rows.push_back(std::move(g));
  }
  return rows;
}

std::size_t count_eps(const InvariantSet& set, int e) {
  std::size_t c = 0;
  for (auto x : set.eps) c += x == e;
  return c;
}

WedgeEval evaluate_variant(const SymmetricPair& pair, const VariantRows& vr, const Vec& xi, KostantVariant v,
                           std::size_t k_plus) {
  std::size_t n = pair.dim(), n0 = pair.n0, l = vr.polys.size();
  Covector left = wedge_over_volume(rows_at(vr, xi, n0), n);
  Covector right;
  if (v == KostantVariant::Full) {
    right = nonzero(sub_pfaffian_vector(pair.g.form_at(xi), n - l));
  } else {
    Mat pinf = tensor_at(pair, xi, BracketParam::infinity()).matrix;
    auto g1 = range(n0, n);
    Mat pinf_g1 = pinf.submatrix(g1, g1);
    Mat pg0 = pair.g0.form_at(Vec(xi.begin(), xi.begin() + static_cast<long>(n0)));
    std::size_t a1 = pair.dim_g1() - l + k_plus;
    std::size_t a0 = n0 - k_plus;
    right = block_product(pg0, a0, pinf_g1, a1, n0);
  }
  WedgeEval w = compare_wedges(std::move(left), std::move(right));
  w.point = xi;
  return w;
}

VerificationReport scalar_report(const std::vector<WedgeEval>& evals, const std::string& label) {
  VerificationReport rep;
  std::size_t bad = 0;
  std::string witness;
  for (std::size_t i = 0; i < evals.size(); ++i)
    if (!evals[i].pass && bad++ == 0) witness = "point " + std::to_string(i) + ": " + evals[i].witness;
  rep.add(label + " at each point", std::to_string(evals.size()) + " of " + std::to_string(evals.size()),
          std::to_string(evals.size() - bad) + " of " + std::to_string(evals.size()), bad == 0, witness);
  std::string scalars;
  bool same = !evals.empty() && sgn(evals.front().scalar) != 0;
  for (const auto& e : evals) {
    scalars += (scalars.empty() ? "" : ", ") + to_string(e.scalar);
    if (e.scalar != evals.front().scalar) same = false;
  }
  rep.add(label + " scalar independent of the point", "one nonzero value", scalars, same);
  return rep;
}

// Constant ratio a_i / b_i with every b_i nonzero.
bool constant_ratio(const std::vector<Rat>& a, const std::vector<Rat>& b, std::string& text) {
  bool ok = !a.empty();
  Rat first;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(b[i]) == 0 || sgn(a[i]) == 0) {
      text += (text.empty() ? "" : ", ") + std::string("undefined");
      ok = false;
      continue;
    }
    Rat r = a[i] / b[i];
    text += (text.empty() ? "" : ", ") + to_string(r);
    if (i == 0) first = r;
    else if (r != first) ok = false;
  }
  return ok;
}

// Draws evaluations until `samples` of them are non-degenerate; points where both sides vanish are skipped.
std::vector<WedgeEval> collect(std::size_t samples, const std::function<WedgeEval()>& draw) {
  std::vector<WedgeEval> evals;
  std::size_t attempts = 0;
  while (evals.size() < samples) {
    if (attempts++ >= samples + static_cast<std::size_t>(kDefaultRetries)) throw Error("too many degenerate points");
    WedgeEval w = draw();
    if (w.left.empty() && w.right.empty()) continue;
    evals.push_back(std::move(w));
  }
  return evals;
}

}  // namespace

const char* to_string(KostantVariant v) {
  switch (v) {
    case KostantVariant::Full: return "full";
    case KostantVariant::Inner: return "inner";
    case KostantVariant::Outer: return "outer";
  }
  return "?";
}

Covector wedge_over_volume(const std::vector<Vec>& rows, std::size_t n) {
  std::size_t k = rows.size();
  if (k > n) throw Error("more rows than coordinates");
  Covector out;
  for (const auto& j : subsets(n, n - k)) {
    auto i = complement(j, n);
    Rat m = k == 0 ? Rat(1) : minor(rows, i);
    if (sgn(m) != 0) out.emplace(j, shuffle_sign(i, j) * m);
  }
  return out;
}

Covector wedge_minors(const std::vector<Vec>& rows, std::size_t n) {
  Covector out;
  for (const auto& i : subsets(n, rows.size())) {
    Rat m = minor(rows, i);
    if (sgn(m) != 0) out.emplace(i, m);
  }
  return out;
}

WedgeEval compare_wedges(Covector left, Covector right) {
  WedgeEval w;
  w.left = std::move(left);
  w.right = std::move(right);
  if (w.right.empty()) {
    w.pass = w.left.empty();
    if (!w.pass) w.witness = "right side vanishes, left is nonzero at " + subset_text(w.left.begin()->first);
    return w;
  }
  const auto& [j0, r0] = *w.right.begin();
  auto it = w.left.find(j0);
  if (it == w.left.end()) {
    w.witness = "left side vanishes at " + subset_text(j0) + " where the right side is " + to_string(r0);
    return w;
  }
  w.scalar = it->second / r0;
  w.pass = true;
  for (const auto& [j, v] : w.right) {
    auto l = w.left.find(j);
    Rat lv = l == w.left.end() ? Rat(0) : l->second;
    if (lv != w.scalar * v) {
      w.pass = false;
      w.witness = "entry " + subset_text(j) + ": left " + to_string(lv) + ", right " + to_string(v);
      return w;
    }
  }
  for (const auto& [j, v] : w.left)
    if (!w.right.count(j)) {
      w.pass = false;
      w.witness = "entry " + subset_text(j) + ": left " + to_string(v) + ", right 0";
      return w;
    }
  return w;
}

WedgeEval kostant_full_at(const StructureConstants& g, const InvariantSet& set, const Vec& xi) {
  std::vector<Vec> rows;
  for (const auto& f : set.polys) rows.push_back(f.gradient(xi));
  std::size_t n = g.dim();
  WedgeEval w = compare_wedges(wedge_over_volume(rows, n), nonzero(sub_pfaffian_vector(g.form_at(xi), n - rows.size())));
  w.point = xi;
  return w;
}

WedgeEval kostant_identity_at(const SymmetricPair& pair, const InvariantSet& set, const Vec& xi, KostantVariant v) {
  return evaluate_variant(pair, variant_rows(pair, set, v), xi, v, count_eps(set, 1));
}

VerificationReport kostant_full_check(const StructureConstants& g, const InvariantSet& set, std::size_t samples,
                                      std::uint64_t seed) {
  Sampler s(seed);
  auto evals = collect(samples, [&] { return kostant_full_at(g, set, s.point(g.dim())); });
  VerificationReport rep = scalar_report(evals, "Kostant identity");
  rep.pair = g.name();
  rep.seed = seed;
  rep.samples = samples;
  return rep;
}

VerificationReport kostant_identity_check(const SymmetricPair& pair, const InvariantSet& set, KostantVariant v,
                                          std::size_t samples, std::uint64_t seed) {
  VariantRows vr = variant_rows(pair, set, v);
  std::size_t k_plus = count_eps(set, 1);
  if (v == KostantVariant::Outer && k_plus != pair.rank_g0)
    throw Error("expected " + std::to_string(pair.rank_g0) + " even invariants, found " + std::to_string(k_plus));
  Sampler s(seed);
  auto evals = collect(samples, [&] { return evaluate_variant(pair, vr, s.point(pair.dim()), v, k_plus); });
  VerificationReport rep = scalar_report(evals, std::string(to_string(v)) + " identity");
  rep.pair = pair.spec.key;
  rep.seed = seed;
  rep.samples = samples;
  return rep;
}

namespace {

// Fits left = c * (wedge of dH~ on g0) at random xi0; resamples where the g0 wedge vanishes.
FactorSamples fit_g0_factor(const SymmetricPair& pair, const std::vector<Poly>& polys, std::size_t samples,
                            std::uint64_t seed, const std::string& label) {
  FactorSamples out;
  out.report.pair = pair.spec.key;
  out.report.seed = seed;
  out.report.samples = samples;
  std::size_t n = pair.dim(), n0 = pair.n0;
  InvariantSet inv0 = basic_invariants(pair.g0);
  if (inv0.size() != polys.size())
    throw Error("g0 has " + std::to_string(inv0.size()) + " basic invariants, expected " +
                std::to_string(polys.size()));
  Sampler s(seed);
  std::size_t bad = 0, attempts = 0;
  std::string witness;
  while (out.points.size() < samples) {
    if (attempts++ > samples + static_cast<std::size_t>(kDefaultRetries)) throw Error("too many degenerate points");
    Vec xi0 = s.point(n0);
    Vec xi(n);
    std::copy(xi0.begin(), xi0.end(), xi.begin());
    std::vector<Vec> lrows, rrows;
    for (const auto& f : polys) {
      Vec g = f.gradient(xi);
      lrows.emplace_back(g.begin(), g.begin() + static_cast<long>(n0));
    }
    for (const auto& f : inv0.polys) rrows.push_back(f.gradient(xi0));
    Covector right = wedge_minors(rrows, n0);
    if (right.empty()) continue;
    WedgeEval w = compare_wedges(wedge_minors(lrows, n0), std::move(right));
    if (!w.pass && bad++ == 0) witness = "xi0 = point " + std::to_string(out.points.size()) + ": " + w.witness;
    out.points.push_back(xi);
    out.factor.push_back(w.scalar);
  }
  out.report.add(label + " proportional at each point", "0 failing", std::to_string(bad) + " failing", bad == 0,
                 witness);
  return out;
}

}  // namespace

FactorSamples det_ad_factor_check(const SymmetricPair& pair, const InvariantSet& set, std::size_t samples,
                                  std::uint64_t seed) {
  VariantRows vr = variant_rows(pair, set, KostantVariant::Inner);
  FactorSamples out = fit_g0_factor(pair, vr.polys, samples, seed, "d(H)_(d,0) wedge against g0 wedge");
  std::size_t n = pair.dim(), n0 = pair.n0;
  auto g1 = range(n0, n);
  std::vector<Rat> dets, squares;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    const Vec& xi = out.points[i];
    Mat pinf = tensor_at(pair, xi, BracketParam::infinity()).matrix;
    out.reference.push_back(pfaffian(pinf.submatrix(g1, g1)));
    Vec x0 = pair.g.point_to_element(xi);
    dets.push_back(determinant(pair.g.ad(x0).submatrix(g1, g1)));
    squares.push_back(out.factor[i] * out.factor[i]);
  }
  std::string t1, t2;
  bool ok1 = constant_ratio(out.factor, out.reference, t1);
  out.report.add("F / Pf(pi_inf on g1) constant", "one nonzero value", t1, ok1);
  bool ok2 = constant_ratio(squares, dets, t2);
  out.report.add("F^2 / det(ad x0 on g1) constant", "one nonzero value", t2, ok2);
  return out;
}

FactorSamples q_factor_check(const SymmetricPair& pair, const InvariantSet& set, std::size_t samples,
                             std::uint64_t seed) {
  if (pair.inner()) throw Error(pair.spec.key + " is not an outer involution");
  std::vector<Poly> even;
  int dq = 0;
  for (std::size_t j = 0; j < set.size(); ++j)
    if (set.eps[j] == 1) {
      even.push_back(component(pair, set.polys[j], {set.degrees[j], 0}));
      dq += static_cast<int>(set.degrees[j]) - 1;
    }
  if (even.size() != pair.rank_g0)
    throw Error("expected " + std::to_string(pair.rank_g0) + " even invariants, found " + std::to_string(even.size()));
  InvariantSet inv0 = basic_invariants(pair.g0);
  for (auto d : inv0.degrees) dq -= static_cast<int>(d) - 1;

  // Exponent vectors e with sum e_i deg(H~_i) = dq.
  std::vector<std::vector<unsigned>> monos;
  std::vector<unsigned> e(inv0.size(), 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
    if (i == e.size()) {
      if (left == 0) monos.push_back(e);
      return;
    }
    for (e[i] = 0; static_cast<int>(e[i] * inv0.degrees[i]) <= left; ++e[i])
      walk(i + 1, left - static_cast<int>(e[i] * inv0.degrees[i]));
    e[i] = 0;
  };
  if (dq >= 0) walk(0, dq);

  std::size_t npts = std::max(samples, monos.size() + 2);
  FactorSamples out = fit_g0_factor(pair, even, npts, seed, "d(H)_(d,0) wedge against g0 wedge");
  out.report.samples = samples;
  std::size_t n0 = pair.n0;
  std::vector<Vec> xi0s;
  for (const auto& xi : out.points) xi0s.emplace_back(xi.begin(), xi.begin() + static_cast<long>(n0));

  std::string text = "degree " + std::to_string(dq) + ", " + std::to_string(monos.size()) + " monomials";
  bool in_span = !monos.empty();
  if (in_span) {
    Mat m(npts, monos.size()), aug(npts, monos.size() + 1);
    for (std::size_t r = 0; r < npts; ++r) {
      std::vector<Rat> h;
      for (const auto& f : inv0.polys) h.push_back(f.evaluate(xi0s[r]));
      for (std::size_t c = 0; c < monos.size(); ++c) {
        Rat v(1);
        for (std::size_t i = 0; i < h.size(); ++i)
          for (unsigned k = 0; k < monos[c][i]; ++k) v *= h[i];
        m(r, c) = aug(r, c) = v;
      }
      aug(r, monos.size()) = out.factor[r];
    }
    in_span = rank(m) == rank(aug);
  }
  out.report.add("Q is a polynomial in the g0 invariants", "in span", text, in_span);

  for (const auto& r : pair.g0.realization()->invariants) {
    if (r.kind != InvariantRecipe::Kind::Pfaffian) continue;
    Poly pf = recipe_polynomial(pair.g0, r);
    if (pf.degree() != dq) continue;
    for (const auto& xi0 : xi0s) out.reference.push_back(pf.evaluate(xi0));
    std::string t;
    bool ok = constant_ratio(out.factor, out.reference, t);
    out.report.add("Q / Pf constant", "one nonzero value", t, ok);
    break;
  }
  if (listed_r0_onto(pair.spec)) {
    std::string t;
    std::vector<Rat> ones(out.factor.size(), Rat(1));
    bool ok = dq == 0 && constant_ratio(out.factor, ones, t);
    out.report.add("Q constant", "one nonzero value", t.empty() ? text : t, ok);
  }
  return out;
}

}  // namespace poissonz
