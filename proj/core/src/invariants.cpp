#include "poissonz/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace poissonz {

namespace {

constexpr std::uint64_t kIndependenceSeed = 0x1d3a0001ULL;
constexpr std::size_t kIndependenceTrials = 3;
// Above this many term operations centrality is checked at sample points instead.
constexpr double kSymbolicCentralityBudget = 4e7;

using PolyMat = std::vector<std::vector<Poly>>;

PolyMat multiply(const PolyMat& a, const PolyMat& b, std::size_t nv) {
  std::size_t n = a.size();
  PolyMat c(n, std::vector<Poly>(n, Poly(nv)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

PolyMat power(const PolyMat& x, unsigned k, std::size_t nv) {
  std::size_t n = x.size();
  PolyMat r(n, std::vector<Poly>(n, Poly(nv)));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = Poly::constant(nv, 1);
  for (unsigned s = 0; s < k; ++s) r = multiply(r, x, nv);
  return r;
}

mpz_class lcm_den(const Poly& f) {
  mpz_class l = 1;
  for (const auto& [m, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

mpz_class gcd_num(const Poly& f) {
  mpz_class g = 0;
  for (const auto& [m, c] : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

bool centrality_sampled(const StructureConstants& g, const Poly& f) {
  Sampler s(kIndependenceSeed ^ 0xc3ULL);
  for (int t = 0; t < 4; ++t) {
    Vec xi = s.point(g.dim());
    if (!is_zero(g.form_at(xi) * f.gradient(xi))) return false;
  }
  return true;
}

struct ProductCache {
  const std::vector<Poly>* gens;
  std::map<std::vector<unsigned>, Poly> memo;

  const Poly& get(const std::vector<unsigned>& expo) {
    auto it = memo.find(expo);
    if (it != memo.end()) return it->second;
    std::size_t nv = gens->front().ambient_dim();
    Poly p = Poly::constant(nv, 1);
    for (std::size_t i = 0; i < expo.size(); ++i)
      if (expo[i]) p = p * (*gens)[i].pow(expo[i]);
    return memo.emplace(expo, std::move(p)).first->second;
  }
};

// Exponent vectors a with sum a_i deg_i = target and a_skip = 0.
void enumerate_products(const std::vector<unsigned>& deg, std::size_t skip, unsigned target,
                        std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> cur(deg.size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == deg.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (i == skip || deg[i] == 0) {
      rec(i + 1, left);
      return;
    }
    for (unsigned a = 0; a * deg[i] <= left; ++a) {
      cur[i] = a;
      rec(i + 1, left - a * deg[i]);
    }
    cur[i] = 0;
  };
  rec(0, target);
}

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return before(a, b); }
};

// Coefficients c with h - sum c_k m_k free of monomials of g1-degree > bound, if any exist.
std::optional<Vec> cancel_above(const Poly& h, const std::vector<const Poly*>& prods, std::size_t n0, unsigned bound) {
  std::size_t nv = h.ambient_dim();
  std::size_t k = prods.size();
  std::map<Monomial, std::size_t, MonoLess> rows;
  std::vector<Vec> eqs;
  auto row_of = [&](const Monomial& m) -> Vec& {
    auto [it, fresh] = rows.emplace(m, eqs.size());
    if (fresh) eqs.emplace_back(k + 1);
    return eqs[it->second];
  };
  for (const auto& [m, c] : h.terms())
    if (bidegree(m, n0, nv).d1 > bound) row_of(m)[k] = -c;
  for (std::size_t col = 0; col < k; ++col)
    for (const auto& [m, c] : prods[col]->terms())
      if (bidegree(m, n0, nv).d1 > bound) row_of(m)[col] = c;
  if (eqs.empty()) return Vec(k);
  RankKernel rk = rank_kernel(Mat::from_rows(eqs, k + 1));
  for (const auto& v : rk.kernel)
    if (sgn(v[k]) != 0) {
      Vec c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = v[i] / v[k];
      return c;
    }
  return std::nullopt;
}

void require_independent(const std::vector<Poly>& polys, const std::string& what) {
  if (max_jacobian_rank(polys, kIndependenceTrials, kIndependenceSeed) != polys.size())
    throw Error(what + ": generators are not algebraically independent");
}

}  // namespace

Poly recipe_polynomial(const StructureConstants& g, const InvariantRecipe& r) {
  const auto& real = g.realization();
  if (!real) throw Error(g.name() + ": no matrix realization, invariants need a classical algebra");
  std::size_t nv = g.dim();
  std::size_t big = real->n;
  Mat kinv = inverse(g.trace_form());
  // Generic matrix entries as linear forms in the coordinates.
  std::vector<std::vector<Vec>> x(big, std::vector<Vec>(big, Vec(nv)));
  for (std::size_t j = 0; j < nv; ++j) {
    const Mat& e = real->basis[j];
    for (std::size_t a = 0; a < big; ++a)
      for (std::size_t b = 0; b < big; ++b) {
        if (sgn(e(a, b)) == 0) continue;
        for (std::size_t i = 0; i < nv; ++i)
          if (sgn(kinv(j, i)) != 0) x[a][b][i] += e(a, b) * kinv(j, i);
      }
  }
  std::size_t w = r.embed.cols();
  PolyMat xw(w, std::vector<Poly>(w, Poly(nv)));
  for (std::size_t p = 0; p < w; ++p)
    for (std::size_t q = 0; q < w; ++q) {
      Vec lin(nv);
      for (std::size_t a = 0; a < big; ++a) {
        if (sgn(r.project(p, a)) == 0) continue;
        for (std::size_t b = 0; b < big; ++b) {
          if (sgn(r.embed(b, q)) == 0) continue;
          Rat f = r.project(p, a) * r.embed(b, q);
          for (std::size_t i = 0; i < nv; ++i)
            if (sgn(x[a][b][i]) != 0) lin[i] += f * x[a][b][i];
        }
      }
      xw[p][q] = Poly::linear(lin);
    }
  if (r.kind == InvariantRecipe::Kind::Trace) {
    unsigned lo = r.power / 2, hi = r.power - lo;
    PolyMat ph = power(xw, hi, nv);
    PolyMat pl = lo == hi ? ph : power(xw, lo, nv);
    Poly t(nv);
    for (std::size_t a = 0; a < w; ++a)
      for (std::size_t b = 0; b < w; ++b)
        if (!ph[a][b].is_zero() && !pl[b][a].is_zero()) t += ph[a][b] * pl[b][a];
    return t;
  }
  PolyMat sx(w, std::vector<Poly>(w, Poly(nv)));
  for (std::size_t p = 0; p < w; ++p)
    for (std::size_t q = 0; q < w; ++q)
      for (std::size_t s = 0; s < w; ++s)
        if (sgn(r.gram(p, s)) != 0) sx[p][q] += r.gram(p, s) * xw[s][q];
  return pfaffian_expand<Poly>(
      w, [&](std::size_t i, std::size_t j) { return sx[i][j]; }, Poly::constant(nv, 1), Poly(nv));
}

Poly make_primitive(const Poly& f) {
  if (f.is_zero()) return f;
  Poly p = Rat(lcm_den(f)) * f;
  p = Rat(1, gcd_num(p)) * p;
  if (sgn(p.terms().front().second) < 0) p = -p;
  return p;
}

std::optional<std::string> centrality_defect(const StructureConstants& g, const Poly& f) {
  std::size_t n = g.dim();
  if (f.ambient_dim() != n) throw Error("polynomial does not live on this algebra");
  if (static_cast<double>(f.size()) * static_cast<double>(n * n) > kSymbolicCentralityBudget) {
    if (!centrality_sampled(g, f)) return "not central at a sample point";
    return std::nullopt;
  }
  std::vector<Poly> df(n);
  for (std::size_t j = 0; j < n; ++j) df[j] = f.derivative(j);
  for (std::size_t i = 0; i < n; ++i) {
    Poly acc(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (df[j].is_zero() || g.bracket(i, j).empty()) continue;
      Vec lam(n);
      for (const auto& [k, c] : g.bracket(i, j)) lam[k] = c;
      acc += Poly::linear(lam) * df[j];
    }
    if (!acc.is_zero()) return "{" + g.labels()[i] + ", F} != 0";
  }
  return std::nullopt;
}

std::size_t jacobian_rank(const std::vector<Poly>& polys, const Vec& xi) {
  if (polys.empty()) return 0;
  std::vector<Vec> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) rows.push_back(p.gradient(xi));
  return rank(Mat::from_rows(rows, xi.size()));
}

std::size_t max_jacobian_rank(const std::vector<Poly>& polys, std::size_t trials, std::uint64_t seed, long height) {
  if (polys.empty()) return 0;
  Sampler s(seed, height);
  std::size_t best = 0;
  for (std::size_t t = 0; t < trials && best < polys.size(); ++t)
    best = std::max(best, jacobian_rank(polys, s.point(polys.front().ambient_dim())));
  return best;
}

InvariantSet basic_invariants(const StructureConstants& g) {
  const auto& real = g.realization();
  if (!real || (real->invariants.empty() && g.dim() > 0)) throw Error(g.name() + ": not a classical algebra");
  InvariantSet set;
  for (const auto& r : real->invariants) {
    Poly h = make_primitive(recipe_polynomial(g, r));
    if (h.is_zero() || !h.is_homogeneous() || h.degree() != static_cast<int>(r.degree()))
      throw Error(g.name() + ": recipe " + r.describe() + " gave a degenerate polynomial");
    if (auto e = centrality_defect(g, h)) throw Error(g.name() + ": " + r.describe() + " is not central: " + *e);
    set.polys.push_back(std::move(h));
    set.degrees.push_back(r.degree());
    set.eps.push_back(0);
    set.g1_degrees.push_back(-1);
    set.names.push_back(r.describe());
  }
  if (set.size() != g.rank()) throw Error(g.name() + ": number of invariants differs from the rank");
  unsigned total = 0;
  for (auto d : set.degrees) total += d;
  if (2 * total != g.dim() + g.rank()) throw Error(g.name() + ": degrees do not add up to b(g)");
  require_independent(set.polys, g.name());
  return set;
}

Poly sigma_apply(const Poly& f, std::size_t n0) {
  std::vector<Poly::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms())
    out.emplace_back(m, bidegree(m, n0, f.ambient_dim()).d1 % 2 ? Rat(-c) : c);
  return Poly::from_terms(f.ambient_dim(), std::move(out));
}

void annotate(InvariantSet& set, const SymmetricPair& pair) {
  set.eps.assign(set.size(), 0);
  set.g1_degrees.assign(set.size(), -1);
  for (std::size_t j = 0; j < set.size(); ++j) {
    const Poly& h = set.polys[j];
    set.g1_degrees[j] = bihom_decompose(h, pair).top_g1_degree;
    Poly s = sigma_apply(h, pair.n0);
    if (s == h) set.eps[j] = 1;
    else if (s == -h) set.eps[j] = -1;
  }
}

InvariantSet ggs_reduce(const InvariantSet& in, const SymmetricPair& pair) {
  InvariantSet set = in;
  annotate(set, pair);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < set.size(); ++j) {
      int top = set.g1_degrees[j];
      if (top <= 0) continue;
      std::vector<std::vector<unsigned>> expos;
      enumerate_products(set.degrees, j, set.degrees[j], expos);
      if (expos.empty()) continue;
      ProductCache cache{&set.polys, {}};
      std::vector<const Poly*> prods;
      for (const auto& e : expos) prods.push_back(&cache.get(e));
      for (unsigned bound = 0; bound < static_cast<unsigned>(top); ++bound) {
        auto c = cancel_above(set.polys[j], prods, pair.n0, bound);
        if (!c) continue;
        Poly h = set.polys[j];
        for (std::size_t k = 0; k < prods.size(); ++k)
          if (sgn((*c)[k]) != 0) h -= (*c)[k] * *prods[k];
        set.polys[j] = make_primitive(h);
        set.names[j] += " (reduced)";
        changed = true;
        break;
      }
      if (changed) {
        annotate(set, pair);
        break;
      }
    }
  }
  return set;
}

InvariantSet sigma_normalize(const InvariantSet& in, const SymmetricPair& pair) {
  InvariantSet set = in;
  annotate(set, pair);
  bool replaced = false;
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (set.eps[j] != 0) continue;
    const Poly& h = set.polys[j];
    Poly s = sigma_apply(h, pair.n0);
    Poly r = set.g1_degrees[j] % 2 == 0 ? Rat(1, 2) * (h + s) : Rat(1, 2) * (h - s);
    set.polys[j] = make_primitive(r);
    set.names[j] += set.g1_degrees[j] % 2 == 0 ? " (+)" : " (-)";
    replaced = true;
  }
  annotate(set, pair);
  for (std::size_t j = 0; j < set.size(); ++j)
    if (set.eps[j] == 0) throw Error(pair.spec.key + ": eigenvector normalisation failed");
  if (replaced) {
    for (const auto& h : set.polys)
      if (auto e = centrality_defect(pair.g, h)) throw Error(pair.spec.key + ": eigenvector normalisation failed: " + *e);
    if (max_jacobian_rank(set.polys, kIndependenceTrials, kIndependenceSeed) != set.size())
      throw Error(pair.spec.key + ": eigenvector normalisation failed");
  }
  return set;
}

GgsResult ggs_check(const InvariantSet& set, const SymmetricPair& pair, std::uint64_t seed) {
  GgsResult r;
  std::vector<Poly> tops;
  for (const auto& h : set.polys) {
    auto d = bihom_decompose(h, pair);
    r.sum_g1_degrees += d.top_g1_degree;
    tops.push_back(d.top());
  }
  r.is_ggs = r.sum_g1_degrees == static_cast<int>(pair.dim_g1());
  r.top_independent = max_jacobian_rank(tops, kIndependenceTrials, seed) == set.size();
  if (r.is_ggs != r.top_independent)
    throw Error(pair.spec.key + ": degree-sum and top-independence criteria disagree");
  return r;
}

InvariantSet normalized_invariants(const SymmetricPair& pair) {
  InvariantSet set = basic_invariants(pair.g);
  set = ggs_reduce(set, pair);
  set = sigma_normalize(set, pair);
  if (!ggs_check(set, pair).is_ggs) throw Error(pair.spec.key + ": needs manual generator choice");
  return set;
}

bool listed_r0_onto(const PairSpec& spec) {
  switch (spec.family) {
    case PairFamily::DBL: return true;
    case PairFamily::AI: return spec.p % 2 == 1;
    case PairFamily::AII: return true;
    case PairFamily::BDI: return (spec.p + spec.q) % 2 == 0 && std::min(spec.p, spec.q) == 1;
    default: return false;
  }
}

R0Onto r0_onto_check(const SymmetricPair& pair, std::uint64_t seed) {
  const auto& real = *pair.g.realization();
  std::size_t big = real.n;
  std::size_t n0 = pair.n0;
  // g0 intersected with strictly upper triangular matrices.
  std::vector<Vec> conds;
  for (std::size_t a = 0; a < big; ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      Vec row(n0);
      for (std::size_t i = 0; i < n0; ++i) row[i] = real.basis[i](a, b);
      if (!is_zero(row)) conds.push_back(std::move(row));
    }
  std::vector<Vec> nil;
  if (conds.empty()) {
    for (std::size_t i = 0; i < n0; ++i) {
      nil.emplace_back(n0);
      nil.back()[i] = 1;
    }
  } else {
    nil = rank_kernel(Mat::from_rows(conds, n0)).kernel;
  }
  Sampler s(seed);
  for (int attempt = 0; attempt < kDefaultRetries; ++attempt) {
    Vec a(n0);
    for (const auto& v : nil) {
      Rat c = s.nonzero();
      for (std::size_t i = 0; i < n0; ++i) a[i] += c * v[i];
    }
    if (rank_kernel(pair.g0.ad(a)).kernel.size() != pair.rank_g0) continue;
    R0Onto r;
    r.e0.assign(pair.dim(), Rat(0));
    std::copy(a.begin(), a.end(), r.e0.begin());
    r.centralizer_dim = centralizer(pair.g, r.e0).dim;
    r.onto = r.centralizer_dim == pair.rank_g;
    r.listed = listed_r0_onto(pair.spec);
    if (r.onto != r.listed)
      throw Error(pair.spec.key + ": regular-nilpotent test disagrees with the onto classification");
    return r;
  }
  throw Error(pair.spec.key + ": no regular nilpotent of g0 among upper triangular matrices");
}

}  // namespace poissonz
